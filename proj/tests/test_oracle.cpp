#include <fstream>

#include "doctest.h"
#include "wnov/error.hpp"
#include "wnov/oracle.hpp"
#include "wnov/parser.hpp"
#include "wnov/render.hpp"
#include "wnov/wlc_algebra.hpp"
#include "wnov/wn_algebra.hpp"

using namespace wnov;

TEST_CASE("presets are multihomogeneous identities over variables") {
  for (auto name : {"rs", "wn", "lc", "met", "wlc2", "wnov2", "nov2", "flex",
                    "antiflex", "lie-nilp:2", "jordan-nilp:3", "weak-flex:+",
                    "weak-flex:-:3"}) {
    auto ids = preset(name);
    CHECK(!ids.identities().empty());
    for (auto const& f : ids.identities()) {
      CHECK(variable_degrees(f).has_value());
      CHECK(!has_generators(f));
    }
  }
  CHECK(preset("wnov2").identities().size() == 3);
  CHECK_THROWS_AS(preset("nope"), Error);
  CHECK_THROWS_AS(preset("lie-nilp:0"), Error);
}

TEST_CASE("linearization of flexibility") {
  auto f   = preset("flex").identities().front();
  auto lin = linearize(f);
  // v1 splits into v1, v2; the middle letter becomes v3.
  CHECK(lin == parse_identity("A(v1,v3,v2) + A(v2,v3,v1)"));
}

TEST_CASE("small components") {
  CHECK(quotient_dimension(preset("wnov2"), Multidegree::multilinear(2)) == 2);
  auto m = relation_rows(preset("wnov2"), Multidegree::multilinear(3));
  CHECK(m.columns.size() == 12);
  CHECK(m.rows.size() >= 3);
  CHECK(quotient_dimension(preset("wnov2"), Multidegree::multilinear(3)) == 9);
  auto basis = quotient_basis(preset("wnov2"), Multidegree::multilinear(3));
  CHECK(basis.size() == 9);
  CHECK(quotient_dimension(preset("wlc2"), Multidegree::multilinear(3)) == 12);
}

TEST_CASE("dimensions match the table bases for every multidegree up to 4") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (auto const& md : partition_multidegrees(n)) {
      CAPTURE(md.str());
      CHECK(quotient_dimension(preset("wnov2"), md) == wn_basis(md).size());
      CHECK(quotient_dimension(preset("wlc2"), md) == wlc_basis(md).size());
    }
  }
  // Kind (x, t, t) is nonzero: (1,2) has five elements.
  CHECK(quotient_dimension(preset("wnov2"), Multidegree::parse("1,2")) == 5);
}

TEST_CASE("dimension does not increase when identities are added") {
  auto md   = Multidegree::multilinear(4);
  auto base = quotient_dimension(preset("wlc2"), md);
  for (auto extra : {"rs", "lc", "flex", "lie-nilp:2"}) {
    CHECK(quotient_dimension(preset("wlc2") + preset(extra), md) <= base);
  }
  CHECK(quotient_dimension(preset("wlc2") + preset("rs"), md)
        == quotient_dimension(preset("wnov2"), md));
}

TEST_CASE("rational and modular ranks agree") {
  for (auto const& md : partition_multidegrees(4)) {
    CHECK_NOTHROW(quotient_dimension_cross_checked(preset("wnov2"), md, {101, 1009}));
    CHECK_NOTHROW(quotient_dimension_cross_checked(preset("nov2"), md, {101, 1009}));
  }
}

TEST_CASE("membership") {
  auto nov2 = preset("nov2");
  CHECK(membership(parse_generator_expr("x1*(x2*(x3*(x4*x5)))"), nov2));
  CHECK(!membership(parse_generator_expr("x1*(x2*(x3*x4))"), nov2));
  CHECK(membership(parse_generator_expr("(x1*x2)*(x3*x4)"), preset("met") + preset("rs")));
  CHECK(membership(parse_generator_expr("0"), nov2));
  CHECK(!membership(parse_generator_expr("x1*x2"), nov2));
  CHECK_THROWS_AS(membership(parse_generator_expr("x1 + x1*x2"), nov2), Error);
  CHECK(membership(parse_generator_expr("A(x1,x2,x3) - A(x1,x3,x2)"), preset("rs")));
  OracleOptions fp;
  fp.field = Field::prime(1009);
  CHECK(membership(parse_generator_expr("x1*(x2*(x3*(x4*x5)))"), nov2, fp));
}

TEST_CASE("caps and field restrictions") {
  CHECK_THROWS_AS(quotient_dimension(preset("wnov2"), Multidegree::multilinear(6)),
                  CapExceeded);
  OracleOptions small;
  small.field = Field::prime(5);
  CHECK_THROWS_AS(quotient_dimension(preset("wnov2"), Multidegree::multilinear(5), small),
                  Error);
  OracleOptions capped;
  capped.degree_cap = 4;
  CHECK_THROWS_AS(quotient_dimension(preset("wnov2"), Multidegree::multilinear(5), capped),
                  CapExceeded);
}

TEST_CASE("identity files") {
  auto path = std::string("wnov_test_identities.txt");
  {
    std::ofstream out(path);
    out << "# right symmetry\n"
        << "A(v1,v2,v3) - A(v1,v3,v2) = 0\n\n"
        << "(v1*v2)*(v3*v4) = 0   # metabelian\n";
  }
  auto ids = load_identity_file(path);
  CHECK(ids.identities().size() == 2);
  auto both = resolve_identities(path + ",wn");
  CHECK(both.identities().size() == 3);
  CHECK(quotient_dimension(both, Multidegree::multilinear(4)) == 16);
  std::remove(path.c_str());
  CHECK_THROWS_WITH_AS(parse_identity_text("bad", "v1*v2*v3 = 0"),
                       "bad:1: parse error at position 5: unexpected '*'", Error);
  CHECK_THROWS_AS(parse_identity_text("bad", "x1*v2 = 0"), Error);
}

TEST_CASE("partitions") {
  CHECK(partition_multidegrees(5).size() == 7);
  CHECK(partition_multidegrees(5).front().is_multilinear());
  CHECK(partition_multidegrees(6).size() == 11);
}
