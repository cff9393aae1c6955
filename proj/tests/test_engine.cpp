#include "doctest.h"
#include "wnov/check.hpp"
#include "wnov/classify.hpp"
#include "wnov/error.hpp"
#include "wnov/parser.hpp"

using namespace wnov;

namespace {
  MagmaPoly id(char const* text) {
    return parse_identity(text);
  }
  MagmaPoly gx(char const* text) {
    return parse_generator_expr(text);
  }
}  // namespace

TEST_CASE("defining identities hold in the table algebras") {
  CHECK(check_identity(AlgebraKind::wnov, id("A(v1,v2,v3) = A(v1,v3,v2)")).holds);
  CHECK(check_identity(AlgebraKind::wnov, id("(v1*v2)*(v3*v4) = 0")).holds);
  for (auto const& f : preset("wn").identities()) {
    CHECK(check_identity(AlgebraKind::wnov, f).holds);
    CHECK(check_identity(AlgebraKind::wlc, f).holds);
  }
  CHECK(check_identity(AlgebraKind::wlc, id("(v1*v2)*(v3*v4) = 0")).holds);
}

TEST_CASE("left commutativity fails in wlc with an explicit counterexample") {
  auto f = id("v1*(v2*v3) - v2*(v1*v3) = 0");
  auto r = check_identity(AlgebraKind::wlc, f);
  REQUIRE(!r.holds);
  CHECK(render(substitute(f, r.assignment)) == "x1*(x2*x3) - x2*(x1*x3)");
  CHECK(r.value == "-1 x3 L[x1,x2] + x3 L[x2,x1]");
  CHECK(!wlc_eval(substitute(f, r.assignment)).is_zero());
}

TEST_CASE("the degree window bounds the search") {
  auto f = id("v1*(v2*(v3*(v4*v5))) = 0");
  auto r = check_identity(AlgebraKind::wnov, f, 7);
  CHECK(r.holds);
  CHECK(r.substitutions > 0);
  auto empty = check_identity(AlgebraKind::wnov, f, 4);
  CHECK(empty.holds);
  CHECK(empty.substitutions == 0);
  // Slot caps restrict every argument to generators here.
  auto g = check_identity(AlgebraKind::wnov, id("(v1*v2)*(v3*v4) = 0"), 7, 1);
  CHECK(g.substitutions == 1);
  auto h = check_identity(AlgebraKind::wnov, id("v1*(v2*v3) = 0"), 5);
  CHECK(!h.holds);
  CHECK(h.value == "x1*(x2*x3)");
}

TEST_CASE("check_identity rejects non-multilinear identities") {
  CHECK_THROWS_AS(check_identity(AlgebraKind::wnov, id("A(v1,v2,v1) = 0")), Error);
  CHECK_THROWS_AS(check_identity(AlgebraKind::wnov, gx("x1*x2")), Error);
}

TEST_CASE("left nilpotency") {
  auto r = left_nilpotency_index(AlgebraKind::wnov, 6);
  REQUIRE(r.index);
  CHECK(*r.index == 5);
  CHECK(render(r.witness_word) == "x1*(x2*(x3*x4))");
  CHECK(r.witness_value == "-1 A(x1, x3*x2, x4)");
  // Every left multiplication prepends to the L-part in wlc, so left-normed
  // products of generators never vanish.
  auto w = left_nilpotency_index(AlgebraKind::wlc, 6);
  CHECK(!w.index);
  CHECK(w.witness_value == "x6 L[x1,x2,x3,x4,x5]");
  CHECK_THROWS_AS(left_nilpotency_index(AlgebraKind::wnov, 8), CapExceeded);
}

TEST_CASE("nilpotency profiles") {
  CHECK(nilpotency_profile(preset("wlc2") + preset("flex"), 5).nilpotent);
  CHECK(nilpotency_profile(preset("wlc2") + preset("lie-nilp:2"), 5).nilpotent);
  CHECK(nilpotency_profile(preset("wlc2") + preset("weak-flex:+"), 5).nilpotent);
  CHECK(nilpotency_profile(preset("wlc2") + preset("weak-flex:-"), 5).nilpotent);
  auto p = nilpotency_profile(preset("wnov2"), 5);
  CHECK(!p.nilpotent);
  CHECK(p.dimensions.front().second == 5);
}

TEST_CASE("classification of degree 2 identities") {
  for (auto text : {"x1*x2 + x2*x1", "x1*x2 - 5 x2*x1", "x2*x1"}) {
    auto c = classify_multilinear(gx(text));
    CHECK(c.verdict == Classification::Verdict::nilpotent_bound);
    CHECK(c.bound == 5);
    CHECK(c.oracle_confirmed == true);
  }
}

TEST_CASE("classification of degree 3 identities") {
  auto a = classify_multilinear(gx("A(x1,x2,x3)"));
  CHECK(a.verdict == Classification::Verdict::nilpotent_bound);
  CHECK(a.bound == 5);
  CHECK(a.substituted_slot == "x1 -> (x1*x4)*x5");
  CHECK(render(a.witness_value) == "(x1*x2) R[x3,x4,x5]");
  CHECK(a.oracle_confirmed == true);

  auto s = classify_multilinear(gx("x1*(x2*x3) + 2 x3*(x2*x1)"));
  CHECK(s.verdict == Classification::Verdict::non_nilpotent_candidate);
  CHECK(s.group == "S3");
  REQUIRE(s.orbit_form.size() == 2);
  CHECK(s.orbit_form[0].permutation == std::vector<unsigned>{1, 2, 3});
  CHECK(s.orbit_form[1].permutation == std::vector<unsigned>{3, 2, 1});
  CHECK(s.orbit_form[1].coefficient.str() == "2");
}

TEST_CASE("classification of degree 4 identities") {
  auto t = classify_multilinear(gx("T(x1,x2,x3,x4) - A(x2,x1*x3,x4)"));
  CHECK(t.verdict == Classification::Verdict::nilpotent_bound);
  CHECK(t.oracle_confirmed == true);

  // (x2, x1 x3, x4) corresponds to the odd arrangement 2,1,3,4; its
  // representative in A4 is 2,1,4,3 by the symmetry in the last two slots.
  auto c = classify_multilinear(gx("A(x2,x1*x3,x4) - 3 A(x1,x2*x3,x4)"));
  CHECK(c.verdict == Classification::Verdict::non_nilpotent_candidate);
  CHECK(c.group == "A4");
  REQUIRE(c.orbit_form.size() == 2);
  CHECK(c.orbit_form[0].permutation == std::vector<unsigned>{1, 2, 3, 4});
  CHECK(c.orbit_form[0].coefficient.str() == "-3");
  CHECK(c.orbit_form[1].permutation == std::vector<unsigned>{2, 1, 4, 3});
  CHECK(c.degree5_dimension.value_or(0) > 0);
}

TEST_CASE("classification of degree 5 identities") {
  ClassifyOptions fast;
  fast.cross_check = false;
  auto c = classify_multilinear(gx("(((x2*x1)*x3)*x4)*x5 - 4 x1*(x2*(x3*(x4*x5)))"), fast);
  CHECK(c.verdict == Classification::Verdict::nilpotent_bound);
  CHECK(c.bound == 6);
  CHECK(c.substituted_slot == "x2 -> x2*x6");
  CHECK(render(c.witness_value) == "(x2*x1) R[x3,x4,x5,x6]");
}

TEST_CASE("classification input errors") {
  CHECK_THROWS_AS(classify_multilinear(gx("0")), Error);
  CHECK_THROWS_AS(classify_multilinear(gx("x1*(x1*x2)")), Error);
  CHECK_THROWS_AS(classify_multilinear(gx("x1*x3")), Error);
  CHECK_THROWS_AS(classify_multilinear(gx("(x1*x2)*(x3*x4)")), Error);
  CHECK_THROWS_AS(classify_multilinear(id("v1*v2 = 0")), Error);
}
