#include <random>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "wnov/check.hpp"
#include "wnov/error.hpp"
#include "wnov/parser.hpp"
#include "wnov/render.hpp"
#include "wnov/sugar.hpp"

using namespace wnov;

TEST_CASE("parsing words and sugar") {
  auto p = parse_expr("(x1*x2)*(x3*x4)");
  REQUIRE(p.size() == 1);
  auto w = p.begin()->first;
  CHECK(w.degree() == 4);
  CHECK(w.left().degree() == 2);
  CHECK(w.right().degree() == 2);
  CHECK(render(p) == "(x1*x2)*(x3*x4)");
  CHECK(parse_expr("x1 * (x2 * x3)") == parse_expr("x1*(x2*x3)"));
  CHECK(parse_expr("A(v1,v2,v3) - A(v1,v3,v2)") == preset("rs").identities().front());
  auto x = [](unsigned k) { return generator_poly(gen(k)); };
  CHECK(parse_expr("T(x1,x2,x3,x4)") == tch(x(1), x(2), x(3), x(4)));
  CHECK(parse_expr("C(x1,x2)") == commutator(x(1), x(2)));
  CHECK(parse_expr("O(x1,x2)") == circle(x(1), x(2)));
  CHECK(parse_expr("0").is_zero());
}

TEST_CASE("rational coefficients") {
  auto p = parse_expr("-3/4 x1*x2 + 2 x2*x1 - x1*x2");
  CHECK(render(p) == "-7/4 x1*x2 + 2 x2*x1");
  CHECK(parse_expr("1/2 (x1*x2) + 1/2 x1*x2") == parse_expr("x1*x2"));
  CHECK(parse_expr("x1*x2 - x1*x2").is_zero());
}

TEST_CASE("syntax errors carry positions") {
  auto pos = [](char const* text) -> long {
    try {
      parse_expr(text);
    } catch (ParseError const& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(pos("x1*x2*x3") == 5);
  CHECK(pos("x1 x2") >= 0);
  CHECK(pos("(x1*x2") == 6);
  CHECK(pos("A(x1,x2)") >= 0);
  CHECK(pos("y1") == 0);
  CHECK(pos("x0") >= 0);
  CHECK(pos("3") >= 0);
  CHECK(pos("x1 +") >= 0);
  CHECK_THROWS_AS(parse_generator_expr("x1*v2"), Error);
  CHECK_THROWS_AS(parse_identity("x1*x2 = 0"), Error);
  CHECK_THROWS_AS(parse_identity("v1*v2 = v1*v2 = 0"), Error);
  CHECK(parse_identity("v1*v2 = v2*v1") == parse_expr("C(v1,v2)"));
}

TEST_CASE("rendering of normal forms") {
  CHECK(render(WnElement(Field::rationals())) == "0");
  CHECK(render(MagmaPoly(Field::rationals())) == "0");
  CHECK(render(wlc_eval(parse_generator_expr("(x2*x1)*x3"))) == "x1 L[x2] R[x3]");
  CHECK(render(wn_eval(parse_generator_expr("x1*(x2*(x3*x4))"))) == "-1 A(x1, x3*x2, x4)");
  CHECK(render(WnBasisElement::t4(gen(1), gen(2), gen(3), gen(4))) == "T(x1,x2,x3,x4)");
  CHECK(render(WnBasisElement::t5(gen(1), {gen(2), gen(3), gen(4), gen(5)}))
        == "(x1*x2) R[x3,x4,x5]");
  auto f = change_field(parse_generator_expr("x1*x2 - 2 x2*x1"), Field::prime(7));
  CHECK(render(f) == "x1*x2 - 2 x2*x1");
  CHECK(render(change_field(parse_generator_expr("4 x1*x2"), Field::prime(7))) == "-3 x1*x2");
}

TEST_CASE("json documents") {
  auto e = wn_eval(parse_generator_expr("x1*(x2*(x3*x4))"));
  auto j = to_json(e);
  CHECK(j["field"] == "q");
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["coefficient"] == "-1");
  CHECK(j["terms"][0]["kind"] == "t3");
  CHECK(j["terms"][0]["indices"] == nlohmann::json::array({1, 3, 2, 4}));
}

namespace {
  MagmaWord random_word(std::mt19937& rng, unsigned degree) {
    std::uniform_int_distribution<int> letter(1, 4), kind(0, 3);
    if (degree == 1) {
      int k = letter(rng);
      return kind(rng) == 0 ? MagmaWord::variable(var(static_cast<unsigned>(k)))
                            : MagmaWord::generator(gen(static_cast<unsigned>(k)));
    }
    std::uniform_int_distribution<unsigned> split(1, degree - 1);
    auto l = split(rng);
    return random_word(rng, l) * random_word(rng, degree - l);
  }
}  // namespace

TEST_CASE("parse and render round-trip on random polynomials") {
  std::mt19937                       rng(7);
  std::uniform_int_distribution<int> terms(1, 5), deg(1, 6), num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    MagmaPoly p(Field::rationals());
    int       n = terms(rng);
    for (int t = 0; t < n; ++t) {
      auto w = random_word(rng, static_cast<unsigned>(deg(rng)));
      p.add_term(w, Scalar(Field::rationals(), mpq_class(num(rng), den(rng))));
    }
    auto text = render(p);
    CAPTURE(text);
    CHECK(parse_expr(text) == p);
    CHECK(render(parse_expr(text)) == text);
  }
}

TEST_CASE("distinct base elements never render alike") {
  std::set<std::string> wn, wlc;
  std::size_t           n_wn = 0, n_wlc = 0;
  for (auto md : {"1,1,1,1,1", "2,1,1", "1,2,2", "3,1", "1,1,1,1", "2,2"}) {
    for (auto const& e : wn_basis(Multidegree::parse(md))) {
      wn.insert(render(e));
      ++n_wn;
    }
    for (auto const& m : wlc_basis(Multidegree::parse(md))) {
      wlc.insert(render(m));
      ++n_wlc;
    }
  }
  CHECK(wn.size() == n_wn);
  CHECK(wlc.size() == n_wlc);
}
