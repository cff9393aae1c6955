#include <set>

#include "doctest.h"
#include "wnov/error.hpp"
#include "wnov/magma.hpp"
#include "wnov/render.hpp"
#include "wnov/sugar.hpp"

using namespace wnov;

namespace {
  unsigned long long factorial(unsigned n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }
  MagmaPoly x(unsigned k) {
    return generator_poly(gen(k));
  }
}  // namespace

TEST_CASE("word counts follow the Catalan numbers") {
  unsigned long long const cat[] = {1, 1, 2, 5, 14, 42};
  for (unsigned n = 0; n < 6; ++n) {
    CHECK(catalan(n) == cat[n]);
  }
  for (unsigned n = 1; n <= 6; ++n) {
    auto words = enumerate_words(Multidegree::multilinear(n));
    CHECK(words.size() == factorial(n) * catalan(n - 1));
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::set<MagmaWord>(words.begin(), words.end()).size() == words.size());
  }
  // Leaf arrangements of x1^2 x2 are 3, times 2 bracketings.
  CHECK(enumerate_words(Multidegree::parse("2,1")).size() == 6);
  CHECK(enumerate_words(Multidegree::parse("3")).size() == 2);
}

TEST_CASE("word order: degree, then shape, then leaves") {
  auto a = MagmaWord::generator(gen(1));
  auto b = MagmaWord::generator(gen(2));
  auto v = MagmaWord::variable(var(1));
  CHECK(a < b);
  CHECK(b < v);
  CHECK(b < a * a);
  // Preorder shape: an inner node sorts before a leaf.
  CHECK(((a * a) * a) < (a * (a * a)));
  auto w = (a * b) * v;
  CHECK(w.left() == a * b);
  CHECK(w.right() == v);
  CHECK(w.degree() == 3);
  CHECK(render(w) == "(x1*x2)*v1");
}

TEST_CASE("multidegrees") {
  auto md = Multidegree::parse("1,0,2");
  CHECK(md.total() == 3);
  CHECK(!md.is_multilinear());
  CHECK(md.counts().size() == 2);
  CHECK(Multidegree::multilinear(4).is_multilinear());
  CHECK_THROWS_AS(Multidegree::parse("1,x"), Error);
  auto p = magma_mul(x(1), magma_mul(x(3), x(3)));
  CHECK(generator_multidegree(p) == md);
  CHECK(!generator_multidegree(x(1) + magma_mul(x(1), x(2))));
}

TEST_CASE("substitution replaces variables by polynomials") {
  auto f = magma_mul(variable_poly(var(1)), variable_poly(var(2)));
  auto s = substitute(f, {{var(1), x(1) + x(2)}, {var(2), x(3)}});
  CHECK(s == magma_mul(x(1), x(3)) + magma_mul(x(2), x(3)));
  CHECK_THROWS_AS(substitute(f, {{var(1), x(1)}}), Error);
}

TEST_CASE("sugar expansions") {
  auto a = associator(x(1), x(2), x(3));
  CHECK(a == magma_mul(magma_mul(x(1), x(2)), x(3)) - magma_mul(x(1), magma_mul(x(2), x(3))));
  CHECK(commutator(x(1), x(2)) == magma_mul(x(1), x(2)) - magma_mul(x(2), x(1)));
  CHECK(circle(x(1), x(2)) == magma_mul(x(1), x(2)) + magma_mul(x(2), x(1)));
  // (xy,z,t) - (y,xz,t) - 2(x,yz,t) has six distinct words.
  auto t = tch(x(1), x(2), x(3), x(4));
  CHECK(t.size() == 6);
  auto coeff = [&](MagmaPoly const& w) {
    return t.coefficient(w.begin()->first).str();
  };
  auto x1 = x(1), x2 = x(2), x3 = x(3), x4 = x(4);
  auto m  = [](MagmaPoly const& p, MagmaPoly const& q) { return magma_mul(p, q); };
  CHECK(coeff(m(m(m(x1, x2), x3), x4)) == "1");
  CHECK(coeff(m(m(x1, x2), m(x3, x4))) == "-1");
  CHECK(coeff(m(m(x2, m(x1, x3)), x4)) == "-1");
  CHECK(coeff(m(x2, m(m(x1, x3), x4))) == "1");
  CHECK(coeff(m(m(x1, m(x2, x3)), x4)) == "-2");
  CHECK(coeff(m(x1, m(m(x2, x3), x4))) == "2");
  std::vector<MagmaPoly> two{x1, x2};
  CHECK_THROWS_AS(expand_sugar(Sugar::associator, two), Error);
}
