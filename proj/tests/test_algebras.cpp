#include <map>
#include <set>

#include "doctest.h"
#include "wnov/check.hpp"
#include "wnov/error.hpp"
#include "wnov/oracle.hpp"
#include "wnov/parser.hpp"
#include "wnov/render.hpp"

using namespace wnov;

namespace {
  std::vector<GeneratorId> gens(std::initializer_list<unsigned> ks) {
    std::vector<GeneratorId> out;
    for (auto k : ks) {
      out.push_back(gen(k));
    }
    return out;
  }

  // Multidegrees on letters x1..x_letters with total degree exactly n.
  std::vector<Multidegree> multidegrees(unsigned letters, unsigned n) {
    std::vector<Multidegree> out;
    std::vector<unsigned>    c(letters, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
      if (i + 1 == letters) {
        c[i] = left;
        out.push_back(Multidegree::from_counts(c));
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        c[i] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, n);
    return out;
  }
}  // namespace

TEST_CASE("L-part canonical form") {
  CHECK(canonicalize_L(gens({3, 1, 2})) == gens({3, 1, 2}));
  CHECK(canonicalize_L(gens({4, 3, 2, 1})) == gens({1, 2, 3, 4}));
  CHECK(canonicalize_L(gens({2, 1, 3, 4})) == gens({1, 2, 4, 3}));
  CHECK(canonicalize_L(gens({1, 2, 4, 3})) == gens({1, 2, 4, 3}));
  CHECK(canonicalize_L(gens({2, 1, 2, 3})) == gens({1, 2, 2, 3}));
  // Canonical forms are invariant under even permutations (3-cycles).
  auto base = gens({5, 2, 4, 1, 3});
  auto r    = canonicalize_L(base);
  std::swap(base[0], base[1]);
  std::swap(base[1], base[2]);
  CHECK(canonicalize_L(base) == r);
}

TEST_CASE("wlc table rows") {
  CHECK(render(wlc_eval(parse_generator_expr("(x2*x1)*x3"))) == "x1 L[x2] R[x3]");
  CHECK(render(wlc_eval(parse_generator_expr("x2*x1"))) == "x1 L[x2]");
  CHECK(render(wlc_eval(parse_generator_expr("x4*((x2*x1)*x3)")))
        == "x3 L[x1,x2,x4] - x3 L[x4,x1,x2]");
  CHECK(wlc_eval(parse_generator_expr("(x2*x1)*(x4*x3)")).is_zero());
  CHECK(wlc_eval(parse_generator_expr("x5*(((x2*x1)*x3)*x4)")).is_zero());
  CHECK_THROWS_AS(WlcMonomial(gen(1), {}, gens({2})), Error);
}

TEST_CASE("wlc basis sizes") {
  CHECK(wlc_basis(Multidegree::multilinear(3)).size() == 12);
  CHECK(wlc_basis(Multidegree::multilinear(4)).size() == 72);
  for (auto const& m : wlc_basis(Multidegree::multilinear(4))) {
    CHECK(!m.lpart().empty());
  }
}

TEST_CASE("wn table rows") {
  CHECK(render(wn_eval(parse_generator_expr("x1*(x2*(x3*x4))"))) == "-1 A(x1, x3*x2, x4)");
  CHECK(render(wn_eval(parse_generator_expr("x1*A(x2,x3,x4)"))) == "A(x2, x1*x3, x4)");
  CHECK(render(wn_eval(parse_generator_expr("(x1*x2)*x3"))) == "x1*(x2*x3) + A(x1, x2, x3)");
  CHECK(wn_eval(parse_generator_expr("(x1*x2)*(x3*x4)")).is_zero());
  CHECK(wn_eval(parse_generator_expr("x5*A(x1,x2*x3,x4)")).is_zero());
  CHECK(wn_eval(parse_generator_expr("A(x1,x2*x3,x4)*x5")).is_zero());
  CHECK(render(wn_eval(parse_generator_expr("T(x1,x2,x3,x4)*x5"))) == "(x1*x2) R[x3,x4,x5]");
  CHECK_THROWS_AS(WnBasisElement::t5(gen(1), gens({2, 3, 4})), Error);
}

TEST_CASE("wn basis at (1,1,1) has six T1 and three T2") {
  auto b = wn_basis(Multidegree::multilinear(3));
  REQUIRE(b.size() == 9);
  std::map<WnKind, int> kinds;
  for (auto const& e : b) {
    ++kinds[e.kind()];
  }
  CHECK(kinds[WnKind::t1] == 6);
  CHECK(kinds[WnKind::t2] == 3);
  auto b12 = wn_basis(Multidegree::parse("1,2"));
  CHECK(std::count(b12.begin(), b12.end(),
                   WnBasisElement::t2(gen(1), gen(2), gen(2))) == 1);
}

TEST_CASE("representative words evaluate back to their base element") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (auto const& md : multidegrees(3, n)) {
      for (auto const& e : wn_basis(md)) {
        CHECK(wn_eval(to_magma(e)) == WnElement::basis(e, Field::rationals()));
      }
      for (auto const& m : wlc_basis(md)) {
        CHECK(wlc_eval(to_magma(m)) == WlcElement::basis(m, Field::rationals()));
      }
    }
  }
}

// Each table product a.x, x.a, written back as words, differs from the
// words of its claimed value by an element of the T-ideal. The oracle does
// not use the table, so this checks the rows against the defining
// identities directly.
template <typename Algebra>
void check_rows_against_oracle(char const* ids_name, unsigned max_degree) {
  auto ids = preset(ids_name);
  for (unsigned n = 2; n <= max_degree; ++n) {
    auto md = Multidegree::multilinear(n);
    std::vector<MagmaPoly> claims;
    auto x = Algebra::generator(gen(n));
    for (auto const& a : Algebra::basis(Multidegree::multilinear(n - 1))) {
      for (int side = 0; side < 2; ++side) {
        auto lhs = side ? magma_mul(to_magma(a), to_magma(x)) : magma_mul(to_magma(x), to_magma(a));
        auto val = side ? Algebra::multiply(a, x, Field::rationals())
                        : Algebra::multiply(x, a, Field::rationals());
        auto rhs = MagmaPoly(Field::rationals());
        for (auto const& [e, c] : val) {
          rhs = rhs + to_magma(e) * c;
        }
        claims.push_back(lhs - rhs);
      }
    }
    auto in = membership(claims, md, ids);
    CHECK(std::count(in.begin(), in.end(), false) == 0);
  }
}

TEST_CASE("wn rows agree with the oracle") {
  check_rows_against_oracle<WnAlgebra>("wnov2", 5);
}

TEST_CASE("wlc rows agree with the oracle") {
  check_rows_against_oracle<WlcAlgebra>("wlc2", 5);
}

TEST_CASE("operator words") {
  auto pair = WnElement::basis(WnBasisElement::pair(gen(1), gen(2)), Field::rationals());
  CHECK(render(operator_word_apply<WnAlgebra>(pair, parse_operator_word("R3 R4 R5")))
        == "(x1*x2) R[x3,x4,x5]");
  CHECK(operator_word_apply<WnAlgebra>(pair, parse_operator_word("R3 R4 L5")).is_zero());
  CHECK(render(operator_word_apply<WnAlgebra>(pair, parse_operator_word("H3")))
        == "x1*(x2*x3) - x3*(x1*x2) + A(x1, x2, x3)");
  CHECK(render(operator_word_apply<WnAlgebra>(pair, parse_operator_word("Th3")))
        == "x1*(x2*x3) + x3*(x1*x2) + A(x1, x2, x3)");
  CHECK_THROWS_AS(parse_operator_word("Q3"), Error);
}

TEST_CASE("type (iii) elements generate an ideal inside the annihilator") {
  // C[A(a, bc, d)] for every one-hole context C with up to three letters
  // x5, x6, x7: all words on the hole and those letters.
  auto core = parse_generator_expr("A(x1,x2*x3,x4)");
  CHECK(is_annihilator(wn_eval(core)));
  std::size_t contexts = 0;
  for (unsigned d = 1; d <= 3; ++d) {
    std::vector<unsigned> counts(5 + d, 0);
    for (unsigned k = 4; k < 5 + d; ++k) {
      counts[k] = 1;
    }
    // x5 is the hole.
    for (auto const& w : enumerate_words(Multidegree::from_counts(counts))) {
      auto c = as_identity(MagmaPoly(w, Scalar::one(Field::rationals())));
      std::map<VariableId, MagmaPoly> values{{var(5), core}};
      for (unsigned k = 6; k < 6 + d; ++k) {
        values.emplace(var(k), generator_poly(gen(k)));
      }
      CHECK(wn_eval(substitute(c, values)).is_zero());
      ++contexts;
    }
  }
  CHECK(contexts == 2 + 12 + 120);
}
