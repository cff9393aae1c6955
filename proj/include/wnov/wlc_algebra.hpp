#pragma once

#include <compare>
#include <string_view>
#include <vector>

#include "wnov/linear_combination.hpp"
#include "wnov/magma.hpp"

namespace wnov {

  // Normal form of an L-word: sequences of length >= 4 are identified up to
  // even permutations. Shorter sequences are returned unchanged. For length
  // >= 4 the result is the sorted sequence when `seq` lies in its A_n-orbit
  // (always the case with a repeated index), and otherwise the sorted
  // sequence with its last two entries swapped.
  std::vector<GeneratorId> canonicalize_L(std::vector<GeneratorId> seq);

  // x_base L_{l1} ... L_{ln} R_{r1} ... R_{rt}, i.e. the base generator
  // multiplied on the left by l1, then l2, ..., then on the right by r1, ...
  class WlcMonomial {
   public:
    // Canonicalizes the L-part. Throws if the degree is >= 2 and the L-part
    // is empty (such monomials are not basis elements).
    WlcMonomial(GeneratorId base, std::vector<GeneratorId> lpart,
                std::vector<GeneratorId> rpart);
    explicit WlcMonomial(GeneratorId g) : base_(g) {}

    [[nodiscard]] GeneratorId base() const noexcept {
      return base_;
    }
    [[nodiscard]] std::vector<GeneratorId> const& lpart() const noexcept {
      return lpart_;
    }
    [[nodiscard]] std::vector<GeneratorId> const& rpart() const noexcept {
      return rpart_;
    }
    [[nodiscard]] std::size_t degree() const noexcept {
      return 1 + lpart_.size() + rpart_.size();
    }
    [[nodiscard]] bool is_generator() const noexcept {
      return degree() == 1;
    }

    // Order: degree, number of R-operators, base, L-part, R-part.
    friend std::strong_ordering operator<=>(WlcMonomial const& a,
                                            WlcMonomial const& b);
    friend bool operator==(WlcMonomial const&, WlcMonomial const&) = default;

   private:
    GeneratorId              base_;
    std::vector<GeneratorId> lpart_;
    std::vector<GeneratorId> rpart_;
  };

  using WlcElement = LinearCombination<WlcMonomial>;

  // The multiplication table of the free metabelian weakly Novikov algebra
  // without right symmetry.
  WlcElement wlc_mul(WlcMonomial const& a, WlcMonomial const& b,
                     Field field = Field::rationals());

  // All canonical monomials of the multidegree, in monomial order.
  std::vector<WlcMonomial> wlc_basis(Multidegree const& md);

  // Algebra traits consumed by the generic evaluator.
  struct WlcAlgebra {
    using Basis   = WlcMonomial;
    using Element = WlcElement;
    static constexpr std::string_view name = "wlc";

    static Basis generator(GeneratorId g) {
      return WlcMonomial(g);
    }
    static Element multiply(Basis const& a, Basis const& b, Field field) {
      return wlc_mul(a, b, field);
    }
    static std::vector<Basis> basis(Multidegree const& md) {
      return wlc_basis(md);
    }
    static std::size_t degree(Basis const& b) {
      return b.degree();
    }
  };

}  // namespace wnov
