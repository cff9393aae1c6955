#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "wnov/linear_combination.hpp"
#include "wnov/magma.hpp"

namespace wnov {

  enum class WnKind : std::uint8_t {
    generator,  // x
    pair,       // xy
    t1,         // x(yz)
    t2,         // (x, t1, t2), symmetric in t1, t2
    t3,         // (x, y t1, t2), symmetric in t1, t2
    t4,         // Tch(x, t1, t2, t3), symmetric in t1, t2, t3
    t5          // (x t1) R_{t2} ... R_{tk}, k >= 4, symmetric in t1..tk
  };

  [[nodiscard]] std::string_view kind_name(WnKind k) noexcept;

  // Base element of the free right-symmetric weakly Novikov metabelian
  // algebra. Index layout by kind:
  //   generator [x]   pair [x,y]   t1 [x,y,z]   t2 [x,t1,t2]
  //   t3 [x,y,t1,t2]  t4 [x,t1,t2,t3]           t5 [x,t1,...,tk]
  class WnBasisElement {
   public:
    // Sorts the symmetric positions; throws on a wrong index count (in
    // particular for t5 with fewer than four symmetric indices).
    static WnBasisElement make(WnKind kind, std::vector<GeneratorId> indices);

    static WnBasisElement generator(GeneratorId x) {
      return make(WnKind::generator, {x});
    }
    static WnBasisElement pair(GeneratorId x, GeneratorId y) {
      return make(WnKind::pair, {x, y});
    }
    static WnBasisElement t1(GeneratorId x, GeneratorId y, GeneratorId z) {
      return make(WnKind::t1, {x, y, z});
    }
    static WnBasisElement t2(GeneratorId x, GeneratorId a, GeneratorId b) {
      return make(WnKind::t2, {x, a, b});
    }
    static WnBasisElement t3(GeneratorId x, GeneratorId y, GeneratorId a,
                             GeneratorId b) {
      return make(WnKind::t3, {x, y, a, b});
    }
    static WnBasisElement t4(GeneratorId x, GeneratorId a, GeneratorId b,
                             GeneratorId c) {
      return make(WnKind::t4, {x, a, b, c});
    }
    static WnBasisElement t5(GeneratorId x, std::vector<GeneratorId> ts);

    [[nodiscard]] WnKind kind() const noexcept {
      return kind_;
    }
    [[nodiscard]] std::vector<GeneratorId> const& indices() const noexcept {
      return indices_;
    }
    [[nodiscard]] std::size_t degree() const noexcept {
      return indices_.size();
    }
    [[nodiscard]] GeneratorId operator[](std::size_t i) const {
      return indices_[i];
    }

    // Order: degree, kind, indices.
    friend std::strong_ordering operator<=>(WnBasisElement const& a,
                                            WnBasisElement const& b);
    friend bool operator==(WnBasisElement const&,
                           WnBasisElement const&) = default;

   private:
    WnBasisElement(WnKind kind, std::vector<GeneratorId> indices)
        : kind_(kind), indices_(std::move(indices)) {}

    WnKind                   kind_;
    std::vector<GeneratorId> indices_;
  };

  // Canonical form of a raw descriptor with unsorted symmetric indices.
  inline WnBasisElement wn_canonicalize(WnKind                   kind,
                                        std::vector<GeneratorId> raw) {
    return WnBasisElement::make(kind, std::move(raw));
  }

  using WnElement = LinearCombination<WnBasisElement>;

  // The multiplication table of the free right-symmetric weakly Novikov
  // metabelian algebra, with derived terms expanded into base elements.
  WnElement wn_mul(WnBasisElement const& a, WnBasisElement const& b,
                   Field field = Field::rationals());

  // All canonical base elements of the multidegree, in element order.
  std::vector<WnBasisElement> wn_basis(Multidegree const& md);

  // True iff every term is of kind t3 (so also for zero).
  bool is_annihilator(WnElement const& e);

  struct WnAlgebra {
    using Basis   = WnBasisElement;
    using Element = WnElement;
    static constexpr std::string_view name = "wnov";

    static Basis generator(GeneratorId g) {
      return WnBasisElement::generator(g);
    }
    static Element multiply(Basis const& a, Basis const& b, Field field) {
      return wn_mul(a, b, field);
    }
    static std::vector<Basis> basis(Multidegree const& md) {
      return wn_basis(md);
    }
    static std::size_t degree(Basis const& b) {
      return b.degree();
    }
  };

}  // namespace wnov
