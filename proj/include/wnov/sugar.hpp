#pragma once

#include <span>
#include <string_view>

#include "wnov/magma.hpp"

namespace wnov {

  // Derived operations of the free magma.
  enum class Sugar {
    associator,  // A(a,b,c) = (ab)c - a(bc)
    commutator,  // C(a,b)   = ab - ba
    circle,      // O(a,b)   = ab + ba
    tch          // T(x,y,z,t) = A(xy,z,t) - A(y,xz,t) - 2 A(x,yz,t)
  };

  [[nodiscard]] std::size_t      arity(Sugar s) noexcept;
  [[nodiscard]] std::string_view sugar_name(Sugar s) noexcept;

  // Throws Error on an arity mismatch.
  MagmaPoly expand_sugar(Sugar s, std::span<MagmaPoly const> args);

  MagmaPoly associator(MagmaPoly const& a, MagmaPoly const& b,
                       MagmaPoly const& c);
  MagmaPoly commutator(MagmaPoly const& a, MagmaPoly const& b);
  MagmaPoly circle(MagmaPoly const& a, MagmaPoly const& b);
  MagmaPoly tch(MagmaPoly const& x, MagmaPoly const& y, MagmaPoly const& z,
                MagmaPoly const& t);

}  // namespace wnov
