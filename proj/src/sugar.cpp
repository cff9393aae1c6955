#include "wnov/sugar.hpp"

#include <string>

#include "wnov/error.hpp"

namespace wnov {

  std::size_t arity(Sugar s) noexcept {
    switch (s) {
      case Sugar::associator:
        return 3;
      case Sugar::commutator:
      case Sugar::circle:
        return 2;
      case Sugar::tch:
        return 4;
    }
    return 0;
  }

  std::string_view sugar_name(Sugar s) noexcept {
    switch (s) {
      case Sugar::associator:
        return "A";
      case Sugar::commutator:
        return "C";
      case Sugar::circle:
        return "O";
      case Sugar::tch:
        return "T";
    }
    return "?";
  }

  MagmaPoly associator(MagmaPoly const& a, MagmaPoly const& b,
                       MagmaPoly const& c) {
    return magma_mul(magma_mul(a, b), c) - magma_mul(a, magma_mul(b, c));
  }

  MagmaPoly commutator(MagmaPoly const& a, MagmaPoly const& b) {
    return magma_mul(a, b) - magma_mul(b, a);
  }

  MagmaPoly circle(MagmaPoly const& a, MagmaPoly const& b) {
    return magma_mul(a, b) + magma_mul(b, a);
  }

  MagmaPoly tch(MagmaPoly const& x, MagmaPoly const& y, MagmaPoly const& z,
                MagmaPoly const& t) {
    auto two = Scalar(x.field(), 2L);
    return associator(magma_mul(x, y), z, t)
           - associator(y, magma_mul(x, z), t)
           - associator(x, magma_mul(y, z), t) * two;
  }

  MagmaPoly expand_sugar(Sugar s, std::span<MagmaPoly const> args) {
    if (args.size() != arity(s)) {
      throw Error(std::string(sugar_name(s)) + " expects "
                  + std::to_string(arity(s)) + " arguments, got "
                  + std::to_string(args.size()));
    }
    switch (s) {
      case Sugar::associator:
        return associator(args[0], args[1], args[2]);
      case Sugar::commutator:
        return commutator(args[0], args[1]);
      case Sugar::circle:
        return circle(args[0], args[1]);
      case Sugar::tch:
        return tch(args[0], args[1], args[2], args[3]);
    }
    throw Error("unknown sugar");
  }

}  // namespace wnov
