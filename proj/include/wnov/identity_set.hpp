#pragma once

#include <string>
#include <vector>

#include "wnov/magma.hpp"

namespace wnov {

  // A named list of polynomial identities f = 0 over formal variables.
  class IdentitySet {
   public:
    // Throws unless every identity is nonzero, uses variables only and is
    // multihomogeneous in them.
    IdentitySet(std::string name, std::vector<MagmaPoly> identities);

    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }
    [[nodiscard]] std::vector<MagmaPoly> const& identities() const& noexcept {
      return identities_;
    }
    // By value on temporaries, so `for (f : preset(n).identities())` is safe.
    [[nodiscard]] std::vector<MagmaPoly> identities() && {
      return std::move(identities_);
    }

    // Union; the name joins both names with ','.
    [[nodiscard]] IdentitySet operator+(IdentitySet const& other) const;

   private:
    std::string            name_;
    std::vector<MagmaPoly> identities_;
  };

  // Preset names: rs, wn, lc, met, wlc2, wnov2, nov2, flex, antiflex,
  // lie-nilp:<n>, jordan-nilp:<n>, weak-flex:+[:<n>], weak-flex:-[:<n>].
  IdentitySet preset(std::string const& name);
  std::vector<std::string> preset_names();

  // Reads "<expr> = <expr>" lines; '#' starts a comment.
  IdentitySet load_identity_file(std::string const& path);
  IdentitySet parse_identity_text(std::string const& name,
                                  std::string const& text);

  // Comma-separated list of presets and/or file paths.
  IdentitySet resolve_identities(std::string const& list);

  // Full linearization: every variable of degree d is replaced by d fresh
  // variables and the multilinear part is kept. Over characteristic 0 (or
  // p larger than the degree) the T-ideal is unchanged. Variables of the
  // result are renumbered v1..vm.
  MagmaPoly linearize(MagmaPoly const& f);

  // Bracketed words on the variables v1..vn in this order.
  std::vector<MagmaWord> bracketings(unsigned n);

}  // namespace wnov
