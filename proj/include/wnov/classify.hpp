#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wnov/magma.hpp"
#include "wnov/scalar.hpp"
#include "wnov/wn_algebra.hpp"

namespace wnov {

  struct ClassifyOptions {
    // Re-check NilpotentBound(k), k <= 6, with the oracle: every degree-k
    // component of wnov2 + {f} must vanish. Rational inputs only.
    bool  cross_check  = true;
    Field oracle_field = Field::prime(1009);
  };

  struct OrbitTerm {
    std::vector<unsigned> permutation;  // images of 1..n
    Scalar                coefficient;
  };

  struct Classification {
    enum class Verdict { nilpotent_bound, non_nilpotent_candidate };

    MagmaPoly input;
    unsigned  degree = 0;
    Verdict   verdict = Verdict::nilpotent_bound;
    WnElement coordinates;  // f in base-element coordinates

    // nilpotent_bound: the bound, and a substitution turning f into a
    // nonzero right-normed R-word of degree bound - 1.
    unsigned       bound = 0;
    std::string    substituted_slot;  // e.g. "x1 -> (x1*x4)*x5"
    MagmaPoly      witness;           // f after the substitution
    WnElement      witness_value;
    std::optional<bool> oracle_confirmed;

    // non_nilpotent_candidate: coordinates over the group orbit ("A4" acting
    // on (x_d1, x_d2 x_d3, x_d4), or "S3" acting on x_s1(x_s2 x_s3)).
    std::string            group;
    std::vector<OrbitTerm> orbit_form;
    // Dimension of the multilinear degree-5 component of wnov2 + {f}; a
    // nonzero value shows the variety is not nilpotent of index <= 5.
    std::optional<std::size_t> degree5_dimension;
  };

  // f: nonzero polynomial in x1..xn, multilinear, n >= 2.
  Classification classify_multilinear(MagmaPoly const&       f,
                                      ClassifyOptions const& opts = {});

  [[nodiscard]] std::string verdict_name(Classification::Verdict v);

}  // namespace wnov
