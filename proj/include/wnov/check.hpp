#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wnov/evaluate.hpp"
#include "wnov/identity_set.hpp"
#include "wnov/magma.hpp"
#include "wnov/oracle.hpp"
#include "wnov/render.hpp"
#include "wnov/wlc_algebra.hpp"
#include "wnov/wn_algebra.hpp"

namespace wnov {

  enum class AlgebraKind { wlc, wnov };

  AlgebraKind      parse_algebra(std::string_view name);
  std::string_view algebra_name(AlgebraKind a) noexcept;

  // A word combination that evaluates to the given base element.
  MagmaPoly to_magma(WnBasisElement const& e, Field field = Field::rationals());
  MagmaPoly to_magma(WlcMonomial const& m, Field field = Field::rationals());

  WlcElement wlc_eval(MagmaPoly const& p);
  WnElement  wn_eval(MagmaPoly const& p);

  struct CheckReport {
    MagmaPoly   identity;
    AlgebraKind algebra = AlgebraKind::wnov;
    bool        holds   = true;
    // Counterexample: variable -> basis element (as a word combination),
    // and the rendered nonzero value of the identity under it.
    std::map<VariableId, MagmaPoly> assignment;
    std::string                     value;
    unsigned                        max_degree    = 7;
    std::size_t                     substitutions = 0;
    std::string                     domain;
  };

  // Substitutes every tuple of basis elements, slot j taking elements on its
  // own block of fresh generators, with total degree <= max_degree (and each
  // slot <= slot_cap when given). By multilinearity and freeness this covers
  // every substitution of that degree. Throws on a non-multilinear identity.
  CheckReport check_identity(AlgebraKind algebra, MagmaPoly const& identity,
                             unsigned max_degree = 7, unsigned slot_cap = 0);

  struct NilpotencyIndexResult {
    AlgebraKind             algebra = AlgebraKind::wnov;
    unsigned                cap     = 0;
    std::optional<unsigned> index;  // nullopt: not reached within the cap
    // Longest nonzero left-normed product found (length index - 1 when the
    // index is known).
    std::vector<MagmaPoly> witness_factors;
    MagmaPoly              witness_word;
    std::string            witness_value;
  };

  // Smallest k such that every left-normed product u1(u2(...(u_{k-1}u_k)))
  // of basis elements with total degree <= cap vanishes.
  NilpotencyIndexResult left_nilpotency_index(AlgebraKind algebra,
                                              unsigned    cap = 6);

  struct NilpotencyProfile {
    bool nilpotent = true;  // every component of the degree is zero
    std::vector<std::pair<Multidegree, std::size_t>> dimensions;
  };

  // Checks quotient_dimension(ids, md) == 0 for every multidegree of total
  // degree n (one per partition; the rest are relabelings). Stops at the
  // first nonzero component.
  NilpotencyProfile nilpotency_profile(IdentitySet const& ids, unsigned n,
                                       OracleOptions const& opts = {});

  // Generator polynomial -> identity over variables (x_k becomes v_k).
  MagmaPoly as_identity(MagmaPoly const& f);

}  // namespace wnov
