#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "wnov/identity_set.hpp"
#include "wnov/magma.hpp"

namespace wnov {

  struct OracleOptions {
    Field    field      = Field::rationals();
    unsigned degree_cap = 6;
  };

  // Relations of a multidegree component, columns indexed by
  // enumerate_words(md). Rows are deduplicated up to a scalar factor.
  struct RelationMatrix {
    std::vector<MagmaWord>                                      columns;
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> rows;
  };

  // Every C[f(w1, ..., wm)] for f in the (linearized) identity set, words
  // w_i on disjoint blocks of the multidegree and one-hole contexts C on
  // the remaining letters.
  RelationMatrix relation_rows(IdentitySet const& ids, Multidegree const& md,
                               OracleOptions const& opts = {});

  // |words(md)| - rank of the relations.
  std::size_t quotient_dimension(IdentitySet const& ids, Multidegree const& md,
                                 OracleOptions const& opts = {});

  // Words whose columns carry no pivot; their classes form a basis of the
  // component.
  std::vector<MagmaWord> quotient_basis(IdentitySet const&   ids,
                                        Multidegree const&   md,
                                        OracleOptions const& opts = {});

  // True iff f (a multihomogeneous generator polynomial) lies in the T-ideal.
  bool membership(MagmaPoly const& f, IdentitySet const& ids,
                  OracleOptions const& opts = {});

  // Batch form: every polynomial must be zero or of multidegree md; the
  // component is eliminated once.
  std::vector<bool> membership(std::vector<MagmaPoly> const& fs,
                               Multidegree const&            md,
                               IdentitySet const&            ids,
                               OracleOptions const&          opts = {});

  // Dimension over Q and over each GF(p); throws Error describing the
  // disagreement if any prime gives a different value.
  std::size_t quotient_dimension_cross_checked(
      IdentitySet const& ids, Multidegree const& md,
      std::vector<std::uint64_t> const& primes, unsigned degree_cap = 6);

  // One multidegree per partition of n: x1^{l1} x2^{l2} ..., l1 >= l2 >= ...
  // Every multidegree of total degree n is a relabeling of one of these.
  std::vector<Multidegree> partition_multidegrees(unsigned n);

}  // namespace wnov
