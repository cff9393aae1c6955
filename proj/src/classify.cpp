#include "wnov/classify.hpp"

#include <algorithm>

#include "wnov/check.hpp"
#include "wnov/error.hpp"
#include "wnov/identity_set.hpp"
#include "wnov/oracle.hpp"
#include "wnov/render.hpp"

namespace wnov {

  std::string verdict_name(Classification::Verdict v) {
    return v == Classification::Verdict::nilpotent_bound
               ? "NilpotentBound"
               : "NonNilpotentCandidate";
  }

  namespace {

    bool even(std::vector<unsigned> const& p) {
      unsigned inversions = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          inversions += p[i] > p[j];
        }
      }
      return inversions % 2 == 0;
    }

    std::vector<unsigned> indices_of(WnBasisElement const& e) {
      std::vector<unsigned> out;
      for (auto g : e.indices()) {
        out.push_back(index(g));
      }
      return out;
    }

    // Replaces generator x_k everywhere in f by the combination w.
    MagmaPoly substitute_generator(MagmaPoly const& f, unsigned k,
                                   MagmaPoly const& w) {
      auto as_var  = as_identity(f);
      auto degrees = variable_degrees(as_var);
      std::map<VariableId, MagmaPoly> values;
      for (auto const& [v, d] : *degrees) {
        values.emplace(v, index(v) == k
                              ? w
                              : generator_poly(gen(index(v)), f.field()));
      }
      return substitute(as_var, values);
    }

  }  // namespace

  Classification classify_multilinear(MagmaPoly const&       f,
                                      ClassifyOptions const& opts) {
    if (f.is_zero()) {
      throw Error("classify expects a nonzero polynomial");
    }
    if (has_variables(f)) {
      throw Error("classify expects a polynomial in the generators x_k");
    }
    auto md = generator_multidegree(f);
    if (!md || !md->is_multilinear()) {
      throw Error("classify expects a multilinear polynomial");
    }
    auto const n = md->total();
    if (n < 2) {
      throw Error("classify expects degree >= 2");
    }
    unsigned k = 1;
    for (auto const& [g, d] : md->counts()) {
      if (index(g) != k++) {
        throw Error("classify expects the generators x1..x"
                    + std::to_string(n));
      }
    }

    Classification c;
    c.input       = f;
    c.degree      = n;
    c.coordinates = wn_eval(f);
    if (c.coordinates.is_zero()) {
      throw Error("f vanishes identically in the variety; it defines no "
                  "proper subvariety");
    }

    auto const  field = f.field();
    auto        x = [&](unsigned i) { return generator_poly(gen(i), field); };
    std::optional<unsigned> slot;
    MagmaPoly   w(field);
    auto first_of = [&](WnKind kind) -> std::optional<unsigned> {
      for (auto const& [e, coeff] : c.coordinates) {
        if (e.kind() == kind) {
          return index(e[0]);
        }
      }
      return std::nullopt;
    };

    if (n >= 4) {
      slot = first_of(n == 4 ? WnKind::t4 : WnKind::t5);
      if (slot) {
        w = magma_mul(x(*slot), x(n + 1));
      }
    } else if (n == 3) {
      slot = first_of(WnKind::t2);
      if (slot) {
        w = magma_mul(magma_mul(x(*slot), x(4)), x(5));
      }
    } else {
      slot = first_of(WnKind::pair);
      w = magma_mul(magma_mul(magma_mul(x(*slot), x(3)), x(4)), x(5));
    }

    if (slot) {
      c.verdict          = Classification::Verdict::nilpotent_bound;
      c.bound            = n >= 5 ? n + 1 : 5;
      c.substituted_slot = "x" + std::to_string(*slot) + " -> " + render(w);
      c.witness          = substitute_generator(f, *slot, w);
      c.witness_value    = wn_eval(c.witness);
      if (c.witness_value.is_zero()) {
        throw Error("internal: nilpotency witness evaluates to zero");
      }
      if (opts.cross_check && c.bound <= 6 && field.is_rational()) {
        auto ids = preset("wnov2")
                   + IdentitySet("f", {as_identity(f)});
        OracleOptions o;
        o.field            = opts.oracle_field;
        c.oracle_confirmed = nilpotency_profile(ids, c.bound, o).nilpotent;
      }
      return c;
    }

    c.verdict = Classification::Verdict::non_nilpotent_candidate;
    c.group   = n == 4 ? "A4" : "S3";
    for (auto const& [e, coeff] : c.coordinates) {
      auto p = indices_of(e);
      if (n == 4 && !even(p)) {
        std::swap(p[2], p[3]);
      }
      c.orbit_form.push_back({p, coeff});
    }
    std::sort(c.orbit_form.begin(), c.orbit_form.end(),
              [](OrbitTerm const& a, OrbitTerm const& b) {
                return a.permutation < b.permutation;
              });
    if (opts.cross_check && field.is_rational()) {
      auto ids = preset("wnov2")
                 + IdentitySet("f", {as_identity(f)});
      OracleOptions o;
      o.field = opts.oracle_field;
      c.degree5_dimension
          = quotient_dimension(ids, Multidegree::multilinear(5), o);
    }
    return c;
  }

}  // namespace wnov
