#include "wnov/check.hpp"

#include <functional>

#include "wnov/error.hpp"
#include "wnov/sugar.hpp"

namespace wnov {

  AlgebraKind parse_algebra(std::string_view name) {
    if (name == "wlc") {
      return AlgebraKind::wlc;
    }
    if (name == "wnov") {
      return AlgebraKind::wnov;
    }
    throw Error("unknown algebra '" + std::string(name)
                + "' (expected wlc or wnov)");
  }

  std::string_view algebra_name(AlgebraKind a) noexcept {
    return a == AlgebraKind::wlc ? "wlc" : "wnov";
  }

  MagmaPoly to_magma(WnBasisElement const& e, Field field) {
    auto        x = [&](std::size_t i) { return generator_poly(e[i], field); };
    auto        mul = [](MagmaPoly const& a, MagmaPoly const& b) {
      return magma_mul(a, b);
    };
    switch (e.kind()) {
      case WnKind::generator:
        return x(0);
      case WnKind::pair:
        return mul(x(0), x(1));
      case WnKind::t1:
        return mul(x(0), mul(x(1), x(2)));
      case WnKind::t2:
        return associator(x(0), x(1), x(2));
      case WnKind::t3:
        return associator(x(0), mul(x(1), x(2)), x(3));
      case WnKind::t4:
        return tch(x(0), x(1), x(2), x(3));
      case WnKind::t5: {
        auto w = mul(x(0), x(1));
        for (std::size_t i = 2; i < e.degree(); ++i) {
          w = mul(w, x(i));
        }
        return w;
      }
    }
    throw Error("unknown base element kind");
  }

  MagmaPoly to_magma(WlcMonomial const& m, Field field) {
    auto w = generator_poly(m.base(), field);
    for (auto g : m.lpart()) {
      w = magma_mul(generator_poly(g, field), w);
    }
    for (auto g : m.rpart()) {
      w = magma_mul(w, generator_poly(g, field));
    }
    return w;
  }

  WlcElement wlc_eval(MagmaPoly const& p) {
    return evaluate<WlcAlgebra>(p);
  }

  WnElement wn_eval(MagmaPoly const& p) {
    return evaluate<WnAlgebra>(p);
  }

  MagmaPoly as_identity(MagmaPoly const& f) {
    MagmaPoly out(f.field());
    for (auto const& [w, c] : f) {
      auto t = w.tokens();
      for (auto& tok : t) {
        if (tok < 0) {
          throw Error("expected a polynomial in the generators x_k");
        }
        tok = -tok;
      }
      out.add_term(MagmaWord::from_tokens(std::move(t)), c);
    }
    return out;
  }

  namespace {

    // Compositions of `total` into `parts` positive parts, lexicographic.
    void compositions(unsigned total, unsigned parts, unsigned cap,
                      std::vector<unsigned>&                              cur,
                      std::function<bool(std::vector<unsigned> const&)> const& f,
                      bool& stop) {
      if (stop) {
        return;
      }
      if (parts == 0) {
        if (total == 0) {
          stop = !f(cur);
        }
        return;
      }
      for (unsigned d = 1; d + (parts - 1) <= total && (cap == 0 || d <= cap);
           ++d) {
        cur.push_back(d);
        compositions(total - d, parts - 1, cap, cur, f, stop);
        cur.pop_back();
        if (stop) {
          return;
        }
      }
    }

    Multidegree block(unsigned first, unsigned size) {
      std::map<GeneratorId, unsigned> m;
      for (unsigned k = 0; k < size; ++k) {
        m[gen(first + k)] = 1;
      }
      return Multidegree(std::move(m));
    }

    template <typename Algebra>
    CheckReport check_in(AlgebraKind kind, MagmaPoly const& identity,
                         unsigned max_degree, unsigned slot_cap) {
      auto degrees = variable_degrees(identity);
      if (!degrees || has_generators(identity)) {
        throw Error("check_identity expects an identity over variables v_k");
      }
      for (auto const& [v, d] : *degrees) {
        if (d != 1) {
          throw Error("check_identity expects a multilinear identity (v"
                      + std::to_string(index(v)) + " occurs "
                      + std::to_string(d) + " times)");
        }
      }
      CheckReport report;
      report.identity   = identity;
      report.algebra    = kind;
      report.max_degree = max_degree;
      report.domain     = "all basis-element substitutions on disjoint "
                          "generator blocks, total degree <= "
                          + std::to_string(max_degree);
      if (identity.is_zero()) {
        return report;
      }
      std::vector<VariableId> vars;
      for (auto const& [v, d] : *degrees) {
        vars.push_back(v);
      }
      auto const field = identity.field();
      auto const m     = static_cast<unsigned>(vars.size());

      for (unsigned total = m; total <= max_degree && report.holds; ++total) {
        std::vector<unsigned> cur;
        bool                  stop = false;
        compositions(
            total, m, slot_cap, cur,
            [&](std::vector<unsigned> const& degs) {
              std::vector<std::vector<typename Algebra::Basis>> bases;
              unsigned                                          next = 1;
              for (auto d : degs) {
                bases.push_back(Algebra::basis(block(next, d)));
                next += d;
              }
              std::vector<std::size_t> pick(m, 0);
              while (true) {
                ++report.substitutions;
                auto value = evaluate<Algebra>(
                    identity,
                    [&](MagmaWord::token_type tok) ->
                    typename Algebra::Element {
                      auto v = var(static_cast<std::uint32_t>(-tok));
                      auto j = static_cast<std::size_t>(
                          std::find(vars.begin(), vars.end(), v) - vars.begin());
                      return Algebra::Element::basis(bases[j][pick[j]], field);
                    });
                if (!value.is_zero()) {
                  report.holds = false;
                  report.value = render(value);
                  for (std::size_t j = 0; j < m; ++j) {
                    report.assignment.emplace(vars[j],
                                              to_magma(bases[j][pick[j]], field));
                  }
                  return false;
                }
                std::size_t i = m;
                while (i > 0) {
                  --i;
                  if (++pick[i] < bases[i].size()) {
                    break;
                  }
                  pick[i] = 0;
                  if (i == 0) {
                    return true;
                  }
                }
              }
            },
            stop);
      }
      return report;
    }

    template <typename Algebra>
    NilpotencyIndexResult nilpotency_in(AlgebraKind kind, unsigned cap) {
      using Element = typename Algebra::Element;
      NilpotencyIndexResult result;
      result.algebra = kind;
      result.cap     = cap;
      auto const field = Field::rationals();

      for (unsigned k = 2; k <= cap; ++k) {
        bool found = false;
        for (unsigned total = k; total <= cap && !found; ++total) {
          std::vector<unsigned> cur;
          bool                  stop = false;
          compositions(
              total, k, 0, cur,
              [&](std::vector<unsigned> const& degs) {
                std::vector<std::vector<typename Algebra::Basis>> bases;
                unsigned                                          next = 1;
                for (auto d : degs) {
                  bases.push_back(Algebra::basis(block(next, d)));
                  next += d;
                }
                // Right to left: value of u_j(u_{j+1}(...)).
                std::vector<std::size_t>          pick(k, 0);
                std::function<bool(std::size_t, Element const&)> rec
                    = [&](std::size_t j, Element const& inner) -> bool {
                  for (std::size_t i = 0; i < bases[j].size(); ++i) {
                    pick[j] = i;
                    auto u = Element::basis(bases[j][i], field);
                    auto v = j + 1 == k ? u : multiply<Algebra>(u, inner);
                    if (v.is_zero()) {
                      continue;
                    }
                    if (j == 0) {
                      result.witness_factors.clear();
                      MagmaPoly word(field);
                      for (std::size_t s = k; s-- > 0;) {
                        auto f = to_magma(bases[s][pick[s]], field);
                        word   = s + 1 == k ? f : magma_mul(f, word);
                        result.witness_factors.insert(
                            result.witness_factors.begin(), f);
                      }
                      result.witness_word  = word;
                      result.witness_value = render(v);
                      return true;
                    }
                    if (rec(j - 1, v)) {
                      return true;
                    }
                  }
                  return false;
                };
                found = rec(k - 1, Element(field));
                return !found;
              },
              stop);
        }
        if (!found) {
          result.index = k;
          return result;
        }
      }
      return result;
    }

  }  // namespace

  CheckReport check_identity(AlgebraKind algebra, MagmaPoly const& identity,
                             unsigned max_degree, unsigned slot_cap) {
    return algebra == AlgebraKind::wlc
               ? check_in<WlcAlgebra>(algebra, identity, max_degree, slot_cap)
               : check_in<WnAlgebra>(algebra, identity, max_degree, slot_cap);
  }

  NilpotencyIndexResult left_nilpotency_index(AlgebraKind algebra,
                                              unsigned    cap) {
    if (cap > 7) {
      throw CapExceeded("left_nilpotency_index supports caps up to 7");
    }
    return algebra == AlgebraKind::wlc ? nilpotency_in<WlcAlgebra>(algebra, cap)
                                       : nilpotency_in<WnAlgebra>(algebra, cap);
  }

  NilpotencyProfile nilpotency_profile(IdentitySet const& ids, unsigned n,
                                       OracleOptions const& opts) {
    NilpotencyProfile profile;
    for (auto const& md : partition_multidegrees(n)) {
      auto d = quotient_dimension(ids, md, opts);
      profile.dimensions.emplace_back(md, d);
      if (d != 0) {
        profile.nilpotent = false;
        break;
      }
    }
    return profile;
  }

}  // namespace wnov
