#include "wnov/oracle.hpp"

#include <functional>
#include <set>
#include <unordered_map>

#include "wnov/echelon.hpp"
#include "wnov/error.hpp"

namespace wnov {

  namespace {
    using token_type = MagmaWord::token_type;
    using Tokens     = std::vector<token_type>;
    using Counts     = std::vector<unsigned>;
    using IntRow     = std::vector<std::pair<std::uint32_t, long>>;

    constexpr token_type kHole = -(1 << 30);

    // A multilinear identity with integer coefficients in the variables
    // v1..v_arity.
    struct PreparedIdentity {
      unsigned                               arity = 0;
      std::vector<std::pair<Tokens, long>> terms;
    };

    PreparedIdentity prepare(MagmaPoly const& f) {
      auto             lin = linearize(change_field(f, Field::rationals()));
      PreparedIdentity out;
      mpz_class        den = 1;
      for (auto const& [w, c] : lin) {
        den = lcm(den, c.rational().get_den());
      }
      mpz_class content = 0;
      for (auto const& [w, c] : lin) {
        content = gcd(content, mpz_class(c.rational() * den));
      }
      for (auto const& [w, c] : lin) {
        mpz_class v = mpz_class(c.rational() * den) / content;
        if (!v.fits_slong_p()) {
          throw Error("identity coefficient too large");
        }
        out.terms.emplace_back(w.tokens(), v.get_si());
        for (auto t : w.tokens()) {
          if (t < 0) {
            out.arity = std::max(out.arity, static_cast<unsigned>(-t));
          }
        }
      }
      return out;
    }

    void check_request(Multidegree const& md, OracleOptions const& opts) {
      auto n = md.total();
      if (n == 0) {
        throw Error("empty multidegree");
      }
      if (n > opts.degree_cap) {
        throw CapExceeded("total degree " + std::to_string(n)
                          + " exceeds the oracle cap "
                          + std::to_string(opts.degree_cap));
      }
      if (n >= 6 && opts.field.is_rational()) {
        throw CapExceeded("degree-6 components are computed over GF(p) only "
                          "(pass a prime field)");
      }
      if (!opts.field.is_rational() && opts.field.characteristic() <= n) {
        throw Error("GF(p) elimination needs p > total degree ("
                    + std::to_string(n) + ")");
      }
    }

    // Words and consequences of one multidegree component.
    class Component {
     public:
      explicit Component(Multidegree const& md) {
        for (auto const& [g, m] : md.counts()) {
          letters_.push_back(static_cast<token_type>(index(g)));
          counts_.push_back(m);
        }
        columns_ = enumerate_words(md);
        index_.reserve(columns_.size() * 2);
        for (std::size_t i = 0; i < columns_.size(); ++i) {
          index_.emplace(columns_[i].tokens(), static_cast<std::uint32_t>(i));
        }
      }

      std::vector<MagmaWord> const& columns() const {
        return columns_;
      }

      std::optional<std::uint32_t> column(Tokens const& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) {
          return std::nullopt;
        }
        return it->second;
      }

      // Calls emit(IntRow&) for every consequence of the identity.
      void for_each_relation(PreparedIdentity const&            f,
                             std::function<void(IntRow&)> const& emit) {
        unsigned n = 0;
        for (auto m : counts_) {
          n += m;
        }
        if (f.arity == 0 || f.arity > n) {
          return;
        }
        std::vector<Counts> parts;
        split(f, 0, counts_, parts, emit);
      }

     private:
      std::vector<Tokens> const& words(Counts const& c) {
        if (auto it = words_.find(c); it != words_.end()) {
          return it->second;
        }
        std::vector<std::pair<token_type, unsigned>> l;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i] > 0) {
            l.emplace_back(letters_[i], c[i]);
          }
        }
        return words_.emplace(c, enumerate_token_words(l)).first->second;
      }

      // Contexts with one hole; each paired with the hole position.
      std::vector<std::pair<Tokens, std::size_t>> const& contexts(
          Counts const& c) {
        if (auto it = contexts_.find(c); it != contexts_.end()) {
          return it->second;
        }
        std::vector<std::pair<token_type, unsigned>> l;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i] > 0) {
            l.emplace_back(letters_[i], c[i]);
          }
        }
        l.emplace_back(kHole, 1);
        std::vector<std::pair<Tokens, std::size_t>> out;
        for (auto& t : enumerate_token_words(l)) {
          auto h = static_cast<std::size_t>(
              std::find(t.begin(), t.end(), kHole) - t.begin());
          out.emplace_back(std::move(t), h);
        }
        return contexts_.emplace(c, std::move(out)).first->second;
      }

      static unsigned total(Counts const& c) {
        unsigned n = 0;
        for (auto m : c) {
          n += m;
        }
        return n;
      }

      void split(PreparedIdentity const& f, unsigned j, Counts const& remaining,
                 std::vector<Counts>&                parts,
                 std::function<void(IntRow&)> const& emit) {
        if (j == f.arity) {
          instantiate(f, parts, remaining, emit);
          return;
        }
        if (total(remaining) < f.arity - j) {
          return;
        }
        Counts d(remaining.size(), 0);
        while (true) {
          std::size_t i = 0;
          while (i < d.size() && d[i] == remaining[i]) {
            d[i] = 0;
            ++i;
          }
          if (i == d.size()) {
            break;
          }
          ++d[i];
          Counts rest(remaining.size());
          for (std::size_t k = 0; k < rest.size(); ++k) {
            rest[k] = remaining[k] - d[k];
          }
          parts.push_back(d);
          split(f, j + 1, rest, parts, emit);
          parts.pop_back();
        }
      }

      void instantiate(PreparedIdentity const& f, std::vector<Counts> const& parts,
                       Counts const&                       ctx_counts,
                       std::function<void(IntRow&)> const& emit) {
        std::vector<std::vector<Tokens> const*> lists;
        for (auto const& p : parts) {
          lists.push_back(&words(p));
        }
        auto const& ctxs = total(ctx_counts) == 0
                               ? trivial_context()
                               : contexts(ctx_counts);
        std::vector<std::size_t> pick(lists.size(), 0);
        Tokens                   sub, full;
        IntRow                   row;
        while (true) {
          for (auto const& [ctx, hole] : ctxs) {
            row.clear();
            for (auto const& [term, coeff] : f.terms) {
              sub.clear();
              for (auto t : term) {
                if (t < 0) {
                  auto const& w = (*lists[static_cast<std::size_t>(-t - 1)])
                      [pick[static_cast<std::size_t>(-t - 1)]];
                  sub.insert(sub.end(), w.begin(), w.end());
                } else {
                  sub.push_back(t);
                }
              }
              full.assign(ctx.begin(), ctx.begin() + static_cast<std::ptrdiff_t>(hole));
              full.insert(full.end(), sub.begin(), sub.end());
              full.insert(full.end(), ctx.begin() + static_cast<std::ptrdiff_t>(hole) + 1,
                          ctx.end());
              row.emplace_back(*column(full), coeff);
            }
            emit(row);
          }
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == lists[i]->size()) {
            pick[i] = 0;
            ++i;
          }
          if (i == pick.size()) {
            break;
          }
        }
      }

      std::vector<std::pair<Tokens, std::size_t>> const& trivial_context() {
        static std::vector<std::pair<Tokens, std::size_t>> const hole{
            {Tokens{kHole}, 0}};
        return hole;
      }

      std::vector<token_type>                             letters_;
      Counts                                              counts_;
      std::vector<MagmaWord>                              columns_;
      std::unordered_map<Tokens, std::uint32_t, MagmaWordHash> index_;
      std::map<Counts, std::vector<Tokens>>               words_;
      std::map<Counts, std::vector<std::pair<Tokens, std::size_t>>> contexts_;
    };

    std::vector<PreparedIdentity> prepare_all(IdentitySet const& ids) {
      std::vector<PreparedIdentity> out;
      for (auto const& f : ids.identities()) {
        out.push_back(prepare(f));
      }
      return out;
    }

    template <typename Ring>
    Echelon<Ring> eliminate(Component& comp, IdentitySet const& ids,
                            Ring const& ring) {
      Echelon<Ring> ech(ring, comp.columns().size());
      typename Echelon<Ring>::Row r;
      for (auto const& f : prepare_all(ids)) {
        comp.for_each_relation(f, [&](IntRow& row) {
          r.clear();
          for (auto const& [c, v] : row) {
            r.emplace_back(c, ring.from_long(v));
          }
          ech.insert(r);
        });
      }
      return ech;
    }

    // Runs `body(echelon, ring)` with the ring matching the field.
    template <typename Body>
    auto with_echelon(Component& comp, IdentitySet const& ids,
                      OracleOptions const& opts, Body&& body) {
      if (opts.field.is_rational()) {
        IntegerRing ring;
        auto        ech = eliminate(comp, ids, ring);
        return body(ech, ring);
      }
      ModRing ring{opts.field.characteristic()};
      auto    ech = eliminate(comp, ids, ring);
      return body(ech, ring);
    }
  }  // namespace

  RelationMatrix relation_rows(IdentitySet const& ids, Multidegree const& md,
                               OracleOptions const& opts) {
    check_request(md, opts);
    Component      comp(md);
    RelationMatrix out;
    out.columns = comp.columns();
    std::set<std::vector<std::pair<std::uint32_t, std::string>>> seen;
    for (auto const& f : prepare_all(ids)) {
      comp.for_each_relation(f, [&](IntRow& row) {
        std::map<std::uint32_t, Scalar> merged;
        for (auto const& [c, v] : row) {
          auto [it, ins] = merged.try_emplace(c, Scalar(opts.field, v));
          if (!ins) {
            it->second += Scalar(opts.field, v);
          }
        }
        std::vector<std::pair<std::uint32_t, Scalar>> clean;
        for (auto const& [c, s] : merged) {
          if (!s.is_zero()) {
            clean.emplace_back(c, s);
          }
        }
        if (clean.empty()) {
          return;
        }
        auto lead = clean.front().second;
        std::vector<std::pair<std::uint32_t, std::string>> key;
        for (auto& [c, s] : clean) {
          key.emplace_back(c, (s / lead).str());
        }
        if (seen.insert(std::move(key)).second) {
          out.rows.push_back(std::move(clean));
        }
      });
    }
    return out;
  }

  std::size_t quotient_dimension(IdentitySet const& ids, Multidegree const& md,
                                 OracleOptions const& opts) {
    check_request(md, opts);
    Component comp(md);
    return with_echelon(comp, ids, opts, [&](auto& ech, auto const&) {
      return ech.columns() - ech.rank();
    });
  }

  std::vector<MagmaWord> quotient_basis(IdentitySet const&   ids,
                                        Multidegree const&   md,
                                        OracleOptions const& opts) {
    check_request(md, opts);
    Component comp(md);
    return with_echelon(comp, ids, opts, [&](auto& ech, auto const&) {
      std::vector<MagmaWord> out;
      for (auto c : ech.non_pivot_columns()) {
        out.push_back(comp.columns()[c]);
      }
      return out;
    });
  }

  std::vector<bool> membership(std::vector<MagmaPoly> const& fs,
                               Multidegree const&            md,
                               IdentitySet const&            ids,
                               OracleOptions const&          opts) {
    check_request(md, opts);
    for (auto const& f : fs) {
      if (has_variables(f)) {
        throw Error("membership expects a polynomial in the generators x_k");
      }
      if (!f.is_zero() && generator_multidegree(f) != md) {
        throw Error("membership: polynomial is not of multidegree "
                    + md.str());
      }
    }
    Component comp(md);
    return with_echelon(comp, ids, opts, [&](auto& ech, auto const& ring) {
      using Ring = std::decay_t<decltype(ring)>;
      std::vector<bool> out;
      for (auto const& f : fs) {
        auto g = change_field(f, opts.field);
        typename std::decay_t<decltype(ech)>::Row row;
        if constexpr (std::is_same_v<Ring, IntegerRing>) {
          mpz_class den = 1;
          for (auto const& [w, c] : g) {
            den = lcm(den, c.rational().get_den());
          }
          for (auto const& [w, c] : g) {
            row.emplace_back(*comp.column(w.tokens()),
                             mpz_class(c.rational() * den));
          }
        } else {
          for (auto const& [w, c] : g) {
            row.emplace_back(*comp.column(w.tokens()), c.residue());
          }
        }
        out.push_back(ech.reduces_to_zero(std::move(row)));
      }
      return out;
    });
  }

  bool membership(MagmaPoly const& f, IdentitySet const& ids,
                  OracleOptions const& opts) {
    if (f.is_zero()) {
      return true;
    }
    if (has_variables(f)) {
      throw Error("membership expects a polynomial in the generators x_k");
    }
    auto md = generator_multidegree(f);
    if (!md) {
      throw Error("membership expects a multihomogeneous polynomial");
    }
    return membership(std::vector<MagmaPoly>{f}, *md, ids, opts).front();
  }

  std::size_t quotient_dimension_cross_checked(
      IdentitySet const& ids, Multidegree const& md,
      std::vector<std::uint64_t> const& primes, unsigned degree_cap) {
    auto q = quotient_dimension(ids, md, {Field::rationals(), degree_cap});
    for (auto p : primes) {
      auto d = quotient_dimension(ids, md, {Field::prime(p), degree_cap});
      if (d != q) {
        throw Error("dimension disagreement for " + ids.name() + " at "
                    + md.str() + ": " + std::to_string(q) + " over Q, "
                    + std::to_string(d) + " over GF(" + std::to_string(p)
                    + ")");
      }
    }
    return q;
  }

  std::vector<Multidegree> partition_multidegrees(unsigned n) {
    std::vector<Multidegree>              out;
    std::vector<unsigned>                 parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left,
                                                      unsigned max) {
      if (left == 0) {
        out.push_back(Multidegree::from_counts(parts));
        return;
      }
      for (unsigned k = std::min(left, max); k >= 1; --k) {
        parts.push_back(k);
        rec(left - k, k);
        parts.pop_back();
      }
    };
    rec(n, n);
    // Multilinear first: it is the most informative component.
    std::reverse(out.begin(), out.end());
    return out;
  }

}  // namespace wnov
