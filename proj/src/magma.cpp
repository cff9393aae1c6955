#include "wnov/magma.hpp"

#include <algorithm>
#include <sstream>

#include "wnov/error.hpp"

namespace wnov {

  namespace {
    using token_type = MagmaWord::token_type;

    std::size_t subtree_end(std::vector<token_type> const& t, std::size_t pos) {
      std::size_t need = 1;
      while (need > 0) {
        need += t[pos++] == 0 ? 1 : -1;
      }
      return pos;
    }

    std::pair<int, token_type> leaf_key(token_type t) {
      return t > 0 ? std::pair{0, t} : std::pair{1, -t};
    }

    std::strong_ordering compare_tokens(std::vector<token_type> const& a,
                                        std::vector<token_type> const& b) {
      if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (auto c = (a[i] != 0) <=> (b[i] != 0); c != 0) {
          return c;
        }
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && a[i] != b[i]) {
          return leaf_key(a[i]) <=> leaf_key(b[i]);
        }
      }
      return std::strong_ordering::equal;
    }
  }  // namespace

  MagmaWord MagmaWord::generator(GeneratorId g) {
    if (index(g) == 0) {
      throw Error("generator indices start at 1");
    }
    return from_tokens({static_cast<token_type>(index(g))});
  }

  MagmaWord MagmaWord::variable(VariableId v) {
    if (index(v) == 0) {
      throw Error("variable indices start at 1");
    }
    return from_tokens({-static_cast<token_type>(index(v))});
  }

  MagmaWord MagmaWord::from_tokens(std::vector<token_type> tokens) {
    MagmaWord w;
    w.degree_ = (tokens.size() + 1) / 2;
    w.tokens_ = std::move(tokens);
    return w;
  }

  MagmaWord operator*(MagmaWord const& a, MagmaWord const& b) {
    std::vector<token_type> t;
    t.reserve(a.tokens_.size() + b.tokens_.size() + 1);
    t.push_back(0);
    t.insert(t.end(), a.tokens_.begin(), a.tokens_.end());
    t.insert(t.end(), b.tokens_.begin(), b.tokens_.end());
    return MagmaWord::from_tokens(std::move(t));
  }

  GeneratorId MagmaWord::as_generator() const {
    if (!is_generator()) {
      throw Error("word is not a generator");
    }
    return gen(static_cast<std::uint32_t>(tokens_[0]));
  }

  VariableId MagmaWord::as_variable() const {
    if (!is_variable()) {
      throw Error("word is not a variable");
    }
    return var(static_cast<std::uint32_t>(-tokens_[0]));
  }

  MagmaWord MagmaWord::left() const {
    if (is_leaf()) {
      throw Error("a leaf has no factors");
    }
    auto end = subtree_end(tokens_, 1);
    return from_tokens({tokens_.begin() + 1, tokens_.begin() + end});
  }

  MagmaWord MagmaWord::right() const {
    if (is_leaf()) {
      throw Error("a leaf has no factors");
    }
    auto end = subtree_end(tokens_, 1);
    return from_tokens({tokens_.begin() + end, tokens_.end()});
  }

  std::vector<token_type> MagmaWord::leaves() const {
    std::vector<token_type> result;
    std::copy_if(tokens_.begin(), tokens_.end(), std::back_inserter(result),
                 [](token_type t) { return t != 0; });
    return result;
  }

  std::strong_ordering operator<=>(MagmaWord const& a, MagmaWord const& b) {
    return compare_tokens(a.tokens_, b.tokens_);
  }

  std::size_t MagmaWordHash::operator()(MagmaWord const& w) const noexcept {
    return (*this)(w.tokens());
  }

  std::size_t MagmaWordHash::operator()(
      std::vector<token_type> const& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : t) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Multidegree
  ////////////////////////////////////////////////////////////////////////

  Multidegree::Multidegree(std::map<GeneratorId, unsigned> counts) {
    for (auto [g, m] : counts) {
      if (index(g) == 0) {
        throw Error("generator indices start at 1");
      }
      if (m > 0) {
        counts_[g] = m;
      }
    }
  }

  Multidegree Multidegree::from_counts(std::vector<unsigned> const& counts) {
    std::map<GeneratorId, unsigned> m;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] > 0) {
        m[gen(static_cast<std::uint32_t>(i + 1))] = counts[i];
      }
    }
    return Multidegree(std::move(m));
  }

  Multidegree Multidegree::parse(std::string const& text) {
    std::vector<unsigned> counts;
    std::stringstream     ss(text);
    std::string           item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        int         v    = std::stoi(item, &used);
        if (used != item.size() || v < 0) {
          throw Error("");
        }
        counts.push_back(static_cast<unsigned>(v));
      } catch (std::exception const&) {
        throw Error("malformed multidegree '" + text + "'");
      }
    }
    auto md = from_counts(counts);
    if (md.total() == 0) {
      throw Error("multidegree '" + text + "' has total degree 0");
    }
    return md;
  }

  Multidegree Multidegree::multilinear(unsigned n) {
    return from_counts(std::vector<unsigned>(n, 1));
  }

  Multidegree Multidegree::of(MagmaWord const& w) {
    std::map<GeneratorId, unsigned> m;
    for (auto t : w.tokens()) {
      if (t > 0) {
        ++m[gen(static_cast<std::uint32_t>(t))];
      }
    }
    return Multidegree(std::move(m));
  }

  unsigned Multidegree::total() const noexcept {
    unsigned n = 0;
    for (auto const& [g, m] : counts_) {
      n += m;
    }
    return n;
  }

  bool Multidegree::is_multilinear() const noexcept {
    return std::all_of(counts_.begin(), counts_.end(),
                       [](auto const& kv) { return kv.second == 1; });
  }

  std::string Multidegree::str() const {
    std::string s = "{";
    bool        first = true;
    for (auto const& [g, m] : counts_) {
      if (!first) {
        s += ", ";
      }
      first = false;
      s += "x" + std::to_string(index(g)) + ":" + std::to_string(m);
    }
    return s + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Polynomials
  ////////////////////////////////////////////////////////////////////////

  MagmaPoly generator_poly(GeneratorId g, Field field) {
    return MagmaPoly::basis(MagmaWord::generator(g), field);
  }

  MagmaPoly variable_poly(VariableId v, Field field) {
    return MagmaPoly::basis(MagmaWord::variable(v), field);
  }

  MagmaPoly magma_mul(MagmaPoly const& a, MagmaPoly const& b) {
    if (a.field() != b.field()) {
      throw FieldMismatch("magma_mul over " + a.field().name() + " and "
                          + b.field().name());
    }
    MagmaPoly result(a.field());
    for (auto const& [u, cu] : a) {
      for (auto const& [w, cw] : b) {
        result.add_term(u * w, cu * cw);
      }
    }
    return result;
  }

  namespace {
    MagmaPoly substitute_word(MagmaWord const&                       w,
                              std::map<VariableId, MagmaPoly> const& assignment,
                              Field                                  field) {
      if (w.is_variable()) {
        auto it = assignment.find(w.as_variable());
        if (it == assignment.end()) {
          throw Error("variable v" + std::to_string(index(w.as_variable()))
                      + " is not assigned");
        }
        return it->second;
      }
      if (w.is_generator()) {
        return MagmaPoly::basis(w, field);
      }
      return magma_mul(substitute_word(w.left(), assignment, field),
                       substitute_word(w.right(), assignment, field));
    }
  }  // namespace

  MagmaPoly substitute(MagmaPoly const&                       f,
                       std::map<VariableId, MagmaPoly> const& assignment) {
    for (auto const& [v, p] : assignment) {
      if (p.field() != f.field()) {
        throw FieldMismatch("substituted value has field " + p.field().name());
      }
    }
    MagmaPoly result(f.field());
    for (auto const& [w, c] : f) {
      result += substitute_word(w, assignment, f.field()) * c;
    }
    return result;
  }

  std::vector<std::vector<token_type>> enumerate_token_words(
      std::vector<std::pair<token_type, unsigned>> const& letters) {
    using counts_type = std::vector<unsigned>;
    std::map<counts_type, std::vector<std::vector<token_type>>> memo;

    std::function<std::vector<std::vector<token_type>> const&(
        counts_type const&)>
        words = [&](counts_type const& c)
        -> std::vector<std::vector<token_type>> const& {
      if (auto it = memo.find(c); it != memo.end()) {
        return it->second;
      }
      unsigned n = 0;
      for (auto m : c) {
        n += m;
      }
      std::vector<std::vector<token_type>> out;
      if (n == 1) {
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i] == 1) {
            out.push_back({letters[i].first});
          }
        }
      } else {
        // Every sub-multidegree d with 0 < |d| < n is a possible left factor.
        counts_type d(c.size(), 0);
        while (true) {
          std::size_t i = 0;
          while (i < d.size() && d[i] == c[i]) {
            d[i] = 0;
            ++i;
          }
          if (i == d.size()) {
            break;
          }
          ++d[i];
          unsigned dn = 0;
          for (auto m : d) {
            dn += m;
          }
          if (dn == n) {
            continue;
          }
          counts_type rest(c.size());
          for (std::size_t j = 0; j < c.size(); ++j) {
            rest[j] = c[j] - d[j];
          }
          auto const& lw = words(d);
          auto const& rw = words(rest);
          for (auto const& a : lw) {
            for (auto const& b : rw) {
              std::vector<token_type> t;
              t.reserve(a.size() + b.size() + 1);
              t.push_back(0);
              t.insert(t.end(), a.begin(), a.end());
              t.insert(t.end(), b.begin(), b.end());
              out.push_back(std::move(t));
            }
          }
        }
      }
      std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        return compare_tokens(a, b) < 0;
      });
      return memo.emplace(c, std::move(out)).first->second;
    };

    counts_type top;
    unsigned    total = 0;
    for (auto const& [t, m] : letters) {
      top.push_back(m);
      total += m;
    }
    if (total == 0) {
      return {};
    }
    return words(top);
  }

  std::vector<MagmaWord> enumerate_words(Multidegree const& md) {
    std::vector<std::pair<token_type, unsigned>> letters;
    for (auto const& [g, m] : md.counts()) {
      letters.emplace_back(static_cast<token_type>(index(g)), m);
    }
    std::vector<MagmaWord> result;
    for (auto& t : enumerate_token_words(letters)) {
      result.push_back(MagmaWord::from_tokens(std::move(t)));
    }
    return result;
  }

  std::optional<std::map<VariableId, unsigned>> variable_degrees(
      MagmaPoly const& f) {
    std::optional<std::map<VariableId, unsigned>> result;
    for (auto const& [w, c] : f) {
      std::map<VariableId, unsigned> d;
      for (auto t : w.tokens()) {
        if (t < 0) {
          ++d[var(static_cast<std::uint32_t>(-t))];
        }
      }
      if (!result) {
        result = std::move(d);
      } else if (*result != d) {
        return std::nullopt;
      }
    }
    if (!result) {
      result.emplace();
    }
    return result;
  }

  std::optional<Multidegree> generator_multidegree(MagmaPoly const& f) {
    std::optional<Multidegree> result;
    for (auto const& [w, c] : f) {
      auto md = Multidegree::of(w);
      if (!result) {
        result = md;
      } else if (*result != md) {
        return std::nullopt;
      }
    }
    return result;
  }

  bool has_variables(MagmaPoly const& f) {
    for (auto const& [w, c] : f) {
      for (auto t : w.tokens()) {
        if (t < 0) {
          return true;
        }
      }
    }
    return false;
  }

  bool has_generators(MagmaPoly const& f) {
    for (auto const& [w, c] : f) {
      for (auto t : w.tokens()) {
        if (t > 0) {
          return true;
        }
      }
    }
    return false;
  }

  unsigned long long catalan(unsigned n) {
    unsigned long long c = 1;
    for (unsigned k = 0; k < n; ++k) {
      c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
  }

}  // namespace wnov
