#include "wnov/identity_set.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <map>
#include <sstream>

#include "wnov/error.hpp"
#include "wnov/parser.hpp"
#include "wnov/sugar.hpp"

namespace wnov {

  namespace {
    MagmaPoly v(std::uint32_t k) {
      return variable_poly(var(k));
    }
    MagmaPoly mul(MagmaPoly const& a, MagmaPoly const& b) {
      return magma_mul(a, b);
    }

    unsigned parse_positive(std::string const& text, std::string const& what) {
      try {
        std::size_t used = 0;
        int         n    = std::stoi(text, &used);
        if (used == text.size() && n >= 1) {
          return static_cast<unsigned>(n);
        }
      } catch (std::exception const&) {
      }
      throw Error("malformed index in preset '" + what + "'");
    }

    // C(...C(v1 v2, v3)..., v_{n+1}) with n - 1 applications of `op`.
    MagmaPoly iterated_on_square(Sugar op, unsigned n) {
      auto p = mul(v(1), v(2));
      for (unsigned k = 3; k <= n + 1; ++k) {
        std::vector<MagmaPoly> args{p, v(k)};
        p = expand_sugar(op, args);
      }
      return p;
    }
  }  // namespace

  IdentitySet::IdentitySet(std::string name, std::vector<MagmaPoly> identities)
      : name_(std::move(name)), identities_(std::move(identities)) {
    for (auto const& f : identities_) {
      if (f.is_zero()) {
        throw Error("identity set '" + name_ + "' contains the zero polynomial");
      }
      if (has_generators(f)) {
        throw Error("identities must use the variables v1, v2, ... only "
                    "(found a generator x_k in '"
                    + name_ + "')");
      }
      if (!variable_degrees(f)) {
        throw Error("identity in '" + name_
                    + "' is not multihomogeneous in its variables");
      }
    }
  }

  IdentitySet IdentitySet::operator+(IdentitySet const& other) const {
    auto ids = identities_;
    ids.insert(ids.end(), other.identities_.begin(), other.identities_.end());
    return IdentitySet(name_ + "," + other.name_, std::move(ids));
  }

  std::vector<MagmaWord> bracketings(unsigned n) {
    std::vector<std::pair<MagmaWord::token_type, unsigned>> letters;
    for (unsigned k = 1; k <= n; ++k) {
      letters.emplace_back(-static_cast<MagmaWord::token_type>(k), 1);
    }
    std::vector<MagmaWord> out;
    for (auto& t : enumerate_token_words(letters)) {
      auto w      = MagmaWord::from_tokens(std::move(t));
      auto leaves = w.leaves();
      bool ordered = true;
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        ordered &= leaves[i] == -static_cast<MagmaWord::token_type>(i + 1);
      }
      if (ordered) {
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  IdentitySet preset(std::string const& name) {
    auto A = [](MagmaPoly const& a, MagmaPoly const& b, MagmaPoly const& c) {
      return associator(a, b, c);
    };
    auto rs  = [&] { return A(v(1), v(2), v(3)) - A(v(1), v(3), v(2)); };
    auto wn  = [&] {
      return mul(v(1), A(v(2), v(3), v(4))) - A(v(2), v(3), mul(v(1), v(4)));
    };
    auto lc  = [&] { return mul(v(1), mul(v(2), v(3))) - mul(v(2), mul(v(1), v(3))); };
    auto met = [&] { return mul(mul(v(1), v(2)), mul(v(3), v(4))); };

    if (name == "rs") {
      return IdentitySet(name, {rs()});
    }
    if (name == "wn") {
      return IdentitySet(name, {wn()});
    }
    if (name == "lc") {
      return IdentitySet(name, {lc()});
    }
    if (name == "met") {
      return IdentitySet(name, {met()});
    }
    if (name == "wlc2") {
      return IdentitySet(name, {wn(), met()});
    }
    if (name == "wnov2") {
      return IdentitySet(name, {rs(), wn(), met()});
    }
    if (name == "nov2") {
      return IdentitySet(name, {rs(), wn(), lc(), met()});
    }
    if (name == "flex") {
      return IdentitySet(name, {A(v(1), v(2), v(1))});
    }
    if (name == "antiflex") {
      return IdentitySet(name, {A(v(1), v(2), v(3)) - A(v(3), v(2), v(1))});
    }
    if (name.starts_with("lie-nilp:")) {
      auto n = parse_positive(name.substr(9), name);
      return IdentitySet(name, {iterated_on_square(Sugar::commutator, n)});
    }
    if (name.starts_with("jordan-nilp:")) {
      auto n = parse_positive(name.substr(12), name);
      return IdentitySet(name, {iterated_on_square(Sugar::circle, n)});
    }
    if (name.starts_with("weak-flex:+") || name.starts_with("weak-flex:-")) {
      bool     plus = name[10] == '+';
      unsigned n    = 2;
      if (name.size() > 11) {
        if (name[11] != ':') {
          throw Error("unknown preset '" + name + "'");
        }
        n = parse_positive(name.substr(12), name);
        if (n < 2) {
          throw Error("weak-flex needs n >= 2");
        }
      }
      // (B^n, x, y) = +-(y, x, B^n), one identity per bracketing of B^n.
      auto                   x = v(n + 1), y = v(n + 2);
      std::vector<MagmaPoly> ids;
      for (auto const& w : bracketings(n)) {
        auto b   = MagmaPoly::basis(w, Field::rationals());
        auto lhs = A(b, x, y);
        auto rhs = A(y, x, b);
        ids.push_back(plus ? lhs - rhs : lhs + rhs);
      }
      return IdentitySet(name, std::move(ids));
    }
    throw Error("unknown identity preset '" + name + "'");
  }

  std::vector<std::string> preset_names() {
    return {"rs",       "wn",         "lc",            "met",
            "wlc2",     "wnov2",      "nov2",          "flex",
            "antiflex", "lie-nilp:n", "jordan-nilp:n", "weak-flex:+[:n]",
            "weak-flex:-[:n]"};
  }

  IdentitySet parse_identity_text(std::string const& name,
                                  std::string const& text) {
    std::vector<MagmaPoly> ids;
    std::istringstream     in(text);
    std::string            line;
    std::size_t            lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      try {
        ids.push_back(parse_identity(line));
      } catch (Error const& e) {
        throw Error(name + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (ids.empty()) {
      throw Error("identity set '" + name + "' is empty");
    }
    return IdentitySet(name, std::move(ids));
  }

  IdentitySet load_identity_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open identity file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_identity_text(path, ss.str());
  }

  IdentitySet resolve_identities(std::string const& list) {
    std::optional<IdentitySet> result;
    std::stringstream          ss(list);
    std::string                item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) {
        continue;
      }
      IdentitySet next = [&] {
        try {
          return preset(item);
        } catch (Error const&) {
          if (std::ifstream(item)) {
            return load_identity_file(item);
          }
          throw;
        }
      }();
      result = result ? *result + next : next;
    }
    if (!result) {
      throw Error("no identities given");
    }
    return *result;
  }

  MagmaPoly linearize(MagmaPoly const& f) {
    auto degrees = variable_degrees(f);
    if (!degrees) {
      throw Error("cannot linearize a polynomial that is not multihomogeneous");
    }
    // Fresh variable numbers for the copies of each variable.
    std::map<VariableId, std::vector<MagmaWord::token_type>> copies;
    MagmaWord::token_type                                    next = 1;
    for (auto const& [x, d] : *degrees) {
      for (unsigned i = 0; i < d; ++i) {
        copies[x].push_back(-(next++));
      }
    }
    MagmaPoly result(f.field());
    for (auto const& [w, c] : f) {
      auto const& t = w.tokens();
      // Positions of each variable's occurrences.
      std::map<VariableId, std::vector<std::size_t>> pos;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0) {
          pos[var(static_cast<std::uint32_t>(-t[i]))].push_back(i);
        }
      }
      // Sum over every bijection occurrences -> copies, per variable.
      std::vector<std::pair<std::vector<std::size_t>,
                            std::vector<MagmaWord::token_type>>>
          slots;
      for (auto const& [x, p] : pos) {
        slots.emplace_back(p, copies[x]);
      }
      std::vector<MagmaWord::token_type> out = t;
      std::function<void(std::size_t)>   rec = [&](std::size_t k) {
        if (k == slots.size()) {
          result.add_term(MagmaWord::from_tokens(out), c);
          return;
        }
        auto& [p, cp] = slots[k];
        std::sort(cp.begin(), cp.end());
        do {
          for (std::size_t i = 0; i < p.size(); ++i) {
            out[p[i]] = cp[i];
          }
          rec(k + 1);
        } while (std::next_permutation(cp.begin(), cp.end()));
      };
      rec(0);
    }
    return result;
  }

}  // namespace wnov
