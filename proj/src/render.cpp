#include "wnov/render.hpp"

#include <sstream>

namespace wnov {

  namespace {
    std::string leaf(MagmaWord::token_type t) {
      return t > 0 ? "x" + std::to_string(t) : "v" + std::to_string(-t);
    }

    std::string x(GeneratorId g) {
      return "x" + std::to_string(index(g));
    }

    std::string join(std::vector<GeneratorId> const& gs,
                     std::string const&              sep) {
      std::string s;
      for (std::size_t i = 0; i < gs.size(); ++i) {
        s += (i ? sep : "") + x(gs[i]);
      }
      return s;
    }

    std::string render_tokens(std::vector<MagmaWord::token_type> const& t,
                              std::size_t& pos, bool top) {
      auto tok = t[pos++];
      if (tok != 0) {
        return leaf(tok);
      }
      auto l = render_tokens(t, pos, false);
      auto r = render_tokens(t, pos, false);
      return top ? l + "*" + r : "(" + l + "*" + r + ")";
    }

    // First term keeps its signed coefficient ("-1 A(...)"); later terms
    // are joined with " + " / " - " and print |c| unless it is 1.
    template <typename Key, typename F>
    std::string render_sum(LinearCombination<Key> const& lc, F&& name) {
      if (lc.is_zero()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& [key, c] : lc) {
        if (first) {
          if (!c.is_one()) {
            out += c.str() + " ";
          }
        } else {
          auto a = c.sign() < 0 ? -c : c;
          out += c.sign() < 0 ? " - " : " + ";
          if (!a.is_one()) {
            out += a.str() + " ";
          }
        }
        out += name(key);
        first = false;
      }
      return out;
    }

    template <typename Key>
    nlohmann::json json_sum(LinearCombination<Key> const& lc) {
      nlohmann::json terms = nlohmann::json::array();
      for (auto const& [key, c] : lc) {
        terms.push_back({{"coefficient", c.str()}, {"element", render(key)}});
      }
      return {{"field", lc.field().name()},
              {"text", render(lc)},
              {"terms", terms}};
    }
  }  // namespace

  std::string render(MagmaWord const& w) {
    std::size_t pos = 0;
    return render_tokens(w.tokens(), pos, true);
  }

  std::string render(WlcMonomial const& m) {
    std::string s = x(m.base());
    if (!m.lpart().empty()) {
      s += " L[" + join(m.lpart(), ",") + "]";
    }
    if (!m.rpart().empty()) {
      s += " R[" + join(m.rpart(), ",") + "]";
    }
    return s;
  }

  std::string render(WnBasisElement const& e) {
    auto const& i = e.indices();
    switch (e.kind()) {
      case WnKind::generator:
        return x(i[0]);
      case WnKind::pair:
        return x(i[0]) + "*" + x(i[1]);
      case WnKind::t1:
        return x(i[0]) + "*(" + x(i[1]) + "*" + x(i[2]) + ")";
      case WnKind::t2:
        return "A(" + x(i[0]) + ", " + x(i[1]) + ", " + x(i[2]) + ")";
      case WnKind::t3:
        return "A(" + x(i[0]) + ", " + x(i[1]) + "*" + x(i[2]) + ", " + x(i[3])
               + ")";
      case WnKind::t4:
        return "T(" + join(i, ",") + ")";
      case WnKind::t5:
        return "(" + x(i[0]) + "*" + x(i[1]) + ") R["
               + join({i.begin() + 2, i.end()}, ",") + "]";
    }
    return "?";
  }

  std::string render(MagmaPoly const& p) {
    return render_sum(p, [](MagmaWord const& w) { return render(w); });
  }

  std::string render(WlcElement const& e) {
    return render_sum(e, [](WlcMonomial const& m) { return render(m); });
  }

  std::string render(WnElement const& e) {
    return render_sum(e, [](WnBasisElement const& b) { return render(b); });
  }

  nlohmann::json to_json(MagmaPoly const& p) {
    return json_sum(p);
  }

  nlohmann::json to_json(WlcElement const& e) {
    auto j = json_sum(e);
    std::size_t k = 0;
    for (auto const& [m, c] : e) {
      auto& t = j["terms"][k++];
      t["base"] = index(m.base());
      for (auto g : m.lpart()) {
        t["L"].push_back(index(g));
      }
      for (auto g : m.rpart()) {
        t["R"].push_back(index(g));
      }
    }
    return j;
  }

  nlohmann::json to_json(WnElement const& e) {
    auto        j = json_sum(e);
    std::size_t k = 0;
    for (auto const& [b, c] : e) {
      auto& t   = j["terms"][k++];
      t["kind"] = std::string(kind_name(b.kind()));
      for (auto g : b.indices()) {
        t["indices"].push_back(index(g));
      }
    }
    return j;
  }

}  // namespace wnov
