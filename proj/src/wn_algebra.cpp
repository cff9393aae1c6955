#include "wnov/wn_algebra.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wnov/error.hpp"

namespace wnov {

  std::string_view kind_name(WnKind k) noexcept {
    switch (k) {
      case WnKind::generator:
        return "generator";
      case WnKind::pair:
        return "pair";
      case WnKind::t1:
        return "t1";
      case WnKind::t2:
        return "t2";
      case WnKind::t3:
        return "t3";
      case WnKind::t4:
        return "t4";
      case WnKind::t5:
        return "t5";
    }
    return "?";
  }

  namespace {
    // (arity, first symmetric position); arity 0 means "at least 5".
    std::pair<std::size_t, std::size_t> layout(WnKind k) {
      switch (k) {
        case WnKind::generator:
          return {1, 1};
        case WnKind::pair:
          return {2, 2};
        case WnKind::t1:
          return {3, 3};
        case WnKind::t2:
          return {3, 1};
        case WnKind::t3:
          return {4, 2};
        case WnKind::t4:
          return {4, 1};
        case WnKind::t5:
          return {0, 1};
      }
      return {0, 0};
    }
  }  // namespace

  WnBasisElement WnBasisElement::make(WnKind                   kind,
                                      std::vector<GeneratorId> indices) {
    auto [arity, sym] = layout(kind);
    if (kind == WnKind::t5) {
      if (indices.size() < 5) {
        throw Error("type (v) elements need at least four symmetric indices "
                    "(degree >= 5), got degree "
                    + std::to_string(indices.size()));
      }
    } else if (indices.size() != arity) {
      throw Error(std::string("base element of kind ") + std::string(kind_name(kind))
                  + " takes " + std::to_string(arity) + " indices, got "
                  + std::to_string(indices.size()));
    }
    for (auto g : indices) {
      if (index(g) == 0) {
        throw Error("generator indices start at 1");
      }
    }
    std::sort(indices.begin() + static_cast<std::ptrdiff_t>(sym), indices.end());
    return WnBasisElement(kind, std::move(indices));
  }

  WnBasisElement WnBasisElement::t5(GeneratorId x, std::vector<GeneratorId> ts) {
    ts.insert(ts.begin(), x);
    return make(WnKind::t5, std::move(ts));
  }

  std::strong_ordering operator<=>(WnBasisElement const& a,
                                   WnBasisElement const& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
      return c;
    }
    if (auto c = a.kind_ <=> b.kind_; c != 0) {
      return c;
    }
    return a.indices_ <=> b.indices_;
  }

  WnElement wn_mul(WnBasisElement const& a, WnBasisElement const& b,
                   Field field) {
    using E = WnBasisElement;
    WnElement result(field);
    auto      one = Scalar::one(field);
    auto      add = [&](E const& e, long c) {
      result.add_term(e, Scalar(field, c));
    };

    if (a.kind() == WnKind::generator) {
      auto q = a[0];
      switch (b.kind()) {
        case WnKind::generator:  // q . x = qx
          add(E::pair(q, b[0]), 1);
          break;
        case WnKind::pair:  // q . yz = q(yz)
          add(E::t1(q, b[0], b[1]), 1);
          break;
        case WnKind::t1:  // q . x(yz) = -(q, yx, z)
          add(E::t3(q, b[1], b[0], b[2]), -1);
          break;
        case WnKind::t2:  // q . (x, t1, t2) = (x, q t1, t2)
          add(E::t3(b[0], q, b[1], b[2]), 1);
          break;
        default:
          break;
      }
      // A generator times a generator is handled above; every other left
      // action by q is null.
      return result;
    }
    if (b.kind() != WnKind::generator) {
      return result;
    }
    auto y = b[0];
    switch (a.kind()) {
      case WnKind::pair: {  // xz . y = (x, z, y) + x(zy)
        auto x = a[0], z = a[1];
        add(E::t2(x, z, y), 1);
        add(E::t1(x, z, y), 1);
        break;
      }
      case WnKind::t1: {  // x(zt) . y = (x, [z,t], y) + (z, xt, y)
        auto x = a[0], z = a[1], t = a[2];
        add(E::t3(x, z, t, y), 1);
        add(E::t3(x, t, z, y), -1);
        add(E::t3(z, x, t, y), 1);
        break;
      }
      case WnKind::t2: {  // (x,t1,t2) . y = Tch(x,t1,t2,y) + (x, t1 o t2, y)
        auto x = a[0], t1 = a[1], t2 = a[2];
        add(E::t4(x, t1, t2, y), 1);
        add(E::t3(x, t1, t2, y), 1);
        add(E::t3(x, t2, t1, y), 1);
        break;
      }
      case WnKind::t4:  // Tch(x,t1,t2,t3) . y = (x t1) R_{t2} R_{t3} R_y
      case WnKind::t5: {
        auto idx = a.indices();
        idx.push_back(y);
        result.add_term(E::make(WnKind::t5, std::move(idx)), one);
        break;
      }
      default:
        break;
    }
    return result;
  }

  std::vector<WnBasisElement> wn_basis(Multidegree const& md) {
    std::vector<GeneratorId> letters;
    for (auto const& [g, m] : md.counts()) {
      letters.insert(letters.end(), m, g);
    }
    auto const n = letters.size();
    // Distinct choices of the non-symmetric prefix of length `fixed`; the
    // remaining letters fill the symmetric positions.
    std::set<WnBasisElement> out;
    auto emit_prefixes = [&](WnKind kind, std::size_t fixed) {
      auto perm = letters;
      do {
        std::vector<GeneratorId> idx(perm.begin(), perm.end());
        out.insert(WnBasisElement::make(kind, std::move(idx)));
        // Only the prefix matters: skip permutations of the tail.
        std::sort(perm.begin() + static_cast<std::ptrdiff_t>(fixed), perm.end(),
                  std::greater<>());
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    switch (n) {
      case 0:
        break;
      case 1:
        out.insert(WnBasisElement::generator(letters[0]));
        break;
      case 2:
        emit_prefixes(WnKind::pair, 2);
        break;
      case 3:
        emit_prefixes(WnKind::t1, 3);
        emit_prefixes(WnKind::t2, 1);
        break;
      case 4:
        emit_prefixes(WnKind::t3, 2);
        emit_prefixes(WnKind::t4, 1);
        break;
      default:
        emit_prefixes(WnKind::t5, 1);
        break;
    }
    return {out.begin(), out.end()};
  }

  bool is_annihilator(WnElement const& e) {
    return std::all_of(e.begin(), e.end(), [](auto const& term) {
      return term.first.kind() == WnKind::t3;
    });
  }

}  // namespace wnov
