#include "wnov/wlc_algebra.hpp"

#include <algorithm>
#include <set>

#include "wnov/error.hpp"

namespace wnov {

  std::vector<GeneratorId> canonicalize_L(std::vector<GeneratorId> seq) {
    if (seq.size() < 4) {
      return seq;
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        inversions += seq[j] < seq[i];
      }
    }
    std::sort(seq.begin(), seq.end());
    bool repeated = std::adjacent_find(seq.begin(), seq.end()) != seq.end();
    if (!repeated && inversions % 2 == 1) {
      std::swap(seq[seq.size() - 2], seq[seq.size() - 1]);
    }
    return seq;
  }

  WlcMonomial::WlcMonomial(GeneratorId base, std::vector<GeneratorId> lpart,
                           std::vector<GeneratorId> rpart)
      : base_(base),
        lpart_(canonicalize_L(std::move(lpart))),
        rpart_(std::move(rpart)) {
    if (lpart_.empty() && !rpart_.empty()) {
      throw Error("monomials x R...R without an L-operator are not basis "
                  "elements");
    }
  }

  std::strong_ordering operator<=>(WlcMonomial const& a,
                                   WlcMonomial const& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
      return c;
    }
    if (auto c = a.rpart_.size() <=> b.rpart_.size(); c != 0) {
      return c;
    }
    if (auto c = a.base_ <=> b.base_; c != 0) {
      return c;
    }
    if (auto c = a.lpart_ <=> b.lpart_; c != 0) {
      return c;
    }
    return a.rpart_ <=> b.rpart_;
  }

  WlcElement wlc_mul(WlcMonomial const& a, WlcMonomial const& b,
                     Field field) {
    WlcElement result(field);
    auto       one = Scalar::one(field);
    if (a.is_generator() && b.is_generator()) {
      // x_j . x_i = x_i L_{x_j}
      result.add_term(WlcMonomial(b.base(), {a.base()}, {}), one);
    } else if (a.is_generator()) {
      auto q = a.base();
      if (b.rpart().empty()) {
        auto l = b.lpart();
        l.push_back(q);
        result.add_term(WlcMonomial(b.base(), std::move(l), {}), one);
      } else if (b.lpart().size() == 1 && b.rpart().size() == 1) {
        // x_q . (x_i L_{x_j} R_{x_k})
        auto i = b.base(), j = b.lpart()[0], k = b.rpart()[0];
        result.add_term(WlcMonomial(k, {i, j, q}, {}), one);
        result.add_term(WlcMonomial(k, {q, i, j}, {}), -one);
      }
    } else if (b.is_generator()) {
      auto r = a.rpart();
      r.push_back(b.base());
      result.add_term(WlcMonomial(a.base(), a.lpart(), std::move(r)), one);
    }
    return result;
  }

  std::vector<WlcMonomial> wlc_basis(Multidegree const& md) {
    std::vector<GeneratorId> letters;
    for (auto const& [g, m] : md.counts()) {
      letters.insert(letters.end(), m, g);
    }
    std::set<WlcMonomial> out;
    if (letters.size() == 1) {
      out.emplace(letters[0]);
    }
    for (std::size_t b = 0; letters.size() > 1 && b < letters.size(); ++b) {
      if (b > 0 && letters[b] == letters[b - 1]) {
        continue;
      }
      auto rest = letters;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(b));
      do {
        for (std::size_t n = 1; n <= rest.size(); ++n) {
          out.emplace(
              letters[b],
              std::vector<GeneratorId>(rest.begin(),
                                       rest.begin()
                                           + static_cast<std::ptrdiff_t>(n)),
              std::vector<GeneratorId>(
                  rest.begin() + static_cast<std::ptrdiff_t>(n), rest.end()));
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return {out.begin(), out.end()};
  }

}  // namespace wnov
