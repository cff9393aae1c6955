#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "wnov/scalar.hpp"

namespace wnov {

  // Arithmetic over GF(p); pivot rows are kept monic.
  struct ModRing {
    using value_type = std::uint64_t;
    std::uint64_t p;

    [[nodiscard]] bool is_zero(value_type a) const {
      return a == 0;
    }
    [[nodiscard]] value_type from_long(long v) const {
      long m = v % static_cast<long>(p);
      return static_cast<value_type>(m < 0 ? m + static_cast<long>(p) : m);
    }
    [[nodiscard]] value_type add(value_type a, value_type b) const {
      return (a + b) % p;
    }
    // dst <- dst * ka - src * kb, both scaled before the merge.
    [[nodiscard]] value_type combine(value_type d, value_type ka, value_type s,
                                     value_type kb) const {
      return (d * ka % p + (p - s * kb % p)) % p;
    }
    // Coefficients (ka, kb) killing dst's entry a against a pivot with lead l.
    [[nodiscard]] std::pair<value_type, value_type> multipliers(
        value_type a, value_type l) const {
      // Pivots are monic, so l == 1.
      (void) l;
      return {1, a};
    }
    template <typename Row>
    void normalize(Row& row) const {
      if (row.empty() || row.front().second == 1) {
        return;
      }
      auto inv = modular::inverse(row.front().second, p);
      for (auto& [c, v] : row) {
        v = v * inv % p;
      }
    }
  };

  // Fraction-free arithmetic over Z with content stripping; pivot rows are
  // primitive with a positive lead.
  struct IntegerRing {
    using value_type = mpz_class;

    [[nodiscard]] bool is_zero(value_type const& a) const {
      return sgn(a) == 0;
    }
    [[nodiscard]] value_type from_long(long v) const {
      return v;
    }
    [[nodiscard]] value_type add(value_type const& a,
                                 value_type const& b) const {
      return a + b;
    }
    [[nodiscard]] value_type combine(value_type const& d, value_type const& ka,
                                     value_type const& s,
                                     value_type const& kb) const {
      return d * ka - s * kb;
    }
    [[nodiscard]] std::pair<value_type, value_type> multipliers(
        value_type const& a, value_type const& l) const {
      mpz_class g = gcd(a, l);
      return {l / g, a / g};
    }
    template <typename Row>
    void normalize(Row& row) const {
      if (row.empty()) {
        return;
      }
      mpz_class g = 0;
      for (auto const& [c, v] : row) {
        g = gcd(g, v);
        if (g == 1) {
          break;
        }
      }
      if (sgn(row.front().second) < 0) {
        g = -g;
      }
      if (g != 1) {
        for (auto& [c, v] : row) {
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
      }
    }
  };

  // Incremental reduced row echelon form over sparse rows. The pivot of a
  // row is its smallest column, so the pivot set is the set of leading
  // columns of the row space and does not depend on insertion order.
  template <typename Ring>
  class Echelon {
   public:
    using value_type = typename Ring::value_type;
    using Row        = std::vector<std::pair<std::uint32_t, value_type>>;

    Echelon(Ring ring, std::size_t ncols)
        : ring_(std::move(ring)), pivot_slot_(ncols, -1), occurs_(ncols) {}

    [[nodiscard]] std::size_t columns() const noexcept {
      return pivot_slot_.size();
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return rows_.size();
    }

    // Sorts, merges duplicate columns and drops zeros.
    Row clean(Row row) const {
      std::sort(row.begin(), row.end(),
                [](auto const& a, auto const& b) { return a.first < b.first; });
      Row out;
      for (auto& [c, v] : row) {
        if (!out.empty() && out.back().first == c) {
          out.back().second = ring_.add(out.back().second, v);
          if (ring_.is_zero(out.back().second)) {
            out.pop_back();
          }
        } else if (!ring_.is_zero(v)) {
          out.emplace_back(c, std::move(v));
        }
      }
      return out;
    }

    // Returns true iff the row increased the rank.
    bool insert(Row row) {
      row = reduce(clean(std::move(row)));
      if (row.empty()) {
        return false;
      }
      ring_.normalize(row);
      auto const pivot = row.front().first;
      auto const slot  = static_cast<std::int32_t>(rows_.size());
      for (auto s : occurs_[pivot]) {
        auto& other = rows_[static_cast<std::size_t>(s)];
        if (eliminate(other, row, pivot)) {
          ring_.normalize(other);
          for (auto const& [c, v] : row) {
            if (c != pivot) {
              occurs_[c].push_back(s);
            }
          }
        }
      }
      occurs_[pivot].clear();
      occurs_[pivot].shrink_to_fit();
      for (auto const& [c, v] : row) {
        if (c != pivot) {
          occurs_[c].push_back(slot);
        }
      }
      pivot_slot_[pivot] = slot;
      rows_.push_back(std::move(row));
      return true;
    }

    [[nodiscard]] bool reduces_to_zero(Row row) const {
      return reduce(clean(std::move(row))).empty();
    }

    [[nodiscard]] std::vector<std::uint32_t> pivot_columns() const {
      std::vector<std::uint32_t> out;
      for (std::size_t c = 0; c < pivot_slot_.size(); ++c) {
        if (pivot_slot_[c] >= 0) {
          out.push_back(static_cast<std::uint32_t>(c));
        }
      }
      return out;
    }

    [[nodiscard]] std::vector<std::uint32_t> non_pivot_columns() const {
      std::vector<std::uint32_t> out;
      for (std::size_t c = 0; c < pivot_slot_.size(); ++c) {
        if (pivot_slot_[c] < 0) {
          out.push_back(static_cast<std::uint32_t>(c));
        }
      }
      return out;
    }

    [[nodiscard]] std::vector<Row> const& rows() const noexcept {
      return rows_;
    }

   private:
    // Reduced rows have no entries in pivot columns, so killing the pivot
    // columns of the input one by one never creates new pivot entries.
    Row reduce(Row row) const {
      std::vector<std::uint32_t> hits;
      for (auto const& [c, v] : row) {
        if (pivot_slot_[c] >= 0) {
          hits.push_back(c);
        }
      }
      for (auto c : hits) {
        eliminate(row, rows_[static_cast<std::size_t>(pivot_slot_[c])], c);
      }
      if (!hits.empty()) {
        ring_.normalize(row);
      }
      return row;
    }

    // dst <- ka * dst - kb * src so that column `col` vanishes. Returns false
    // if dst had no entry there.
    bool eliminate(Row& dst, Row const& src, std::uint32_t col) const {
      auto it = std::lower_bound(
          dst.begin(), dst.end(), col,
          [](auto const& e, std::uint32_t c) { return e.first < c; });
      if (it == dst.end() || it->first != col) {
        return false;
      }
      auto [ka, kb] = ring_.multipliers(it->second, src.front().second);
      Row  out;
      out.reserve(dst.size() + src.size());
      auto zero = ring_.from_long(0);
      auto i = dst.begin(), j = src.begin();
      while (i != dst.end() || j != src.end()) {
        if (j == src.end() || (i != dst.end() && i->first < j->first)) {
          auto v = ring_.combine(i->second, ka, zero, kb);
          if (!ring_.is_zero(v)) {
            out.emplace_back(i->first, std::move(v));
          }
          ++i;
        } else if (i == dst.end() || j->first < i->first) {
          auto v = ring_.combine(zero, ka, j->second, kb);
          if (!ring_.is_zero(v)) {
            out.emplace_back(j->first, std::move(v));
          }
          ++j;
        } else {
          auto v = ring_.combine(i->second, ka, j->second, kb);
          if (!ring_.is_zero(v)) {
            out.emplace_back(i->first, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      dst = std::move(out);
      return true;
    }

    Ring                                   ring_;
    std::vector<std::int32_t>              pivot_slot_;
    std::vector<Row>                       rows_;
    std::vector<std::vector<std::int32_t>> occurs_;
  };

}  // namespace wnov
