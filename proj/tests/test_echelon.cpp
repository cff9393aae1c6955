#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "wnov/echelon.hpp"

using namespace wnov;

namespace {

  using Dense = std::vector<std::vector<mpq_class>>;

  // Textbook dense Gauss-Jordan over Q; returns the pivot columns.
  std::vector<std::uint32_t> dense_pivots(Dense m, std::size_t cols) {
    std::vector<std::uint32_t> pivots;
    std::size_t                r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t k = r;
      while (k < m.size() && m[k][c] == 0) {
        ++k;
      }
      if (k == m.size()) {
        continue;
      }
      std::swap(m[k], m[r]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != r && m[i][c] != 0) {
          mpq_class f = m[i][c] / m[r][c];
          for (std::size_t j = 0; j < cols; ++j) {
            m[i][j] -= f * m[r][j];
          }
        }
      }
      pivots.push_back(static_cast<std::uint32_t>(c));
      ++r;
    }
    return pivots;
  }

  // Same over GF(p) with plain 64-bit arithmetic.
  std::vector<std::uint32_t> dense_pivots_mod(std::vector<std::vector<long>> m,
                                              std::size_t cols, long p) {
    auto inv = [p](long a) {
      long r = 1, e = p - 2;
      a %= p;
      while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
      }
      return r;
    };
    for (auto& row : m) {
      for (auto& v : row) {
        v = ((v % p) + p) % p;
      }
    }
    std::vector<std::uint32_t> pivots;
    std::size_t                r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t k = r;
      while (k < m.size() && m[k][c] == 0) {
        ++k;
      }
      if (k == m.size()) {
        continue;
      }
      std::swap(m[k], m[r]);
      long iv = inv(m[r][c]);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != r && m[i][c] != 0) {
          long f = m[i][c] * iv % p;
          for (std::size_t j = 0; j < cols; ++j) {
            m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
          }
        }
      }
      pivots.push_back(static_cast<std::uint32_t>(c));
      ++r;
    }
    return pivots;
  }

  std::vector<std::vector<long>> random_matrix(std::mt19937& rng, std::size_t rows,
                                               std::size_t cols) {
    std::uniform_int_distribution<int> entry(-3, 3), coin(0, 4), pick(0, 1 << 20);
    std::vector<std::vector<long>>     m(rows, std::vector<long>(cols, 0));
    for (auto& row : m) {
      for (auto& v : row) {
        v = coin(rng) == 0 ? entry(rng) : 0;
      }
    }
    // Make about a third of the rows dependent on earlier ones.
    for (std::size_t i = 2; i < rows; i += 3) {
      auto a = static_cast<std::size_t>(pick(rng)) % i;
      auto b = static_cast<std::size_t>(pick(rng)) % i;
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = 2 * m[a][j] - 3 * m[b][j];
      }
    }
    return m;
  }

  template <typename Ring>
  Echelon<Ring> run(Ring ring, std::vector<std::vector<long>> const& m,
                    std::size_t cols, std::vector<std::size_t> const& order) {
    Echelon<Ring> e(ring, cols);
    for (auto i : order) {
      typename Echelon<Ring>::Row row;
      for (std::size_t j = 0; j < cols; ++j) {
        if (m[i][j] != 0) {
          row.emplace_back(static_cast<std::uint32_t>(j), ring.from_long(m[i][j]));
        }
      }
      e.insert(row);
    }
    return e;
  }

}  // namespace

TEST_CASE("sparse echelon agrees with dense elimination") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 5 + static_cast<std::size_t>(trial % 25);
    std::size_t cols = 4 + static_cast<std::size_t>((trial * 7) % 31);
    auto        m    = random_matrix(rng, rows, cols);
    Dense       dq(rows, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        dq[i][j] = m[i][j];
      }
    }
    auto want = dense_pivots(dq, cols);
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    auto ez = run(IntegerRing{}, m, cols, order);
    CHECK(ez.rank() == want.size());
    CHECK(ez.pivot_columns() == want);
    CHECK(ez.rank() + ez.non_pivot_columns().size() == cols);

    for (long p : {7L, 1009L}) {
      auto ep = run(ModRing{static_cast<std::uint64_t>(p)}, m, cols, order);
      CHECK(ep.pivot_columns() == dense_pivots_mod(m, cols, p));
    }
  }
}

TEST_CASE("rows merge duplicate columns modulo p") {
  Echelon<ModRing> e(ModRing{7}, 3);
  // 3 + 4 = 0 mod 7 in column 0.
  CHECK(!e.insert({{0, 3}, {0, 4}}));
  CHECK(e.insert({{0, 3}, {1, 1}, {0, 1}}));
  CHECK(e.rank() == 1);
  CHECK(e.reduces_to_zero({{0, 4}, {1, 1}}));
  CHECK(!e.reduces_to_zero({{1, 1}}));
}

TEST_CASE("reduced rows carry no entries in other pivot columns") {
  Echelon<IntegerRing> e(IntegerRing{}, 4);
  e.insert({{2, 1}, {3, 1}});
  e.insert({{0, 2}, {2, 4}});
  e.insert({{1, 3}, {2, 3}, {3, 6}});
  auto pivots = e.pivot_columns();
  for (auto const& row : e.rows()) {
    for (auto const& [c, v] : row) {
      if (c != row.front().first) {
        CHECK(std::find(pivots.begin(), pivots.end(), c) == pivots.end());
      }
    }
    CHECK(sgn(row.front().second) > 0);
  }
}
