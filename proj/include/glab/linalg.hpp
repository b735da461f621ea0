#ifndef GLAB_LINALG_HPP
#define GLAB_LINALG_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "glab/field.hpp"

namespace glab {

/// Integer matrix stored column-wise; each column holds (row, value) pairs
/// sorted by row with nonzero values.
class SparseIntMatrix {
 public:
  using Entry = std::pair<std::uint32_t, std::int64_t>;
  using Column = std::vector<Entry>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  void set_column(std::size_t c, Column col) {
    std::sort(col.begin(), col.end());
    std::erase_if(col, [](const Entry& e) { return e.second == 0; });
    columns_[c] = std::move(col);
  }

  const Column& column(std::size_t c) const { return columns_[c]; }

  std::int64_t at(std::size_t r, std::size_t c) const {
    for (const auto& [row, v] : columns_[c])
      if (row == r) return v;
    return 0;
  }

  std::vector<std::vector<std::int64_t>> dense() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols(), 0));
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : columns_[c]) out[r][c] = v;
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Above this many rows + columns, modular elimination switches to the sparse path.
inline constexpr std::size_t kDenseLimit = 4096;

namespace detail {

inline std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

inline std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) noexcept {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) noexcept { return pow_mod(a, p - 2, p); }

inline std::size_t rank_gf2_dense(const SparseIntMatrix& m) {
  const std::size_t words = (m.rows() + 63) / 64;
  // XOR basis keyed by highest set bit.
  std::vector<std::vector<std::uint64_t>> basis(m.rows());
  std::vector<bool> has(m.rows(), false);
  std::size_t rank = 0;
  std::vector<std::uint64_t> v(words);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::fill(v.begin(), v.end(), 0);
    for (const auto& [r, val] : m.column(c))
      if (val & 1) v[r / 64] ^= std::uint64_t{1} << (r % 64);
    auto insert = [&] {
      for (std::size_t w = words; w-- > 0;) {
        while (v[w]) {
          std::size_t lead = w * 64 + (63 - static_cast<std::size_t>(std::countl_zero(v[w])));
          if (!has[lead]) {
            basis[lead] = v;
            has[lead] = true;
            return true;
          }
          for (std::size_t k = 0; k <= w; ++k) v[k] ^= basis[lead][k];
        }
      }
      return false;
    };
    if (insert()) ++rank;
  }
  return rank;
}

inline std::size_t rank_mod_p_dense(const SparseIntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : m.column(c)) a[r][c] = reduce_mod(v, p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = inverse_mod(a[rank][c], p);
    for (std::size_t j = c; j < cols; ++j) a[rank][j] = static_cast<std::uint32_t>(a[rank][j] * inv % p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t factor = a[i][c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t sub = factor * a[rank][j] % p;
        a[i][j] = static_cast<std::uint32_t>((a[i][j] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

// Column reduction: each reduced column is keyed by its lowest (largest-index)
// nonzero row.
inline std::size_t rank_mod_p_sparse(const SparseIntMatrix& m, std::uint32_t p) {
  using Col = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  std::unordered_map<std::uint32_t, Col> pivots;
  Col cur, tmp;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    cur.clear();
    for (const auto& [r, v] : m.column(c)) {
      auto x = reduce_mod(v, p);
      if (x) cur.emplace_back(r, x);
    }
    while (!cur.empty()) {
      auto it = pivots.find(cur.back().first);
      if (it == pivots.end()) break;
      const Col& other = it->second;
      // cur -= (cur_low / other_low) * other
      const std::uint64_t factor = cur.back().second * std::uint64_t{inverse_mod(other.back().second, p)} % p;
      tmp.clear();
      std::size_t i = 0, j = 0;
      while (i < cur.size() || j < other.size()) {
        if (j == other.size() || (i < cur.size() && cur[i].first < other[j].first)) {
          tmp.push_back(cur[i++]);
        } else if (i == cur.size() || other[j].first < cur[i].first) {
          std::uint32_t v = static_cast<std::uint32_t>((p - factor * other[j].second % p) % p);
          if (v) tmp.emplace_back(other[j].first, v);
          ++j;
        } else {
          std::uint32_t v = static_cast<std::uint32_t>((cur[i].second + p - factor * other[j].second % p) % p);
          if (v) tmp.emplace_back(cur[i].first, v);
          ++i;
          ++j;
        }
      }
      cur.swap(tmp);
    }
    if (!cur.empty()) pivots.emplace(cur.back().first, cur);
  }
  return pivots.size();
}

struct overflow {};

inline std::int64_t checked_bareiss_step(std::int64_t a, std::int64_t piv, std::int64_t b, std::int64_t c,
                                         std::int64_t prev) {
  std::int64_t x, y, z;
  if (__builtin_mul_overflow(a, piv, &x) || __builtin_mul_overflow(b, c, &y) || __builtin_sub_overflow(x, y, &z)) {
    throw overflow{};
  }
  return z / prev;
}

template <class T>
std::size_t bareiss_rank(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const T pv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          a[i][j] = checked_bareiss_step(a[i][j], pv, lead, a[rank][j], prev);
        } else {
          a[i][j] = (a[i][j] * pv - lead * a[rank][j]) / prev;
        }
      }
      a[i][c] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank over ℚ by fraction-free (Bareiss) elimination: machine words
/// first, arbitrary precision if an intermediate overflows.
inline std::size_t rank_rational(const SparseIntMatrix& m) {
  auto dense = m.dense();
  try {
    return detail::bareiss_rank<std::int64_t>(dense);
  } catch (const detail::overflow&) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> big(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) big[i].assign(dense[i].begin(), dense[i].end());
    return detail::bareiss_rank<cpp_int>(std::move(big));
  }
}

inline std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
  if (m.rows() + m.cols() > kDenseLimit) return detail::rank_mod_p_sparse(m, p);
  if (p == 2) return detail::rank_gf2_dense(m);
  return detail::rank_mod_p_dense(m, p);
}

inline std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

}  // namespace glab

#endif  // GLAB_LINALG_HPP
