#include "loopkit/zp_linalg.hpp"

#include <algorithm>

#include "loopkit/error.hpp"

namespace loopkit {

std::uint32_t zp_inverse(std::uint32_t a, std::uint32_t p) {
  a %= p;
  ensure(a != 0, "zero has no inverse");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void ZpRowSpace::reduce(ZpVector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::uint32_t c = v[pivots_[r]];
    if (!c) continue;
    const ZpVector& row = rows_[r];
    for (std::size_t j = 0; j < width_; ++j) v[j] = (v[j] + (p_ - c) * row[j]) % p_;
  }
}

bool ZpRowSpace::insert(ZpVector v) {
  ensure(v.size() == width_, "row width matches the space");
  for (auto& x : v) x %= p_;
  reduce(v);
  const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (it == v.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
  const std::uint32_t inv = zp_inverse(*it, p_);
  for (auto& x : v) x = x * inv % p_;
  // Clear the new pivot column from the existing rows.
  for (auto& row : rows_) {
    const std::uint32_t c = row[pivot];
    if (!c) continue;
    for (std::size_t j = 0; j < width_; ++j) row[j] = (row[j] + (p_ - c) * v[j]) % p_;
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool ZpRowSpace::contains(ZpVector v) const {
  ensure(v.size() == width_, "row width matches the space");
  for (auto& x : v) x %= p_;
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::optional<ZpVector> zp_solve(std::uint32_t p, const std::vector<ZpVector>& vectors,
                                 const ZpVector& target) {
  const std::size_t k = vectors.size();
  const std::size_t m = target.size();
  // Augmented system with one equation per coordinate.
  std::vector<ZpVector> a(m, ZpVector(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = vectors[j][i] % p;
    a[i][k] = target[i] % p;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[row], a[sel]);
    const std::uint32_t inv = zp_inverse(a[row][col], p);
    for (auto& x : a[row]) x = x * inv % p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const std::uint32_t c = a[i][col];
      for (std::size_t j = 0; j <= k; ++j) a[i][j] = (a[i][j] + (p - c) * a[row][j]) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (a[i][k] != 0) return std::nullopt;
  ZpVector d(k, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) d[pivot_col[r]] = a[r][k];
  return d;
}

}  // namespace loopkit
