#pragma once

// Row spaces over the prime field Z_p, kept in reduced echelon form.

#include <cstdint>
#include <optional>
#include <vector>

namespace loopkit {

using ZpVector = std::vector<std::uint32_t>;

std::uint32_t zp_inverse(std::uint32_t a, std::uint32_t p);

class ZpRowSpace {
 public:
  ZpRowSpace(std::uint32_t p, std::size_t width) : p_(p), width_(width) {}

  // Adds v to the space; true when it was independent of the rows so far.
  bool insert(ZpVector v);
  bool contains(ZpVector v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }
  std::uint32_t prime() const noexcept { return p_; }
  // Rows sorted by pivot column, each with pivot entry 1 and zeros above and
  // below every pivot.
  const std::vector<ZpVector>& rows() const noexcept { return rows_; }

 private:
  void reduce(ZpVector& v) const;

  std::uint32_t p_;
  std::size_t width_;
  std::vector<ZpVector> rows_;
  std::vector<std::size_t> pivots_;
};

// Coefficients d with sum_i d_i vectors[i] = target, when they exist. The
// vectors need not be independent; free coefficients are set to 0.
std::optional<ZpVector> zp_solve(std::uint32_t p, const std::vector<ZpVector>& vectors,
                                 const ZpVector& target);

}  // namespace loopkit
