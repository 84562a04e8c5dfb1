#pragma once

// Bounded closure of a set of binary operations on a finite loop under the
// pointwise product. A finite set closed under the product of a loop is
// closed under both divisions as well, so starting from the projections this
// yields the binary part of the clone of term operations.

#include <cstddef>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

struct BinaryOpSet {
  std::vector<CayleyTable> members;  // sorted by cell vector
  std::size_t cap = 0;
  bool cap_exceeded = false;
};

CayleyTable projection_x(std::size_t n);
CayleyTable projection_y(std::size_t n);

// Pointwise product f(x,y) . g(x,y) in `loop`.
CayleyTable pointwise(const FiniteLoop& loop, const CayleyTable& f, const CayleyTable& g);

// Closure of `generators` under the pointwise product of `loop`. Stops as soon
// as more than `cap` operations are known and flags the result.
BinaryOpSet close_under_product(const FiniteLoop& loop, std::vector<CayleyTable> generators,
                                std::size_t cap);

// Binary term operations of the loop.
BinaryOpSet binary_clone(const FiniteLoop& loop, std::size_t cap);

}  // namespace loopkit
