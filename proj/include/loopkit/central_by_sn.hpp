#pragma once

// Loops L with a central normal subloop N such that L/N is supernilpotent:
// x.y = r(x,y) * (x * y) with (A,*) supernilpotent and r: A^2 -> N.

#include <cstddef>

#include "loopkit/clone.hpp"
#include "loopkit/loop.hpp"
#include "loopkit/reduct.hpp"

namespace loopkit {

struct CentralBySnDecomposition {
  CorollaryResult reduct;
  bool same_on_n = false;          // (N,.) = (N,*), through c*d = m(c.0, 0.0, 0.d)
  bool r_constant_on_cosets = false;
  bool r_identity_at_identity = false;
};

// Throws NotCentral or QuotientNotSupernilpotent; any failed claim is an
// InternalInvariantViolation.
CentralBySnDecomposition central_by_sn_decompose(const FiniteLoop& loop, const NormalSubloop& n);

struct CloneDecompositionReport {
  std::size_t cap = 0;
  std::size_t lhs_size = 0;       // binary term operations of (A,.)
  std::size_t star_clone_size = 0;
  std::size_t r_clonoid_size = 0;  // the binary w's
  std::size_t rhs_size = 0;       // distinct f * w
  bool cap_exceeded = false;
  bool equal = false;
};

// Compares Clo^[2](A,.) with { f * w : f in Clo^[2](A,*), w in <r>^[2] }.
// Hitting the cap is reported, not thrown.
CloneDecompositionReport clone_decomposition_check(const FiniteLoop& loop, const NormalSubloop& n,
                                                   std::size_t cap);

}  // namespace loopkit
