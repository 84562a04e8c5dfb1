#pragma once

// Construction of a supernilpotent loop reduct of a finite nilpotent loop.
//
// Along a central series A = C_0 > C_1 > ... > C_k = {0} with factors of prime
// order, stage i+1 replaces the operation *_i by
//
//     x *_{i+1} y = (x *_i y) /_i r(x, y),   r(x, y) = (xy)^n /_i (x^n y^n),
//
// where powers are left-associated in *_i and n is 1 modulo the exponent of the
// p-part E and 0 modulo the exponent of the complement V. Every stage keeps a
// term over the original {., \, /} that reproduces its operation.

#include <cstdint>
#include <vector>

#include "loopkit/loop.hpp"
#include "loopkit/supernilpotence.hpp"
#include "loopkit/term_dag.hpp"

namespace loopkit {

struct RefinedCentralSeries {
  std::vector<NormalSubloop> chain;   // C_0 = A > ... > C_k = {0}
  std::vector<std::uint64_t> primes;  // |C_i / C_{i+1}| = primes[i]
  std::size_t length() const noexcept { return primes.size(); }
};

RefinedCentralSeries refine_central_series(const FiniteLoop& loop);
// A central series with prime factors that passes through `normal`; the
// returned index j has chain[j] == normal.
std::pair<RefinedCentralSeries, std::size_t> central_series_through(const FiniteLoop& loop,
                                                                    const NormalSubloop& normal);

struct ExponentChoice {
  std::uint64_t n = 1;
  std::uint64_t m_e = 1;  // lcm of right translation orders in E
  std::uint64_t m_v = 1;  // same for V
};

// Least positive n with n = 1 (mod m_e) and n = 0 (mod m_v).
ExponentChoice choose_exponent(std::uint64_t m_e, std::uint64_t m_v);
ExponentChoice choose_exponent(const FiniteLoop& e, const FiniteLoop& v, std::uint64_t p);

struct ReductStage {
  std::size_t index = 0;
  CayleyTable star;
  ExponentChoice exponent;
  CayleyTable r_table;  // all zeros for the starting stage
  NodeId term = 0;      // node of the builder's DAG computing star
};

// Working state: the original loop, the chain and a shared DAG.
struct ReductContext {
  FiniteLoop loop;
  RefinedCentralSeries series;
  TermDag dag;
};

ReductStage initial_stage(ReductContext& ctx, std::size_t index);
ReductStage stage_step(ReductContext& ctx, const ReductStage& current);

struct ReductCertificate {
  CayleyTable input;
  RefinedCentralSeries series;
  std::vector<ReductStage> stages;  // stage terms refer to the builder DAG
  CayleyTable final_star;
  TermDag term;  // compacted term for final_star
  SylowDecomposition decomposition;
};

ReductCertificate build_reduct(const FiniteLoop& loop);

struct CorollaryResult {
  RefinedCentralSeries series;
  std::size_t start_index = 0;
  std::vector<ReductStage> stages;
  CayleyTable star;
  CayleyTable r_table;  // (x.y) / (x * y), right division of the new loop
  TermDag star_term;
  TermDag r_term;
};

CorollaryResult corollary_reduct(const FiniteLoop& loop, const NormalSubloop& normal);

}  // namespace loopkit
