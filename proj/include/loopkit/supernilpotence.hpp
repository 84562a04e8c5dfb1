#pragma once

// Two independent supernilpotence tests for finite loops: splitting into
// Sylow factors, and nilpotence of the multiplication group.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

struct SylowDecomposition {
  std::map<std::uint64_t, NormalSubloop> factors;  // prime -> P_p
  // Map from the direct product of the factors (ascending primes, mixed radix
  // with the first factor most significant) onto the loop.
  LoopMap witness;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n, std::uint64_t p);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// {x : left-associated order of x is a power of p}
std::vector<Elem> sylow_candidate(const FiniteLoop& loop, std::uint64_t p);

// Direct product of the loops in order, as built by direct_product().
FiniteLoop product_of(const std::vector<FiniteLoop>& factors);

std::optional<SylowDecomposition> is_supernilpotent_decomp(const FiniteLoop& loop);
bool is_supernilpotent_wright(const FiniteLoop& loop);

}  // namespace loopkit
