#pragma once

// Small loops for fixtures: Latin square completion with the identity row and
// column fixed, optionally reduced to one lexicographically least table per
// isomorphism class.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

enum class LoopFilter { All, Nilpotent, NilpotentNonassociative };

LoopFilter parse_loop_filter(const std::string& s);  // throws ParseError
std::string to_string(LoopFilter f);

constexpr std::size_t kMaxEnumerationOrder = 8;

// Every loop table on {0..n-1} with identity 0, in lexicographic order of
// the rows. The visitor returns false to stop early.
void for_each_loop_table(std::size_t n, const std::function<bool(const CayleyTable&)>& visit);

// Least table, row-major, over all relabellings fixing 0.
CayleyTable canonical_form(const CayleyTable& t);

// L = Q x Z_p with (a,s)(b,t) = (ab, s + t + theta(a,b)), theta vanishing on
// the identity row and column; (a, s) is stored at a p + s. Calls visit for
// every such theta in lexicographic order.
void for_each_central_extension(const FiniteLoop& q, std::uint32_t p,
                                const std::function<bool(const CayleyTable&)>& visit);

// Loops of the given order passing the filter, in generation order, or one
// canonical table per isomorphism class sorted lexicographically. Nilpotent
// filters above order 6 use central extensions of smaller nilpotent loops.
std::vector<FiniteLoop> enumerate_loops(std::size_t order, LoopFilter filter, bool up_to_iso);

// Nilpotent loops of any order up to isomorphism, built from central
// extensions recursively. Not capped; meant for orders like 9.
std::vector<FiniteLoop> nilpotent_loops_by_extension(std::size_t order);

}  // namespace loopkit
