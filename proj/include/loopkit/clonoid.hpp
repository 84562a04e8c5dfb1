#pragma once

// Clonoids of zero-preserving functions Z_q^n -> Z_p generated by one unary
// function f: the functions x |-> f(<alpha, x>) span C^[n] over Z_p.

#include <cstdint>
#include <optional>
#include <vector>

#include "loopkit/zp_linalg.hpp"

namespace loopkit {

// Values on Z_q^arity; the tuple (x_1, ..., x_m) sits at x_1 + q x_2 + ... .
struct FnTable {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::size_t arity = 0;
  std::vector<std::uint32_t> values;

  std::uint32_t operator()(const std::vector<std::uint32_t>& x) const;
  bool operator==(const FnTable&) const = default;
};

// Unary table from its values; throws ParseError unless q, p are distinct
// primes, entries lie in Z_p and f(0) = 0.
FnTable unary_fn(std::uint32_t q, std::uint32_t p, std::vector<std::uint32_t> values);
bool is_zero_fn(const FnTable& f);
// All tuples of Z_q^n in index order.
std::vector<std::vector<std::uint32_t>> all_tuples(std::uint32_t q, std::size_t n);
std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t q);
// x |-> f(<alpha, x>) on Z_q^n with n = alpha.size().
FnTable compose_linear(const FnTable& f, const std::vector<std::uint32_t>& alpha);

struct ClonoidSpan {
  std::size_t dimension = 0;
  std::vector<ZpVector> basis;  // reduced echelon rows
};
ClonoidSpan clonoid_span(const FnTable& f, std::size_t n);
bool in_clonoid(const FnTable& f, const FnTable& g);  // g in C^[arity of g]

struct ClonoidBasis {
  FnTable f;
  std::uint32_t a = 1;
  std::uint32_t k = 1;       // multiplicative order of a
  std::vector<FnTable> b;    // b[i](x) = f(a^i x)
};

// Smallest a in Z_q \ {0} whose orbit is a basis of C^[1]; nullopt when none.
std::optional<ClonoidBasis> search_basis_parameter(const FnTable& f);
// Same, but exhausting the search throws InternalInconsistency.
ClonoidBasis find_basis_parameter(const FnTable& f);

struct DimensionCheck {
  std::size_t n = 0;
  std::size_t measured = 0;
  std::size_t predicted = 0;  // k (q^n - 1) / (q - 1)
  bool holds() const noexcept { return measured == predicted; }
};
DimensionCheck dimension_formula_check(const ClonoidBasis& basis, std::size_t n);

struct CoefficientRow {
  std::uint32_t c = 0;
  std::vector<std::uint32_t> d;  // f(c x) = sum_i d_i f(a^i x)
};
std::vector<CoefficientRow> coefficient_rows(const ClonoidBasis& basis);

// h_L(lambda y) = h(lambda), zero off the line through y. Checks that h lies
// in C^[1] (NotInClonoid otherwise) and that the result lies in C^[n].
FnTable h_L_construct(const FnTable& f, const FnTable& h, const std::vector<std::uint32_t>& y);

// The index set A_n: tuples whose first nonzero entry is a power a^j, j < k.
std::vector<std::vector<std::uint32_t>> leading_coefficient_set(const ClonoidBasis& basis,
                                                                std::size_t n);

}  // namespace loopkit
