#pragma once

// Finite loops stored as Cayley tables, with the structural queries the rest
// of the library is built on: divisions, subloops, normality, quotients,
// center, central series, direct products and isomorphism.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace loopkit {

// Element label 0..n-1. Element 0 is always the identity.
using Elem = std::uint16_t;

class CayleyTable {
 public:
  CayleyTable() = default;
  explicit CayleyTable(std::size_t n) : n_(n), cells_(n * n, 0) {}
  CayleyTable(std::size_t n, std::vector<Elem> cells);

  static CayleyTable from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t order() const noexcept { return n_; }
  Elem operator()(std::size_t a, std::size_t b) const noexcept { return cells_[a * n_ + b]; }
  Elem& at(std::size_t a, std::size_t b) noexcept { return cells_[a * n_ + b]; }
  std::span<const Elem> row(std::size_t a) const noexcept {
    return {cells_.data() + a * n_, n_};
  }
  const std::vector<Elem>& cells() const noexcept { return cells_; }

  bool is_latin() const;
  bool has_identity_zero() const;

  bool operator==(const CayleyTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

class FiniteLoop {
 public:
  // Validates the table; throws LatinSquareViolation or IdentityViolation.
  explicit FiniteLoop(CayleyTable table);

  std::size_t order() const noexcept { return mul_.order(); }
  Elem mul(Elem a, Elem b) const noexcept { return mul_(a, b); }
  Elem ldiv(Elem a, Elem b) const noexcept { return ldiv_(a, b); }  // a\b
  Elem rdiv(Elem a, Elem b) const noexcept { return rdiv_(a, b); }  // a/b
  const CayleyTable& table() const noexcept { return mul_; }

  bool is_associative() const;
  bool is_commutative() const;

  bool operator==(const FiniteLoop& other) const { return mul_ == other.mul_; }

 private:
  CayleyTable mul_;
  CayleyTable ldiv_;
  CayleyTable rdiv_;
};

FiniteLoop load_loop(CayleyTable table);

// A sorted set of elements containing 0 and closed under the three operations.
struct Subloop {
  std::vector<Elem> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Elem x) const;
  bool operator==(const Subloop&) const = default;
};

// A subloop that has passed the normality test. Obtain one through
// as_normal() or the library functions that return it.
struct NormalSubloop {
  Subloop base;

  const std::vector<Elem>& elements() const noexcept { return base.elements; }
  std::size_t size() const noexcept { return base.size(); }
  bool contains(Elem x) const { return base.contains(x); }
  bool operator==(const NormalSubloop&) const = default;
};

struct QuotientLoop {
  NormalSubloop kernel;
  std::vector<Elem> reps;  // minimal element of each coset, indexed by coset
  std::vector<Elem> proj;  // element -> coset index
  FiniteLoop loop;
};

struct LoopMap {
  std::vector<Elem> images;
  bool operator==(const LoopMap&) const = default;
};

bool is_subloop_set(const FiniteLoop& loop, std::span<const Elem> elements);
Subloop subloop_generated(const FiniteLoop& loop, std::span<const Elem> generators);
Subloop whole(const FiniteLoop& loop);
Subloop trivial_subloop();

// (ab)N = a(bN) = a(Nb) and (aN)b = (ab)N for all a, b.
// Throws NotASubloop when the set is not closed.
bool is_normal(const FiniteLoop& loop, const Subloop& sub);
NormalSubloop as_normal(const FiniteLoop& loop, Subloop sub);

QuotientLoop quotient(const FiniteLoop& loop, const NormalSubloop& kernel);
// Elements of the parent mapping into the given set of cosets.
std::vector<Elem> preimage(const QuotientLoop& q, std::span<const Elem> cosets);

NormalSubloop center(const FiniteLoop& loop);

struct CentralSeries {
  std::vector<NormalSubloop> terms;  // Z_0 = {0} < Z_1 < ... (ascending)
  bool nilpotent = false;
  int nilpotency_class = 0;  // number of steps when nilpotent
};

CentralSeries upper_central_series(const FiniteLoop& loop);
bool is_nilpotent(const FiniteLoop& loop);

// (a, b) is stored at a * |L2| + b.
FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b);

// Isomorphism P x V -> L, (u, v) |-> u.v, when it exists.
std::optional<LoopMap> internal_decomposition(const FiniteLoop& loop, const NormalSubloop& p,
                                              const NormalSubloop& v);

bool is_isomorphism(const FiniteLoop& dom, const FiniteLoop& cod, const LoopMap& map);
std::optional<LoopMap> find_isomorphism(const FiniteLoop& a, const FiniteLoop& b);
LoopMap inverse_map(const LoopMap& map);

// Left-associated power (..((xx)x)..)x with m factors; x^0 = 0.
Elem left_power(const FiniteLoop& loop, Elem x, std::uint64_t m);
// Least m >= 1 with x^m = 0.
std::uint64_t left_order(const FiniteLoop& loop, Elem x);
// (x/y)z
Elem malcev_eval(const FiniteLoop& loop, Elem x, Elem y, Elem z);

// Order of the right translation R_x as a permutation.
std::uint64_t right_translation_order(const FiniteLoop& loop, Elem x);
// lcm of the orders of all right translations.
std::uint64_t right_translation_exponent(const FiniteLoop& loop);
// Sorted cycle lengths of R_x.
std::vector<std::size_t> right_translation_cycle_type(const FiniteLoop& loop, Elem x);

// Every subloop, smallest first. Exponential in general; meant for small orders.
std::vector<Subloop> all_subloops(const FiniteLoop& loop);
std::vector<NormalSubloop> all_normal_subloops(const FiniteLoop& loop);

// Restriction of the operation to a subloop, relabelled by rank in the set.
FiniteLoop restrict_to(const FiniteLoop& loop, const Subloop& sub);

}  // namespace loopkit
