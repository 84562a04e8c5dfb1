#pragma once

// Permutation groups on small point sets via a deterministic stabilizer chain
// (Schreier-Sims). Enough machinery for multiplication groups of loops: order,
// membership, p-group and nilpotence tests.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

using BigInt = boost::multiprecision::cpp_int;

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);  // validates bijectivity
  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint16_t operator()(std::size_t x) const noexcept { return images_[x]; }
  const std::vector<std::uint16_t>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  Perm inverse() const;
  // Left-to-right composition: (p * q)(x) = q(p(x)).
  friend Perm operator*(const Perm& p, const Perm& q);
  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<std::uint16_t> images_;
};

Perm commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return gens_; }
  const std::vector<std::uint16_t>& base() const noexcept { return base_; }
  std::vector<std::size_t> orbit_lengths() const;

  BigInt order() const;
  bool contains(const Perm& p) const;
  // Adds p when it is not already a member; returns whether the group grew.
  bool add_generator(const Perm& p);

 private:
  struct Level {
    std::uint16_t point;
    std::vector<int> orbit_index;  // point -> slot in transversal, -1 outside the orbit
    std::vector<std::uint16_t> orbit;
    std::vector<Perm> transversal;  // transversal[k] maps point to orbit[k]
  };

  std::pair<Perm, std::size_t> sift(Perm p, std::size_t from) const;
  void rebuild_orbit(std::size_t level);
  void append_base_point(const Perm& moving);
  void complete(std::size_t start_level);

  std::size_t degree_;
  std::vector<Perm> gens_;    // user generators
  std::vector<Perm> strong_;  // strong generating set
  std::vector<std::uint16_t> base_;
  std::vector<Level> levels_;
};

PermGroup mlt_group(const FiniteLoop& loop);

// Closure oracle: all elements by breadth-first multiplication. Small groups only.
std::size_t closure_size(std::size_t degree, const std::vector<Perm>& generators,
                         std::size_t cap);

struct NilpotenceResult {
  bool nilpotent = false;
  int nilpotency_class = 0;
  std::vector<BigInt> series_orders;  // |G| = |L_1| >= |L_2| >= ...
};

// Lower central series on generators; throws IterationBound if it does not settle.
NilpotenceResult is_nilpotent_group(const PermGroup& group);
bool is_p_group(const PermGroup& group, std::uint64_t p);

}  // namespace loopkit
