#pragma once

// Finite groups seen as associative loops: 2-nilpotence, the Mal'cev
// polynomials, the reducts x*y = xy[x,y]^c, abelian reducts via the Baer
// trick, and the dihedral and wreath product fixtures.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

// Commutator convention: [x,y] = x^-1 y^-1 x y, so xy = yx[x,y].
struct GroupView {
  FiniteLoop loop;
  std::vector<Elem> inverse;
  CayleyTable commutator;
  Subloop derived;
  std::uint64_t derived_exponent = 1;

  Elem mul(Elem a, Elem b) const noexcept { return loop.mul(a, b); }
  Elem pow(Elem x, std::uint64_t m) const;
};

GroupView group_view(const FiniteLoop& loop);  // throws NotAssociative

bool is_2_nilpotent(const GroupView& g);
int group_nilpotency_class(const FiniteLoop& group);  // 0 when not nilpotent
std::uint64_t element_order(const GroupView& g, Elem x);
std::uint64_t group_exponent(const GroupView& g);

// m_c(x,y,z) = x y^-1 z ([x,y][x,z]^-1[y,z])^c. Construction checks both
// Mal'cev identities on every pair.
class MalcevPolynomial {
 public:
  MalcevPolynomial(const GroupView& g, std::uint64_t c);
  Elem operator()(Elem x, Elem y, Elem z) const;
  std::uint64_t c() const noexcept { return c_; }
  // All n^3 values, x major.
  std::vector<Elem> values() const;

 private:
  GroupView g_;
  std::uint64_t c_;
};

struct ReductFamilyMember {
  std::uint64_t c = 0;
  CayleyTable table;
};

// x * y = x y [x,y]^c, no associativity check.
CayleyTable commutator_twist(const GroupView& g, std::uint64_t c);
std::vector<ReductFamilyMember> reduct_family(const GroupView& g);

struct AbelianReduct {
  std::uint64_t c = 0;
  CayleyTable table;
};
std::optional<AbelianReduct> abelian_reduct(const GroupView& g);

struct BaerResult {
  std::uint64_t k = 0;
  CayleyTable table;
};
BaerResult baer_trick(const GroupView& g);  // throws EvenExponent

namespace groups {
FiniteLoop cyclic(std::size_t m);
// Dihedral group of order 2m; r^i s^j is stored at i + m j.
FiniteLoop dihedral(std::size_t order);
FiniteLoop quaternion();
// Upper unitriangular 3x3 over Z_p; (a,b,c) is stored at a + p b + p^2 c.
FiniteLoop heisenberg(std::size_t p);
// Z3 wr Z3; (v, t) is stored at v0 + 3 v1 + 9 v2 + 27 t.
FiniteLoop wreath_z3_z3();
FiniteLoop symmetric3();
}  // namespace groups

struct WreathFacts {
  std::size_t order = 0;
  std::uint64_t exponent = 0;
  std::size_t base_size = 0;
  bool base_normal = false;
  bool base_abelian = false;
  std::uint64_t base_exponent = 0;
  std::optional<Elem> outside_order_three;
  std::size_t outside_checked = 0;
  int nilpotency_class = 0;
  std::string unproven_step;
};
WreathFacts wreath_obstruction_facts();

struct DihedralScanEntry {
  std::uint64_t c = 0;
  bool is_group = false;
  int nilpotency_class = 0;
};
struct DihedralScan {
  std::size_t order = 0;  // 2^(n+1)
  std::vector<DihedralScanEntry> entries;
};
// Scans x y [x,y]^c on D_{2^(n+1)} for c below the derived exponent, which
// covers every distinct member.
DihedralScan dihedral_reduct_class_scan(unsigned n);

}  // namespace loopkit
