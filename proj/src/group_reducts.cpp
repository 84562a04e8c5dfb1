#include "loopkit/group_reducts.hpp"

#include <algorithm>
#include <numeric>

#include "loopkit/error.hpp"

namespace loopkit {

Elem GroupView::pow(Elem x, std::uint64_t m) const {
  Elem acc = 0;
  Elem base = x;
  while (m) {
    if (m & 1) acc = loop.mul(acc, base);
    base = loop.mul(base, base);
    m >>= 1;
  }
  return acc;
}

GroupView group_view(const FiniteLoop& loop) {
  if (!loop.is_associative()) throw Error(Errc::NotAssociative, "table is not associative");
  const std::size_t n = loop.order();
  GroupView g{loop, std::vector<Elem>(n), CayleyTable(n), {}, 1};
  for (std::size_t x = 0; x < n; ++x) g.inverse[x] = loop.ldiv(static_cast<Elem>(x), 0);
  std::vector<Elem> comms;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem c = loop.mul(loop.mul(g.inverse[x], g.inverse[y]), loop.mul(x, y));
      g.commutator.at(x, y) = c;
      comms.push_back(c);
    }
  g.derived = subloop_generated(loop, comms);
  ensure(is_normal(loop, g.derived), "derived subgroup is normal");
  for (Elem d : g.derived.elements) g.derived_exponent = std::lcm(g.derived_exponent, element_order(g, d));
  return g;
}

std::uint64_t element_order(const GroupView& g, Elem x) { return left_order(g.loop, x); }

std::uint64_t group_exponent(const GroupView& g) {
  std::uint64_t e = 1;
  for (std::size_t x = 0; x < g.loop.order(); ++x) e = std::lcm(e, element_order(g, static_cast<Elem>(x)));
  return e;
}

bool is_2_nilpotent(const GroupView& g) {
  const NormalSubloop z = center(g.loop);
  return std::all_of(g.derived.elements.begin(), g.derived.elements.end(),
                     [&](Elem d) { return z.contains(d); });
}

int group_nilpotency_class(const FiniteLoop& group) {
  const CentralSeries s = upper_central_series(group);
  return s.nilpotent ? s.nilpotency_class : 0;
}

MalcevPolynomial::MalcevPolynomial(const GroupView& g, std::uint64_t c) : g_(g), c_(c) {
  if (!is_2_nilpotent(g_)) throw Error(Errc::NotCentral, "derived subgroup is not central");
  const std::size_t n = g_.loop.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = static_cast<Elem>(x), b = static_cast<Elem>(y);
      if ((*this)(a, b, b) != a || (*this)(b, b, a) != a)
        throw Error(Errc::MalcevIdentityViolation,
                    "m(x,y,y) = x = m(y,y,x) fails at x=" + std::to_string(x) + ", y=" + std::to_string(y));
    }
}

Elem MalcevPolynomial::operator()(Elem x, Elem y, Elem z) const {
  const GroupView& g = g_;
  const Elem base = g.mul(g.mul(x, g.inverse[y]), z);
  const Elem twist =
      g.mul(g.mul(g.commutator(x, y), g.inverse[g.commutator(x, z)]), g.commutator(y, z));
  return g.mul(base, g.pow(twist, c_));
}

std::vector<Elem> MalcevPolynomial::values() const {
  const std::size_t n = g_.loop.order();
  std::vector<Elem> out;
  out.reserve(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        out.push_back((*this)(static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)));
  return out;
}

CayleyTable commutator_twist(const GroupView& g, std::uint64_t c) {
  const std::size_t n = g.loop.order();
  CayleyTable t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t.at(x, y) = g.mul(g.mul(x, y), g.pow(g.commutator(x, y), c));
  return t;
}

std::vector<ReductFamilyMember> reduct_family(const GroupView& g) {
  if (!is_2_nilpotent(g)) throw Error(Errc::NotCentral, "derived subgroup is not central");
  std::vector<ReductFamilyMember> out;
  for (std::uint64_t c = 0; c < g.derived_exponent; ++c) {
    CayleyTable t = commutator_twist(g, c);
    if (std::any_of(out.begin(), out.end(), [&](const auto& m) { return m.table == t; })) continue;
    if (!t.is_latin() || !t.has_identity_zero() || !FiniteLoop(t).is_associative())
      throw Error(Errc::AssociativityViolation, "member c=" + std::to_string(c) + " is not a group");
    out.push_back({c, std::move(t)});
  }
  return out;
}

std::optional<AbelianReduct> abelian_reduct(const GroupView& g) {
  if (!is_2_nilpotent(g)) throw Error(Errc::NotCentral, "derived subgroup is not central");
  const std::uint64_t e = g.derived_exponent;
  if (e % 2 == 0) return std::nullopt;
  const std::uint64_t c = (e - 1) / 2;
  CayleyTable t = commutator_twist(g, c);
  const FiniteLoop l(t);
  ensure(l.is_associative() && l.is_commutative(), "abelian reduct is an abelian group");
  return AbelianReduct{c, std::move(t)};
}

BaerResult baer_trick(const GroupView& g) {
  const std::uint64_t e = g.derived_exponent;
  if (e % 2 == 0)
    throw Error(Errc::EvenExponent, "derived exponent " + std::to_string(e) + " has no inverse of 2");
  std::uint64_t k = 1;
  while ((2 * k) % e != 1 % e) ++k;
  const std::size_t n = g.loop.order();
  CayleyTable t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t.at(x, y) = g.mul(g.mul(x, y), g.pow(g.commutator(y, x), k));
  const auto ab = abelian_reduct(g);
  ensure(ab.has_value() && ab->table == t, "Baer table equals the abelian reduct");
  return BaerResult{k, std::move(t)};
}

namespace groups {

FiniteLoop cyclic(std::size_t m) {
  CayleyTable t(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t.at(a, b) = static_cast<Elem>((a + b) % m);
  return FiniteLoop(std::move(t));
}

FiniteLoop dihedral(std::size_t order) {
  ensure(order >= 2 && order % 2 == 0, "dihedral order is even");
  const std::size_t m = order / 2;
  CayleyTable t(order);
  // (r^i s^a)(r^k s^b) = r^(i + (-1)^a k) s^(a+b)
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, a = x / m, k = y % m, b = y / m;
      const std::size_t r = a ? (i + m - k) % m : (i + k) % m;
      t.at(x, y) = static_cast<Elem>(r + m * ((a + b) % 2));
    }
  return FiniteLoop(std::move(t));
}

FiniteLoop quaternion() {
  // Units 1, i, j, k as 0..3; sign bit adds 4.
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  CayleyTable t(8);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t u = x % 4, v = y % 4;
      const std::size_t s = (x / 4 + y / 4 + kSign[u][v]) % 2;
      t.at(x, y) = static_cast<Elem>(kUnit[u][v] + 4 * s);
    }
  return FiniteLoop(std::move(t));
}

FiniteLoop heisenberg(std::size_t p) {
  const std::size_t n = p * p * p;
  CayleyTable t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x % p, b = x / p % p, c = x / (p * p);
      const std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
      const std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      t.at(x, y) = static_cast<Elem>(ra + p * rb + p * p * rc);
    }
  return FiniteLoop(std::move(t));
}

FiniteLoop wreath_z3_z3() {
  CayleyTable t(81);
  for (std::size_t x = 0; x < 81; ++x)
    for (std::size_t y = 0; y < 81; ++y) {
      const std::size_t tx = x / 27, ty = y / 27;
      std::size_t v[3] = {x % 3, x / 3 % 3, x / 9 % 3};
      const std::size_t w[3] = {y % 3, y / 3 % 3, y / 9 % 3};
      // (v, t)(w, u) = (v + shift^t w, t + u), (shift^t w)_i = w_(i-t)
      for (std::size_t i = 0; i < 3; ++i) v[i] = (v[i] + w[(i + 3 - tx) % 3]) % 3;
      t.at(x, y) = static_cast<Elem>(v[0] + 3 * v[1] + 9 * v[2] + 27 * ((tx + ty) % 3));
    }
  return FiniteLoop(std::move(t));
}

FiniteLoop symmetric3() { return dihedral(6); }

}  // namespace groups

WreathFacts wreath_obstruction_facts() {
  const FiniteLoop w = groups::wreath_z3_z3();
  const GroupView g = group_view(w);
  WreathFacts f;
  f.order = w.order();
  f.exponent = group_exponent(g);
  f.nilpotency_class = group_nilpotency_class(w);

  std::vector<Elem> base;
  for (Elem x = 0; x < 27; ++x) base.push_back(x);
  f.base_size = base.size();
  ensure(is_subloop_set(w, base), "base of the wreath product is a subgroup");
  f.base_normal = is_normal(w, Subloop{base});
  f.base_abelian = true;
  for (Elem x : base)
    for (Elem y : base) f.base_abelian = f.base_abelian && w.mul(x, y) == w.mul(y, x);
  f.base_exponent = 1;
  for (Elem x : base) f.base_exponent = std::lcm(f.base_exponent, element_order(g, x));
  for (std::size_t x = 27; x < w.order(); ++x) {
    ++f.outside_checked;
    if (element_order(g, static_cast<Elem>(x)) == 3) {
      f.outside_order_three = static_cast<Elem>(x);
      break;
    }
  }
  f.unproven_step =
      "not checked: in an abelian reduct every element outside the base generates the same "
      "subgroup as in the group";
  return f;
}

DihedralScan dihedral_reduct_class_scan(unsigned n) {
  ensure(n >= 2, "dihedral scan needs n >= 2");
  DihedralScan out;
  out.order = std::size_t{1} << (n + 1);
  const GroupView g = group_view(groups::dihedral(out.order));
  for (std::uint64_t c = 0; c < g.derived_exponent; ++c) {
    DihedralScanEntry e{c, false, 0};
    const CayleyTable t = commutator_twist(g, c);
    if (t.is_latin() && t.has_identity_zero()) {
      const FiniteLoop l(t);
      if (l.is_associative()) {
        e.is_group = true;
        e.nilpotency_class = group_nilpotency_class(l);
      }
    }
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace loopkit
