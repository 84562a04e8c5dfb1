#include "loopkit/central_by_sn.hpp"

#include <algorithm>
#include <set>

#include "loopkit/error.hpp"
#include "loopkit/supernilpotence.hpp"

namespace loopkit {

CentralBySnDecomposition central_by_sn_decompose(const FiniteLoop& loop, const NormalSubloop& n) {
  const NormalSubloop z = center(loop);
  for (Elem e : n.elements())
    if (!z.contains(e)) throw Error(Errc::NotCentral, "element " + std::to_string(e) + " is not central");
  CentralBySnDecomposition out;
  out.reduct = corollary_reduct(loop, n);
  const FiniteLoop star(out.reduct.star);
  const CayleyTable& r = out.reduct.r_table;

  out.same_on_n = true;
  for (Elem c : n.elements())
    for (Elem d : n.elements()) {
      const Elem via_malcev = malcev_eval(loop, loop.mul(c, 0), loop.mul(0, 0), loop.mul(0, d));
      out.same_on_n = out.same_on_n && star.mul(c, d) == loop.mul(c, d) && star.mul(c, d) == via_malcev;
    }
  ensure(out.same_on_n, "(N,.) and (N,*) coincide");

  out.r_constant_on_cosets = true;
  const std::size_t order = loop.order();
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      for (Elem m : n.elements()) {
        const Elem v = r(x, y);
        out.r_constant_on_cosets = out.r_constant_on_cosets && r(loop.mul(x, m), y) == v &&
                                   r(x, loop.mul(y, m)) == v;
      }
  ensure(out.r_constant_on_cosets, "r is constant on cosets of N");
  out.r_identity_at_identity = r(0, 0) == 0;
  ensure(out.r_identity_at_identity, "r(0,0) is the identity");
  return out;
}

CloneDecompositionReport clone_decomposition_check(const FiniteLoop& loop, const NormalSubloop& n,
                                                   std::size_t cap) {
  CloneDecompositionReport rep;
  rep.cap = cap;
  const CentralBySnDecomposition dec = central_by_sn_decompose(loop, n);
  const FiniteLoop star(dec.reduct.star);
  const CayleyTable& r = dec.reduct.r_table;
  const std::size_t order = loop.order();

  const BinaryOpSet lhs = binary_clone(loop, cap);
  const BinaryOpSet f_ops = binary_clone(star, cap);
  rep.lhs_size = lhs.members.size();
  rep.star_clone_size = f_ops.members.size();
  if (lhs.cap_exceeded || f_ops.cap_exceeded) {
    rep.cap_exceeded = true;
    return rep;
  }

  // w = r(u, v) for binary term operations u, v of L/N, lifted to A^2.
  const QuotientLoop q = quotient(loop, n);
  const BinaryOpSet quot_ops = binary_clone(q.loop, cap);
  if (quot_ops.cap_exceeded) {
    rep.cap_exceeded = true;
    return rep;
  }
  std::set<std::vector<Elem>> seeds;
  for (const auto& u : quot_ops.members)
    for (const auto& v : quot_ops.members) {
      std::vector<Elem> w(order * order);
      for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
          const Elem ux = u(q.proj[x], q.proj[y]), vx = v(q.proj[x], q.proj[y]);
          w[x * order + y] = r(q.reps[ux], q.reps[vx]);
        }
      seeds.insert(std::move(w));
    }
  std::vector<CayleyTable> gens;
  for (const auto& s : seeds) gens.emplace_back(order, s);
  const BinaryOpSet w_ops = close_under_product(loop, std::move(gens), cap);
  rep.r_clonoid_size = w_ops.members.size();
  if (w_ops.cap_exceeded) {
    rep.cap_exceeded = true;
    return rep;
  }

  std::set<std::vector<Elem>> rhs;
  for (const auto& f : f_ops.members)
    for (const auto& w : w_ops.members) {
      rhs.insert(pointwise(star, f, w).cells());
      if (rhs.size() > cap) {
        rep.cap_exceeded = true;
        return rep;
      }
    }
  rep.rhs_size = rhs.size();
  std::set<std::vector<Elem>> left;
  for (const auto& t : lhs.members) left.insert(t.cells());
  rep.equal = left == rhs;
  return rep;
}

}  // namespace loopkit
