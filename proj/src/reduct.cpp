#include "loopkit/reduct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "loopkit/error.hpp"

namespace loopkit {

namespace {

NormalSubloop normal_in(const FiniteLoop& loop, std::vector<Elem> elems, const std::string& what) {
  Subloop sub{std::move(elems)};
  std::sort(sub.elements.begin(), sub.elements.end());
  sub.elements.erase(std::unique(sub.elements.begin(), sub.elements.end()), sub.elements.end());
  ensure(is_subloop_set(loop, sub.elements), what + " is a subloop");
  ensure(is_normal(loop, sub), what + " is normal");
  return NormalSubloop{std::move(sub)};
}

std::vector<Elem> image_of(const QuotientLoop& q, std::span<const Elem> elems) {
  std::vector<Elem> out;
  for (Elem e : elems) out.push_back(q.proj[e]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Appends to `out` a descending chain of normal subloops from just below
// `upper` down to `lower`, each step of prime index. upper/lower must be
// central in loop/lower. Within the step, smaller primes sit on top.
void refine_step(const FiniteLoop& loop, const NormalSubloop& upper, const NormalSubloop& lower,
                 RefinedCentralSeries& out) {
  const QuotientLoop q = quotient(loop, lower);
  const std::vector<Elem> factor = image_of(q, upper.elements());
  const NormalSubloop z = center(q.loop);
  for (Elem e : factor) ensure(z.contains(e), "central factor lies in the center of the quotient");

  auto primes = prime_factors(factor.size());
  std::reverse(primes.begin(), primes.end());
  std::vector<std::pair<Subloop, std::uint64_t>> ascending;
  Subloop current = trivial_subloop();
  for (std::uint64_t p : primes) {
    std::vector<Elem> sylow;
    for (Elem e : factor)
      if (is_prime_power(left_order(q.loop, e), p)) sylow.push_back(e);
    while (true) {
      auto it = std::find_if(sylow.begin(), sylow.end(), [&](Elem g) {
        return !current.contains(g) && current.contains(left_power(q.loop, g, p));
      });
      if (it == sylow.end()) break;
      std::vector<Elem> gens = current.elements;
      gens.push_back(*it);
      Subloop next = subloop_generated(q.loop, gens);
      ensure(next.size() == current.size() * p, "refinement step has prime index");
      current = std::move(next);
      ascending.emplace_back(current, p);
    }
  }
  ensure(current.size() == factor.size(), "refinement exhausts the central factor");
  // ascending.back() is the whole factor, which is `upper` itself.
  for (std::size_t t = ascending.size(); t-- > 0;) {
    std::vector<Elem> below =
        t == 0 ? std::vector<Elem>{0} : ascending[t - 1].first.elements;
    out.chain.push_back(normal_in(loop, preimage(q, below), "refined series term"));
    out.primes.push_back(ascending[t].second);
  }
}

struct StageOps {
  TermDag& dag;
  NodeId term;
  bool primitive;
  std::uint64_t div_exponent;

  NodeId mul(NodeId a, NodeId b) const {
    return primitive ? dag.mul(a, b) : dag.substitute(term, a, b);
  }
  // a / b as R_b^(M-1)(a) where M is the exponent of the right translations.
  NodeId rdiv(NodeId a, NodeId b) const {
    if (primitive) return dag.rdiv(a, b);
    NodeId c = a;
    for (std::uint64_t k = 1; k < div_exponent; ++k) c = mul(c, b);
    return c;
  }
  NodeId pow(NodeId a, std::uint64_t n) const {
    NodeId c = a;
    for (std::uint64_t k = 1; k < n; ++k) c = mul(c, a);
    return c;
  }
};

StageOps ops_for(ReductContext& ctx, const ReductStage& stage) {
  const TermNode mul_xy{Op::Mul, TermDag::kX, TermDag::kY};
  const bool primitive = ctx.dag.nodes()[stage.term] == mul_xy;
  const std::uint64_t m = primitive ? 1 : right_translation_exponent(FiniteLoop(stage.star));
  return StageOps{ctx.dag, stage.term, primitive, m};
}

FiniteLoop as_loop(const CayleyTable& table, const std::string& what) {
  try {
    return FiniteLoop(table);
  } catch (const Error& e) {
    throw Error(Errc::InternalInvariantViolation, what + " is a loop (" + e.what() + ")");
  }
}

bool all_zero(const CayleyTable& t) {
  return std::all_of(t.cells().begin(), t.cells().end(), [](Elem e) { return e == 0; });
}

}  // namespace

RefinedCentralSeries refine_central_series(const FiniteLoop& loop) {
  const CentralSeries ucs = upper_central_series(loop);
  if (!ucs.nilpotent)
    throw Error(Errc::NotNilpotent, "upper central series stops at a subloop of order " +
                                        std::to_string(ucs.terms.back().size()));
  RefinedCentralSeries out;
  out.chain.push_back(ucs.terms.back());
  for (std::size_t t = ucs.terms.size() - 1; t-- > 0;)
    refine_step(loop, ucs.terms[t + 1], ucs.terms[t], out);
  return out;
}

std::pair<RefinedCentralSeries, std::size_t> central_series_through(const FiniteLoop& loop,
                                                                    const NormalSubloop& normal) {
  const CentralSeries ucs = upper_central_series(loop);
  if (!ucs.nilpotent) throw Error(Errc::NotNilpotent, "loop is not nilpotent");
  const QuotientLoop q = quotient(loop, normal);
  const CentralSeries top = upper_central_series(q.loop);
  if (!top.nilpotent) throw Error(Errc::QuotientNotSupernilpotent, "quotient is not nilpotent");

  // Above N: preimages of the upper central series of L/N.
  std::vector<NormalSubloop> upper;
  for (const auto& t : top.terms)
    upper.push_back(normal_in(loop, preimage(q, t.elements()), "lifted central term"));
  RefinedCentralSeries out;
  out.chain.push_back(upper.back());
  for (std::size_t t = upper.size() - 1; t-- > 0;) refine_step(loop, upper[t + 1], upper[t], out);
  const std::size_t j = out.chain.size() - 1;

  // Below N: N intersected with the upper central series of L.
  std::vector<NormalSubloop> lower;
  for (const auto& z : ucs.terms) {
    std::vector<Elem> meet;
    std::set_intersection(normal.elements().begin(), normal.elements().end(),
                          z.elements().begin(), z.elements().end(), std::back_inserter(meet));
    if (lower.empty() || lower.back().elements() != meet)
      lower.push_back(normal_in(loop, std::move(meet), "intersection with central term"));
  }
  ensure(lower.back() == normal, "intersections reach the normal subloop");
  for (std::size_t t = lower.size() - 1; t-- > 0;) refine_step(loop, lower[t + 1], lower[t], out);
  return {std::move(out), j};
}

ExponentChoice choose_exponent(std::uint64_t m_e, std::uint64_t m_v) {
  if (m_e == 0 || m_v == 0 || std::gcd(m_e, m_v) != 1)
    throw Error(Errc::CoprimalityViolation,
                "gcd(" + std::to_string(m_e) + ", " + std::to_string(m_v) + ") != 1");
  // n = m_v * t with m_v * t = 1 (mod m_e), t in 1..m_e.
  std::uint64_t t = 1;
  while ((m_v * t) % m_e != 1 % m_e) ++t;
  return ExponentChoice{m_v * t, m_e, m_v};
}

ExponentChoice choose_exponent(const FiniteLoop& e, const FiniteLoop& v, std::uint64_t p) {
  if (!is_prime_power(e.order(), p) || v.order() % p == 0)
    throw Error(Errc::CoprimalityViolation, "|E| must be a power of p and |V| coprime to p");
  return choose_exponent(right_translation_exponent(e), right_translation_exponent(v));
}

ReductStage initial_stage(ReductContext& ctx, std::size_t index) {
  ReductStage s;
  s.index = index;
  s.star = ctx.loop.table();
  s.r_table = CayleyTable(ctx.loop.order());
  s.term = ctx.dag.mul(TermDag::kX, TermDag::kY);
  return s;
}

ReductStage stage_step(ReductContext& ctx, const ReductStage& current) {
  const std::size_t i = current.index;
  if (i >= ctx.series.length())
    throw Error(Errc::InternalInvariantViolation, "no stage after the last series term");
  const std::uint64_t p = ctx.series.primes[i];
  const NormalSubloop& ci = ctx.series.chain[i];
  const NormalSubloop& cnext = ctx.series.chain[i + 1];
  const std::size_t n = ctx.loop.order();
  const std::string tag = "stage " + std::to_string(i + 1) + ": ";

  const FiniteLoop li = as_loop(current.star, tag + "*_i");
  const QuotientLoop abar = quotient(li, normal_in(li, cnext.elements(), tag + "C_{i+1} in (A,*_i)"));
  const NormalSubloop cbar = normal_in(abar.loop, image_of(abar, ci.elements()), tag + "C in Abar");
  const QuotientLoop abar_c = quotient(abar.loop, cbar);
  const auto dec = is_supernilpotent_decomp(abar_c.loop);
  ensure(dec.has_value(), tag + "(A,*_i)/C_i is supernilpotent");

  std::vector<Elem> p_factor{0};
  if (auto it = dec->factors.find(p); it != dec->factors.end()) p_factor = it->second.elements();
  const NormalSubloop e_sub = normal_in(abar.loop, preimage(abar_c, p_factor), tag + "E in Abar");
  const FiniteLoop e_loop = restrict_to(abar.loop, e_sub.base);
  const QuotientLoop v_quot = quotient(abar.loop, e_sub);
  ensure(is_prime_power(e_loop.order(), p), tag + "|E| is a power of p");
  ensure(v_quot.loop.order() % p != 0, tag + "|V| is coprime to p");
  const ExponentChoice exp = choose_exponent(e_loop, v_quot.loop, p);

  std::vector<Elem> pw(n);
  for (std::size_t x = 0; x < n; ++x) pw[x] = left_power(li, static_cast<Elem>(x), exp.n);
  CayleyTable r_table(n), star(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xy = li.mul(static_cast<Elem>(x), static_cast<Elem>(y));
      const Elem r = li.rdiv(left_power(li, xy, exp.n), li.mul(pw[x], pw[y]));
      r_table.at(x, y) = r;
      star.at(x, y) = li.rdiv(xy, r);
    }

  for (Elem r : r_table.cells()) ensure(ci.contains(r), tag + "r takes values in C_i");
  const std::vector<Elem> e_in_a = preimage(abar, e_sub.elements());
  for (Elem x : e_in_a)
    for (Elem y : e_in_a) ensure(cnext.contains(r_table(x, y)), tag + "r vanishes on E modulo C_{i+1}");

  const FiniteLoop lnext = as_loop(star, tag + "*_{i+1}");
  const QuotientLoop anext =
      quotient(lnext, normal_in(lnext, cnext.elements(), tag + "C_{i+1} in (A,*_{i+1})"));
  ensure(anext.proj == abar.proj, tag + "C_{i+1} has the same cosets under both operations");

  // h(x) = x^n in Abar with the old operation is a homomorphism of the new one onto E.
  const std::size_t nbar = abar.loop.order();
  std::vector<Elem> h(nbar);
  for (std::size_t a = 0; a < nbar; ++a) h[a] = left_power(abar.loop, static_cast<Elem>(a), exp.n);
  for (std::size_t a = 0; a < nbar; ++a)
    for (std::size_t b = 0; b < nbar; ++b)
      ensure(h[anext.loop.mul(a, b)] == anext.loop.mul(h[a], h[b]), tag + "h is a homomorphism");
  std::vector<Elem> h_image = h;
  std::sort(h_image.begin(), h_image.end());
  h_image.erase(std::unique(h_image.begin(), h_image.end()), h_image.end());
  ensure(h_image == e_sub.elements(), tag + "h maps onto E");

  const FiniteLoop ev = direct_product(e_loop, v_quot.loop);
  ensure(find_isomorphism(anext.loop, ev).has_value(), tag + "(A,*_{i+1})/C_{i+1} is isomorphic to E x V");
  ensure(is_supernilpotent_decomp(anext.loop).has_value(), tag + "(A,*_{i+1})/C_{i+1} is supernilpotent");

  ReductStage next;
  next.index = i + 1;
  next.exponent = exp;
  next.term = current.term;
  if (!all_zero(r_table)) {
    const StageOps ops = ops_for(ctx, current);
    const NodeId x = TermDag::kX, y = TermDag::kY;
    const NodeId xy = ops.mul(x, y);
    const NodeId r = ops.rdiv(ops.pow(xy, exp.n), ops.mul(ops.pow(x, exp.n), ops.pow(y, exp.n)));
    next.term = ops.rdiv(xy, r);
  }
  ensure(eval_table(ctx.loop, ctx.dag.compacted(next.term)) == star,
         tag + "term reproduces *_{i+1}");
  next.star = std::move(star);
  next.r_table = std::move(r_table);
  return next;
}

ReductCertificate build_reduct(const FiniteLoop& loop) {
  ReductContext ctx{loop, refine_central_series(loop), TermDag{}};
  const std::size_t k = ctx.series.length();
  std::vector<ReductStage> stages{initial_stage(ctx, k >= 1 ? 1 : 0)};
  while (stages.back().index < k) stages.push_back(stage_step(ctx, stages.back()));

  ReductCertificate cert;
  cert.input = loop.table();
  cert.final_star = stages.back().star;
  cert.term = ctx.dag.compacted(stages.back().term);
  ensure(eval_table(loop, cert.term) == cert.final_star, "final term reproduces the final operation");
  auto dec = is_supernilpotent_decomp(as_loop(cert.final_star, "final operation"));
  ensure(dec.has_value(), "final reduct is supernilpotent");
  cert.decomposition = std::move(*dec);
  cert.series = std::move(ctx.series);
  cert.stages = std::move(stages);
  return cert;
}

CorollaryResult corollary_reduct(const FiniteLoop& loop, const NormalSubloop& normal) {
  if (!is_normal(loop, normal.base)) throw Error(Errc::NotNormal, "given subloop is not normal");
  if (!is_nilpotent(loop)) throw Error(Errc::NotNilpotent, "loop is not nilpotent");
  const QuotientLoop q = quotient(loop, normal);
  if (!is_supernilpotent_decomp(q.loop))
    throw Error(Errc::QuotientNotSupernilpotent, "L/N is not supernilpotent");

  auto [series, j] = central_series_through(loop, normal);
  ReductContext ctx{loop, std::move(series), TermDag{}};
  std::vector<ReductStage> stages{initial_stage(ctx, j)};
  while (stages.back().index < ctx.series.length()) stages.push_back(stage_step(ctx, stages.back()));

  const std::size_t n = loop.order();
  const FiniteLoop lk = as_loop(stages.back().star, "corollary operation");
  CayleyTable r(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem v = lk.rdiv(loop.mul(x, y), lk.mul(x, y));
      ensure(normal.contains(v), "r takes values in N");
      ensure(lk.mul(v, lk.mul(x, y)) == loop.mul(x, y), "x.y = r(x,y) * (x * y)");
      r.at(x, y) = v;
    }
  ensure(quotient(lk, normal).loop.table() == q.loop.table(), "(A,*)/N equals L/N");
  ensure(is_supernilpotent_decomp(lk).has_value(), "corollary operation is supernilpotent");

  const StageOps ops = ops_for(ctx, stages.back());
  const NodeId r_node = ops.rdiv(ctx.dag.mul(TermDag::kX, TermDag::kY), stages.back().term);

  CorollaryResult out;
  out.start_index = j;
  out.star = stages.back().star;
  out.r_table = std::move(r);
  out.star_term = ctx.dag.compacted(stages.back().term);
  out.r_term = ctx.dag.compacted(r_node);
  ensure(eval_table(loop, out.star_term) == out.star, "star term reproduces *");
  ensure(eval_table(loop, out.r_term) == out.r_table, "r term reproduces r");
  out.series = std::move(ctx.series);
  out.stages = std::move(stages);
  return out;
}

}  // namespace loopkit
