#include "loopkit/loop.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "loopkit/error.hpp"

namespace loopkit {

namespace {

std::string cell_name(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Membership bitmap for a subset of 0..n-1.
std::vector<char> mask_of(std::size_t n, std::span<const Elem> elems) {
  std::vector<char> mask(n, 0);
  for (Elem e : elems) mask[e] = 1;
  return mask;
}

std::vector<Elem> sorted_from_mask(const std::vector<char>& mask) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

}  // namespace

CayleyTable::CayleyTable(std::size_t n, std::vector<Elem> cells) : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n * n)
    throw Error(Errc::ParseError, "table has " + std::to_string(cells_.size()) +
                                      " cells, expected " + std::to_string(n * n));
  for (Elem c : cells_)
    if (c >= n) throw Error(Errc::ParseError, "entry " + std::to_string(c) + " out of range");
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Elem> cells;
  cells.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(Errc::ParseError, "table is not square");
    for (int v : r) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(Errc::ParseError, "entry " + std::to_string(v) + " out of range");
      cells.push_back(static_cast<Elem>(v));
    }
  }
  return CayleyTable(n, std::move(cells));
}

bool CayleyTable::is_latin() const {
  std::vector<char> seen(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n_; ++b) {
      if (seen[(*this)(a, b)]) return false;
      seen[(*this)(a, b)] = 1;
    }
  }
  for (std::size_t b = 0; b < n_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n_; ++a) {
      if (seen[(*this)(a, b)]) return false;
      seen[(*this)(a, b)] = 1;
    }
  }
  return true;
}

bool CayleyTable::has_identity_zero() const {
  for (std::size_t a = 0; a < n_; ++a)
    if ((*this)(0, a) != a || (*this)(a, 0) != a) return false;
  return true;
}

FiniteLoop::FiniteLoop(CayleyTable table)
    : mul_(std::move(table)), ldiv_(mul_.order()), rdiv_(mul_.order()) {
  const std::size_t n = mul_.order();
  if (n == 0) throw Error(Errc::ParseError, "empty table");
  std::vector<int> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem c = mul_(a, b);
      if (seen[c] >= 0)
        throw Error(Errc::LatinSquareViolation,
                    "row " + std::to_string(a) + " repeats " + std::to_string(c) + " at " +
                        cell_name(a, static_cast<std::size_t>(seen[c])) + " and " + cell_name(a, b));
      seen[c] = static_cast<int>(b);
      ldiv_.at(a, c) = static_cast<Elem>(b);
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t a = 0; a < n; ++a) {
      const Elem c = mul_(a, b);
      if (seen[c] >= 0)
        throw Error(Errc::LatinSquareViolation,
                    "column " + std::to_string(b) + " repeats " + std::to_string(c));
      seen[c] = static_cast<int>(a);
      rdiv_.at(c, b) = static_cast<Elem>(a);
    }
  }
  if (!mul_.has_identity_zero())
    throw Error(Errc::IdentityViolation, "element 0 is not a two-sided identity");
}

bool FiniteLoop::is_associative() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = mul_(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (mul_(ab, c) != mul_(a, mul_(b, c))) return false;
    }
  return true;
}

bool FiniteLoop::is_commutative() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (mul_(a, b) != mul_(b, a)) return false;
  return true;
}

FiniteLoop load_loop(CayleyTable table) { return FiniteLoop(std::move(table)); }

bool Subloop::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool is_subloop_set(const FiniteLoop& loop, std::span<const Elem> elements) {
  const auto mask = mask_of(loop.order(), elements);
  if (!mask[0]) return false;
  for (Elem a : elements)
    for (Elem b : elements)
      if (!mask[loop.mul(a, b)] || !mask[loop.ldiv(a, b)] || !mask[loop.rdiv(a, b)]) return false;
  return true;
}

Subloop subloop_generated(const FiniteLoop& loop, std::span<const Elem> generators) {
  const std::size_t n = loop.order();
  std::vector<char> mask(n, 0);
  std::vector<Elem> members{0};
  mask[0] = 1;
  for (Elem g : generators) {
    if (g >= n) throw Error(Errc::ParseError, "generator out of range");
    if (!mask[g]) {
      mask[g] = 1;
      members.push_back(g);
    }
  }
  // Semi-naive closure: each new element is combined with everything found so far.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem a = members[i], b = members[j];
      const Elem products[6] = {loop.mul(a, b), loop.mul(b, a),   loop.ldiv(a, b),
                                loop.ldiv(b, a), loop.rdiv(a, b), loop.rdiv(b, a)};
      for (Elem c : products)
        if (!mask[c]) {
          mask[c] = 1;
          members.push_back(c);
        }
    }
  }
  return Subloop{sorted_from_mask(mask)};
}

Subloop whole(const FiniteLoop& loop) {
  std::vector<Elem> all(loop.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subloop{std::move(all)};
}

Subloop trivial_subloop() { return Subloop{{0}}; }

bool is_normal(const FiniteLoop& loop, const Subloop& sub) {
  if (!is_subloop_set(loop, sub.elements))
    throw Error(Errc::NotASubloop, "set of size " + std::to_string(sub.size()) + " is not closed");
  const std::size_t n = loop.order();
  std::vector<Elem> s1, s2, s3, s4;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      s1.clear();
      s2.clear();
      s3.clear();
      s4.clear();
      const Elem ab = loop.mul(a, b);
      for (Elem m : sub.elements) {
        s1.push_back(loop.mul(ab, m));                           // (ab)N
        s2.push_back(loop.mul(a, loop.mul(b, m)));               // a(bN)
        s3.push_back(loop.mul(a, loop.mul(m, b)));               // a(Nb)
        s4.push_back(loop.mul(loop.mul(a, m), b));               // (aN)b
      }
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      std::sort(s3.begin(), s3.end());
      std::sort(s4.begin(), s4.end());
      if (s1 != s2 || s1 != s3 || s1 != s4) return false;
    }
  }
  return true;
}

NormalSubloop as_normal(const FiniteLoop& loop, Subloop sub) {
  if (!is_normal(loop, sub))
    throw Error(Errc::NotNormal, "subloop of size " + std::to_string(sub.size()) + " is not normal");
  return NormalSubloop{std::move(sub)};
}

QuotientLoop quotient(const FiniteLoop& loop, const NormalSubloop& kernel) {
  const std::size_t n = loop.order();
  constexpr Elem unassigned = 0xFFFF;
  std::vector<Elem> proj(n, unassigned);
  std::vector<Elem> reps;
  // Ascending scan: the first unassigned element is the minimum of its coset.
  for (std::size_t a = 0; a < n; ++a) {
    if (proj[a] != unassigned) continue;
    const Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    for (Elem m : kernel.elements()) {
      const Elem c = loop.mul(static_cast<Elem>(a), m);
      if (proj[c] != unassigned && proj[c] != idx)
        throw Error(Errc::NotNormal, "cosets overlap");
      proj[c] = idx;
    }
  }
  const std::size_t k = reps.size();
  if (k * kernel.size() != n) throw Error(Errc::NotNormal, "cosets do not partition the loop");
  CayleyTable table(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table.at(i, j) = proj[loop.mul(reps[i], reps[j])];
  // Well-definedness on every pair of elements, not just representatives.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (proj[loop.mul(a, b)] != table(proj[a], proj[b]))
        throw Error(Errc::NotNormal, "coset product is not well defined");
  return QuotientLoop{kernel, std::move(reps), std::move(proj), FiniteLoop(std::move(table))};
}

std::vector<Elem> preimage(const QuotientLoop& q, std::span<const Elem> cosets) {
  std::vector<char> mask(q.loop.order(), 0);
  for (Elem c : cosets) mask[c] = 1;
  std::vector<Elem> out;
  for (std::size_t a = 0; a < q.proj.size(); ++a)
    if (mask[q.proj[a]]) out.push_back(static_cast<Elem>(a));
  return out;
}

NormalSubloop center(const FiniteLoop& loop) {
  const std::size_t n = loop.order();
  std::vector<Elem> z;
  for (std::size_t c = 0; c < n; ++c) {
    bool central = true;
    for (std::size_t x = 0; x < n && central; ++x) {
      if (loop.mul(c, x) != loop.mul(x, c)) central = false;
      for (std::size_t y = 0; y < n && central; ++y) {
        const Elem xy = loop.mul(x, y);
        central = loop.mul(loop.mul(c, x), y) == loop.mul(c, xy) &&
                  loop.mul(loop.mul(x, c), y) == loop.mul(x, loop.mul(c, y)) &&
                  loop.mul(xy, c) == loop.mul(x, loop.mul(y, c));
      }
    }
    if (central) z.push_back(static_cast<Elem>(c));
  }
  Subloop sub{std::move(z)};
  ensure(is_subloop_set(loop, sub.elements), "center is not a subloop");
  ensure(is_normal(loop, sub), "center is not normal");
  return NormalSubloop{std::move(sub)};
}

CentralSeries upper_central_series(const FiniteLoop& loop) {
  CentralSeries out;
  out.terms.push_back(NormalSubloop{trivial_subloop()});
  while (true) {
    const QuotientLoop q = quotient(loop, out.terms.back());
    const NormalSubloop z = center(q.loop);
    if (z.size() == 1) break;
    Subloop next{preimage(q, z.elements())};
    ensure(is_normal(loop, next), "upper central term is not normal");
    out.terms.push_back(NormalSubloop{std::move(next)});
  }
  out.nilpotent = out.terms.back().size() == loop.order();
  out.nilpotency_class = out.nilpotent ? static_cast<int>(out.terms.size()) - 1 : 0;
  return out;
}

bool is_nilpotent(const FiniteLoop& loop) { return upper_central_series(loop).nilpotent; }

FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  CayleyTable table(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table.at(x, y) =
          static_cast<Elem>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  return FiniteLoop(std::move(table));
}

std::optional<LoopMap> internal_decomposition(const FiniteLoop& loop, const NormalSubloop& p,
                                              const NormalSubloop& v) {
  // Preconditions are reported individually as failures, never as exceptions.
  if (p.size() * v.size() != loop.order()) return std::nullopt;
  for (Elem x : p.elements())
    if (x != 0 && v.contains(x)) return std::nullopt;
  const FiniteLoop fp = restrict_to(loop, p.base);
  const FiniteLoop fv = restrict_to(loop, v.base);
  const FiniteLoop prod = direct_product(fp, fv);
  LoopMap map;
  map.images.resize(prod.order());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      map.images[i * v.size() + j] = loop.mul(p.elements()[i], v.elements()[j]);
  if (!is_isomorphism(prod, loop, map)) return std::nullopt;
  return map;
}

bool is_isomorphism(const FiniteLoop& dom, const FiniteLoop& cod, const LoopMap& map) {
  const std::size_t n = dom.order();
  if (cod.order() != n || map.images.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Elem e : map.images) {
    if (e >= n || hit[e]) return false;
    hit[e] = 1;
  }
  if (map.images[0] != 0) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (map.images[dom.mul(a, b)] != cod.mul(map.images[a], map.images[b])) return false;
  return true;
}

LoopMap inverse_map(const LoopMap& map) {
  LoopMap inv;
  inv.images.resize(map.images.size());
  for (std::size_t i = 0; i < map.images.size(); ++i) inv.images[map.images[i]] = static_cast<Elem>(i);
  return inv;
}

Elem left_power(const FiniteLoop& loop, Elem x, std::uint64_t m) {
  if (m == 0) return 0;
  Elem acc = x;
  for (std::uint64_t i = 1; i < m; ++i) acc = loop.mul(acc, x);
  return acc;
}

std::uint64_t left_order(const FiniteLoop& loop, Elem x) {
  std::uint64_t m = 1;
  Elem acc = x;
  while (acc != 0) {
    acc = loop.mul(acc, x);
    ++m;
  }
  return m;
}

Elem malcev_eval(const FiniteLoop& loop, Elem x, Elem y, Elem z) {
  return loop.mul(loop.rdiv(x, y), z);
}

std::vector<std::size_t> right_translation_cycle_type(const FiniteLoop& loop, Elem x) {
  const std::size_t n = loop.order();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> cycles;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (Elem c = static_cast<Elem>(s); !seen[c]; c = loop.mul(c, x)) {
      seen[c] = 1;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::uint64_t right_translation_order(const FiniteLoop& loop, Elem x) {
  std::uint64_t order = 1;
  for (std::size_t len : right_translation_cycle_type(loop, x)) order = std::lcm(order, len);
  return order;
}

std::uint64_t right_translation_exponent(const FiniteLoop& loop) {
  std::uint64_t e = 1;
  for (std::size_t x = 0; x < loop.order(); ++x)
    e = std::lcm(e, right_translation_order(loop, static_cast<Elem>(x)));
  return e;
}

std::vector<Subloop> all_subloops(const FiniteLoop& loop) {
  std::vector<Subloop> found{trivial_subloop()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t x = 0; x < loop.order(); ++x) {
      if (found[i].contains(static_cast<Elem>(x))) continue;
      std::vector<Elem> gens = found[i].elements;
      gens.push_back(static_cast<Elem>(x));
      Subloop s = subloop_generated(loop, gens);
      if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(std::move(s));
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Subloop& a, const Subloop& b) { return a.size() < b.size(); });
  return found;
}

std::vector<NormalSubloop> all_normal_subloops(const FiniteLoop& loop) {
  std::vector<NormalSubloop> out;
  for (auto& s : all_subloops(loop))
    if (is_normal(loop, s)) out.push_back(NormalSubloop{std::move(s)});
  return out;
}

FiniteLoop restrict_to(const FiniteLoop& loop, const Subloop& sub) {
  const std::size_t k = sub.size();
  std::vector<Elem> rank(loop.order(), 0xFFFF);
  for (std::size_t i = 0; i < k; ++i) rank[sub.elements[i]] = static_cast<Elem>(i);
  CayleyTable table(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem c = rank[loop.mul(sub.elements[i], sub.elements[j])];
      if (c == 0xFFFF) throw Error(Errc::NotASubloop, "set is not closed under multiplication");
      table.at(i, j) = c;
    }
  return FiniteLoop(std::move(table));
}

}  // namespace loopkit
