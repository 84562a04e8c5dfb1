#pragma once

// Brute-force reference implementations used as test oracles. They work on
// raw tables and share no code with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "loopkit/loop.hpp"

namespace oracle {

using loopkit::CayleyTable;
using loopkit::Elem;

inline std::size_t solve_left(const CayleyTable& t, Elem a, Elem b) {  // a\b
  for (std::size_t x = 0; x < t.order(); ++x)
    if (t(a, x) == b) return x;
  return t.order();
}

inline std::size_t solve_right(const CayleyTable& t, Elem a, Elem b) {  // a/b
  for (std::size_t x = 0; x < t.order(); ++x)
    if (t(x, b) == a) return x;
  return t.order();
}

inline bool is_loop(const CayleyTable& t) {
  const std::size_t n = t.order();
  for (std::size_t a = 0; a < n; ++a) {
    std::set<Elem> row, col;
    for (std::size_t b = 0; b < n; ++b) {
      row.insert(t(a, b));
      col.insert(t(b, a));
    }
    if (row.size() != n || col.size() != n) return false;
    if (t(0, a) != a || t(a, 0) != a) return false;
  }
  return true;
}

inline bool is_associative(const CayleyTable& t) {
  const std::size_t n = t.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

inline bool is_commutative(const CayleyTable& t) {
  for (std::size_t a = 0; a < t.order(); ++a)
    for (std::size_t b = 0; b < t.order(); ++b)
      if (t(a, b) != t(b, a)) return false;
  return true;
}

// Smallest set containing s and 0 closed under the three operations.
inline std::vector<Elem> closure(const CayleyTable& t, std::vector<Elem> s) {
  std::set<Elem> cur(s.begin(), s.end());
  cur.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> v(cur.begin(), cur.end());
    for (Elem a : v)
      for (Elem b : v) {
        for (std::size_t c : {std::size_t{t(a, b)}, solve_left(t, a, b), solve_right(t, a, b)})
          grew = cur.insert(static_cast<Elem>(c)).second || grew;
      }
  }
  return {cur.begin(), cur.end()};
}

// Class labels of the partition {aN}, or empty when it is not a congruence
// with zero class n.
inline std::vector<int> congruence(const CayleyTable& t, const std::vector<Elem>& n) {
  const std::size_t order = t.order();
  std::vector<int> cls(order, -1);
  int next = 0;
  for (std::size_t a = 0; a < order; ++a) {
    if (cls[a] != -1) continue;
    for (Elem m : n) {
      const Elem e = t(a, m);
      if (cls[e] != -1) return {};
      cls[e] = next;
    }
    ++next;
  }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t a2 = 0; a2 < order; ++a2) {
        if (cls[a2] != cls[a]) continue;
        for (std::size_t b2 = 0; b2 < order; ++b2) {
          if (cls[b2] != cls[b]) continue;
          if (cls[t(a2, b2)] != cls[t(a, b)]) return {};
          if (cls[solve_left(t, a2, b2)] != cls[solve_left(t, a, b)]) return {};
          if (cls[solve_right(t, a2, b2)] != cls[solve_right(t, a, b)]) return {};
        }
      }
  return cls;
}

inline bool is_normal(const CayleyTable& t, const std::vector<Elem>& n) {
  return closure(t, n) == n && !congruence(t, n).empty();
}

// Elements central modulo the congruence with zero class n.
inline std::vector<Elem> center_mod(const CayleyTable& t, const std::vector<Elem>& n) {
  const auto cls = congruence(t, n);
  std::vector<Elem> out;
  const std::size_t order = t.order();
  for (std::size_t z = 0; z < order; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < order && ok; ++x)
      for (std::size_t y = 0; y < order && ok; ++y)
        ok = cls[t(z, x)] == cls[t(x, z)] && cls[t(t(z, x), y)] == cls[t(z, t(x, y))] &&
             cls[t(t(x, z), y)] == cls[t(x, t(z, y))] && cls[t(t(x, y), z)] == cls[t(x, t(y, z))];
    if (ok) out.push_back(static_cast<Elem>(z));
  }
  return out;
}

inline std::vector<Elem> center(const CayleyTable& t) { return center_mod(t, {0}); }

// Nilpotence class, or -1 when the upper central series stalls.
inline int nilpotency_class(const CayleyTable& t) {
  std::vector<Elem> z{0};
  int c = 0;
  while (z.size() < t.order()) {
    auto next = center_mod(t, z);
    if (next.size() == z.size()) return -1;
    z = std::move(next);
    ++c;
  }
  return c;
}

inline std::size_t left_order(const CayleyTable& t, Elem x) {
  Elem acc = x;
  std::size_t k = 1;
  while (acc != 0) {
    acc = t(acc, x);
    ++k;
  }
  return k;
}

// Isomorphism test by trying every bijection fixing 0. Small orders only.
inline bool isomorphic(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t n = a.order();
  if (b.order() != n) return false;
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = perm[a(x, y)] == b(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

inline CayleyTable cyclic(std::size_t m) {
  CayleyTable t(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t.at(a, b) = static_cast<Elem>((a + b) % m);
  return t;
}

// Order of the permutation group generated by `gens`, by breadth-first search.
inline std::size_t perm_closure_size(const std::vector<std::vector<Elem>>& gens) {
  if (gens.empty()) return 1;
  const std::size_t d = gens.front().size();
  std::vector<Elem> id(d);
  std::iota(id.begin(), id.end(), Elem{0});
  std::set<std::vector<Elem>> seen{id};
  std::vector<std::vector<Elem>> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      std::vector<Elem> next(d);
      for (std::size_t x = 0; x < d; ++x) next[x] = g[queue[i][x]];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return seen.size();
}

// All elements of the permutation group generated by `gens`.
inline std::vector<std::vector<Elem>> perm_closure(const std::vector<std::vector<Elem>>& gens,
                                                   std::size_t d) {
  std::vector<Elem> id(d);
  std::iota(id.begin(), id.end(), Elem{0});
  std::set<std::vector<Elem>> seen{id};
  std::vector<std::vector<Elem>> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      std::vector<Elem> next(d);
      for (std::size_t x = 0; x < d; ++x) next[x] = g[queue[i][x]];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return queue;
}

inline std::size_t perm_order(const std::vector<Elem>& g) {
  std::vector<Elem> cur = g;
  std::size_t k = 1;
  for (;;) {
    bool id = true;
    for (std::size_t x = 0; x < cur.size() && id; ++x) id = cur[x] == x;
    if (id) return k;
    for (std::size_t x = 0; x < cur.size(); ++x) cur[x] = g[cur[x]];
    ++k;
  }
}

// A finite group is nilpotent iff elements of coprime orders commute.
inline bool perm_group_nilpotent(const std::vector<std::vector<Elem>>& elems) {
  std::vector<std::size_t> ord;
  for (const auto& g : elems) ord.push_back(perm_order(g));
  const std::size_t d = elems.front().size();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (std::gcd(ord[i], ord[j]) != 1) continue;
      for (std::size_t x = 0; x < d; ++x)
        if (elems[i][elems[j][x]] != elems[j][elems[i][x]]) return false;
    }
  return true;
}

inline std::vector<std::vector<Elem>> translations(const CayleyTable& t) {
  std::vector<std::vector<Elem>> gens;
  const std::size_t n = t.order();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Elem> l(n), r(n);
    for (std::size_t x = 0; x < n; ++x) {
      l[x] = t(a, x);
      r[x] = t(x, a);
    }
    gens.push_back(l);
    gens.push_back(r);
  }
  return gens;
}

// Binary term operations by closing the projections under all three
// operations, with division by search.
inline std::set<std::vector<Elem>> binary_clone(const CayleyTable& t) {
  const std::size_t n = t.order();
  std::vector<Elem> px(n * n), py(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      px[x * n + y] = static_cast<Elem>(x);
      py[x * n + y] = static_cast<Elem>(y);
    }
  std::set<std::vector<Elem>> seen{px, py};
  std::vector<std::vector<Elem>> all{px, py};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (int op = 0; op < 6; ++op) {
        const auto& f = op % 2 ? all[j] : all[i];
        const auto& g = op % 2 ? all[i] : all[j];
        std::vector<Elem> h(n * n);
        for (std::size_t k = 0; k < n * n; ++k)
          h[k] = op < 2 ? t(f[k], g[k])
                        : static_cast<Elem>(op < 4 ? solve_left(t, f[k], g[k]) : solve_right(t, f[k], g[k]));
        if (seen.insert(h).second) all.push_back(std::move(h));
      }
  return seen;
}

// Rank over Z_p by plain Gaussian elimination on a copy.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    std::uint32_t inv = 1;
    while (m[rank][c] % p * inv % p != 1) ++inv;
    for (auto& x : m[rank]) x = x % p * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      const std::uint32_t f = m[r][c] % p;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = (m[r][j] % p + p * p - f * m[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

// Least n >= 1 with n = 1 mod a and n = 0 mod b, by search.
inline std::uint64_t crt_search(std::uint64_t a, std::uint64_t b) {
  for (std::uint64_t n = 1;; ++n)
    if (n % a == 1 % a && n % b == 0) return n;
}

}  // namespace oracle
