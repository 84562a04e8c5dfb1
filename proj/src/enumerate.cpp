#include "loopkit/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "loopkit/error.hpp"
#include "loopkit/supernilpotence.hpp"

namespace loopkit {

LoopFilter parse_loop_filter(const std::string& s) {
  if (s == "all") return LoopFilter::All;
  if (s == "nilpotent") return LoopFilter::Nilpotent;
  if (s == "nilpotent-nonassociative") return LoopFilter::NilpotentNonassociative;
  throw Error(Errc::ParseError, "unknown filter '" + s + "'");
}

std::string to_string(LoopFilter f) {
  switch (f) {
    case LoopFilter::All: return "all";
    case LoopFilter::Nilpotent: return "nilpotent";
    case LoopFilter::NilpotentNonassociative: return "nilpotent-nonassociative";
  }
  return "?";
}

void for_each_loop_table(std::size_t n, const std::function<bool(const CayleyTable&)>& visit) {
  if (n == 0) return;
  CayleyTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.at(0, i) = static_cast<Elem>(i);
    t.at(i, 0) = static_cast<Elem>(i);
  }
  if (n == 1) {
    visit(t);
    return;
  }
  // used_row[a][v]: value v already in row a; likewise for columns.
  std::vector<std::vector<char>> used_row(n, std::vector<char>(n, 0)), used_col = used_row;
  for (std::size_t i = 0; i < n; ++i) {
    used_row[i][i] = 1;
    used_col[i][i] = 1;
  }
  const std::size_t m = n - 1;
  const std::size_t cells = m * m;
  std::vector<Elem> choice(cells, 0);
  std::size_t k = 0;
  bool stop = false;
  // Iterative depth-first search over the (n-1)^2 free cells in row-major order.
  std::vector<std::size_t> next_value(cells, 0);
  while (!stop) {
    const std::size_t a = 1 + k / m, b = 1 + k % m;
    bool placed = false;
    for (std::size_t v = next_value[k]; v < n; ++v) {
      if (used_row[a][v] || used_col[b][v]) continue;
      used_row[a][v] = used_col[b][v] = 1;
      t.at(a, b) = static_cast<Elem>(v);
      next_value[k] = v + 1;
      placed = true;
      break;
    }
    if (placed) {
      if (k + 1 == cells) {
        stop = !visit(t);
        const Elem v = t(a, b);
        used_row[a][v] = used_col[b][v] = 0;
      } else {
        ++k;
        next_value[k] = 0;
      }
      continue;
    }
    if (k == 0) break;
    --k;
    const std::size_t pa = 1 + k / m, pb = 1 + k % m;
    const Elem v = t(pa, pb);
    used_row[pa][v] = used_col[pb][v] = 0;
  }
}

CayleyTable canonical_form(const CayleyTable& t) {
  const std::size_t n = t.order();
  if (n <= 2) return t;
  std::vector<Elem> perm(n);  // old label -> new label
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::vector<Elem> inv(n);
  CayleyTable best = t;
  do {
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = static_cast<Elem>(i);
    // Compare the relabelled table with best, cell by cell, stopping early.
    int cmp = 0;
    for (std::size_t i = 1; i < n && cmp == 0; ++i)
      for (std::size_t j = 1; j < n; ++j) {
        const Elem v = perm[t(inv[i], inv[j])];
        if (v != best(i, j)) {
          cmp = v < best(i, j) ? -1 : 1;
          break;
        }
      }
    if (cmp < 0) {
      CayleyTable next(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) next.at(i, j) = perm[t(inv[i], inv[j])];
      best = std::move(next);
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

void for_each_central_extension(const FiniteLoop& q, std::uint32_t p,
                                const std::function<bool(const CayleyTable&)>& visit) {
  const std::size_t m = q.order();
  const std::size_t n = m * p;
  const std::size_t free = (m - 1) * (m - 1);
  std::vector<std::uint32_t> theta(free, 0);
  while (true) {
    CayleyTable t(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t a = x / p, s = x % p, b = y / p, u = y % p;
        const std::uint32_t th = (a && b) ? theta[(a - 1) * (m - 1) + (b - 1)] : 0;
        t.at(x, y) = static_cast<Elem>(q.mul(a, b) * p + (s + u + th) % p);
      }
    if (!visit(t)) return;
    // Odometer with the last cell varying fastest.
    std::size_t i = free;
    while (i > 0 && theta[i - 1] == p - 1) theta[--i] = 0;
    if (i == 0) return;
    ++theta[i - 1];
  }
}

namespace {

bool passes(const FiniteLoop& l, LoopFilter f) {
  switch (f) {
    case LoopFilter::All: return true;
    case LoopFilter::Nilpotent: return is_nilpotent(l);
    case LoopFilter::NilpotentNonassociative: return !l.is_associative() && is_nilpotent(l);
  }
  return false;
}

std::vector<FiniteLoop> to_loops(const std::set<std::vector<Elem>>& cells, std::size_t n) {
  std::vector<FiniteLoop> out;
  for (const auto& c : cells) out.emplace_back(CayleyTable(n, c));
  return out;
}

}  // namespace

std::vector<FiniteLoop> nilpotent_loops_by_extension(std::size_t order) {
  if (order == 0) throw Error(Errc::OrderTooLarge, "order must be positive");
  if (order == 1) return {FiniteLoop(CayleyTable(1))};
  std::set<std::vector<Elem>> seen;
  for (std::uint64_t p : prime_factors(order))
    for (const FiniteLoop& q : nilpotent_loops_by_extension(order / p))
      for_each_central_extension(q, static_cast<std::uint32_t>(p), [&](const CayleyTable& t) {
        seen.insert(canonical_form(t).cells());
        return true;
      });
  return to_loops(seen, order);
}

std::vector<FiniteLoop> enumerate_loops(std::size_t order, LoopFilter filter, bool up_to_iso) {
  if (order == 0 || order > kMaxEnumerationOrder)
    throw Error(Errc::OrderTooLarge, "order must lie in 1.." + std::to_string(kMaxEnumerationOrder));
  if (up_to_iso && filter != LoopFilter::All && order > 6) {
    std::vector<FiniteLoop> out;
    for (auto& l : nilpotent_loops_by_extension(order))
      if (passes(l, filter)) out.push_back(std::move(l));
    return out;
  }
  std::vector<FiniteLoop> out;
  std::set<std::vector<Elem>> seen;
  for_each_loop_table(order, [&](const CayleyTable& t) {
    FiniteLoop l(t);
    if (!passes(l, filter)) return true;
    if (up_to_iso)
      seen.insert(canonical_form(t).cells());
    else
      out.push_back(std::move(l));
    return true;
  });
  return up_to_iso ? to_loops(seen, order) : out;
}

}  // namespace loopkit
