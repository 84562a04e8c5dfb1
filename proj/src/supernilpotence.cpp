#include "loopkit/supernilpotence.hpp"

#include "loopkit/perm_group.hpp"

namespace loopkit {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::vector<Elem> sylow_candidate(const FiniteLoop& loop, std::uint64_t p) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < loop.order(); ++x)
    if (is_prime_power(left_order(loop, static_cast<Elem>(x)), p)) out.push_back(static_cast<Elem>(x));
  return out;
}

FiniteLoop product_of(const std::vector<FiniteLoop>& factors) {
  FiniteLoop acc(CayleyTable::from_rows({{0}}));
  for (const auto& f : factors) acc = direct_product(acc, f);
  return acc;
}

std::optional<SylowDecomposition> is_supernilpotent_decomp(const FiniteLoop& loop) {
  if (!is_nilpotent(loop)) return std::nullopt;
  const std::uint64_t n = loop.order();
  SylowDecomposition out;
  std::vector<FiniteLoop> parts;
  for (std::uint64_t p : prime_factors(n)) {
    Subloop cand{sylow_candidate(loop, p)};
    if (cand.size() != p_part(n, p) || !is_subloop_set(loop, cand.elements)) return std::nullopt;
    if (!is_normal(loop, cand)) return std::nullopt;
    parts.push_back(restrict_to(loop, cand));
    out.factors.emplace(p, NormalSubloop{std::move(cand)});
  }
  // Left-nested product of the factor elements, mixed radix over the factors.
  const FiniteLoop prod = product_of(parts);
  out.witness.images.resize(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t rest = idx, radix = n;
    Elem acc = 0;
    for (const auto& [p, f] : out.factors) {
      radix /= f.size();
      acc = loop.mul(acc, f.elements()[rest / radix]);
      rest %= radix;
    }
    out.witness.images[idx] = acc;
  }
  if (!is_isomorphism(prod, loop, out.witness)) return std::nullopt;
  return out;
}

bool is_supernilpotent_wright(const FiniteLoop& loop) {
  return is_nilpotent_group(mlt_group(loop)).nilpotent;
}

}  // namespace loopkit
