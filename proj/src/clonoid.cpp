#include "loopkit/clonoid.hpp"

#include <string>

#include "loopkit/error.hpp"
#include "loopkit/supernilpotence.hpp"

namespace loopkit {

std::uint32_t FnTable::operator()(const std::vector<std::uint32_t>& x) const {
  std::size_t idx = 0, scale = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    idx += (x[i] % q) * scale;
    scale *= q;
  }
  return values[idx];
}

FnTable unary_fn(std::uint32_t q, std::uint32_t p, std::vector<std::uint32_t> values) {
  if (!is_prime(q) || !is_prime(p) || q == p)
    throw Error(Errc::ParseError, "q and p must be distinct primes");
  if (values.size() != q)
    throw Error(Errc::ParseError, "f needs " + std::to_string(q) + " values");
  for (auto v : values)
    if (v >= p) throw Error(Errc::ParseError, "value " + std::to_string(v) + " is not in Z_p");
  if (values[0] != 0) throw Error(Errc::ParseError, "f(0) must be 0");
  return FnTable{q, p, 1, std::move(values)};
}

bool is_zero_fn(const FnTable& f) {
  for (auto v : f.values)
    if (v) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> all_tuples(std::uint32_t q, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<std::vector<std::uint32_t>> out(total, std::vector<std::uint32_t>(n));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      out[idx][i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
  }
  return out;
}

std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t q) {
  ensure(a % q != 0, "zero has no multiplicative order");
  std::uint32_t k = 1;
  for (std::uint64_t x = a % q; x != 1; x = x * a % q) ++k;
  return k;
}

FnTable compose_linear(const FnTable& f, const std::vector<std::uint32_t>& alpha) {
  FnTable out{f.q, f.p, alpha.size(), {}};
  for (const auto& x : all_tuples(f.q, alpha.size())) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) s += std::uint64_t{alpha[i]} * x[i];
    out.values.push_back(f.values[s % f.q]);
  }
  return out;
}

namespace {

ZpRowSpace span_space(const FnTable& f, std::size_t n) {
  const auto tuples = all_tuples(f.q, n);
  ZpRowSpace space(f.p, tuples.size());
  for (std::size_t i = 1; i < tuples.size(); ++i) space.insert(compose_linear(f, tuples[i]).values);
  return space;
}

}  // namespace

ClonoidSpan clonoid_span(const FnTable& f, std::size_t n) {
  const ZpRowSpace space = span_space(f, n);
  return ClonoidSpan{space.rank(), space.rows()};
}

bool in_clonoid(const FnTable& f, const FnTable& g) {
  return span_space(f, g.arity).contains(g.values);
}

std::optional<ClonoidBasis> search_basis_parameter(const FnTable& f) {
  ensure(f.arity == 1, "basis parameter needs a unary f");
  if (is_zero_fn(f)) return std::nullopt;
  const std::size_t dim = clonoid_span(f, 1).dimension;
  for (std::uint32_t a = 1; a < f.q; ++a) {
    const std::uint32_t k = multiplicative_order(a, f.q);
    if (k != dim) continue;
    ClonoidBasis basis{f, a, k, {}};
    ZpRowSpace space(f.p, f.q);
    std::uint64_t power = 1;
    bool independent = true;
    for (std::uint32_t i = 0; i < k; ++i) {
      basis.b.push_back(compose_linear(f, {static_cast<std::uint32_t>(power)}));
      independent = independent && space.insert(basis.b.back().values);
      power = power * a % f.q;
    }
    if (independent) return basis;
  }
  return std::nullopt;
}

ClonoidBasis find_basis_parameter(const FnTable& f) {
  if (is_zero_fn(f)) throw Error(Errc::InternalInconsistency, "f is identically zero");
  auto b = search_basis_parameter(f);
  if (!b)
    throw Error(Errc::InternalInconsistency,
                "no a in Z_q \\ {0} has an orbit {f(a^i x)} that is a basis of C^[1] (dim " +
                    std::to_string(clonoid_span(f, 1).dimension) + ")");
  return *b;
}

DimensionCheck dimension_formula_check(const ClonoidBasis& basis, std::size_t n) {
  std::size_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= basis.f.q;
  return DimensionCheck{n, clonoid_span(basis.f, n).dimension,
                        basis.k * (qn - 1) / (basis.f.q - 1)};
}

std::vector<CoefficientRow> coefficient_rows(const ClonoidBasis& basis) {
  std::vector<ZpVector> vectors;
  for (const auto& b : basis.b) vectors.push_back(b.values);
  std::vector<CoefficientRow> out;
  for (std::uint32_t c = 0; c < basis.f.q; ++c) {
    const FnTable target = compose_linear(basis.f, {c});
    auto d = zp_solve(basis.f.p, vectors, target.values);
    if (!d) throw Error(Errc::NoSolution, "f(" + std::to_string(c) + "x) is outside the span of B");
    out.push_back({c, std::move(*d)});
  }
  return out;
}

FnTable h_L_construct(const FnTable& f, const FnTable& h, const std::vector<std::uint32_t>& y) {
  if (h.arity != 1 || h.q != f.q || h.p != f.p || !in_clonoid(f, h))
    throw Error(Errc::NotInClonoid, "h is not a unary member of the clonoid");
  bool nonzero = false;
  for (auto v : y) nonzero = nonzero || v % f.q != 0;
  ensure(nonzero, "y is a nonzero tuple");
  const std::size_t n = y.size();
  FnTable out{f.q, f.p, n, std::vector<std::uint32_t>(all_tuples(f.q, n).size(), 0)};
  for (std::uint32_t lambda = 0; lambda < f.q; ++lambda) {
    std::size_t idx = 0, scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      idx += (std::uint64_t{lambda} * y[i] % f.q) * scale;
      scale *= f.q;
    }
    out.values[idx] = h.values[lambda];
  }
  ensure(in_clonoid(f, out), "h_L lies in C^[n]");
  return out;
}

std::vector<std::vector<std::uint32_t>> leading_coefficient_set(const ClonoidBasis& basis,
                                                                std::size_t n) {
  std::vector<bool> is_power(basis.f.q, false);
  std::uint64_t power = 1;
  for (std::uint32_t j = 0; j < basis.k; ++j) {
    is_power[power] = true;
    power = power * basis.a % basis.f.q;
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& t : all_tuples(basis.f.q, n)) {
    std::size_t i = 0;
    while (i < n && t[i] == 0) ++i;
    if (i < n && is_power[t[i]]) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace loopkit
