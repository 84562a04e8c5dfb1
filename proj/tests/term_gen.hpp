#pragma once

// Random clonoid terms and a direct evaluator that shares nothing with the
// rewriter.

#include <random>

#include "loopkit/clonoid_terms.hpp"

namespace termgen {

using loopkit::Pair;
using loopkit::TermAst;
using loopkit::TermPtr;

inline TermPtr random_term(std::mt19937_64& rng, std::size_t arity, int depth) {
  const auto pick = [&](std::uint64_t k) { return rng() % k; };
  if (depth == 0 || pick(4) == 0) return TermAst::variable(1 + pick(arity));
  switch (pick(3)) {
    case 0: return TermAst::sum(random_term(rng, arity, depth - 1), random_term(rng, arity, depth - 1));
    case 1: return TermAst::apply_f(random_term(rng, arity, depth - 1));
    default: return TermAst::repeat(1 + pick(12), random_term(rng, arity, depth - 1));
  }
}

struct Evaluator {
  std::uint32_t q, p;
  std::vector<std::uint32_t> f;

  Pair operator()(const TermAst& t, const std::vector<Pair>& x) const {
    switch (t.kind) {
      case TermAst::Kind::Var: return x[t.var - 1];
      case TermAst::Kind::Sum: {
        const Pair a = (*this)(*t.children[0], x), b = (*this)(*t.children[1], x);
        return {(a.u + b.u) % q, (a.v + b.v) % p};
      }
      case TermAst::Kind::F: return {0, f[(*this)(*t.children[0], x).u]};
      case TermAst::Kind::Repeat: {
        const Pair a = (*this)(*t.children[0], x);
        return {static_cast<std::uint32_t>(a.u * (t.count % q) % q), static_cast<std::uint32_t>(a.v * (t.count % p) % p)};
      }
    }
    return {};
  }

  std::vector<Pair> table(const TermAst& t, std::size_t arity) const {
    std::vector<Pair> out;
    std::vector<Pair> x(arity);
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= q * p;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      for (std::size_t i = 0; i < arity; ++i) {
        x[i] = {static_cast<std::uint32_t>(r % q), static_cast<std::uint32_t>(r / q % p)};
        r /= q * p;
      }
      out.push_back((*this)(t, x));
    }
    return out;
  }
};

}  // namespace termgen
