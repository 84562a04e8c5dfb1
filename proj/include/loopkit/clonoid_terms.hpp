#pragma once

// Terms over (Z_q x Z_p, +, f), where f(u, v) = (0, f(u)), and their normal
// forms  sum_i d_i x_i + sum_{alpha in A_n} s_alpha f(<alpha, x>).
//
// Rewriting rules used:
//   the abelian group axioms for +, q p x = 0,
//   f(x + f(y)) = f(x),  f(x + q y) = f(x),  p f(x) = 0,
//   f(c x) = sum_i d_i f(a^i x) from the coefficient rows.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "loopkit/clonoid.hpp"

namespace loopkit {

struct TermAst {
  enum class Kind { Var, Sum, F, Repeat };
  Kind kind = Kind::Var;
  std::size_t var = 0;       // 1-based, for Var
  std::uint64_t count = 0;   // for Repeat: count * child
  std::vector<std::shared_ptr<const TermAst>> children;

  static std::shared_ptr<const TermAst> variable(std::size_t i);
  static std::shared_ptr<const TermAst> sum(std::shared_ptr<const TermAst> a,
                                            std::shared_ptr<const TermAst> b);
  static std::shared_ptr<const TermAst> apply_f(std::shared_ptr<const TermAst> a);
  static std::shared_ptr<const TermAst> repeat(std::uint64_t k, std::shared_ptr<const TermAst> a);
};
using TermPtr = std::shared_ptr<const TermAst>;

// expr := term ('+' term)* ; term := [INT '*'] atom ; atom := xINT | f(expr) | (expr)
TermPtr parse_term(const std::string& text);  // throws MalformedTerm
std::string print_term(const TermAst& t);
std::size_t term_arity(const TermAst& t);     // largest variable index

// A point of Z_q x Z_p.
struct Pair {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  bool operator==(const Pair&) const = default;
};

struct NormalFormTerm {
  std::size_t arity = 0;
  std::vector<std::uint32_t> linear;  // mod pq
  std::map<std::vector<std::uint32_t>, std::uint32_t> spectral;  // alpha in A_n -> nonzero mod p
  bool operator==(const NormalFormTerm&) const = default;
};

// Rewriting context for one (q, p, f).
class TermRewriter {
 public:
  explicit TermRewriter(const ClonoidBasis& basis);

  NormalFormTerm normalize(const TermAst& t, std::size_t arity) const;
  NormalFormTerm normalize(const TermAst& t) const { return normalize(t, term_arity(t)); }
  TermPtr to_term(const NormalFormTerm& nf) const;

  Pair evaluate(const TermAst& t, const std::vector<Pair>& x) const;
  Pair evaluate(const NormalFormTerm& nf, const std::vector<Pair>& x) const;
  // Values on every point of (Z_q x Z_p)^arity.
  std::vector<Pair> value_table(const TermAst& t, std::size_t arity) const;
  std::vector<Pair> value_table(const NormalFormTerm& nf) const;

  // Compares normal forms and, independently, value tables. Disagreement
  // between the two throws InternalInconsistency.
  bool terms_equal(const TermAst& a, const TermAst& b) const;

  const ClonoidBasis& basis() const noexcept { return basis_; }
  const std::vector<CoefficientRow>& rows() const noexcept { return rows_; }

 private:
  std::uint32_t apply_f(std::uint32_t u) const { return basis_.f.values[u % basis_.f.q]; }

  ClonoidBasis basis_;
  std::vector<CoefficientRow> rows_;
};

// Human readable list of the identities the rewriter uses.
std::string sigma_description(const ClonoidBasis& basis);

}  // namespace loopkit
