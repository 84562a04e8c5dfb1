#include "loopkit/clonoid_terms.hpp"

#include <cctype>
#include <sstream>

#include "loopkit/error.hpp"

namespace loopkit {

TermPtr TermAst::variable(std::size_t i) {
  auto t = std::make_shared<TermAst>();
  t->kind = Kind::Var;
  t->var = i;
  return t;
}

TermPtr TermAst::sum(TermPtr a, TermPtr b) {
  auto t = std::make_shared<TermAst>();
  t->kind = Kind::Sum;
  t->children = {std::move(a), std::move(b)};
  return t;
}

TermPtr TermAst::apply_f(TermPtr a) {
  auto t = std::make_shared<TermAst>();
  t->kind = Kind::F;
  t->children = {std::move(a)};
  return t;
}

TermPtr TermAst::repeat(std::uint64_t k, TermPtr a) {
  auto t = std::make_shared<TermAst>();
  t->kind = Kind::Repeat;
  t->count = k;
  t->children = {std::move(a)};
  return t;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  TermPtr parse() {
    TermPtr t = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::MalformedTerm, what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > 1'000'000'000) fail("number too large");
    }
    return v;
  }
  TermPtr expr() {
    TermPtr t = term();
    while (eat('+')) t = TermAst::sum(t, term());
    return t;
  }
  TermPtr term() {
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::uint64_t k = number();
      if (!eat('*')) fail("expected '*' after a repetition count");
      return TermAst::repeat(k, atom());
    }
    return atom();
  }
  TermPtr atom() {
    if (eat('(')) {
      TermPtr t = expr();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (eat('x')) {
      const std::uint64_t i = number();
      if (i == 0) fail("variables are numbered from 1");
      return TermAst::variable(i);
    }
    if (eat('f')) {
      if (!eat('(')) fail("expected '(' after f");
      TermPtr t = expr();
      if (!eat(')')) fail("expected ')'");
      return TermAst::apply_f(t);
    }
    fail("expected a variable, f(...) or (...)");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).parse(); }

std::string print_term(const TermAst& t) {
  switch (t.kind) {
    case TermAst::Kind::Var:
      return "x" + std::to_string(t.var);
    case TermAst::Kind::Sum:
      return print_term(*t.children[0]) + " + " + print_term(*t.children[1]);
    case TermAst::Kind::F:
      return "f(" + print_term(*t.children[0]) + ")";
    case TermAst::Kind::Repeat: {
      const TermAst& c = *t.children[0];
      const bool atomic = c.kind == TermAst::Kind::Var || c.kind == TermAst::Kind::F;
      return std::to_string(t.count) + "*" + (atomic ? print_term(c) : "(" + print_term(c) + ")");
    }
  }
  return {};
}

std::size_t term_arity(const TermAst& t) {
  if (t.kind == TermAst::Kind::Var) return t.var;
  std::size_t m = 0;
  for (const auto& c : t.children) m = std::max(m, term_arity(*c));
  return m;
}

TermRewriter::TermRewriter(const ClonoidBasis& basis) : basis_(basis), rows_(coefficient_rows(basis)) {}

NormalFormTerm TermRewriter::normalize(const TermAst& t, std::size_t arity) const {
  const std::uint32_t q = basis_.f.q, p = basis_.f.p, pq = p * q;
  NormalFormTerm out{arity, std::vector<std::uint32_t>(arity, 0), {}};
  switch (t.kind) {
    case TermAst::Kind::Var:
      if (t.var == 0 || t.var > arity) throw Error(Errc::MalformedTerm, "variable index out of range");
      out.linear[t.var - 1] = 1;
      return out;
    case TermAst::Kind::Sum: {
      out = normalize(*t.children[0], arity);
      const NormalFormTerm b = normalize(*t.children[1], arity);
      for (std::size_t i = 0; i < arity; ++i) out.linear[i] = (out.linear[i] + b.linear[i]) % pq;
      for (const auto& [alpha, s] : b.spectral) {
        auto& slot = out.spectral[alpha];
        slot = (slot + s) % p;
        if (!slot) out.spectral.erase(alpha);
      }
      return out;
    }
    case TermAst::Kind::Repeat: {
      out = normalize(*t.children[0], arity);
      const std::uint64_t k = t.count;
      for (auto& d : out.linear) d = static_cast<std::uint32_t>(k % pq * d % pq);
      for (auto it = out.spectral.begin(); it != out.spectral.end();) {
        it->second = static_cast<std::uint32_t>(k % p * it->second % p);
        it = it->second ? std::next(it) : out.spectral.erase(it);
      }
      return out;
    }
    case TermAst::Kind::F: {
      // Only the Z_q part of the argument matters: its f-summands and
      // multiples of q drop out.
      const NormalFormTerm inner = normalize(*t.children[0], arity);
      std::vector<std::uint32_t> alpha(arity);
      for (std::size_t i = 0; i < arity; ++i) alpha[i] = inner.linear[i] % q;
      std::size_t lead = 0;
      while (lead < arity && alpha[lead] == 0) ++lead;
      if (lead == arity) return out;  // f(0) = 0
      const std::uint32_t c = alpha[lead];
      const std::uint32_t cinv = zp_inverse(c, q);
      for (auto& x : alpha) x = x * cinv % q;
      // f(c <alpha, x>) = sum_j d_j f(a^j <alpha, x>)
      std::uint64_t power = 1;
      for (std::uint32_t j = 0; j < basis_.k; ++j) {
        const std::uint32_t d = rows_[c].d[j] % p;
        if (d) {
          std::vector<std::uint32_t> key(arity);
          for (std::size_t i = 0; i < arity; ++i) key[i] = static_cast<std::uint32_t>(alpha[i] * power % q);
          auto& slot = out.spectral[key];
          slot = (slot + d) % p;
          if (!slot) out.spectral.erase(key);
        }
        power = power * basis_.a % q;
      }
      return out;
    }
  }
  throw Error(Errc::MalformedTerm, "unknown term node");
}

TermPtr TermRewriter::to_term(const NormalFormTerm& nf) const {
  const std::uint32_t pq = basis_.f.p * basis_.f.q;
  TermPtr acc;
  auto add = [&](TermPtr t) { acc = acc ? TermAst::sum(acc, std::move(t)) : std::move(t); };
  auto scaled = [](std::uint64_t k, TermPtr t) { return k == 1 ? t : TermAst::repeat(k, std::move(t)); };
  for (std::size_t i = 0; i < nf.arity; ++i)
    if (nf.linear[i]) add(scaled(nf.linear[i], TermAst::variable(i + 1)));
  for (const auto& [alpha, s] : nf.spectral) {
    TermPtr inner;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (!alpha[i]) continue;
      TermPtr v = scaled(alpha[i], TermAst::variable(i + 1));
      inner = inner ? TermAst::sum(inner, v) : v;
    }
    add(scaled(s, TermAst::apply_f(inner)));
  }
  if (!acc) acc = TermAst::repeat(pq, TermAst::variable(nf.arity ? nf.arity : 1));
  return acc;
}

Pair TermRewriter::evaluate(const TermAst& t, const std::vector<Pair>& x) const {
  const std::uint32_t q = basis_.f.q, p = basis_.f.p;
  switch (t.kind) {
    case TermAst::Kind::Var:
      if (t.var == 0 || t.var > x.size()) throw Error(Errc::MalformedTerm, "variable index out of range");
      return x[t.var - 1];
    case TermAst::Kind::Sum: {
      const Pair a = evaluate(*t.children[0], x), b = evaluate(*t.children[1], x);
      return {(a.u + b.u) % q, (a.v + b.v) % p};
    }
    case TermAst::Kind::F:
      return {0, apply_f(evaluate(*t.children[0], x).u)};
    case TermAst::Kind::Repeat: {
      const Pair a = evaluate(*t.children[0], x);
      return {static_cast<std::uint32_t>(t.count % q * a.u % q),
              static_cast<std::uint32_t>(t.count % p * a.v % p)};
    }
  }
  throw Error(Errc::MalformedTerm, "unknown term node");
}

Pair TermRewriter::evaluate(const NormalFormTerm& nf, const std::vector<Pair>& x) const {
  const std::uint32_t q = basis_.f.q, p = basis_.f.p;
  std::uint64_t u = 0, v = 0;
  for (std::size_t i = 0; i < nf.arity; ++i) {
    u += std::uint64_t{nf.linear[i]} % q * x[i].u;
    v += std::uint64_t{nf.linear[i]} % p * x[i].v;
  }
  for (const auto& [alpha, s] : nf.spectral) {
    std::uint64_t inner = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) inner += std::uint64_t{alpha[i]} * x[i].u;
    v += std::uint64_t{s} * apply_f(static_cast<std::uint32_t>(inner % q));
  }
  return {static_cast<std::uint32_t>(u % q), static_cast<std::uint32_t>(v % p)};
}

namespace {

template <class Fn>
std::vector<Pair> tabulate(std::uint32_t q, std::uint32_t p, std::size_t arity, Fn&& fn) {
  const std::size_t m = std::size_t{p} * q;
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= m;
  std::vector<Pair> out;
  out.reserve(total);
  std::vector<Pair> x(arity);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < arity; ++i) {
      const std::size_t c = rest % m;
      rest /= m;
      x[i] = {static_cast<std::uint32_t>(c % q), static_cast<std::uint32_t>(c / q)};
    }
    out.push_back(fn(x));
  }
  return out;
}

}  // namespace

std::vector<Pair> TermRewriter::value_table(const TermAst& t, std::size_t arity) const {
  return tabulate(basis_.f.q, basis_.f.p, arity, [&](const std::vector<Pair>& x) { return evaluate(t, x); });
}

std::vector<Pair> TermRewriter::value_table(const NormalFormTerm& nf) const {
  return tabulate(basis_.f.q, basis_.f.p, nf.arity, [&](const std::vector<Pair>& x) { return evaluate(nf, x); });
}

bool TermRewriter::terms_equal(const TermAst& a, const TermAst& b) const {
  const std::size_t arity = std::max(term_arity(a), term_arity(b));
  const bool by_form = normalize(a, arity) == normalize(b, arity);
  const bool by_value = value_table(a, arity) == value_table(b, arity);
  if (by_form != by_value)
    throw Error(Errc::InternalInconsistency, "normal forms and evaluation disagree on " +
                                                 print_term(a) + " vs " + print_term(b));
  return by_form;
}

std::string sigma_description(const ClonoidBasis& basis) {
  std::ostringstream os;
  const std::uint32_t q = basis.f.q, p = basis.f.p;
  os << "identities used:\n"
     << "  (x + y) + z = x + (y + z); x + y = y + x; " << p * q << "*x + y = y\n"
     << "  f(x + f(y)) = f(x)\n"
     << "  f(x + " << q << "*y) = f(x)\n"
     << "  " << p << "*f(x) = 0\n";
  for (const auto& row : coefficient_rows(basis)) {
    if (row.c == 0) continue;
    os << "  f(" << row.c << "*x) =";
    bool any = false;
    std::uint64_t power = 1;
    for (std::uint32_t j = 0; j < basis.k; ++j) {
      if (row.d[j]) {
        os << (any ? " + " : " ") << row.d[j] << "*f(" << power << "*x)";
        any = true;
      }
      power = power * basis.a % q;
    }
    if (!any) os << " " << p * q << "*x";
    os << "\n";
  }
  return os.str();
}

}  // namespace loopkit
