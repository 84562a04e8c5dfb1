#include <doctest.h>

#include <random>

#include "loopkit/clonoid.hpp"
#include "loopkit/clonoid_terms.hpp"
#include "loopkit/error.hpp"
#include "oracles.hpp"
#include "term_gen.hpp"

using namespace loopkit;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InternalInvariantViolation;
}

// Rank of {x |-> f(<alpha, x>) : alpha in Z_q^n} by plain elimination.
std::size_t oracle_dim(const FnTable& f, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> rows;
  const auto tuples = all_tuples(f.q, n);
  for (const auto& alpha : tuples) {
    std::vector<std::uint32_t> row;
    for (const auto& x : tuples) {
      std::uint32_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s = (s + alpha[i] * x[i]) % f.q;
      row.push_back(f.values[s]);
    }
    rows.push_back(row);
  }
  return oracle::rank_mod_p(rows, f.p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint32_t e, std::uint32_t q) {
  std::uint32_t r = 1;
  while (e--) r = r * a % q;
  return r;
}

FnTable random_fn(std::mt19937_64& rng, std::uint32_t q, std::uint32_t p) {
  for (;;) {
    std::vector<std::uint32_t> v(q, 0);
    for (std::uint32_t i = 1; i < q; ++i) v[i] = rng() % p;
    FnTable f = unary_fn(q, p, v);
    if (!is_zero_fn(f)) return f;
  }
}

}  // namespace

TEST_CASE("unary_fn validation") {
  CHECK(code_of([] { unary_fn(3, 2, {1, 0, 0}); }) == Errc::ParseError);
  CHECK(code_of([] { unary_fn(3, 2, {0, 2, 0}); }) == Errc::ParseError);
  CHECK(code_of([] { unary_fn(3, 3, {0, 1, 0}); }) == Errc::ParseError);
  CHECK(code_of([] { unary_fn(4, 2, {0, 1, 0, 1}); }) == Errc::ParseError);
  CHECK(multiplicative_order(2, 3) == 2);
  CHECK(multiplicative_order(4, 5) == 2);
  CHECK(multiplicative_order(2, 5) == 4);
}

TEST_CASE("clonoid span examples") {
  CHECK(clonoid_span(unary_fn(3, 2, {0, 0, 0}), 2).dimension == 0);
  CHECK(clonoid_span(unary_fn(3, 2, {0, 1, 1}), 2).dimension == 4);
  CHECK(clonoid_span(unary_fn(3, 2, {0, 1, 0}), 1).dimension == 2);
}

TEST_CASE("clonoid span dimension matches plain elimination") {
  std::mt19937_64 rng(21);
  for (auto [q, p] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 5u}, {2u, 3u}})
    for (int trial = 0; trial < 10; ++trial) {
      const FnTable f = random_fn(rng, q, p);
      for (std::size_t n = 1; n <= 2; ++n) CHECK(clonoid_span(f, n).dimension == oracle_dim(f, n));
    }
}

TEST_CASE("basis parameter examples") {
  const ClonoidBasis b1 = find_basis_parameter(unary_fn(3, 2, {0, 1, 1}));
  CHECK(b1.a == 1);
  CHECK(b1.k == 1);
  REQUIRE(b1.b.size() == 1);
  CHECK(b1.b[0] == unary_fn(3, 2, {0, 1, 1}));
  const ClonoidBasis b2 = find_basis_parameter(unary_fn(3, 2, {0, 1, 0}));
  CHECK(b2.a == 2);
  CHECK(b2.k == 2);
}

TEST_CASE("indicator of {1,4} at q = 5 has no basis parameter") {
  const FnTable f = unary_fn(5, 2, {0, 1, 0, 0, 1});
  // f(4x) = f(x), so the orbit for a = 4 collapses.
  for (std::uint32_t x = 0; x < 5; ++x) CHECK(f.values[4 * x % 5] == f.values[x]);
  CHECK(oracle_dim(f, 1) == 2);
  CHECK_FALSE(search_basis_parameter(f).has_value());
  CHECK(code_of([&] { find_basis_parameter(f); }) == Errc::InternalInconsistency);
}

TEST_CASE("search_basis_parameter is exact against brute force") {
  for (auto [q, p] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 5u}}) {
    std::vector<std::uint32_t> v(q, 0);
    // Every nonzero zero-preserving f.
    for (;;) {
      std::size_t i = 1;
      while (i < q && v[i] == p - 1) v[i++] = 0;
      if (i == q) break;
      ++v[i];
      const FnTable f = unary_fn(q, p, v);
      const std::size_t d = oracle_dim(f, 1);
      std::optional<std::uint32_t> expected;
      for (std::uint32_t a = 1; a < q && !expected; ++a) {
        std::uint32_t k = 1;
        while (pow_mod(a, k, q) != 1) ++k;
        if (k != d) continue;
        std::vector<std::vector<std::uint32_t>> rows;
        for (std::uint32_t j = 0; j < k; ++j) {
          std::vector<std::uint32_t> row;
          for (std::uint32_t x = 0; x < q; ++x) row.push_back(f.values[pow_mod(a, j, q) * x % q]);
          rows.push_back(row);
        }
        if (oracle::rank_mod_p(rows, p) == k) expected = a;
      }
      const auto got = search_basis_parameter(f);
      CHECK(got.has_value() == expected.has_value());
      if (got && expected) CHECK(got->a == *expected);
    }
  }
}

TEST_CASE("dimension formula examples and random functions") {
  const ClonoidBasis b1 = find_basis_parameter(unary_fn(3, 2, {0, 1, 1}));
  CHECK(dimension_formula_check(b1, 2).predicted == 4);
  CHECK(dimension_formula_check(b1, 2).holds());
  const ClonoidBasis b2 = find_basis_parameter(unary_fn(3, 2, {0, 1, 0}));
  CHECK(dimension_formula_check(b2, 2).predicted == 8);
  CHECK(dimension_formula_check(b2, 2).holds());
  std::mt19937_64 rng(5);
  for (auto [q, p] : {std::pair{3u, 2u}, {3u, 5u}})
    for (int trial = 0; trial < 10; ++trial) {
      const ClonoidBasis b = find_basis_parameter(random_fn(rng, q, p));
      for (std::size_t n = 1; n <= 3; ++n) {
        const DimensionCheck c = dimension_formula_check(b, n);
        CHECK(c.holds());
        CHECK(c.measured == oracle_dim(b.f, n));
      }
    }
}

TEST_CASE("coefficient rows") {
  const ClonoidBasis b = find_basis_parameter(unary_fn(3, 2, {0, 1, 0}));
  const auto rows = coefficient_rows(b);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].d == std::vector<std::uint32_t>{0, 0});
  CHECK(rows[1].d == std::vector<std::uint32_t>{1, 0});
  CHECK(rows[2].d == std::vector<std::uint32_t>{0, 1});
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const ClonoidBasis bb = find_basis_parameter(random_fn(rng, 3, 5));
    for (const auto& r : coefficient_rows(bb))
      for (std::uint32_t x = 0; x < 3; ++x) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < bb.k; ++i) s = (s + r.d[i] * bb.b[i].values[x]) % 5;
        CHECK(s == bb.f.values[r.c * x % 3]);
      }
  }
}

TEST_CASE("h_L construction") {
  const FnTable f = unary_fn(3, 2, {0, 1, 1});
  CHECK(h_L_construct(f, f, {1}) == f);
  CHECK(is_zero_fn(h_L_construct(f, unary_fn(3, 2, {0, 0, 0}), {1, 1})));
  const FnTable d = h_L_construct(f, f, {1, 1});
  CHECK(d.arity == 2);
  for (const auto& x : all_tuples(3, 2)) {
    const bool on_line = x[0] == x[1];
    CHECK(d(x) == (on_line ? f.values[x[0]] : 0));
  }
  CHECK(in_clonoid(f, d));
  CHECK(code_of([&] { h_L_construct(f, unary_fn(3, 2, {0, 1, 0}), {1}); }) == Errc::NotInClonoid);
}

TEST_CASE("leading coefficient set has size k (q^n - 1)/(q - 1)") {
  const ClonoidBasis b = find_basis_parameter(unary_fn(3, 2, {0, 1, 0}));
  CHECK(leading_coefficient_set(b, 2).size() == 8);
  CHECK(leading_coefficient_set(b, 3).size() == 26);
}

TEST_CASE("term parser round trip") {
  const TermPtr t = parse_term("2*f(x1 + f(x2)) + x3");
  CHECK(term_arity(*t) == 3);
  CHECK(print_term(*parse_term(print_term(*t))) == print_term(*t));
  CHECK(code_of([] { parse_term("f(x1"); }) == Errc::MalformedTerm);
  CHECK(code_of([] { parse_term("y1"); }) == Errc::MalformedTerm);
  CHECK(code_of([] { parse_term("x0"); }) == Errc::MalformedTerm);
}

TEST_CASE("rewriting examples") {
  const TermRewriter rw(find_basis_parameter(unary_fn(3, 2, {0, 1, 1})));
  CHECK(rw.normalize(*parse_term("f(x1 + f(x2))"), 2) == rw.normalize(*parse_term("f(x1)"), 2));
  CHECK(rw.normalize(*parse_term("f(x1) + f(x1)")).spectral.empty());
  CHECK(rw.terms_equal(*parse_term("f(2*x1)"), *parse_term("f(x1)")));
  CHECK_FALSE(rw.terms_equal(*parse_term("f(x1)"), *parse_term("x1")));
  CHECK(rw.terms_equal(*parse_term("6*x1 + x2"), *parse_term("x2")));
}

TEST_CASE("normal forms are sound and complete on random terms") {
  std::mt19937_64 rng(1234);
  struct Config {
    std::uint32_t q, p;
    std::vector<std::uint32_t> f;
  };
  const std::vector<Config> configs{{3, 2, {0, 1, 0}}, {3, 2, {0, 1, 1}}, {5, 2, {0, 1, 0, 0, 0}}, {3, 5, {0, 2, 4}}};
  for (const auto& cfg : configs) {
    const FnTable f = unary_fn(cfg.q, cfg.p, cfg.f);
    const auto basis = search_basis_parameter(f);
    REQUIRE(basis.has_value());
    const TermRewriter rw(*basis);
    const termgen::Evaluator ev{cfg.q, cfg.p, cfg.f};
    for (int i = 0; i < 500; ++i) {
      const std::size_t arity = 1 + rng() % 3;
      const TermPtr t = termgen::random_term(rng, arity, 4);
      const NormalFormTerm nf = rw.normalize(*t, arity);
      CHECK(rw.value_table(nf) == ev.table(*t, arity));
      CHECK(rw.normalize(*rw.to_term(nf), arity) == nf);
    }
    std::size_t equal_pairs = 0, distinct_pairs = 0;
    for (int i = 0; i < 200; ++i) {
      const TermPtr a = termgen::random_term(rng, 2, 3);
      TermPtr b = termgen::random_term(rng, 2, 3);
      if (i % 2 == 0) {
        // a + p f(s) + pq x1, and f(a + f(s)) + f(q s), equal to a and f(a).
        const TermPtr s = termgen::random_term(rng, 2, 2);
        b = i % 4 == 0 ? TermAst::sum(a, TermAst::sum(TermAst::repeat(cfg.p, TermAst::apply_f(s)),
                                                      TermAst::repeat(cfg.p * cfg.q, TermAst::variable(1))))
                       : TermAst::sum(TermAst::apply_f(TermAst::sum(a, TermAst::apply_f(s))),
                                      TermAst::apply_f(TermAst::repeat(cfg.q, s)));
      }
      const TermPtr lhs = i % 4 == 2 ? TermAst::apply_f(a) : a;
      const bool pointwise = ev.table(*lhs, 2) == ev.table(*b, 2);
      CHECK(pointwise == (rw.normalize(*lhs, 2) == rw.normalize(*b, 2)));
      CHECK(rw.terms_equal(*lhs, *b) == pointwise);
      if (i % 2 == 0) CHECK(pointwise);
      (pointwise ? equal_pairs : distinct_pairs) += 1;
    }
    CHECK(equal_pairs > 0);
    CHECK(distinct_pairs > 0);
  }
}
