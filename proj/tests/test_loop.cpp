#include <doctest.h>

#include <random>

#include "loopkit/enumerate.hpp"
#include "loopkit/error.hpp"
#include "loopkit/group_reducts.hpp"
#include "loopkit/loop.hpp"
#include "oracles.hpp"

using namespace loopkit;

namespace {

CayleyTable z(std::size_t m) { return oracle::cyclic(m); }

std::vector<FiniteLoop> order6_nilpotent_nonassoc() {
  return enumerate_loops(6, LoopFilter::NilpotentNonassociative, true);
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InternalInvariantViolation;
}

}  // namespace

TEST_CASE("load_loop accepts group tables and rejects broken ones") {
  const FiniteLoop z3 = load_loop(CayleyTable::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  CHECK(z3.is_associative());
  CHECK(z3.is_commutative());
  CHECK(code_of([] { load_loop(CayleyTable::from_rows({{0, 1}, {1, 1}})); }) == Errc::LatinSquareViolation);
  CHECK(code_of([] { load_loop(CayleyTable::from_rows({{1, 0}, {0, 1}})); }) == Errc::IdentityViolation);
  CHECK(code_of([] { CayleyTable::from_rows({{0, 1}, {1}}); }) == Errc::ParseError);
}

TEST_CASE("enumerated nonassociative nilpotent loops of order 6 load and are not groups") {
  const auto loops = order6_nilpotent_nonassoc();
  REQUIRE_FALSE(loops.empty());
  for (const auto& l : loops) {
    CHECK(oracle::is_loop(l.table()));
    CHECK_FALSE(oracle::is_associative(l.table()));
    CHECK_FALSE(l.is_associative());
  }
}

TEST_CASE("division tables satisfy the four loop identities") {
  std::vector<FiniteLoop> loops{FiniteLoop(z(5)), groups::dihedral(8), groups::quaternion()};
  for (auto& l : order6_nilpotent_nonassoc()) loops.push_back(l);
  for (const auto& l : loops)
    for (Elem a = 0; a < l.order(); ++a)
      for (Elem b = 0; b < l.order(); ++b) {
        CHECK(l.mul(a, l.ldiv(a, b)) == b);
        CHECK(l.ldiv(a, l.mul(a, b)) == b);
        CHECK(l.mul(l.rdiv(a, b), b) == a);
        CHECK(l.rdiv(l.mul(a, b), b) == a);
      }
}

TEST_CASE("subloop_generated matches brute-force closure") {
  const FiniteLoop z6(z(6));
  CHECK(subloop_generated(z6, std::vector<Elem>{2}).elements == std::vector<Elem>{0, 2, 4});
  CHECK(subloop_generated(z6, std::vector<Elem>{}).elements == std::vector<Elem>{0});
  const FiniteLoop d8 = groups::dihedral(8);
  CHECK(subloop_generated(d8, std::vector<Elem>{1}).elements == std::vector<Elem>{0, 1, 2, 3});

  std::mt19937_64 rng(7);
  for (const auto& l : order6_nilpotent_nonassoc())
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Elem> s{static_cast<Elem>(rng() % 6), static_cast<Elem>(rng() % 6)};
      CHECK(subloop_generated(l, s).elements == oracle::closure(l.table(), s));
    }
}

TEST_CASE("is_normal on abelian, symmetric and whole subloops") {
  const FiniteLoop z6(z(6));
  CHECK(is_normal(z6, Subloop{{0, 3}}));
  const FiniteLoop s3 = groups::symmetric3();
  const Subloop reflection{{0, 3}};  // s is stored at 3
  REQUIRE(oracle::closure(s3.table(), reflection.elements) == reflection.elements);
  CHECK_FALSE(is_normal(s3, reflection));
  CHECK_FALSE(oracle::is_normal(s3.table(), reflection.elements));
  CHECK(is_normal(s3, whole(s3)));
  CHECK(code_of([&] { is_normal(z6, Subloop{{0, 1}}); }) == Errc::NotASubloop);
}

TEST_CASE("is_normal agrees with the congruence oracle on every subloop") {
  std::vector<FiniteLoop> loops{groups::dihedral(8), groups::quaternion(), groups::symmetric3()};
  for (auto& l : order6_nilpotent_nonassoc()) loops.push_back(l);
  for (auto& l : enumerate_loops(5, LoopFilter::All, true)) loops.push_back(l);
  for (const auto& l : loops)
    for (const auto& s : all_subloops(l)) CHECK(is_normal(l, s) == oracle::is_normal(l.table(), s.elements));
}

TEST_CASE("quotients") {
  const FiniteLoop z6(z(6));
  const QuotientLoop q = quotient(z6, as_normal(z6, Subloop{{0, 3}}));
  CHECK(q.loop.order() == 3);
  CHECK(oracle::isomorphic(q.loop.table(), z(3)));
  CHECK(q.reps == std::vector<Elem>{0, 1, 2});
  CHECK(q.proj[0] == 0);

  const FiniteLoop d8 = groups::dihedral(8);
  const QuotientLoop qc = quotient(d8, center(d8));
  CHECK(qc.loop.order() == 4);
  CHECK(oracle::is_commutative(qc.loop.table()));

  for (const auto& l : order6_nilpotent_nonassoc()) {
    const QuotientLoop triv = quotient(l, as_normal(l, trivial_subloop()));
    CHECK(triv.loop == l);
    CHECK(quotient(l, as_normal(l, whole(l))).loop.order() == 1);
    const QuotientLoop qz = quotient(l, center(l));
    for (Elem a = 0; a < 6; ++a)
      for (Elem b = 0; b < 6; ++b) CHECK(qz.proj[l.mul(a, b)] == qz.loop.mul(qz.proj[a], qz.proj[b]));
  }
  CHECK(code_of([&] { as_normal(groups::symmetric3(), Subloop{{0, 3}}); }) == Errc::NotNormal);
}

TEST_CASE("center matches the definitional oracle") {
  CHECK(center(FiniteLoop(z(6))).size() == 6);
  CHECK(center(groups::dihedral(8)).size() == 2);
  CHECK(center(groups::symmetric3()).elements() == std::vector<Elem>{0});
  std::vector<FiniteLoop> loops{groups::dihedral(16), groups::quaternion(), groups::heisenberg(3)};
  for (auto& l : enumerate_loops(6, LoopFilter::All, true)) loops.push_back(l);
  for (const auto& l : loops) CHECK(center(l).elements() == oracle::center(l.table()));
}

TEST_CASE("center of a group is the commutation center") {
  for (const auto& g : {groups::dihedral(8), groups::dihedral(16), groups::quaternion(), groups::heisenberg(3)}) {
    std::vector<Elem> comm;
    for (Elem x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Elem y = 0; y < g.order() && ok; ++y) ok = g.mul(x, y) == g.mul(y, x);
      if (ok) comm.push_back(x);
    }
    CHECK(center(g).elements() == comm);
  }
}

TEST_CASE("upper central series and nilpotence class") {
  const CentralSeries z6 = upper_central_series(FiniteLoop(z(6)));
  CHECK(z6.nilpotent);
  CHECK(z6.nilpotency_class == 1);
  CHECK(z6.terms.size() == 2);
  CHECK(upper_central_series(groups::dihedral(16)).nilpotency_class == 3);
  const CentralSeries s3 = upper_central_series(groups::symmetric3());
  CHECK_FALSE(s3.nilpotent);
  CHECK(s3.terms.back().size() == 1);
  for (const auto& l : enumerate_loops(6, LoopFilter::All, true)) {
    const CentralSeries s = upper_central_series(l);
    const int expected = oracle::nilpotency_class(l.table());
    CHECK(s.nilpotent == (expected >= 0));
    if (s.nilpotent) CHECK(s.nilpotency_class == expected);
  }
}

TEST_CASE("direct products and internal decompositions") {
  const FiniteLoop z2(z(2)), z3(z(3)), z6(z(6));
  const FiniteLoop p = direct_product(z2, z3);
  CHECK(p.order() == 6);
  CHECK(oracle::isomorphic(p.table(), z6.table()));
  CHECK(internal_decomposition(z6, as_normal(z6, Subloop{{0, 3}}), as_normal(z6, Subloop{{0, 2, 4}})).has_value());

  for (const auto& l : order6_nilpotent_nonassoc()) {
    const auto normals = all_normal_subloops(l);
    for (const auto& a : normals)
      for (const auto& b : normals)
        if (a.size() > 1 && b.size() > 1 && a.size() < 6 && b.size() < 6)
          CHECK_FALSE(internal_decomposition(l, a, b).has_value());
  }
}

TEST_CASE("find_isomorphism") {
  const FiniteLoop z6(z(6)), z4(z(4));
  const auto w = find_isomorphism(z6, direct_product(FiniteLoop(z(2)), FiniteLoop(z(3))));
  REQUIRE(w.has_value());
  CHECK(is_isomorphism(z6, direct_product(FiniteLoop(z(2)), FiniteLoop(z(3))), *w));
  CHECK_FALSE(find_isomorphism(z4, direct_product(FiniteLoop(z(2)), FiniteLoop(z(2)))).has_value());
  for (const auto& l : order6_nilpotent_nonassoc()) CHECK_FALSE(find_isomorphism(l, z6).has_value());
}

TEST_CASE("find_isomorphism agrees with the brute-force oracle and inverts") {
  const auto loops = enumerate_loops(5, LoopFilter::All, false);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteLoop& a = loops[rng() % loops.size()];
    const FiniteLoop& b = loops[rng() % loops.size()];
    const auto w = find_isomorphism(a, b);
    CHECK(w.has_value() == oracle::isomorphic(a.table(), b.table()));
    if (w) {
      CHECK(is_isomorphism(a, b, *w));
      CHECK(is_isomorphism(b, a, inverse_map(*w)));
    }
  }
  for (const auto& l : enumerate_loops(6, LoopFilter::All, true)) CHECK(find_isomorphism(l, l).has_value());
}

TEST_CASE("left powers and the Mal'cev operation") {
  const FiniteLoop z4(z(4));
  CHECK(left_power(z4, 1, 3) == 3);
  CHECK(left_power(z4, 1, 0) == 0);
  for (const auto& l : order6_nilpotent_nonassoc())
    for (Elem a = 0; a < 6; ++a) {
      CHECK(left_power(l, a, 6) == 0);
      CHECK(left_order(l, a) == oracle::left_order(l.table(), a));
      for (Elem b = 0; b < 6; ++b) {
        CHECK(malcev_eval(l, a, b, b) == a);
        CHECK(malcev_eval(l, b, b, a) == a);
      }
    }
}

TEST_CASE("right translation orders") {
  const FiniteLoop z6(z(6));
  CHECK(right_translation_order(z6, 1) == 6);
  CHECK(right_translation_order(z6, 2) == 3);
  CHECK(right_translation_exponent(z6) == 6);
  CHECK(right_translation_cycle_type(z6, 3) == std::vector<std::size_t>{2, 2, 2});
  for (const auto& l : order6_nilpotent_nonassoc())
    for (Elem x = 0; x < 6; ++x) {
      // x^m is R_x^m applied to the identity.
      const auto m = right_translation_order(l, x);
      CHECK(left_power(l, x, m) == 0);
    }
}

TEST_CASE("restrict_to relabels by rank") {
  const FiniteLoop z6(z(6));
  const FiniteLoop sub = restrict_to(z6, Subloop{{0, 2, 4}});
  CHECK(sub.table() == z(3));
}
