#include <doctest.h>

#include <random>

#include "loopkit/enumerate.hpp"
#include "loopkit/group_reducts.hpp"
#include "loopkit/perm_group.hpp"
#include "oracles.hpp"

using namespace loopkit;

namespace {

std::vector<Perm> to_perms(const std::vector<std::vector<Elem>>& gens) {
  std::vector<Perm> out;
  for (const auto& g : gens) out.emplace_back(std::vector<std::uint16_t>(g.begin(), g.end()));
  return out;
}

}  // namespace

TEST_CASE("Perm composes left to right and inverts") {
  const Perm a(std::vector<std::uint16_t>{1, 2, 0});
  const Perm b(std::vector<std::uint16_t>{1, 0, 2});
  const Perm ab = a * b;
  for (std::size_t x = 0; x < 3; ++x) CHECK(ab(x) == b(a(x)));
  CHECK((a * a.inverse()).is_identity());
  CHECK_FALSE(commutator(a, b).is_identity());
  CHECK(commutator(a, a).is_identity());
}

TEST_CASE("Perm rejects non-bijections") {
  CHECK_THROWS(Perm(std::vector<std::uint16_t>{0, 0, 1}));
  CHECK_THROWS(Perm(std::vector<std::uint16_t>{0, 3}));
}

TEST_CASE("multiplication group orders match breadth-first closure") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& l : enumerate_loops(n, LoopFilter::All, true)) {
      const PermGroup g = mlt_group(l);
      const auto expected = oracle::perm_closure_size(oracle::translations(l.table()));
      CHECK(g.order() == expected);
      CHECK(closure_size(n, to_perms(oracle::translations(l.table())), 100000) == expected);
    }
}

TEST_CASE("membership agrees with the enumerated group") {
  const FiniteLoop d8 = groups::dihedral(8);
  const auto gens = oracle::translations(d8.table());
  const auto elems = oracle::perm_closure(gens, 8);
  const PermGroup g = mlt_group(d8);
  for (const auto& e : elems) CHECK(g.contains(Perm(std::vector<std::uint16_t>(e.begin(), e.end()))));
  std::mt19937_64 rng(3);
  std::size_t outside = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint16_t> img(8);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    const bool in = std::find(elems.begin(), elems.end(), std::vector<Elem>(img.begin(), img.end())) != elems.end();
    CHECK(g.contains(Perm(img)) == in);
    outside += in ? 0 : 1;
  }
  CHECK(outside > 0);
}

TEST_CASE("add_generator only grows on new elements") {
  PermGroup g(4, {Perm(std::vector<std::uint16_t>{1, 2, 3, 0})});
  CHECK(g.order() == 4);
  CHECK_FALSE(g.add_generator(Perm(std::vector<std::uint16_t>{2, 3, 0, 1})));
  CHECK(g.add_generator(Perm(std::vector<std::uint16_t>{1, 0, 2, 3})));
  CHECK(g.order() == 24);
}

TEST_CASE("nilpotence of multiplication groups agrees with the coprime-commuting oracle") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& l : enumerate_loops(n, LoopFilter::All, true)) {
      const auto elems = oracle::perm_closure(oracle::translations(l.table()), n);
      CHECK(is_nilpotent_group(mlt_group(l)).nilpotent == oracle::perm_group_nilpotent(elems));
    }
}

TEST_CASE("regular cyclic group has class 1, S3 is not nilpotent") {
  const PermGroup z8 = mlt_group(FiniteLoop(oracle::cyclic(8)));
  CHECK(z8.order() == 8);
  const NilpotenceResult r = is_nilpotent_group(z8);
  CHECK(r.nilpotent);
  CHECK(r.nilpotency_class == 1);
  CHECK(is_p_group(z8, 2));
  CHECK_FALSE(is_p_group(z8, 3));

  const PermGroup s3 = mlt_group(groups::symmetric3());
  CHECK(s3.order() == 36);
  CHECK_FALSE(is_nilpotent_group(s3).nilpotent);
}

TEST_CASE("multiplication group of D8 is a 2-group of class 2") {
  const PermGroup g = mlt_group(groups::dihedral(8));
  CHECK(g.order() == oracle::perm_closure_size(oracle::translations(groups::dihedral(8).table())));
  CHECK(is_p_group(g, 2));
  const NilpotenceResult r = is_nilpotent_group(g);
  CHECK(r.nilpotent);
  CHECK(r.series_orders.front() == g.order());
  CHECK(r.series_orders.back() == 1);
}
