#include "loopkit/perm_group.hpp"

#include <set>
#include <string>

#include "loopkit/error.hpp"

namespace loopkit {

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(Errc::ParseError, "not a permutation");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint16_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint16_t>(i);
  Perm p;
  p.images_ = std::move(id);
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[images_[i]] = static_cast<std::uint16_t>(i);
  return inv;
}

Perm operator*(const Perm& p, const Perm& q) {
  Perm r;
  r.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_) {
    if (g.degree() != degree_) throw Error(Errc::ParseError, "generator degree mismatch");
    if (g.is_identity()) continue;
    strong_.push_back(g);
    bool moves_base = false;
    for (auto b : base_) moves_base = moves_base || g(b) != b;
    if (!moves_base) append_base_point(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);
  if (!levels_.empty()) complete(levels_.size() - 1);
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

BigInt PermGroup::order() const {
  BigInt order = 1;
  for (const auto& l : levels_) order *= l.orbit.size();
  return order;
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm p, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const int idx = levels_[j].orbit_index[p(levels_[j].point)];
    if (idx < 0) return {std::move(p), j};
    p = p * levels_[j].transversal[static_cast<std::size_t>(idx)].inverse();
  }
  return {std::move(p), levels_.size()};
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = sift(p, 0);
  return level == levels_.size() && residue.is_identity();
}

bool PermGroup::add_generator(const Perm& p) {
  if (contains(p)) return false;
  gens_.push_back(p);
  strong_.push_back(p);
  bool moves_base = false;
  for (auto b : base_) moves_base = moves_base || p(b) != b;
  if (!moves_base) append_base_point(p);
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);
  complete(levels_.size() - 1);
  return true;
}

void PermGroup::append_base_point(const Perm& moving) {
  for (std::size_t x = 0; x < degree_; ++x) {
    if (moving(x) == x) continue;
    bool in_base = false;
    for (auto b : base_) in_base = in_base || b == x;
    if (in_base) continue;
    base_.push_back(static_cast<std::uint16_t>(x));
    levels_.push_back(Level{static_cast<std::uint16_t>(x), {}, {}, {}});
    rebuild_orbit(levels_.size() - 1);
    return;
  }
  throw Error(Errc::InternalInvariantViolation, "non-identity residue fixes every point");
}

void PermGroup::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.orbit_index.assign(degree_, -1);
  lv.orbit.assign(1, lv.point);
  lv.transversal.assign(1, Perm::identity(degree_));
  lv.orbit_index[lv.point] = 0;
  std::vector<const Perm*> gens;
  for (const Perm& s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < level && fixes; ++j) fixes = s(base_[j]) == base_[j];
    if (fixes) gens.push_back(&s);
  }
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    for (const Perm* s : gens) {
      const auto q = (*s)(lv.orbit[k]);
      if (lv.orbit_index[q] >= 0) continue;
      lv.orbit_index[q] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(q);
      lv.transversal.push_back(lv.transversal[k] * (*s));
    }
  }
}

// Schreier-Sims completion: every Schreier generator of every level must sift
// through the deeper levels.
void PermGroup::complete(std::size_t start_level) {
  long i = static_cast<long>(start_level);
  while (i >= 0) {
    const std::size_t li = static_cast<std::size_t>(i);
    bool extended = false;
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !extended; ++k) {
      for (std::size_t s = 0; s < strong_.size() && !extended; ++s) {
        bool fixes = true;
        for (std::size_t j = 0; j < li && fixes; ++j) fixes = strong_[s](base_[j]) == base_[j];
        if (!fixes) continue;
        const Level& lv = levels_[li];
        const auto image = strong_[s](lv.orbit[k]);
        const Perm schreier = lv.transversal[k] * strong_[s] *
                              lv.transversal[static_cast<std::size_t>(lv.orbit_index[image])].inverse();
        auto [residue, level] = sift(schreier, li + 1);
        if (residue.is_identity()) continue;
        strong_.push_back(residue);
        if (level == levels_.size()) append_base_point(residue);
        for (std::size_t l = li + 1; l <= level && l < levels_.size(); ++l) rebuild_orbit(l);
        i = static_cast<long>(level < levels_.size() ? level : levels_.size() - 1);
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

PermGroup mlt_group(const FiniteLoop& loop) {
  const std::size_t n = loop.order();
  std::vector<Perm> gens;
  gens.reserve(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::uint16_t> left(n), right(n);
    for (std::size_t x = 0; x < n; ++x) {
      left[x] = loop.mul(static_cast<Elem>(a), static_cast<Elem>(x));
      right[x] = loop.mul(static_cast<Elem>(x), static_cast<Elem>(a));
    }
    gens.emplace_back(std::move(left));
    gens.emplace_back(std::move(right));
  }
  return PermGroup(n, std::move(gens));
}

std::size_t closure_size(std::size_t degree, const std::vector<Perm>& generators, std::size_t cap) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : generators) {
        Perm q = p * g;
        if (seen.insert(q).second) {
          if (seen.size() > cap) throw Error(Errc::IterationBound, "closure exceeds cap");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

NilpotenceResult is_nilpotent_group(const PermGroup& group) {
  NilpotenceResult out;
  const BigInt order = group.order();
  out.series_orders.push_back(order);
  if (order == 1) {
    out.nilpotent = true;
    return out;
  }
  // Every proper descent at least halves the order.
  int bound = 2;
  for (BigInt o = order; o > 1; o /= 2) ++bound;

  const auto& top = group.generators();
  PermGroup current = group;
  for (int step = 1; step <= bound; ++step) {
    std::vector<Perm> comms;
    for (const Perm& a : current.generators())
      for (const Perm& g : top) {
        Perm c = commutator(a, g);
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    PermGroup next(group.degree(), {});
    std::vector<Perm> queue;
    for (const Perm& c : comms)
      if (next.add_generator(c)) queue.push_back(c);
    while (!queue.empty()) {
      Perm k = std::move(queue.back());
      queue.pop_back();
      for (const Perm& y : top) {
        Perm conj = y.inverse() * k * y;
        if (next.add_generator(conj)) queue.push_back(std::move(conj));
      }
    }
    out.series_orders.push_back(next.order());
    bool all_trivial = true;
    for (const Perm& g : next.generators()) all_trivial = all_trivial && g.is_identity();
    if (all_trivial) {
      out.nilpotent = true;
      out.nilpotency_class = step;
      return out;
    }
    bool stalled = true;
    for (const Perm& g : current.generators()) stalled = stalled && next.contains(g);
    if (stalled) {
      out.nilpotent = false;
      return out;
    }
    current = std::move(next);
  }
  throw Error(Errc::IterationBound,
              "lower central series did not settle within " + std::to_string(bound) + " steps");
}

bool is_p_group(const PermGroup& group, std::uint64_t p) {
  BigInt o = group.order();
  while (o % p == 0) o /= p;
  return o == 1;
}

}  // namespace loopkit
