#include <algorithm>
#include <map>

#include "loopkit/loop.hpp"

namespace loopkit {

namespace {

constexpr Elem kUnset = 0xFFFF;

struct Signature {
  std::uint64_t left_order;
  std::vector<std::size_t> right_cycles;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const FiniteLoop& loop) {
  std::vector<Signature> out;
  out.reserve(loop.order());
  for (std::size_t x = 0; x < loop.order(); ++x)
    out.push_back({left_order(loop, static_cast<Elem>(x)),
                   right_translation_cycle_type(loop, static_cast<Elem>(x))});
  return out;
}

struct PartialMap {
  std::vector<Elem> fwd;
  std::vector<Elem> bwd;
  std::vector<Elem> known;  // domain elements with an image, in discovery order
};

class IsoSearch {
 public:
  IsoSearch(const FiniteLoop& a, const FiniteLoop& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)) {}

  std::optional<LoopMap> run() {
    const std::size_t n = a_.order();
    if (b_.order() != n) return std::nullopt;
    {
      auto sa = sig_a_, sb = sig_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    choose_generators();
    PartialMap start{std::vector<Elem>(n, kUnset), std::vector<Elem>(n, kUnset), {}};
    if (!assign(start, 0, 0)) return std::nullopt;
    return search(start, 0);
  }

 private:
  // Greedy generating sequence, preferring elements with rare signatures.
  void choose_generators() {
    const std::size_t n = a_.order();
    std::map<Signature, std::size_t> freq;
    for (const auto& s : sig_a_) ++freq[s];
    std::vector<Elem> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Elem>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](Elem x, Elem y) { return freq[sig_a_[x]] < freq[sig_a_[y]]; });
    std::vector<Elem> gens;
    Subloop span = trivial_subloop();
    for (Elem x : order) {
      if (span.contains(x)) continue;
      gens.push_back(x);
      span = subloop_generated(a_, gens);
      if (span.size() == n) break;
    }
    gens_ = std::move(gens);
  }

  bool assign(PartialMap& m, Elem x, Elem y) const {
    if (m.fwd[x] != kUnset) return m.fwd[x] == y;
    if (m.bwd[y] != kUnset || sig_a_[x] != sig_b_[y]) return false;
    m.fwd[x] = y;
    m.bwd[y] = x;
    m.known.push_back(x);
    return true;
  }

  // Propagates the map through products and divisions of known elements.
  bool close(PartialMap& m, std::size_t from) const {
    for (std::size_t i = from; i < m.known.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem u = m.known[i], v = m.known[j];
        const Elem fu = m.fwd[u], fv = m.fwd[v];
        if (!assign(m, a_.mul(u, v), b_.mul(fu, fv)) || !assign(m, a_.mul(v, u), b_.mul(fv, fu)) ||
            !assign(m, a_.ldiv(u, v), b_.ldiv(fu, fv)) ||
            !assign(m, a_.ldiv(v, u), b_.ldiv(fv, fu)) ||
            !assign(m, a_.rdiv(u, v), b_.rdiv(fu, fv)) || !assign(m, a_.rdiv(v, u), b_.rdiv(fv, fu)))
          return false;
      }
    }
    return true;
  }

  std::optional<LoopMap> search(const PartialMap& m, std::size_t depth) const {
    if (depth == gens_.size()) {
      LoopMap map{m.fwd};
      if (m.known.size() == a_.order() && is_isomorphism(a_, b_, map)) return map;
      return std::nullopt;
    }
    const Elem g = gens_[depth];
    for (std::size_t y = 0; y < b_.order(); ++y) {
      PartialMap next = m;
      const std::size_t from = next.known.size();
      if (!assign(next, g, static_cast<Elem>(y))) continue;
      if (!close(next, from)) continue;
      if (auto found = search(next, depth + 1)) return found;
    }
    return std::nullopt;
  }

  const FiniteLoop& a_;
  const FiniteLoop& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Elem> gens_;
};

}  // namespace

std::optional<LoopMap> find_isomorphism(const FiniteLoop& a, const FiniteLoop& b) {
  return IsoSearch(a, b).run();
}

}  // namespace loopkit
