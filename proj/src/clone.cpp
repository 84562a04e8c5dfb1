#include "loopkit/clone.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

namespace loopkit {

namespace {

struct CellsHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(Elem)));
  }
};

}  // namespace

CayleyTable projection_x(std::size_t n) {
  CayleyTable t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t.at(x, y) = static_cast<Elem>(x);
  return t;
}

CayleyTable projection_y(std::size_t n) {
  CayleyTable t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t.at(x, y) = static_cast<Elem>(y);
  return t;
}

CayleyTable pointwise(const FiniteLoop& loop, const CayleyTable& f, const CayleyTable& g) {
  std::vector<Elem> cells(f.cells().size());
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = loop.mul(f.cells()[i], g.cells()[i]);
  return CayleyTable(f.order(), std::move(cells));
}

BinaryOpSet close_under_product(const FiniteLoop& loop, std::vector<CayleyTable> generators,
                                std::size_t cap) {
  BinaryOpSet out;
  out.cap = cap;
  if (generators.empty()) return out;
  const std::size_t n = generators.front().order();
  const std::size_t cells = n * n;

  std::unordered_set<std::vector<Elem>, CellsHash> seen;
  std::vector<std::vector<Elem>> all;
  std::vector<std::size_t> frontier;
  auto insert = [&](std::vector<Elem> v) {
    if (seen.contains(v)) return;
    seen.insert(v);
    frontier.push_back(all.size());
    all.push_back(std::move(v));
  };
  for (auto& g : generators) insert(g.cells());

  // Semi-naive: only products with at least one new factor can be new.
  std::vector<Elem> buf(cells);
  while (!frontier.empty() && all.size() <= cap) {
    const std::vector<std::size_t> fresh = std::move(frontier);
    frontier.clear();
    for (std::size_t a : fresh) {
      for (std::size_t b = 0; b < all.size() && all.size() <= cap; ++b) {
        for (int side = 0; side < 2; ++side) {
          const auto& u = side ? all[b] : all[a];
          const auto& v = side ? all[a] : all[b];
          for (std::size_t i = 0; i < cells; ++i) buf[i] = loop.mul(u[i], v[i]);
          insert(buf);
        }
      }
      if (all.size() > cap) break;
    }
  }
  out.cap_exceeded = all.size() > cap;
  std::sort(all.begin(), all.end());
  out.members.reserve(all.size());
  for (auto& v : all) out.members.emplace_back(n, std::move(v));
  return out;
}

BinaryOpSet binary_clone(const FiniteLoop& loop, std::size_t cap) {
  const std::size_t n = loop.order();
  return close_under_product(loop, {projection_x(n), projection_y(n)}, cap);
}

}  // namespace loopkit
