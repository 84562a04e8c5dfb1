#include "loopkit/term_dag.hpp"

#include <string>

#include "loopkit/error.hpp"

namespace loopkit {

namespace {
constexpr NodeId kUnmapped = 0xFFFFFFFF;
}

TermDag::TermDag() {
  nodes_.push_back({Op::VarX, 0, 0});
  nodes_.push_back({Op::VarY, 0, 0});
}

TermDag::TermDag(std::vector<TermNode> nodes, NodeId root) : TermDag() {
  if (nodes.size() < 2 || nodes[0].op != Op::VarX || nodes[1].op != Op::VarY)
    throw Error(Errc::MalformedTerm, "nodes 0 and 1 must be the variables x and y");
  for (std::size_t i = 2; i < nodes.size(); ++i) {
    const TermNode& n = nodes[i];
    if (n.op == Op::VarX || n.op == Op::VarY)
      throw Error(Errc::MalformedTerm, "variable node at position " + std::to_string(i));
    if (n.left >= i || n.right >= i)
      throw Error(Errc::MalformedTerm, "node " + std::to_string(i) + " refers forward");
    nodes_.push_back(n);
    index_.emplace(n, static_cast<NodeId>(i));
  }
  set_root(root);
}

NodeId TermDag::add(Op op, NodeId left, NodeId right) {
  if (op == Op::VarX) return kX;
  if (op == Op::VarY) return kY;
  if (left >= nodes_.size() || right >= nodes_.size())
    throw Error(Errc::MalformedTerm, "child index out of range");
  const TermNode node{op, left, right};
  if (auto it = index_.find(node); it != index_.end()) return it->second;
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(node);
  index_.emplace(node, id);
  return id;
}

NodeId TermDag::substitute(NodeId term, NodeId a, NodeId b) {
  if (term >= nodes_.size()) throw Error(Errc::MalformedTerm, "term index out of range");
  std::vector<NodeId> image(term + 1, kUnmapped);
  image[kX] = a;
  image[kY] = b;
  // Children precede parents, so one ascending pass over the cone suffices.
  std::vector<char> needed(term + 1, 0);
  needed[term] = 1;
  for (NodeId i = term; i > kY; --i) {
    if (!needed[i]) continue;
    needed[nodes_[i].left] = 1;
    needed[nodes_[i].right] = 1;
  }
  for (NodeId i = 2; i <= term; ++i) {
    if (!needed[i]) continue;
    const TermNode n = nodes_[i];
    image[i] = add(n.op, image[n.left], image[n.right]);
  }
  return image[term];
}

void TermDag::set_root(NodeId r) {
  if (r >= nodes_.size()) throw Error(Errc::MalformedTerm, "root index out of range");
  root_ = r;
}

TermDag TermDag::compacted(NodeId root) const {
  TermDag out;
  if (root >= nodes_.size()) throw Error(Errc::MalformedTerm, "root index out of range");
  std::vector<char> needed(root + 1, 0);
  needed[root] = 1;
  for (NodeId i = root; i > kY; --i) {
    if (!needed[i]) continue;
    needed[nodes_[i].left] = 1;
    needed[nodes_[i].right] = 1;
  }
  std::vector<NodeId> image(root + 1, kUnmapped);
  image[kX] = kX;
  image[kY] = kY;
  for (NodeId i = 2; i <= root; ++i)
    if (needed[i]) image[i] = out.add(nodes_[i].op, image[nodes_[i].left], image[nodes_[i].right]);
  out.set_root(image[root]);
  return out;
}

Elem eval_term(const FiniteLoop& loop, const TermDag& term, Elem x, Elem y) {
  const auto& nodes = term.nodes();
  std::vector<Elem> value(term.root() + 1);
  for (NodeId i = 0; i <= term.root(); ++i) {
    const TermNode& n = nodes[i];
    switch (n.op) {
      case Op::VarX: value[i] = x; break;
      case Op::VarY: value[i] = y; break;
      case Op::Mul: value[i] = loop.mul(value[n.left], value[n.right]); break;
      case Op::LDiv: value[i] = loop.ldiv(value[n.left], value[n.right]); break;
      case Op::RDiv: value[i] = loop.rdiv(value[n.left], value[n.right]); break;
      default: throw Error(Errc::MalformedTerm, "unknown opcode");
    }
  }
  return value[term.root()];
}

CayleyTable eval_table(const FiniteLoop& loop, const TermDag& term) {
  const std::size_t n = loop.order();
  CayleyTable out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out.at(x, y) = eval_term(loop, term, static_cast<Elem>(x), static_cast<Elem>(y));
  return out;
}

}  // namespace loopkit
