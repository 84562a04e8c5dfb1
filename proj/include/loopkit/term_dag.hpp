#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "loopkit/loop.hpp"

namespace loopkit {

// Binary terms over the loop signature {., \, /} in two variables, stored as a
// hash-consed DAG. Children always precede their parents.
enum class Op : std::uint8_t { VarX, VarY, Mul, LDiv, RDiv };

using NodeId = std::uint32_t;

struct TermNode {
  Op op;
  NodeId left;
  NodeId right;
  bool operator==(const TermNode&) const = default;
};

class TermDag {
 public:
  static constexpr NodeId kX = 0;
  static constexpr NodeId kY = 1;

  TermDag();
  // Rebuilds from a raw node list; throws MalformedTerm when ill-formed.
  TermDag(std::vector<TermNode> nodes, NodeId root);

  NodeId add(Op op, NodeId left, NodeId right);
  NodeId mul(NodeId a, NodeId b) { return add(Op::Mul, a, b); }
  NodeId ldiv(NodeId a, NodeId b) { return add(Op::LDiv, a, b); }
  NodeId rdiv(NodeId a, NodeId b) { return add(Op::RDiv, a, b); }

  // Copy of the term rooted at `term` with x := a and y := b.
  NodeId substitute(NodeId term, NodeId a, NodeId b);

  NodeId root() const noexcept { return root_; }
  void set_root(NodeId r);
  const std::vector<TermNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  // Only the nodes reachable from `root`, renumbered; x and y stay at 0 and 1.
  TermDag compacted(NodeId root) const;

 private:
  struct NodeHash {
    std::size_t operator()(const TermNode& n) const noexcept {
      return (static_cast<std::size_t>(n.op) * 0x9E3779B97F4A7C15ULL) ^
             (static_cast<std::size_t>(n.left) << 32) ^ n.right;
    }
  };

  std::vector<TermNode> nodes_;
  std::unordered_map<TermNode, NodeId, NodeHash> index_;
  NodeId root_ = kX;
};

Elem eval_term(const FiniteLoop& loop, const TermDag& term, Elem x, Elem y);
// Value table of the term on every pair (row x, column y).
CayleyTable eval_table(const FiniteLoop& loop, const TermDag& term);

}  // namespace loopkit
