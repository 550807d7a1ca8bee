#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "denial/conditions.hpp"
#include "denial/taxonomy.hpp"

namespace denial {

/// Index into Lattice::nodes(); stable across builds.
using NodeId = int;

struct LatticeNode {
  NodeId id = -1;
  std::string label;             // e.g. "DoS/C1", "C3", "bottom"
  ConditionVector condition_set;
  std::optional<AttackClass> class_binding;
};

struct ChainStep {
  NodeId node;
  ConditionVector added_conditions;
};

/// A downward cover path: each step names the node reached and the
/// conditions its set adds over the previous one.
struct ConstructionChain {
  std::vector<ChainStep> steps;
};

/// The fixed 11-node conditional hierarchy of denial attacks, kept as an
/// explicit Hasse diagram. Order convention: a <= b means a's condition set
/// contains b's (more conditions = lower). The top is the bare-C0 node; the
/// bottom is the deliberately contradictory all-conditions element that
/// completes the lattice and is never a classification output.
class Lattice {
 public:
  /// Builds and validates the fixed structure. Throws std::logic_error if
  /// the embedded description breaks any lattice invariant.
  static Lattice build();

  const std::vector<LatticeNode>& nodes() const { return nodes_; }
  /// Hasse edges as (child, parent) pairs, child directly below parent.
  const std::vector<std::pair<NodeId, NodeId>>& covers() const {
    return covers_;
  }

  const LatticeNode& node(NodeId id) const;

  /// Resolves "DoS", "C1", "DoS/C1", "top", ... case-insensitively.
  std::optional<NodeId> find(const std::string& name) const;
  /// Like find() but throws std::invalid_argument listing valid names.
  NodeId resolve(const std::string& name) const;

  bool leq(NodeId a, NodeId b) const;
  NodeId meet(NodeId a, NodeId b) const;
  NodeId join(NodeId a, NodeId b) const;

  NodeId top() const { return top_; }
  NodeId bottom() const { return bottom_; }

  /// Cover path from `from` down to `to`; at forks the child adding the
  /// smallest condition id wins. Throws std::invalid_argument if `to` is
  /// not below-or-equal `from`.
  ConstructionChain construction_chain(NodeId from, NodeId to) const;

  /// All seven classes ranked by Hamming distance between v and their
  /// required conditions, ties broken in canonical class order.
  static std::vector<std::pair<AttackClass, int>> nearest_classes(
      const ConditionVector& v);

  /// "child -> parent" per line.
  std::string edge_list_text() const;
  std::string to_dot() const;

 private:
  Lattice() = default;
  void validate() const;

  std::vector<LatticeNode> nodes_;
  std::vector<std::pair<NodeId, NodeId>> covers_;
  // leq_[a][b] == a <= b, closed over cover edges.
  std::vector<std::vector<bool>> leq_;
  NodeId top_ = -1;
  NodeId bottom_ = -1;
};

}  // namespace denial
