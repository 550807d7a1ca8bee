#include "denial/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace denial {

using C = ConditionId;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

}  // namespace

Lattice Lattice::build() {
  Lattice lat;
  auto add = [&](const std::string& label, ConditionVector set,
                 std::optional<AttackClass> binding) -> NodeId {
    NodeId id = static_cast<NodeId>(lat.nodes_.size());
    lat.nodes_.push_back({id, label, set, binding});
    return id;
  };

  NodeId top = add("C0-top", ConditionVector{C::C0}, std::nullopt);
  NodeId dos = add("DoS/C1", ConditionVector{C::C0, C::C1}, AttackClass::DoS);
  NodeId ddos =
      add("DDoS/C2", ConditionVector{C::C0, C::C2}, AttackClass::DDoS);
  NodeId c3 = add("C3", ConditionVector{C::C0, C::C3}, std::nullopt);
  NodeId edos =
      add("EDoS/C4", ConditionVector{C::C0, C::C4}, AttackClass::EDoS);
  NodeId c5 = add("C5", ConditionVector{C::C0, C::C4, C::C5}, std::nullopt);
  NodeId ldos =
      add("LDoS", ConditionVector{C::C0, C::C1, C::C3}, AttackClass::LDoS);
  NodeId lddos =
      add("LDDoS", ConditionVector{C::C0, C::C2, C::C3}, AttackClass::LDDoS);
  NodeId dow = add("DoW", ConditionVector{C::C0, C::C1, C::C4, C::C5},
                   AttackClass::DoW);
  NodeId ddow = add("DDoW", ConditionVector{C::C0, C::C2, C::C4, C::C5},
                    AttackClass::DDoW);
  NodeId bottom =
      add("bottom", ConditionVector{C::C0, C::C1, C::C2, C::C3, C::C4, C::C5},
          std::nullopt);

  lat.top_ = top;
  lat.bottom_ = bottom;
  lat.covers_ = {
      {bottom, dow},  {bottom, ldos}, {bottom, ddow}, {bottom, lddos},
      {ldos, dos},    {ldos, c3},     {lddos, c3},    {lddos, ddos},
      {dow, dos},     {dow, c5},      {ddow, c5},     {ddow, ddos},
      {c5, edos},     {c3, top},      {edos, top},    {dos, top},
      {ddos, top},
  };

  // Reflexive-transitive closure of the cover relation.
  const int n = static_cast<int>(lat.nodes_.size());
  lat.leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) lat.leq_[i][i] = true;
  for (auto [child, parent] : lat.covers_) lat.leq_[child][parent] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lat.leq_[i][k] && lat.leq_[k][j]) lat.leq_[i][j] = true;

  lat.validate();
  return lat;
}

void Lattice::validate() const {
  const int n = static_cast<int>(nodes_.size());
  if (n != 11 || covers_.size() != 17)
    throw std::logic_error("lattice: wrong node or edge count");

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // Order must agree with condition-set containment.
      bool superset = nodes_[a].condition_set.is_superset_of(
          nodes_[b].condition_set);
      if (leq_[a][b] != superset)
        throw std::logic_error("lattice: order disagrees with condition sets "
                               "at " + nodes_[a].label + " / " +
                               nodes_[b].label);
      if (a != b && leq_[a][b] && leq_[b][a])
        throw std::logic_error("lattice: cycle detected");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!leq_[a][top_] || !leq_[bottom_][a])
      throw std::logic_error("lattice: top/bottom not universal bounds");
    for (int b = 0; b < n; ++b) {
      meet(a, b);  // throws on missing/ambiguous bound
      join(a, b);
    }
  }
  // Class bindings must mirror the taxonomy's required-condition sets.
  for (const auto& node : nodes_) {
    if (node.class_binding &&
        required_conditions(*node.class_binding) != node.condition_set)
      throw std::logic_error("lattice: class binding mismatch at " +
                             node.label);
  }
}

const LatticeNode& Lattice::node(NodeId id) const {
  if (id < 0 || id >= static_cast<NodeId>(nodes_.size()))
    throw std::invalid_argument("unknown node id " + std::to_string(id));
  return nodes_[id];
}

std::optional<NodeId> Lattice::find(const std::string& name) const {
  std::string key = lower(name);
  for (const auto& node : nodes_) {
    std::string label = lower(node.label);
    if (key == label) return node.id;
    // Either half of a dual label ("DoS/C1") works, as do the aliases
    // "top" and "C0".
    auto slash = label.find('/');
    if (slash != std::string::npos &&
        (key == label.substr(0, slash) || key == label.substr(slash + 1)))
      return node.id;
  }
  if (key == "top" || key == "c0") return top_;
  return std::nullopt;
}

NodeId Lattice::resolve(const std::string& name) const {
  if (auto id = find(name)) return *id;
  std::string valid;
  for (const auto& node : nodes_) {
    if (!valid.empty()) valid += ", ";
    valid += node.label;
  }
  throw std::invalid_argument("unknown node name \"" + name +
                              "\"; valid names: " + valid);
}

bool Lattice::leq(NodeId a, NodeId b) const {
  node(a);
  node(b);
  return leq_[a][b];
}

NodeId Lattice::meet(NodeId a, NodeId b) const {
  node(a);
  node(b);
  // Greatest common lower bound by explicit scan; condition-set union of
  // two nodes is not always itself a node, so set algebra would be wrong.
  NodeId best = -1;
  for (NodeId x = 0; x < static_cast<NodeId>(nodes_.size()); ++x) {
    if (!leq_[x][a] || !leq_[x][b]) continue;
    if (best == -1 || leq_[best][x]) best = x;
  }
  if (best == -1) throw std::logic_error("lattice: no common lower bound");
  for (NodeId x = 0; x < static_cast<NodeId>(nodes_.size()); ++x)
    if (leq_[x][a] && leq_[x][b] && !leq_[x][best])
      throw std::logic_error("lattice: meet not unique");
  return best;
}

NodeId Lattice::join(NodeId a, NodeId b) const {
  node(a);
  node(b);
  NodeId best = -1;
  for (NodeId x = 0; x < static_cast<NodeId>(nodes_.size()); ++x) {
    if (!leq_[a][x] || !leq_[b][x]) continue;
    if (best == -1 || leq_[x][best]) best = x;
  }
  if (best == -1) throw std::logic_error("lattice: no common upper bound");
  for (NodeId x = 0; x < static_cast<NodeId>(nodes_.size()); ++x)
    if (leq_[a][x] && leq_[b][x] && !leq_[best][x])
      throw std::logic_error("lattice: join not unique");
  return best;
}

ConstructionChain Lattice::construction_chain(NodeId from, NodeId to) const {
  node(from);
  node(to);
  if (!leq_[to][from])
    throw std::invalid_argument("nodes not comparable: " + nodes_[to].label +
                                " is not below " + nodes_[from].label);
  ConstructionChain chain;
  NodeId cur = from;
  while (cur != to) {
    NodeId next = -1;
    int best_added = 7;
    for (auto [child, parent] : covers_) {
      if (parent != cur || !leq_[to][child]) continue;
      ConditionVector added =
          nodes_[child].condition_set.difference(nodes_[cur].condition_set);
      int smallest = static_cast<int>(added.members().front());
      if (smallest < best_added) {
        best_added = smallest;
        next = child;
      }
    }
    if (next == -1) throw std::logic_error("lattice: broken cover path");
    chain.steps.push_back(
        {next,
         nodes_[next].condition_set.difference(nodes_[cur].condition_set)});
    cur = next;
  }
  return chain;
}

std::vector<std::pair<AttackClass, int>> Lattice::nearest_classes(
    const ConditionVector& v) {
  std::vector<std::pair<AttackClass, int>> out;
  for (auto cls : kAllClasses)
    out.emplace_back(cls, v.hamming_distance(required_conditions(cls)));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) {
                     return a.second < b.second;
                   });
  return out;
}

std::string Lattice::edge_list_text() const {
  std::string out;
  for (auto [child, parent] : covers_)
    out += nodes_[child].label + " -> " + nodes_[parent].label + "\n";
  return out;
}

std::string Lattice::to_dot() const {
  std::string out = "digraph denial_lattice {\n  rankdir=BT;\n";
  for (const auto& node : nodes_)
    out += "  n" + std::to_string(node.id) + " [label=\"" + node.label +
           "\\n{" + node.condition_set.canonical_text() + "}\"];\n";
  for (auto [child, parent] : covers_)
    out += "  n" + std::to_string(child) + " -> n" + std::to_string(parent) +
           ";\n";
  out += "}\n";
  return out;
}

}  // namespace denial
