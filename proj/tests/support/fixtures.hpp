#pragma once

// Small hand-built networks shared by the tests.

#include "spinal/network.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using spinal::VertexKind;

// Small named-vertex builder: kinds are inferred from degrees, leaves
// named by a number get that number as a label when `labeled` is set.
class Sketch {
public:
  explicit Sketch(bool labeled) : labeled_(labeled) {}

  Sketch& arcs(const std::string& tail, std::initializer_list<std::string> heads) {
    for (const auto& h : heads) arcs_.emplace_back(tail, h);
    note(tail);
    for (const auto& h : heads) note(h);
    return *this;
  }

  spinal::PhyloNetwork build() const {
    std::map<std::string, int> in, out;
    for (const auto& [t, h] : arcs_) {
      ++out[t];
      ++in[h];
    }
    spinal::NetworkBuilder b;
    std::map<std::string, spinal::VertexId> id;
    for (const auto& name : names_) {
      VertexKind kind = VertexKind::tree;
      if (in[name] == 0) kind = VertexKind::root;
      else if (out[name] == 0) kind = VertexKind::leaf;
      else if (in[name] == 2) kind = VertexKind::reticulation;
      std::optional<int> label;
      if (kind == VertexKind::leaf && labeled_) label = std::stoi(name);
      id[name] = b.add(kind, label);
    }
    for (const auto& [t, h] : arcs_) b.arc(id.at(t), id.at(h));
    return b.build();
  }

private:
  void note(const std::string& name) {
    for (const auto& n : names_) {
      if (n == name) return;
    }
    names_.push_back(name);
  }

  bool labeled_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::string, std::string>> arcs_;
};

/// Not tree-child: A2 has two reticulation children.
inline spinal::PhyloNetwork not_tree_child_net() {
  return Sketch(true)
      .arcs("rho", {"root"})
      .arcs("root", {"A", "B"})
      .arcs("A", {"A1", "A2"})
      .arcs("A1", {"r1", "1"})
      .arcs("A2", {"r1", "r2"})
      .arcs("B", {"r2", "4"})
      .arcs("r1", {"2"})
      .arcs("r2", {"3"})
      .build();
}

/// Tree-child on five leaves, without a spine.
inline spinal::PhyloNetwork tree_child_net() {
  return Sketch(true)
      .arcs("rho", {"root"})
      .arcs("root", {"A", "B"})
      .arcs("A", {"A1", "A2"})
      .arcs("A1", {"r1", "1"})
      .arcs("A2", {"r1", "3"})
      .arcs("B", {"5", "2"})
      .arcs("r1", {"4"})
      .build();
}

/// The worked encoding example: five leaves, two reticulations, unlabeled.
inline spinal::PhyloNetwork worked_net() {
  return Sketch(false)
      .arcs("u0", {"u1"})
      .arcs("u1", {"w1", "u2"})
      .arcs("u2", {"u3", "u5"})
      .arcs("u3", {"u4", "u7"})
      .arcs("u4", {"v5", "u5"})
      .arcs("u5", {"u6"})
      .arcs("u6", {"v7", "u7"})
      .arcs("u7", {"u8"})
      .arcs("u8", {"u9", "w2"})
      .build();
}

/// The caterpillar example: the spine of worked_net with caterpillars hanging
/// off u4 and u6.
inline spinal::PhyloNetwork caterpillar_net() {
  return Sketch(false)
      .arcs("u0", {"u1"})
      .arcs("u1", {"w1", "u2"})
      .arcs("u2", {"u3", "u5"})
      .arcs("u3", {"u4", "u7"})
      .arcs("u4", {"e1", "u5"})
      .arcs("e1", {"e11", "e12"})
      .arcs("u5", {"u6"})
      .arcs("u6", {"g1", "u7"})
      .arcs("g1", {"g11", "g12"})
      .arcs("g11", {"g111", "g112"})
      .arcs("u7", {"u8"})
      .arcs("u8", {"u9", "w2"})
      .build();
}

/// Marked-tree example, cherry case: six leaves, three reticulations,
/// bottom cherry {5, 6}.
inline spinal::PhyloNetwork cherry_net() {
  return Sketch(true)
      .arcs("a", {"b"})
      .arcs("b", {"c", "1"})
      .arcs("c", {"d", "f"})
      .arcs("d", {"e", "i"})
      .arcs("e", {"2", "f"})
      .arcs("f", {"g"})
      .arcs("g", {"h", "k"})
      .arcs("h", {"3", "i"})
      .arcs("i", {"j"})
      .arcs("j", {"k", "4"})
      .arcs("k", {"l"})
      .arcs("l", {"5", "6"})
      .build();
}

/// Non-cherry example: five leaves, three reticulations, p = g.
inline spinal::PhyloNetwork non_cherry_net() {
  return Sketch(true)
      .arcs("a", {"b"})
      .arcs("b", {"c", "1"})
      .arcs("c", {"d", "f"})
      .arcs("d", {"e", "i"})
      .arcs("e", {"2", "f"})
      .arcs("f", {"g"})
      .arcs("g", {"h", "k"})
      .arcs("h", {"3", "i"})
      .arcs("i", {"j"})
      .arcs("j", {"k", "4"})
      .arcs("k", {"5"})
      .build();
}

/// The cherry network left after removing p and r_3 from non_cherry_net.
inline spinal::PhyloNetwork reduced_cherry_net() {
  return Sketch(true)
      .arcs("a", {"b"})
      .arcs("b", {"c", "1"})
      .arcs("c", {"d", "f"})
      .arcs("d", {"e", "i"})
      .arcs("e", {"2", "f"})
      .arcs("f", {"h"})
      .arcs("h", {"3", "i"})
      .arcs("i", {"j"})
      .arcs("j", {"5", "4"})
      .build();
}

} // namespace fixtures
