#pragma once

#include "spinal/network.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spinal {

enum class MarkedKind { labeled_elementary, unlabeled_elementary, tree, leaf };

std::string_view to_string(MarkedKind kind);

struct MarkedNode {
  VertexId id = 0;
  MarkedKind kind = MarkedKind::leaf;
  /// r-index for labeled elementary nodes, leaf label for labeled leaves.
  std::optional<int> label;

  friend bool operator==(const MarkedNode&, const MarkedNode&) = default;
};

/// Tree left after cutting a cherry spinal network open along its spine.
/// Paths start at the labeled elementary nodes r_0..r_{K-1} (r_0 is the
/// root) and end at an unlabeled elementary node whose only child is a leaf.
struct MarkedTree {
  std::vector<MarkedNode> nodes;
  std::vector<Arc> arcs;

  int leaf_count() const;
  int path_count() const;
  bool labeled() const;
  const MarkedNode& node(VertexId id) const;
  std::vector<VertexId> children(VertexId id) const;
  VertexId root() const;

  friend bool operator==(const MarkedTree&, const MarkedTree&) = default;
};

/// Throws MarkedTreeError naming the first broken condition.
void check_marked_tree(const MarkedTree& mt);

/// Labeled cherry network and one of its two spines -> marked tree on the
/// remaining n-1 leaves. Vertex ids are kept.
MarkedTree network_to_marked_tree(const PhyloNetwork& net, const Spine& spine);

/// Restores the spine arcs and a terminal leaf carrying `removed_label`
/// (omit it for unlabeled trees).
PhyloNetwork marked_tree_to_network(const MarkedTree& mt, std::optional<int> removed_label);

/// Subdivides one arc of the bottom cherry with a new reticulation r and the
/// spine arc into the `tree_node`-th spine tree vertex with a new vertex p,
/// then adds p -> r. Cherry arc 0 leads to the smaller leaf label (or the
/// smaller vertex id when unlabeled).
PhyloNetwork cherry_to_non_cherry(const PhyloNetwork& net, int cherry_arc, int tree_node);

struct NonCherryChoice {
  int cherry_arc = 0;
  int tree_node = 0;
  friend bool operator==(const NonCherryChoice&, const NonCherryChoice&) = default;
};

/// Inverse of cherry_to_non_cherry.
std::pair<PhyloNetwork, NonCherryChoice> non_cherry_to_cherry(const PhyloNetwork& net);

/// Spine tree vertices (root excluded) in top-to-bottom order.
std::vector<VertexId> spine_tree_vertices(const PhyloNetwork& net, const Spine& spine);

} // namespace spinal
