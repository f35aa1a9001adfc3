#pragma once

#include "spinal/network.hpp"
#include "spinal/word.hpp"

#include <vector>

namespace spinal {

struct PathComponent {
  enum class Kind { spinal_segment, exterior_leaf };
  std::vector<VertexId> vertices;
  Kind kind = Kind::spinal_segment;

  friend bool operator==(const PathComponent&, const PathComponent&) = default;
};

/// Components P_0..P_k followed by the exterior leaves, in reading order.
/// Accepts spinal and spinal caterpillar tree-child networks.
std::vector<PathComponent> decompose_paths(const PhyloNetwork& net);
/// Same, after checking that `spine` is a spine of `net`.
std::vector<PathComponent> decompose_paths(const PhyloNetwork& net, const Spine& spine);

/// Unlabeled spinal tree-child network on n leaves -> canonical word of C^1_{n-1,k}.
Word encode_nlstc(const PhyloNetwork& net);
PhyloNetwork decode_nlstc(const Word& w);

/// Unlabeled spinal caterpillar tree-child network -> canonical word of C^2_{n-1,k}.
Word encode_nlsctc(const PhyloNetwork& net);
PhyloNetwork decode_nlsctc(const Word& w);

LrqWord lrq_encode(const PhyloNetwork& net);

bool is_spinal_caterpillar_tree_child(const PhyloNetwork& net);

} // namespace spinal
