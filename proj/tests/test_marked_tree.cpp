#include "spinal/errors.hpp"
#include "spinal/marked_tree.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace spinal;

namespace {

Spine spine_ending_at(const PhyloNetwork& net, int label) {
  for (const auto& sp : find_spines(net)) {
    if (net.vertex(sp.terminal()).label == label) return sp;
  }
  throw std::runtime_error("no such spine");
}

int count_kind(const MarkedTree& mt, MarkedKind kind) {
  return static_cast<int>(std::count_if(mt.nodes.begin(), mt.nodes.end(), [kind](const MarkedNode& v) { return v.kind == kind; }));
}

} // namespace

TEST(MarkedTree, CherryExampleStructure) {
  const auto net = fixtures::cherry_net();
  const MarkedTree mt = network_to_marked_tree(net, spine_ending_at(net, 5));
  EXPECT_NO_THROW(check_marked_tree(mt));
  EXPECT_EQ(mt.leaf_count(), 5);
  EXPECT_EQ(mt.path_count(), 4);
  EXPECT_TRUE(mt.labeled());
  EXPECT_EQ(count_kind(mt, MarkedKind::labeled_elementary), 4);
  EXPECT_EQ(count_kind(mt, MarkedKind::unlabeled_elementary), 4);
  EXPECT_EQ(count_kind(mt, MarkedKind::tree), 4);
  EXPECT_EQ(count_kind(mt, MarkedKind::leaf), 5);

  // r_0 is the root; r_1, r_2, r_3 are the reticulations top to bottom
  EXPECT_EQ(mt.node(mt.root()).kind, MarkedKind::labeled_elementary);
  EXPECT_EQ(mt.node(mt.root()).label, 0);
  std::vector<VertexId> rets;
  for (const auto& v : net.vertices()) {
    if (v.kind == VertexKind::reticulation) rets.push_back(v.id);
  }
  std::vector<int> labels;
  for (auto r : rets) labels.push_back(*mt.node(r).label);
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<int>{1, 2, 3}));

  std::vector<int> leaf_labels;
  for (const auto& v : mt.nodes) {
    if (v.kind == MarkedKind::leaf) leaf_labels.push_back(*v.label);
  }
  std::sort(leaf_labels.begin(), leaf_labels.end());
  EXPECT_EQ(leaf_labels, (std::vector<int>{1, 2, 3, 4, 6}));
}

TEST(MarkedTree, CherryExampleRoundtrip) {
  const auto net = fixtures::cherry_net();
  for (int removed : {5, 6}) {
    const MarkedTree mt = network_to_marked_tree(net, spine_ending_at(net, removed));
    EXPECT_TRUE(oracle::same_shape(marked_tree_to_network(mt, removed), net));
  }
  const MarkedTree mt = network_to_marked_tree(net, spine_ending_at(net, 5));
  EXPECT_THROW(marked_tree_to_network(mt, 3), LabelCollisionError);
  EXPECT_THROW(marked_tree_to_network(mt, std::nullopt), LabelModeError);
}

TEST(MarkedTree, UnlabeledRoundtrip) {
  const auto net = fixtures::worked_net();
  const auto spine = find_spines(net).front();
  EXPECT_THROW(network_to_marked_tree(net, spine), LabelModeError);
  const auto labeled = fixtures::cherry_net();
  const MarkedTree mt = network_to_marked_tree(labeled, spine_ending_at(labeled, 6));
  MarkedTree bare = mt;
  for (auto& v : bare.nodes) {
    if (v.kind == MarkedKind::leaf) v.label.reset();
  }
  EXPECT_FALSE(bare.labeled());
  EXPECT_TRUE(oracle::same_shape(marked_tree_to_network(bare, std::nullopt), labeled.unlabeled()));
}

TEST(MarkedTree, NonCherryInputRejected) {
  const auto net = fixtures::non_cherry_net();
  EXPECT_THROW(network_to_marked_tree(net, find_spines(net).front()), NotMemberError);
}

TEST(MarkedTree, BrokenTreesAreReported) {
  const auto net = fixtures::cherry_net();
  MarkedTree mt = network_to_marked_tree(net, spine_ending_at(net, 5));
  MarkedTree cut = mt;
  cut.arcs.pop_back();
  EXPECT_THROW(check_marked_tree(cut), MarkedTreeError);
  MarkedTree relabeled = mt;
  for (auto& v : relabeled.nodes) {
    if (v.kind == MarkedKind::labeled_elementary && v.label == 0) v.label = 9;
  }
  EXPECT_THROW(check_marked_tree(relabeled), MarkedTreeError);
}

TEST(NonCherry, ExampleReduces) {
  const auto [reduced, choice] = non_cherry_to_cherry(fixtures::non_cherry_net());
  EXPECT_TRUE(validate(reduced).ok());
  EXPECT_TRUE(oracle::same_shape(reduced, fixtures::reduced_cherry_net()));
  EXPECT_EQ(reduced.reticulation_count(), 2);
  // r_3 sat above leaf 5 (the larger cherry label); p above the fifth spine tree vertex
  EXPECT_EQ(choice.cherry_arc, 1);
  EXPECT_EQ(choice.tree_node, 4);
}

TEST(NonCherry, ExampleRebuilds) {
  const auto back = cherry_to_non_cherry(fixtures::reduced_cherry_net(), 1, 4);
  EXPECT_TRUE(validate(back).ok());
  EXPECT_TRUE(is_tree_child(back));
  EXPECT_TRUE(oracle::same_shape(back, fixtures::non_cherry_net()));
}

TEST(NonCherry, AllChoicesAreDistinctAndInvertible) {
  const auto base = fixtures::reduced_cherry_net();
  const auto spine = find_spines(base).front();
  const int t = static_cast<int>(spine_tree_vertices(base, spine).size());
  EXPECT_EQ(t, 5 + 2 - 1);
  std::vector<PhyloNetwork> made;
  for (int arc = 0; arc < 2; ++arc) {
    for (int node = 0; node < t; ++node) {
      const auto nc = cherry_to_non_cherry(base, arc, node);
      EXPECT_TRUE(is_spinal_tree_child(nc));
      const auto [again, choice] = non_cherry_to_cherry(nc);
      EXPECT_EQ(again, base);
      EXPECT_EQ(choice, (NonCherryChoice{arc, node}));
      for (const auto& m : made) EXPECT_FALSE(oracle::same_shape(m, nc));
      made.push_back(nc);
    }
  }
  EXPECT_EQ(made.size(), 2u * (5 + 3 - 2));
}

TEST(NonCherry, InvalidChoices) {
  const auto base = fixtures::reduced_cherry_net();
  EXPECT_THROW(cherry_to_non_cherry(base, 2, 0), InvalidChoiceError);
  EXPECT_THROW(cherry_to_non_cherry(base, 0, 6), InvalidChoiceError);
  EXPECT_THROW(cherry_to_non_cherry(base, 0, -1), InvalidChoiceError);
  EXPECT_THROW(cherry_to_non_cherry(fixtures::non_cherry_net(), 0, 0), NotMemberError);
  EXPECT_THROW(non_cherry_to_cherry(base), NotMemberError);
}
