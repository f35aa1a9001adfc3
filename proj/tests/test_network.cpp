#include "spinal/errors.hpp"
#include "spinal/network.hpp"
#include "spinal/network_io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace spinal;

namespace {

PhyloNetwork single_leaf() {
  NetworkBuilder b;
  const auto r = b.add(VertexKind::root);
  const auto l = b.add(VertexKind::leaf, 1);
  b.arc(r, l);
  return b.build();
}

} // namespace

TEST(Validate, SmallNetworksAreBinaryPhylogenetic) {
  EXPECT_TRUE(validate(fixtures::not_tree_child_net()).ok());
  EXPECT_TRUE(validate(fixtures::tree_child_net()).ok());
  EXPECT_EQ(fixtures::not_tree_child_net().leaf_count(), 4);
  EXPECT_EQ(fixtures::tree_child_net().leaf_count(), 5);
  EXPECT_EQ(fixtures::not_tree_child_net().reticulation_count(), 2);
  EXPECT_EQ(fixtures::tree_child_net().reticulation_count(), 1);
}

TEST(Validate, ReportsEveryViolation) {
  // two roots, a cycle and a tree vertex with one child
  PhyloNetwork net({{0, VertexKind::root, {}},
                    {1, VertexKind::root, {}},
                    {2, VertexKind::tree, {}},
                    {3, VertexKind::tree, {}},
                    {4, VertexKind::leaf, {}}},
                   {{0, 2}, {1, 3}, {2, 3}, {3, 2}, {3, 4}});
  const auto r = validate(net);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.count(Violation::Kind::root_count), 1u);
  EXPECT_EQ(r.count(Violation::Kind::cycle), 1u);
  EXPECT_GE(r.count(Violation::Kind::degree), 1u);
  EXPECT_THROW(require_valid(net), InvalidNetworkError);
}

TEST(Validate, DanglingDuplicateAndSelfLoop) {
  PhyloNetwork net({{0, VertexKind::root, {}}, {1, VertexKind::leaf, {}}, {1, VertexKind::leaf, {}}},
                   {{0, 1}, {0, 1}, {0, 7}, {1, 1}});
  const auto r = validate(net);
  EXPECT_EQ(r.count(Violation::Kind::duplicate_vertex), 1u);
  EXPECT_EQ(r.count(Violation::Kind::duplicate_arc), 1u);
  EXPECT_EQ(r.count(Violation::Kind::dangling_arc), 1u);
  EXPECT_EQ(r.count(Violation::Kind::self_loop), 1u);
}

TEST(Validate, PartialLabelsAreRejected) {
  PhyloNetwork net({{0, VertexKind::root, {}},
                    {1, VertexKind::tree, {}},
                    {2, VertexKind::leaf, 1},
                    {3, VertexKind::leaf, {}}},
                   {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_EQ(validate(net).count(Violation::Kind::labels), 1u);
}

TEST(Validate, UnknownVertexThrows) { EXPECT_THROW(single_leaf().children(42), InvalidNetworkError); }

TEST(TreeChild, SmallNetworks) {
  EXPECT_FALSE(is_tree_child(fixtures::not_tree_child_net()));
  EXPECT_TRUE(is_tree_child(fixtures::tree_child_net()));
}

TEST(Spines, WorkedExampleSpinesDifferOnlyInTheCherry) {
  const auto net = fixtures::worked_net();
  const auto spines = find_spines(net);
  ASSERT_EQ(spines.size(), 2u);
  EXPECT_NE(spines[0].terminal(), spines[1].terminal());
  EXPECT_TRUE(std::equal(spines[0].path.begin(), spines[0].path.end() - 1, spines[1].path.begin()));
  EXPECT_EQ(spines[0].length(), 9u);
  EXPECT_EQ(spines[0].reticulation_positions.size(), 2u);
  EXPECT_EQ(classify_terminal(net, spines[0]), TerminalShape::cherry);
  EXPECT_TRUE(is_spinal_tree_child(net));
}

TEST(Spines, LemmaOnWorkedExample) {
  // n = 5 leaves, k = 2 reticulations
  const auto net = fixtures::worked_net();
  const auto m = spine_metrics(net, find_spines(net).front());
  EXPECT_EQ(m.tree_vertices, 5 + 2 - 1);
  EXPECT_EQ(m.spine_length, 5 + 2 * 2);
}

TEST(Spines, TreeChildWithoutSpine) {
  EXPECT_TRUE(find_spines(fixtures::tree_child_net()).empty());
  EXPECT_FALSE(is_spinal_tree_child(fixtures::tree_child_net()));
}

TEST(Spines, LabeledCherryHasTwoSpines) {
  const auto net = fixtures::cherry_net();
  const auto spines = find_spines(net);
  ASSERT_EQ(spines.size(), 2u);
  for (const auto& sp : spines) EXPECT_EQ(classify_terminal(net, sp), TerminalShape::cherry);
  const auto nc = fixtures::non_cherry_net();
  ASSERT_EQ(find_spines(nc).size(), 1u);
  EXPECT_EQ(classify_terminal(nc, find_spines(nc).front()), TerminalShape::non_cherry);
}

TEST(Spines, MetricsRejectForeignPath) {
  const auto net = fixtures::worked_net();
  Spine bogus{{0, 1}, {}};
  EXPECT_THROW(spine_metrics(net, bogus), SpineMismatchError);
}

TEST(Spines, SingleLeaf) {
  const auto net = single_leaf();
  EXPECT_TRUE(is_spinal_tree_child(net));
  ASSERT_EQ(find_spines(net).size(), 1u);
  EXPECT_EQ(find_spines(net)[0].length(), 1u);
}

TEST(Lrq, WorkedExampleReading) {
  const auto net = fixtures::worked_net();
  EXPECT_EQ(read_spine_lrq(net, find_spines(net).front()).to_string(), "L R1 L R2 L Q1 Q2 L");
}

TEST(Canonical, InvariantUnderRenumbering) {
  for (const auto& net : {fixtures::worked_net(), fixtures::not_tree_child_net(), fixtures::caterpillar_net(), fixtures::cherry_net()}) {
    const auto moved = net.renumbered([](VertexId v) { return 1000 - 3 * v; });
    EXPECT_EQ(canonical_form(net), canonical_form(moved));
    EXPECT_EQ(search_canonical_form(net), search_canonical_form(moved));
    EXPECT_TRUE(isomorphic(net, moved));
    EXPECT_TRUE(oracle::same_shape(net, moved));
  }
}

TEST(Canonical, SeparatesDifferentShapes) {
  EXPECT_NE(canonical_form(fixtures::worked_net()), canonical_form(fixtures::caterpillar_net()));
  EXPECT_FALSE(isomorphic(fixtures::not_tree_child_net(), fixtures::tree_child_net()));
}

TEST(Canonical, LabelsMatter) {
  const auto net = fixtures::cherry_net();
  const auto l5 = *net.leaf_with_label(5);
  const auto l1 = *net.leaf_with_label(1);
  std::map<VertexId, int> labels;
  for (auto leaf : net.leaves()) labels[leaf] = *net.vertex(leaf).label;
  auto relabel = [&](std::map<VertexId, int> changes) {
    auto all = labels;
    for (const auto& [v, l] : changes) all[v] = l;
    return net.with_leaf_labels(all);
  };
  const auto swapped = relabel({{l5, 1}, {l1, 5}});
  EXPECT_FALSE(isomorphic(net, swapped));
  EXPECT_FALSE(oracle::same_shape(net, swapped));
  EXPECT_TRUE(isomorphic(net.unlabeled(), swapped.unlabeled()));
  // swapping the two cherry leaves is an automorphism
  const auto l6 = *net.leaf_with_label(6);
  EXPECT_TRUE(isomorphic(net, relabel({{l5, 6}, {l6, 5}})));
}

TEST(Canonical, MixedLabelModesThrow) {
  EXPECT_THROW(isomorphic(fixtures::worked_net(), fixtures::tree_child_net()), LabelModeError);
}

TEST(Canonical, AgreesWithBacktrackingOnFixtures) {
  const std::vector<PhyloNetwork> nets = {fixtures::worked_net(), fixtures::caterpillar_net(),
                                          fixtures::cherry_net().unlabeled(),
                                          fixtures::non_cherry_net().unlabeled()};
  for (std::size_t i = 0; i < nets.size(); ++i) {
    for (std::size_t j = 0; j < nets.size(); ++j) {
      EXPECT_EQ(isomorphic(nets[i], nets[j]), oracle::same_shape(nets[i], nets[j])) << i << "," << j;
    }
  }
}

TEST(Json, RoundtripKeepsEverything) {
  for (const auto& net : {fixtures::worked_net(), fixtures::tree_child_net(), single_leaf()}) {
    EXPECT_EQ(parse_network_json(format_network_json(net)), net);
    EXPECT_EQ(parse_network_json(format_network_json(net, true)), net);
  }
}

TEST(Json, SyntaxErrorCarriesLine) {
  try {
    parse_network_json("{\n \"n\": 1,\n \"k\": 0,\n oops\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.code(), "parse");
  }
}

TEST(Json, SchemaErrors) {
  EXPECT_THROW(parse_network_json("[]"), ParseError);
  EXPECT_THROW(parse_network_json(R"({"vertices":[{"id":0,"kind":"blob"}],"arcs":[]})"), ParseError);
  // declared n disagrees with the leaves
  EXPECT_THROW(parse_network_json(
                   R"({"n":2,"k":0,"labeled":false,"vertices":[{"id":0,"kind":"root"},{"id":1,"kind":"leaf"}],"arcs":[[0,1]]})"),
               ParseError);
}

TEST(Dot, ShapesAndArcs) {
  const std::string dot = format_network_dot(fixtures::tree_child_net());
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("shape=box"), std::string::npos);
  EXPECT_NE(dot.find("->"), std::string::npos);
}
