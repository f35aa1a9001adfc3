#include "spinal/marked_tree.hpp"

#include "spinal/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace spinal {

std::string_view to_string(MarkedKind kind) {
  switch (kind) {
  case MarkedKind::labeled_elementary: return "labeled-elementary";
  case MarkedKind::unlabeled_elementary: return "unlabeled-elementary";
  case MarkedKind::tree: return "tree";
  case MarkedKind::leaf: return "leaf";
  }
  return "?";
}

int MarkedTree::leaf_count() const {
  return static_cast<int>(
      std::count_if(nodes.begin(), nodes.end(), [](const MarkedNode& v) { return v.kind == MarkedKind::leaf; }));
}

int MarkedTree::path_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const MarkedNode& v) {
    return v.kind == MarkedKind::labeled_elementary;
  }));
}

bool MarkedTree::labeled() const {
  return std::any_of(nodes.begin(), nodes.end(),
                     [](const MarkedNode& v) { return v.kind == MarkedKind::leaf && v.label; });
}

const MarkedNode& MarkedTree::node(VertexId id) const {
  for (const auto& v : nodes) {
    if (v.id == id) return v;
  }
  throw MarkedTreeError("unknown node " + std::to_string(id));
}

std::vector<VertexId> MarkedTree::children(VertexId id) const {
  std::vector<VertexId> out;
  for (const Arc& a : arcs) {
    if (a.tail == id) out.push_back(a.head);
  }
  return out;
}

VertexId MarkedTree::root() const {
  for (const auto& v : nodes) {
    if (v.kind == MarkedKind::labeled_elementary && v.label == 0) return v.id;
  }
  throw MarkedTreeError("no node labeled r_0");
}

namespace {

struct Index {
  std::unordered_map<VertexId, const MarkedNode*> node;
  std::unordered_map<VertexId, std::vector<VertexId>> children;
  std::unordered_map<VertexId, int> indegree;
};

Index index_tree(const MarkedTree& mt) {
  Index ix;
  for (const auto& v : mt.nodes) {
    if (!ix.node.emplace(v.id, &v).second) throw MarkedTreeError("node id " + std::to_string(v.id) + " repeated");
    ix.children[v.id];
    ix.indegree[v.id] = 0;
  }
  for (const Arc& a : mt.arcs) {
    if (!ix.node.count(a.tail) || !ix.node.count(a.head)) throw MarkedTreeError("arc with a missing endpoint");
    ix.children[a.tail].push_back(a.head);
    ++ix.indegree[a.head];
  }
  return ix;
}

// Walks path P_i from r_i; returns the unlabeled elementary node that ends it.
VertexId walk_path(const Index& ix, VertexId r, int i, std::vector<std::pair<VertexId, int>>& pending,
                   std::set<VertexId>& covered) {
  auto kind = [&ix](VertexId v) { return ix.node.at(v)->kind; };
  auto is_continuation = [&](VertexId v) {
    return kind(v) == MarkedKind::tree || kind(v) == MarkedKind::unlabeled_elementary;
  };
  VertexId cur = ix.children.at(r).front();
  while (true) {
    covered.insert(cur);
    if (!is_continuation(cur)) throw MarkedTreeError("path of r_" + std::to_string(i) + " reaches a " +
                                                     std::string(to_string(kind(cur))));
    const auto& ch = ix.children.at(cur);
    if (kind(cur) == MarkedKind::unlabeled_elementary) {
      if (kind(ch.front()) != MarkedKind::leaf) {
        throw MarkedTreeError("unlabeled elementary node " + std::to_string(cur) + " must have a leaf child");
      }
      covered.insert(ch.front());
      return cur;
    }
    const bool first = is_continuation(ch[0]);
    const bool second = is_continuation(ch[1]);
    if (first == second) {
      throw MarkedTreeError("tree node " + std::to_string(cur) + " needs exactly one child continuing its path");
    }
    const VertexId side = first ? ch[1] : ch[0];
    covered.insert(side);
    if (kind(side) == MarkedKind::labeled_elementary) {
      const int j = *ix.node.at(side)->label;
      if (j <= i) {
        throw MarkedTreeError("r_" + std::to_string(j) + " hangs off the path of r_" + std::to_string(i) +
                              " but needs a larger index");
      }
      pending.emplace_back(side, j);
    }
    cur = first ? ch[0] : ch[1];
  }
}

std::map<int, VertexId> path_ends(const MarkedTree& mt) {
  const Index ix = index_tree(mt);
  int roots = 0;
  for (const auto& v : mt.nodes) {
    const auto in = ix.indegree.at(v.id);
    const auto out = ix.children.at(v.id).size();
    std::size_t want_out = 0;
    switch (v.kind) {
    case MarkedKind::labeled_elementary:
    case MarkedKind::unlabeled_elementary: want_out = 1; break;
    case MarkedKind::tree: want_out = 2; break;
    case MarkedKind::leaf: want_out = 0; break;
    }
    if (out != want_out) throw MarkedTreeError("node " + std::to_string(v.id) + " has the wrong outdegree");
    if (in == 0) ++roots;
    if (in > 1) throw MarkedTreeError("node " + std::to_string(v.id) + " has several parents");
    if (v.kind == MarkedKind::labeled_elementary && (!v.label || *v.label < 0)) {
      throw MarkedTreeError("labeled elementary node " + std::to_string(v.id) + " lacks an index");
    }
    if (v.kind != MarkedKind::labeled_elementary && v.kind != MarkedKind::leaf && v.label) {
      throw MarkedTreeError("node " + std::to_string(v.id) + " must not carry a label");
    }
  }
  if (roots != 1) throw MarkedTreeError("expected a single root");
  const VertexId root = mt.root();
  if (ix.indegree.at(root) != 0) throw MarkedTreeError("r_0 is not the root");

  const int paths = mt.path_count();
  std::set<int> indices;
  int unlabeled_elementary = 0;
  std::set<int> leaf_labels;
  int labeled_leaves = 0;
  for (const auto& v : mt.nodes) {
    if (v.kind == MarkedKind::labeled_elementary) indices.insert(*v.label);
    if (v.kind == MarkedKind::unlabeled_elementary) ++unlabeled_elementary;
    if (v.kind == MarkedKind::leaf && v.label) {
      ++labeled_leaves;
      if (*v.label < 1 || !leaf_labels.insert(*v.label).second) throw MarkedTreeError("leaf labels must be distinct and positive");
    }
  }
  if (static_cast<int>(indices.size()) != paths || (paths > 0 && *indices.rbegin() != paths - 1)) {
    throw MarkedTreeError("path labels must be r_0..r_" + std::to_string(paths - 1));
  }
  if (unlabeled_elementary != paths) throw MarkedTreeError("need as many unlabeled as labeled elementary nodes");
  if (labeled_leaves != 0 && labeled_leaves != mt.leaf_count()) throw MarkedTreeError("leaves are partially labeled");

  std::map<int, VertexId> ends;
  std::set<VertexId> covered{root};
  std::vector<std::pair<VertexId, int>> pending{{root, 0}};
  while (!pending.empty()) {
    const auto [r, i] = pending.back();
    pending.pop_back();
    ends[i] = walk_path(ix, r, i, pending, covered);
  }
  if (covered.size() != mt.nodes.size()) throw MarkedTreeError("some nodes lie on no path");
  return ends;
}

void require_spinal_tree_child(const PhyloNetwork& net) {
  if (!is_spinal_tree_child(net)) throw NotMemberError("network is not spinal tree-child");
}

} // namespace

void check_marked_tree(const MarkedTree& mt) { path_ends(mt); }

MarkedTree network_to_marked_tree(const PhyloNetwork& net, const Spine& spine) {
  if (!net.labeled()) throw LabelModeError("marked trees are built from labeled networks");
  require_spinal_tree_child(net);
  if (net.leaf_count() < 2) throw NotMemberError("a marked tree needs at least two leaves");
  if (classify_terminal(net, spine) != TerminalShape::cherry) {
    throw NotMemberError("network is in the non-cherry case");
  }
  const auto& p = spine.path;
  const std::size_t ell = spine.length();
  std::set<Arc> cut;
  std::map<VertexId, int> r_index{{p[0], 0}};
  std::set<VertexId> s_nodes{p[ell - 1]};
  for (std::size_t j = 0; j < spine.reticulation_positions.size(); ++j) {
    const auto pos = spine.reticulation_positions[j];
    r_index[p[pos]] = static_cast<int>(j) + 1;
    s_nodes.insert(p[pos - 1]);
    cut.insert({p[pos - 1], p[pos]});
  }
  cut.insert({p[ell - 1], p[ell]});

  MarkedTree mt;
  for (const Vertex& v : net.vertices()) {
    if (v.id == p[ell]) continue;
    MarkedNode node{v.id, MarkedKind::tree, std::nullopt};
    if (r_index.count(v.id)) node = {v.id, MarkedKind::labeled_elementary, r_index[v.id]};
    else if (s_nodes.count(v.id)) node.kind = MarkedKind::unlabeled_elementary;
    else if (v.kind == VertexKind::leaf) node = {v.id, MarkedKind::leaf, v.label};
    mt.nodes.push_back(node);
  }
  for (const Arc& a : net.arcs()) {
    if (!cut.count(a)) mt.arcs.push_back(a);
  }
  return mt;
}

PhyloNetwork marked_tree_to_network(const MarkedTree& mt, std::optional<int> removed_label) {
  const auto ends = path_ends(mt);
  const int paths = mt.path_count();
  if (mt.labeled() != removed_label.has_value()) {
    throw LabelModeError(mt.labeled() ? "a labeled marked tree needs the removed leaf label"
                                      : "an unlabeled marked tree takes no removed leaf label");
  }
  if (removed_label) {
    const int n = mt.leaf_count() + 1;
    if (*removed_label < 1 || *removed_label > n) {
      throw LabelCollisionError("removed label " + std::to_string(*removed_label) + " outside 1.." + std::to_string(n));
    }
    for (const auto& v : mt.nodes) {
      if (v.kind == MarkedKind::leaf && v.label == removed_label) {
        throw LabelCollisionError("label " + std::to_string(*removed_label) + " is already used");
      }
      if (v.kind == MarkedKind::leaf && v.label && *v.label > n) {
        throw LabelCollisionError("leaf label " + std::to_string(*v.label) + " outside 1.." + std::to_string(n));
      }
    }
  }

  std::vector<Vertex> vertices;
  std::map<int, VertexId> r_node;
  VertexId max_id = -1;
  for (const auto& v : mt.nodes) {
    max_id = std::max(max_id, v.id);
    switch (v.kind) {
    case MarkedKind::labeled_elementary:
      r_node[*v.label] = v.id;
      vertices.push_back({v.id, *v.label == 0 ? VertexKind::root : VertexKind::reticulation, std::nullopt});
      break;
    case MarkedKind::unlabeled_elementary:
    case MarkedKind::tree: vertices.push_back({v.id, VertexKind::tree, std::nullopt}); break;
    case MarkedKind::leaf: vertices.push_back({v.id, VertexKind::leaf, v.label}); break;
    }
  }
  const VertexId terminal = max_id + 1;
  vertices.push_back({terminal, VertexKind::leaf, removed_label});
  std::vector<Arc> arcs = mt.arcs;
  for (int i = 0; i < paths; ++i) {
    arcs.push_back({ends.at(i), i + 1 < paths ? r_node.at(i + 1) : terminal});
  }
  return PhyloNetwork(std::move(vertices), std::move(arcs));
}

std::vector<VertexId> spine_tree_vertices(const PhyloNetwork& net, const Spine& spine) {
  std::vector<VertexId> out;
  for (VertexId v : spine.path) {
    if (net.vertex(v).kind == VertexKind::tree) out.push_back(v);
  }
  return out;
}

namespace {

// The two leaf children of the cherry vertex, ordered so that index 0 is arc 0.
std::pair<VertexId, VertexId> ordered_cherry(const PhyloNetwork& net, VertexId c) {
  const auto ch = net.children(c);
  VertexId a = ch[0];
  VertexId b = ch[1];
  const auto key = [&net](VertexId v) { return net.vertex(v).label.value_or(0); };
  if (std::make_pair(key(b), b) < std::make_pair(key(a), a)) std::swap(a, b);
  return {a, b};
}

} // namespace

PhyloNetwork cherry_to_non_cherry(const PhyloNetwork& net, int cherry_arc, int tree_node) {
  require_spinal_tree_child(net);
  const auto spine = find_spines(net).front();
  if (classify_terminal(net, spine) != TerminalShape::cherry || spine.length() < 2) {
    throw NotMemberError("network has no cherry at the bottom of its spine");
  }
  if (cherry_arc != 0 && cherry_arc != 1) throw InvalidChoiceError("cherry arc choice must be 0 or 1");
  const auto trees = spine_tree_vertices(net, spine);
  if (tree_node < 0 || tree_node >= static_cast<int>(trees.size())) {
    throw InvalidChoiceError("tree node choice must lie in 0.." + std::to_string(trees.size() - 1));
  }
  const VertexId c = spine.path[spine.length() - 1];
  const auto [first, second] = ordered_cherry(net, c);
  const VertexId leaf = cherry_arc == 0 ? first : second;
  const VertexId x = trees[static_cast<std::size_t>(tree_node)];
  const auto at = std::find(spine.path.begin(), spine.path.end(), x);
  const VertexId y = *(at - 1);

  const VertexId r = net.max_id() + 1;
  const VertexId p = net.max_id() + 2;
  std::vector<Vertex> vertices(net.vertices().begin(), net.vertices().end());
  vertices.push_back({r, VertexKind::reticulation, std::nullopt});
  vertices.push_back({p, VertexKind::tree, std::nullopt});
  std::vector<Arc> arcs;
  for (const Arc& a : net.arcs()) {
    if (a == Arc{c, leaf}) arcs.push_back({c, r});
    else if (a == Arc{y, x}) arcs.push_back({y, p});
    else arcs.push_back(a);
  }
  arcs.push_back({r, leaf});
  arcs.push_back({p, x});
  arcs.push_back({p, r});
  return PhyloNetwork(std::move(vertices), std::move(arcs));
}

std::pair<PhyloNetwork, NonCherryChoice> non_cherry_to_cherry(const PhyloNetwork& net) {
  require_spinal_tree_child(net);
  const auto spines = find_spines(net);
  const auto& spine = spines.front();
  if (classify_terminal(net, spine) != TerminalShape::non_cherry) {
    throw NotMemberError("network is in the cherry case");
  }
  const std::size_t ell = spine.length();
  const VertexId z = spine.path[ell];
  const VertexId r = spine.path[ell - 1];
  const VertexId s = spine.path[ell - 2];
  VertexId p = -1;
  for (VertexId q : net.parents(r)) {
    if (q != s) p = q;
  }
  VertexId x = -1;
  for (VertexId c : net.children(p)) {
    if (c != r) x = c;
  }
  if (net.vertex(x).kind != VertexKind::tree) {
    throw NotMemberError("the other parent of the last reticulation has no tree-vertex child");
  }
  const VertexId y = net.parents(p).front();

  std::vector<Vertex> vertices;
  for (const Vertex& v : net.vertices()) {
    if (v.id != r && v.id != p) vertices.push_back(v);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : net.arcs()) {
    if (a == Arc{s, r}) arcs.push_back({s, z});
    else if (a == Arc{y, p}) arcs.push_back({y, x});
    else if (a.tail != r && a.tail != p) arcs.push_back(a);
  }
  PhyloNetwork cherry(std::move(vertices), std::move(arcs));

  const auto cherry_spine = find_spines(cherry).front();
  const auto trees = spine_tree_vertices(cherry, cherry_spine);
  NonCherryChoice choice;
  choice.cherry_arc = ordered_cherry(cherry, s).first == z ? 0 : 1;
  choice.tree_node = static_cast<int>(std::find(trees.begin(), trees.end(), x) - trees.begin());
  return {std::move(cherry), choice};
}

} // namespace spinal
