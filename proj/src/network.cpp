#include "spinal/network.hpp"

#include "spinal/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace spinal {

std::string_view to_string(VertexKind kind) {
  switch (kind) {
  case VertexKind::root: return "root";
  case VertexKind::leaf: return "leaf";
  case VertexKind::tree: return "tree";
  case VertexKind::reticulation: return "ret";
  }
  return "?";
}

std::optional<VertexKind> parse_vertex_kind(std::string_view text) {
  if (text == "root") return VertexKind::root;
  if (text == "leaf") return VertexKind::leaf;
  if (text == "tree") return VertexKind::tree;
  if (text == "ret") return VertexKind::reticulation;
  return std::nullopt;
}

PhyloNetwork::PhyloNetwork(std::vector<Vertex> vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i].id, i);
  children_.resize(vertices_.size());
  parents_.resize(vertices_.size());
  for (const Arc& a : arcs_) {
    const auto t = index_.find(a.tail);
    const auto h = index_.find(a.head);
    if (t == index_.end() || h == index_.end()) continue;
    children_[t->second].push_back(a.head);
    parents_[h->second].push_back(a.tail);
  }
}

std::size_t PhyloNetwork::index_of(VertexId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw InvalidNetworkError("unknown vertex " + std::to_string(id));
  return it->second;
}

const Vertex& PhyloNetwork::vertex(VertexId id) const { return vertices_[index_of(id)]; }
std::span<const VertexId> PhyloNetwork::children(VertexId id) const { return children_[index_of(id)]; }
std::span<const VertexId> PhyloNetwork::parents(VertexId id) const { return parents_[index_of(id)]; }

bool PhyloNetwork::labeled() const {
  return std::any_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.label.has_value(); });
}

int PhyloNetwork::count_kind(VertexKind kind) const {
  return static_cast<int>(
      std::count_if(vertices_.begin(), vertices_.end(), [kind](const Vertex& v) { return v.kind == kind; }));
}

std::vector<VertexId> PhyloNetwork::leaves() const {
  std::vector<VertexId> out;
  for (const Vertex& v : vertices_) {
    if (v.kind == VertexKind::leaf) out.push_back(v.id);
  }
  return out;
}

std::optional<VertexId> PhyloNetwork::root() const {
  std::optional<VertexId> found;
  for (const Vertex& v : vertices_) {
    if (v.kind != VertexKind::root) continue;
    if (found) return std::nullopt;
    found = v.id;
  }
  return found;
}

std::optional<VertexId> PhyloNetwork::leaf_with_label(int label) const {
  for (const Vertex& v : vertices_) {
    if (v.kind == VertexKind::leaf && v.label == label) return v.id;
  }
  return std::nullopt;
}

PhyloNetwork PhyloNetwork::unlabeled() const {
  auto vs = vertices_;
  for (Vertex& v : vs) v.label.reset();
  return PhyloNetwork(std::move(vs), arcs_);
}

PhyloNetwork PhyloNetwork::with_leaf_labels(const std::map<VertexId, int>& labels) const {
  auto vs = vertices_;
  for (Vertex& v : vs) {
    const auto it = labels.find(v.id);
    if (it != labels.end()) v.label = it->second;
    else v.label.reset();
  }
  return PhyloNetwork(std::move(vs), arcs_);
}

PhyloNetwork PhyloNetwork::renumbered(const std::function<VertexId(VertexId)>& f) const {
  auto vs = vertices_;
  for (Vertex& v : vs) v.id = f(v.id);
  auto as = arcs_;
  for (Arc& a : as) a = {f(a.tail), f(a.head)};
  return PhyloNetwork(std::move(vs), std::move(as));
}

VertexId PhyloNetwork::max_id() const {
  VertexId m = -1;
  for (const Vertex& v : vertices_) m = std::max(m, v.id);
  return m;
}

VertexId NetworkBuilder::add(VertexKind kind, std::optional<int> label) {
  const auto id = static_cast<VertexId>(vertices_.size());
  vertices_.push_back({id, kind, label});
  return id;
}

NetworkBuilder& NetworkBuilder::arc(VertexId tail, VertexId head) {
  arcs_.push_back({tail, head});
  return *this;
}

// ---------------------------------------------------------------------------
// validation

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
  case Violation::Kind::cycle: return "cycle";
  case Violation::Kind::degree: return "degree";
  case Violation::Kind::root_count: return "root-count";
  case Violation::Kind::labels: return "labels";
  case Violation::Kind::dangling_arc: return "dangling-arc";
  case Violation::Kind::duplicate_arc: return "duplicate-arc";
  case Violation::Kind::duplicate_vertex: return "duplicate-vertex";
  case Violation::Kind::self_loop: return "self-loop";
  }
  return "?";
}

std::size_t ValidationReport::count(Violation::Kind kind) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [kind](const Violation& v) { return v.kind == kind; }));
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : violations) {
    out += std::string(spinal::to_string(v.kind)) + ": " + v.message + "\n";
  }
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> expected_degrees(VertexKind kind) {
  switch (kind) {
  case VertexKind::root: return {0, 1};
  case VertexKind::leaf: return {1, 0};
  case VertexKind::tree: return {1, 2};
  case VertexKind::reticulation: return {2, 1};
  }
  return {0, 0};
}

} // namespace

ValidationReport validate(const PhyloNetwork& net) {
  using K = Violation::Kind;
  ValidationReport report;
  auto add = [&report](K kind, std::string message) { report.violations.push_back({kind, std::move(message)}); };

  std::set<VertexId> seen;
  for (const Vertex& v : net.vertices()) {
    if (!seen.insert(v.id).second) add(K::duplicate_vertex, "vertex id " + std::to_string(v.id) + " repeated");
  }
  std::set<Arc> arcs;
  for (const Arc& a : net.arcs()) {
    const auto where = "arc " + std::to_string(a.tail) + "->" + std::to_string(a.head);
    if (!net.contains(a.tail) || !net.contains(a.head)) add(K::dangling_arc, where + " has a missing endpoint");
    if (a.tail == a.head) add(K::self_loop, where);
    if (!arcs.insert(a).second) add(K::duplicate_arc, where + " repeated");
  }

  int roots = 0;
  for (const Vertex& v : net.vertices()) {
    if (v.kind == VertexKind::root) ++roots;
    const auto [in, out] = expected_degrees(v.kind);
    const auto actual_in = net.parents(v.id).size();
    const auto actual_out = net.children(v.id).size();
    if (actual_in != in || actual_out != out) {
      add(K::degree, std::string(to_string(v.kind)) + " vertex " + std::to_string(v.id) + " has indegree " +
                         std::to_string(actual_in) + " and outdegree " + std::to_string(actual_out) +
                         ", expected " + std::to_string(in) + " and " + std::to_string(out));
    }
  }
  if (roots != 1) add(K::root_count, "found " + std::to_string(roots) + " roots, expected 1");

  if (net.labeled()) {
    const int n = net.leaf_count();
    std::set<int> labels;
    for (const Vertex& v : net.vertices()) {
      if (v.kind != VertexKind::leaf) {
        if (v.label) add(K::labels, "non-leaf vertex " + std::to_string(v.id) + " carries a label");
        continue;
      }
      if (!v.label) {
        add(K::labels, "leaf " + std::to_string(v.id) + " is unlabeled in a labeled network");
      } else if (*v.label < 1 || *v.label > n) {
        add(K::labels, "label " + std::to_string(*v.label) + " outside 1.." + std::to_string(n));
      } else if (!labels.insert(*v.label).second) {
        add(K::labels, "label " + std::to_string(*v.label) + " used twice");
      }
    }
  }

  // Kahn's algorithm on the well-formed part of the graph
  std::unordered_map<VertexId, std::size_t> indegree;
  for (const Vertex& v : net.vertices()) indegree[v.id] = net.parents(v.id).size();
  std::vector<VertexId> ready;
  for (const auto& [id, d] : indegree) {
    if (d == 0) ready.push_back(id);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexId c : net.children(v)) {
      if (--indegree[c] == 0) ready.push_back(c);
    }
  }
  if (removed != indegree.size()) {
    add(K::cycle, std::to_string(indegree.size() - removed) + " vertices lie on or below a directed cycle");
  }
  return report;
}

void require_valid(const PhyloNetwork& net) {
  const auto report = validate(net);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InvalidNetworkError(std::string(to_string(v.kind)) + ": " + v.message);
  }
}

bool is_tree_child(const PhyloNetwork& net) {
  require_valid(net);
  for (const Vertex& v : net.vertices()) {
    if (v.kind == VertexKind::leaf) continue;
    const auto ch = net.children(v.id);
    const bool ok = std::any_of(ch.begin(), ch.end(), [&net](VertexId c) {
      return net.vertex(c).kind != VertexKind::reticulation;
    });
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// spines

namespace {

void spine_dfs(const PhyloNetwork& net, std::size_t internal, std::vector<VertexId>& path,
               std::vector<Spine>& out) {
  const VertexId v = path.back();
  for (VertexId c : net.children(v)) {
    if (net.vertex(c).kind == VertexKind::leaf) {
      if (path.size() == internal) {
        Spine s;
        s.path = path;
        s.path.push_back(c);
        for (std::size_t i = 0; i < s.path.size(); ++i) {
          if (net.vertex(s.path[i]).kind == VertexKind::reticulation) s.reticulation_positions.push_back(i);
        }
        out.push_back(std::move(s));
      }
      continue;
    }
    // paths in a DAG never revisit a vertex, so the length alone decides coverage
    if (path.size() >= internal) continue;
    path.push_back(c);
    spine_dfs(net, internal, path, out);
    path.pop_back();
  }
}

void require_spine_of(const PhyloNetwork& net, const Spine& spine) {
  const auto all = find_spines(net);
  if (std::find(all.begin(), all.end(), spine) == all.end()) {
    throw SpineMismatchError("the given path is not a spine of the network");
  }
}

} // namespace

std::vector<Spine> find_spines(const PhyloNetwork& net) {
  require_valid(net);
  const std::size_t internal = net.vertices().size() - static_cast<std::size_t>(net.leaf_count());
  std::vector<Spine> out;
  std::vector<VertexId> path{*net.root()};
  spine_dfs(net, internal, path, out);
  return out;
}

SpineMetrics spine_metrics(const PhyloNetwork& net, const Spine& spine) {
  require_spine_of(net, spine);
  return {net.tree_vertex_count(), static_cast<int>(spine.length())};
}

std::string_view to_string(TerminalShape shape) {
  return shape == TerminalShape::cherry ? "cherry" : "non-cherry";
}

TerminalShape classify_terminal(const PhyloNetwork& net, const Spine& spine) {
  require_spine_of(net, spine);
  const VertexId parent = spine.path[spine.path.size() - 2];
  return net.vertex(parent).kind == VertexKind::reticulation ? TerminalShape::non_cherry : TerminalShape::cherry;
}

bool is_spinal_tree_child(const PhyloNetwork& net) {
  if (!validate(net).ok()) return false;
  return is_tree_child(net) && !find_spines(net).empty();
}

LrqWord read_spine_lrq(const PhyloNetwork& net, const Spine& spine) {
  const auto& p = spine.path;
  const int k = static_cast<int>(spine.reticulation_positions.size());
  std::unordered_map<VertexId, int> from_bottom;
  for (int i = 0; i < k; ++i) from_bottom[p[spine.reticulation_positions[static_cast<std::size_t>(k - 1 - i)]]] = i + 1;

  LrqWord u;
  u.n = net.leaf_count();
  u.k = k;
  for (std::size_t j = p.size() - 1; j-- > 1;) {
    const Vertex& v = net.vertex(p[j]);
    if (v.kind == VertexKind::reticulation) {
      u.tokens.push_back({LrqToken::Kind::R, from_bottom.at(v.id)});
      continue;
    }
    VertexId off = -1;
    for (VertexId c : net.children(v.id)) {
      if (c != p[j + 1]) off = c;
    }
    if (net.vertex(off).kind == VertexKind::leaf) u.tokens.push_back({LrqToken::Kind::L, 0});
    else u.tokens.push_back({LrqToken::Kind::Q, from_bottom.at(off)});
  }
  return u;
}

// ---------------------------------------------------------------------------
// canonical forms

namespace {

struct Graph {
  std::vector<int> code; // rank of (kind, label)
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

Graph dense_graph(const PhyloNetwork& net) {
  const auto vs = net.vertices();
  std::unordered_map<VertexId, int> idx;
  for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i].id] = static_cast<int>(i);
  Graph g;
  g.out.resize(vs.size());
  g.in.resize(vs.size());
  for (const Vertex& v : vs) {
    g.code.push_back(static_cast<int>(v.kind) * 100000 + (v.label ? *v.label + 1 : 0));
  }
  for (const Arc& a : net.arcs()) {
    g.out[idx[a.tail]].push_back(idx[a.head]);
    g.in[idx[a.head]].push_back(idx[a.tail]);
  }
  return g;
}

template <class Key>
std::vector<int> dense_ranks(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  }
  return out;
}

int cell_count(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Equitable refinement: colors become ranks of (color, child colors, parent colors).
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const std::size_t n = colors.size();
  int cells = cell_count(colors);
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.push_back(colors[v]);
      std::vector<int> ch;
      for (int c : g.out[v]) ch.push_back(colors[c]);
      std::sort(ch.begin(), ch.end());
      s.push_back(-1);
      s.insert(s.end(), ch.begin(), ch.end());
      std::vector<int> pa;
      for (int p : g.in[v]) pa.push_back(colors[p]);
      std::sort(pa.begin(), pa.end());
      s.push_back(-2);
      s.insert(s.end(), pa.begin(), pa.end());
    }
    auto next = dense_ranks(sig);
    const int next_cells = cell_count(next);
    colors = std::move(next);
    if (next_cells == cells) return colors;
    cells = next_cells;
  }
}

std::vector<int> certificate(const Graph& g, const std::vector<int>& colors) {
  const std::size_t n = colors.size();
  std::vector<int> cert(n);
  for (std::size_t v = 0; v < n; ++v) cert[colors[v]] = g.code[v];
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t v = 0; v < n; ++v) {
    for (int c : g.out[v]) arcs.emplace_back(colors[v], colors[c]);
  }
  std::sort(arcs.begin(), arcs.end());
  for (auto [a, b] : arcs) {
    cert.push_back(a);
    cert.push_back(b);
  }
  return cert;
}

void search(const Graph& g, const std::vector<int>& colors, std::optional<std::vector<int>>& best) {
  const int cells = cell_count(colors);
  const std::size_t n = colors.size();
  if (static_cast<std::size_t>(cells) == n) {
    auto cert = certificate(g, colors);
    if (!best || cert < *best) best = std::move(cert);
    return;
  }
  std::vector<int> size(static_cast<std::size_t>(cells), 0);
  for (int c : colors) ++size[c];
  int target = 0;
  while (size[target] < 2) ++target;
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> split(n);
    for (std::size_t u = 0; u < n; ++u) split[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
    search(g, refine(g, dense_ranks(split)), best);
  }
}

} // namespace

std::string search_canonical_form(const PhyloNetwork& net) {
  require_valid(net);
  const Graph g = dense_graph(net);
  std::optional<std::vector<int>> best;
  if (g.code.empty()) return "graph:";
  search(g, refine(g, dense_ranks(g.code)), best);
  std::ostringstream os;
  os << "graph:";
  const std::size_t n = g.code.size();
  for (std::size_t i = 0; i < best->size(); ++i) {
    if (i == n) os << '|';
    else if (i > 0) os << ',';
    os << (*best)[i];
  }
  return os.str();
}

std::string canonical_form(const PhyloNetwork& net) {
  require_valid(net);
  if (!net.labeled() && is_tree_child(net)) {
    const auto spines = find_spines(net);
    if (!spines.empty()) {
      const auto u = read_spine_lrq(net, spines.front());
      return "lrq:" + std::to_string(u.n) + ":" + std::to_string(u.k) + ":" + u.to_string();
    }
  }
  return search_canonical_form(net);
}

bool isomorphic(const PhyloNetwork& a, const PhyloNetwork& b) {
  require_valid(a);
  require_valid(b);
  if (a.labeled() != b.labeled()) {
    throw LabelModeError("cannot compare a labeled network with an unlabeled one");
  }
  return canonical_form(a) == canonical_form(b);
}

} // namespace spinal
