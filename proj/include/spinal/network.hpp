#pragma once

#include "spinal/word.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spinal {

using VertexId = int;

enum class VertexKind { root, leaf, tree, reticulation };

/// "root", "leaf", "tree" or "ret".
std::string_view to_string(VertexKind kind);
std::optional<VertexKind> parse_vertex_kind(std::string_view text);

struct Vertex {
  VertexId id = 0;
  VertexKind kind = VertexKind::leaf;
  std::optional<int> label; // leaves of labeled networks only

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable directed graph with typed vertices and optional leaf labels.
/// Construction never fails: malformed input is stored as given and
/// reported by validate().
class PhyloNetwork {
public:
  PhyloNetwork() = default;
  PhyloNetwork(std::vector<Vertex> vertices, std::vector<Arc> arcs);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  bool contains(VertexId id) const { return index_.count(id) > 0; }
  /// Throws InvalidNetworkError for an unknown id.
  const Vertex& vertex(VertexId id) const;
  std::span<const VertexId> children(VertexId id) const;
  std::span<const VertexId> parents(VertexId id) const;

  /// True when at least one vertex carries a label.
  bool labeled() const;
  int leaf_count() const { return count_kind(VertexKind::leaf); }
  int reticulation_count() const { return count_kind(VertexKind::reticulation); }
  int tree_vertex_count() const { return count_kind(VertexKind::tree); }
  std::vector<VertexId> leaves() const;
  /// The root when there is exactly one vertex of kind root.
  std::optional<VertexId> root() const;
  std::optional<VertexId> leaf_with_label(int label) const;

  PhyloNetwork unlabeled() const;
  PhyloNetwork with_leaf_labels(const std::map<VertexId, int>& labels) const;
  /// Same network with every id replaced by f(id); f must be injective.
  PhyloNetwork renumbered(const std::function<VertexId(VertexId)>& f) const;
  VertexId max_id() const;

  friend bool operator==(const PhyloNetwork& a, const PhyloNetwork& b) {
    return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
  }

private:
  int count_kind(VertexKind kind) const;
  std::size_t index_of(VertexId id) const;

  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::vector<VertexId>> parents_;
};

/// Assigns consecutive ids starting at 0.
class NetworkBuilder {
public:
  VertexId add(VertexKind kind, std::optional<int> label = std::nullopt);
  NetworkBuilder& arc(VertexId tail, VertexId head);
  PhyloNetwork build() const { return PhyloNetwork(vertices_, arcs_); }

private:
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
};

struct Violation {
  enum class Kind {
    cycle,
    degree,
    root_count,
    labels,
    dangling_arc,
    duplicate_arc,
    duplicate_vertex,
    self_loop,
  };
  Kind kind;
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::size_t count(Violation::Kind kind) const;
  /// One violation per line.
  std::string to_string() const;
};

ValidationReport validate(const PhyloNetwork& net);
/// Throws InvalidNetworkError carrying the first violation.
void require_valid(const PhyloNetwork& net);

bool is_tree_child(const PhyloNetwork& net);

struct Spine {
  std::vector<VertexId> path;                 ///< u_0 .. u_l
  std::vector<std::size_t> reticulation_positions; ///< indices into path

  std::size_t length() const { return path.empty() ? 0 : path.size() - 1; }
  VertexId terminal() const { return path.back(); }
  friend bool operator==(const Spine&, const Spine&) = default;
};

/// Every root-to-leaf path through all internal vertices.
std::vector<Spine> find_spines(const PhyloNetwork& net);

struct SpineMetrics {
  int tree_vertices = 0; ///< t
  int spine_length = 0;  ///< l
  friend bool operator==(const SpineMetrics&, const SpineMetrics&) = default;
};

SpineMetrics spine_metrics(const PhyloNetwork& net, const Spine& spine);

enum class TerminalShape { cherry, non_cherry };
std::string_view to_string(TerminalShape shape);

TerminalShape classify_terminal(const PhyloNetwork& net, const Spine& spine);

bool is_spinal_tree_child(const PhyloNetwork& net);

/// Bottom-to-top reading of the internal spine vertices u_{l-1}..u_1:
/// L for an off-spine leaf child, R_i for the i-th reticulation from the
/// bottom, Q_i for the other parent of R_i.
LrqWord read_spine_lrq(const PhyloNetwork& net, const Spine& spine);

/// Canonical string of the isomorphism class. Leaf labels are respected.
std::string canonical_form(const PhyloNetwork& net);

/// Canonical certificate from an individualization-refinement search alone,
/// without the spine shortcut used by canonical_form.
std::string search_canonical_form(const PhyloNetwork& net);

/// Throws LabelModeError when exactly one of the inputs is labeled.
bool isomorphic(const PhyloNetwork& a, const PhyloNetwork& b);

} // namespace spinal
