#include "spinal/codec.hpp"

#include "spinal/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace spinal {

namespace {

struct Decomposition {
  std::vector<PathComponent> components;
  Word word;
};

std::vector<VertexId> topological_order(const PhyloNetwork& net) {
  std::unordered_map<VertexId, std::size_t> indegree;
  std::deque<VertexId> ready;
  for (const Vertex& v : net.vertices()) {
    indegree[v.id] = net.parents(v.id).size();
    if (indegree[v.id] == 0) ready.push_back(v.id);
  }
  std::vector<VertexId> order;
  while (!ready.empty()) {
    const VertexId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (VertexId c : net.children(v)) {
      if (--indegree[c] == 0) ready.push_back(c);
    }
  }
  return order;
}

bool reaches(const PhyloNetwork& net, VertexId from, VertexId to) {
  std::vector<VertexId> stack{from};
  std::unordered_set<VertexId> seen{from};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (VertexId c : net.children(v)) {
      if (seen.insert(c).second) stack.push_back(c);
    }
  }
  return false;
}

// Splits the network into chains that start at the root or at a reticulation
// and follow tree vertices down to a leaf. Every chain vertex other than the
// head and the final leaf points sideways at a reticulation or at a leaf that
// forms a component on its own.
Decomposition decompose(const PhyloNetwork& net) {
  if (!is_tree_child(net)) throw NotMemberError("network is not tree-child");
  auto kind = [&net](VertexId v) { return net.vertex(v).kind; };

  std::vector<VertexId> rets;
  for (VertexId v : topological_order(net)) {
    if (kind(v) == VertexKind::reticulation) rets.push_back(v);
  }
  for (std::size_t i = 1; i < rets.size(); ++i) {
    if (!reaches(net, rets[i - 1], rets[i])) {
      throw NotMemberError("reticulations do not lie on a common path");
    }
  }
  const int k = static_cast<int>(rets.size());
  std::unordered_map<VertexId, int> letter;
  for (int i = 0; i < k; ++i) letter[rets[static_cast<std::size_t>(i)]] = i + 1;

  Decomposition d;
  std::unordered_map<VertexId, VertexId> attached;
  std::vector<VertexId> singletons;
  std::vector<VertexId> heads{*net.root()};
  heads.insert(heads.end(), rets.begin(), rets.end());
  for (VertexId head : heads) {
    PathComponent comp;
    VertexId cur = head;
    while (true) {
      comp.vertices.push_back(cur);
      if (kind(cur) == VertexKind::leaf) break;
      const auto ch = net.children(cur);
      if (kind(cur) != VertexKind::tree) {
        cur = ch[0];
        continue;
      }
      VertexId next = ch[0];
      VertexId side = ch[1];
      if (kind(next) == VertexKind::reticulation || (kind(next) == VertexKind::leaf && kind(side) == VertexKind::tree)) {
        std::swap(next, side);
      } else if (kind(next) == VertexKind::tree && kind(side) == VertexKind::tree) {
        throw NotMemberError("tree vertex " + std::to_string(cur) + " has two tree children");
      }
      if (kind(side) == VertexKind::leaf) {
        letter[side] = k + 1 + static_cast<int>(singletons.size());
        singletons.push_back(side);
      }
      attached[cur] = side;
      cur = next;
    }
    d.components.push_back(std::move(comp));
  }
  for (VertexId leaf : singletons) d.components.push_back({{leaf}, PathComponent::Kind::exterior_leaf});

  std::vector<int> letters;
  for (const auto& comp : d.components) {
    if (comp.kind == PathComponent::Kind::exterior_leaf) {
      letters.push_back(letter.at(comp.vertices[0]));
      continue;
    }
    for (VertexId v : comp.vertices) {
      if (kind(v) == VertexKind::reticulation) letters.push_back(letter.at(v));
      else if (kind(v) == VertexKind::tree) letters.push_back(letter.at(attached.at(v)));
    }
  }
  d.word = Word(std::move(letters), net.leaf_count() - 1, k);
  return d;
}

// Inverse of decompose for words of C^2 (hence also C^1); the class check is
// the caller's job.
PhyloNetwork decode_word(const Word& w) {
  const int n = w.n();
  const int k = w.k();
  const std::size_t prefix = w.size() - static_cast<std::size_t>(n - k);
  NetworkBuilder b;
  std::vector<VertexId> head(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::pair<VertexId, int>> sideways;
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);

  VertexId prev = b.add(VertexKind::root);
  for (std::size_t p = 0; p < prefix; ++p) {
    const int a = w[p];
    if (a <= k && ++seen[a] == 3) {
      b.arc(prev, b.add(VertexKind::leaf));
      prev = head[a] = b.add(VertexKind::reticulation);
      continue;
    }
    const VertexId v = b.add(VertexKind::tree);
    b.arc(prev, v);
    sideways.emplace_back(v, a);
    prev = v;
  }
  b.arc(prev, b.add(VertexKind::leaf));
  for (int j = k + 1; j <= n; ++j) head[j] = b.add(VertexKind::leaf);
  for (auto [v, a] : sideways) b.arc(v, head[a]);
  return b.build();
}

Word encode_in(const PhyloNetwork& net, WordClass cls) {
  if (net.labeled()) throw LabelModeError("the word codecs take unlabeled networks; strip the labels first");
  require_valid(net);
  const auto d = decompose(net);
  if (auto v = class_violation(d.word, cls)) {
    throw NotMemberError("network read as " + d.word.to_string() + ", which is not in " +
                         std::string(to_string(cls)) + ": " + *v);
  }
  if (canonical_form(decode_word(d.word)) != canonical_form(net)) {
    throw NotMemberError("network is not recovered from its reading");
  }
  return canonicalize_tilde(d.word, cls);
}

PhyloNetwork decode_in(const Word& w, WordClass cls) {
  if (auto v = class_violation(w, cls)) {
    throw ClassMembershipError("word not in " + std::string(to_string(cls)) + ": " + *v);
  }
  return decode_word(w);
}

} // namespace

std::vector<PathComponent> decompose_paths(const PhyloNetwork& net) {
  encode_in(net.unlabeled(), WordClass::c2);
  return decompose(net).components;
}

std::vector<PathComponent> decompose_paths(const PhyloNetwork& net, const Spine& spine) {
  spine_metrics(net, spine);
  return decompose_paths(net);
}

Word encode_nlstc(const PhyloNetwork& net) { return encode_in(net, WordClass::c1); }
PhyloNetwork decode_nlstc(const Word& w) { return decode_in(w, WordClass::c1); }
Word encode_nlsctc(const PhyloNetwork& net) { return encode_in(net, WordClass::c2); }
PhyloNetwork decode_nlsctc(const Word& w) { return decode_in(w, WordClass::c2); }

LrqWord lrq_encode(const PhyloNetwork& net) {
  require_valid(net);
  if (!is_tree_child(net)) throw NotMemberError("network is not tree-child");
  const auto spines = find_spines(net);
  if (spines.empty()) throw NotMemberError("network has no spine");
  return read_spine_lrq(net, spines.front());
}

bool is_spinal_caterpillar_tree_child(const PhyloNetwork& net) {
  if (!validate(net).ok()) return false;
  try {
    encode_in(net.unlabeled(), WordClass::c2);
    return true;
  } catch (const NotMemberError&) {
    return false;
  }
}

} // namespace spinal
