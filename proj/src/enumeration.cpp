#include "spinal/enumeration.hpp"

#include "spinal/codec.hpp"
#include "spinal/errors.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <numeric>
#include <unordered_set>

namespace spinal {

EnumerationBudget oracle_budget() {
  EnumerationBudget b;
  b.max_n = 5;
  b.max_k = 3;
  return b;
}

namespace {

void check_params(int n, int k, const EnumerationBudget& budget, const char* what) {
  if (n < 0 || k < 0) throw RangeError(std::string(what) + ": arguments must be nonnegative");
  if (n > budget.max_n || k > budget.max_k) {
    throw BudgetExceededError(std::string(what) + "(" + std::to_string(n) + "," + std::to_string(k) +
                              ") exceeds the budget caps n <= " + std::to_string(budget.max_n) +
                              ", k <= " + std::to_string(budget.max_k));
  }
}

// Forwards objects to the visitor while tracking the object and time budget.
template <class T>
class Sink {
public:
  Sink(const Visitor<T>& visit, const EnumerationBudget& budget)
      : visit_(visit), budget_(budget), start_(std::chrono::steady_clock::now()) {}

  bool operator()(const T& obj) {
    if (!status_.complete) return false;
    if (status_.emitted >= budget_.max_objects || elapsed() > budget_.time_limit) {
      status_.complete = false;
      return false;
    }
    ++status_.emitted;
    if (!visit_(obj)) {
      status_.complete = false;
      return false;
    }
    return true;
  }
  bool stopped() const { return !status_.complete; }
  const EnumerationStatus& status() const { return status_; }

private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  const Visitor<T>& visit_;
  const EnumerationBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  EnumerationStatus status_;
};

// ---------------------------------------------------------------------------
// pair partitions

bool partitions_rec(int m, std::vector<bool>& used, int pairs_left, int singles_left, PairPartition& cur,
                    const std::function<bool(const PairPartition&)>& emit) {
  int e = 1;
  while (e <= m && used[e]) ++e;
  if (e > m) return emit(cur);
  used[e] = true;
  if (singles_left > 0) {
    cur.singletons.push_back(e);
    const bool go = partitions_rec(m, used, pairs_left, singles_left - 1, cur, emit);
    cur.singletons.pop_back();
    if (!go) return false;
  }
  if (pairs_left > 0) {
    for (int f = e + 1; f <= m; ++f) {
      if (used[f]) continue;
      used[f] = true;
      cur.pairs.emplace_back(e, f);
      const bool go = partitions_rec(m, used, pairs_left - 1, singles_left, cur, emit);
      cur.pairs.pop_back();
      used[f] = false;
      if (!go) return false;
    }
  }
  used[e] = false;
  return true;
}

void each_partition(int n, int k, const std::function<bool(const PairPartition&)>& emit) {
  if (k > n) return;
  std::vector<bool> used(static_cast<std::size_t>(n + k) + 1, false);
  PairPartition cur{n, k, {}, {}};
  partitions_rec(n + k, used, k, n - k, cur, emit);
}

// all size-r subsets of {0..m-1} in lexicographic order
bool each_subset(int m, int r, const std::function<bool(const std::vector<int>&)>& emit) {
  std::vector<int> s(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) s[i] = i;
  while (true) {
    if (!emit(s)) return false;
    int i = r - 1;
    while (i >= 0 && s[i] == m - r + i) --i;
    if (i < 0) return true;
    ++s[i];
    for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// marked-tree shapes: a path is a sequence of items (leaf = nullptr or a
// nested path) followed by the closing unlabeled elementary node and leaf

struct Shape {
  std::vector<std::shared_ptr<const Shape>> items;
  int paths = 1;
};
using ShapePtr = std::shared_ptr<const Shape>;
using ShapeMemo = std::map<std::pair<int, int>, std::vector<ShapePtr>>;

const std::vector<ShapePtr>& shapes(int n, int k, ShapeMemo& memo);

void item_sequences(int leaves, int paths, ShapeMemo& memo, std::vector<ShapePtr>& prefix,
                    std::vector<std::vector<ShapePtr>>& out) {
  if (leaves == 0 && paths == 0) {
    out.push_back(prefix);
    return;
  }
  if (leaves >= 1) {
    prefix.push_back(nullptr);
    item_sequences(leaves - 1, paths, memo, prefix, out);
    prefix.pop_back();
  }
  for (int kp = 1; kp <= paths; ++kp) {
    for (int np = kp; np <= leaves; ++np) {
      for (const auto& sub : shapes(np, kp, memo)) {
        prefix.push_back(sub);
        item_sequences(leaves - np, paths - kp, memo, prefix, out);
        prefix.pop_back();
      }
    }
  }
}

const std::vector<ShapePtr>& shapes(int n, int k, ShapeMemo& memo) {
  const auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<ShapePtr> result;
  if (k >= 1 && n >= k) {
    std::vector<std::vector<ShapePtr>> seqs;
    std::vector<ShapePtr> prefix;
    item_sequences(n - 1, k - 1, memo, prefix, seqs);
    for (auto& seq : seqs) {
      auto s = std::make_shared<Shape>();
      for (const auto& item : seq) {
        if (item) s->paths += item->paths;
      }
      s->items = std::move(seq);
      result.push_back(std::move(s));
    }
  }
  return memo[key] = std::move(result);
}

// Paths of a shape in preorder, with the preorder index of each parent path.
void path_tree(const Shape& s, int parent, std::vector<const Shape*>& order, std::vector<int>& parents) {
  const int me = static_cast<int>(order.size());
  order.push_back(&s);
  parents.push_back(parent);
  for (const auto& item : s.items) {
    if (item) path_tree(*item, me, order, parents);
  }
}

// Increasing labelings of the path tree: every nested path gets a larger
// index than the path it hangs from.
bool each_path_labeling(const std::vector<int>& parents, std::vector<int>& label, std::vector<int>& available,
                        int next, const std::function<bool(const std::vector<int>&)>& emit) {
  if (available.empty()) return emit(label);
  for (std::size_t a = 0; a < available.size(); ++a) {
    const int p = available[a];
    label[p] = next;
    std::vector<int> rest = available;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(a));
    for (std::size_t c = 0; c < parents.size(); ++c) {
      if (parents[c] == p) rest.push_back(static_cast<int>(c));
    }
    if (!each_path_labeling(parents, label, rest, next + 1, emit)) return false;
  }
  return true;
}

struct TreeBuilder {
  MarkedTree mt;
  const std::vector<int>* path_label = nullptr;
  const std::vector<int>* leaf_labels = nullptr;
  int path_counter = 0;
  int leaf_counter = 0;

  VertexId node(MarkedKind kind, std::optional<int> label) {
    const auto id = static_cast<VertexId>(mt.nodes.size());
    mt.nodes.push_back({id, kind, label});
    return id;
  }
  VertexId leaf() {
    std::optional<int> label;
    if (leaf_labels) label = (*leaf_labels)[static_cast<std::size_t>(leaf_counter)];
    ++leaf_counter;
    return node(MarkedKind::leaf, label);
  }
  VertexId path(const Shape& s) {
    const VertexId r = node(MarkedKind::labeled_elementary, (*path_label)[static_cast<std::size_t>(path_counter++)]);
    VertexId prev = r;
    for (const auto& item : s.items) {
      const VertexId t = node(MarkedKind::tree, std::nullopt);
      mt.arcs.push_back({prev, t});
      const VertexId side = item ? path(*item) : leaf();
      mt.arcs.push_back({t, side});
      prev = t;
    }
    const VertexId e = node(MarkedKind::unlabeled_elementary, std::nullopt);
    mt.arcs.push_back({prev, e});
    mt.arcs.push_back({e, leaf()});
    return r;
  }
};

bool each_marked_tree(int n, int k, const std::vector<int>* labels,
                      const std::function<bool(const MarkedTree&)>& emit) {
  ShapeMemo memo;
  for (const auto& shape : shapes(n, k, memo)) {
    std::vector<const Shape*> order;
    std::vector<int> parents;
    path_tree(*shape, -1, order, parents);
    std::vector<int> label(order.size(), 0);
    std::vector<int> available{0};
    const bool go = each_path_labeling(parents, label, available, 0, [&](const std::vector<int>& path_label) {
      if (!labels) {
        TreeBuilder b;
        b.path_label = &path_label;
        b.path(*shape);
        return emit(b.mt);
      }
      std::vector<int> perm = *labels;
      std::sort(perm.begin(), perm.end());
      do {
        TreeBuilder b;
        b.path_label = &path_label;
        b.leaf_labels = &perm;
        b.path(*shape);
        if (!emit(b.mt)) return false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return true;
    });
    if (!go) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

bool cherry_networks(int n, int k, const std::function<bool(const PhyloNetwork&)>& emit, DedupStats& stats) {
  std::unordered_set<std::string> seen;
  for (int removed = 1; removed <= n; ++removed) {
    std::vector<int> labels;
    for (int j = 1; j <= n; ++j) {
      if (j != removed) labels.push_back(j);
    }
    const bool go = each_marked_tree(n - 1, k + 1, &labels, [&](const MarkedTree& mt) {
      PhyloNetwork net = marked_tree_to_network(mt, removed);
      ++stats.generated;
      if (!seen.insert(canonical_form(net)).second) {
        ++stats.duplicates;
        return true;
      }
      ++stats.cherry;
      return emit(net);
    });
    if (!go) return false;
  }
  return true;
}

} // namespace

EnumerationStatus enumerate_pair_partitions(int n, int k, const Visitor<PairPartition>& visit,
                                            const EnumerationBudget& budget) {
  check_params(n, k, budget, "pair partitions");
  Sink<PairPartition> sink(visit, budget);
  each_partition(n, k, [&](const PairPartition& p) { return sink(p.normalized()); });
  return sink.status();
}

EnumerationStatus enumerate_c1_classes(int n, int k, const Visitor<Word>& visit, const EnumerationBudget& budget) {
  check_params(n, k, budget, "c1 classes");
  Sink<Word> sink(visit, budget);
  each_partition(n, k, [&](const PairPartition& p) { return sink(partition_to_word_c1(p)); });
  return sink.status();
}

EnumerationStatus enumerate_c2_classes(int n, int k, const Visitor<Word>& visit, const EnumerationBudget& budget) {
  check_params(n, k, budget, "c2 classes");
  Sink<Word> sink(visit, budget);
  if (k > n) return sink.status();
  const int prefix = n + 2 * k;
  // the thrice-occurring letters form a C^1_{k,k} word; the first
  // appearances of a_{k+1}..a_n are spread over the prefix in every way
  each_partition(k, k, [&](const PairPartition& matching) {
    const Word low = partition_to_word_c1(matching);
    return each_subset(prefix, n - k, [&](const std::vector<int>& high) {
      std::vector<int> letters;
      letters.reserve(static_cast<std::size_t>(2 * n + k));
      std::size_t next_low = 0;
      std::size_t next_high = 0;
      for (int pos = 0; pos < prefix; ++pos) {
        if (next_high < high.size() && high[next_high] == pos) {
          letters.push_back(k + 1 + static_cast<int>(next_high++));
        } else {
          letters.push_back(low[next_low++]);
        }
      }
      for (int j = k + 1; j <= n; ++j) letters.push_back(j);
      return sink(Word(std::move(letters), n, k));
    });
  });
  return sink.status();
}

EnumerationStatus enumerate_nlstc(int n, int k, const Visitor<PhyloNetwork>& visit,
                                  const EnumerationBudget& budget) {
  if (n < 1) throw RangeError("nlstc: need n >= 1");
  check_params(n, k, budget, "nlstc");
  Sink<PhyloNetwork> sink(visit, budget);
  each_partition(n - 1, k, [&](const PairPartition& p) { return sink(decode_nlstc(partition_to_word_c1(p))); });
  return sink.status();
}

EnumerationStatus enumerate_nlsctc(int n, int k, const Visitor<PhyloNetwork>& visit,
                                   const EnumerationBudget& budget) {
  if (n < 1) throw RangeError("nlsctc: need n >= 1");
  check_params(n, k, budget, "nlsctc");
  Sink<PhyloNetwork> sink(visit, budget);
  EnumerationBudget words = budget;
  words.max_n = std::max(words.max_n, n);
  enumerate_c2_classes(n - 1, k, [&](const Word& w) { return sink(decode_nlsctc(w)); }, words);
  return sink.status();
}

EnumerationStatus enumerate_marked_trees(int n, int k, bool labeled, const Visitor<MarkedTree>& visit,
                                         const EnumerationBudget& budget) {
  check_params(n, k, budget, "marked trees");
  Sink<MarkedTree> sink(visit, budget);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  each_marked_tree(n, k, labeled ? &labels : nullptr, [&](const MarkedTree& mt) { return sink(mt); });
  return sink.status();
}

EnumerationStatus enumerate_marked_trees_on(const std::vector<int>& labels, int k, const Visitor<MarkedTree>& visit,
                                            const EnumerationBudget& budget) {
  const int n = static_cast<int>(labels.size());
  check_params(n, k, budget, "marked trees");
  Sink<MarkedTree> sink(visit, budget);
  each_marked_tree(n, k, &labels, [&](const MarkedTree& mt) { return sink(mt); });
  return sink.status();
}

EnumerationStatus enumerate_stc(int n, int k, const Visitor<PhyloNetwork>& visit, const EnumerationBudget& budget,
                                DedupStats* stats) {
  if (n < 2) throw RangeError("stc enumeration: need n >= 2");
  check_params(n, k, budget, "stc");
  DedupStats local;
  DedupStats& st = stats ? *stats : local;
  st = {};
  Sink<PhyloNetwork> sink(visit, budget);
  if (!cherry_networks(n, k, [&](const PhyloNetwork& net) { return sink(net); }, st)) return sink.status();
  if (k == 0) return sink.status();

  std::vector<PhyloNetwork> base;
  DedupStats base_stats;
  cherry_networks(n, k - 1, [&](const PhyloNetwork& net) {
    base.push_back(net);
    return true;
  }, base_stats);
  std::unordered_set<std::string> seen;
  for (const auto& net : base) {
    const int trees = static_cast<int>(spine_tree_vertices(net, find_spines(net).front()).size());
    for (int arc = 0; arc < 2; ++arc) {
      for (int t = 0; t < trees; ++t) {
        PhyloNetwork out = cherry_to_non_cherry(net, arc, t);
        ++st.generated;
        if (!seen.insert(canonical_form(out)).second) {
          ++st.duplicates;
          continue;
        }
        ++st.non_cherry;
        if (!sink(out)) return sink.status();
      }
    }
  }
  return sink.status();
}

// ---------------------------------------------------------------------------

OracleResult brute_force_oracle(int n, int k, bool labeled, const EnumerationBudget& budget) {
  if (n < 1) throw RangeError("oracle: need n >= 1");
  check_params(n, k, budget, "oracle");

  std::vector<PhyloNetwork> classes;
  std::unordered_set<std::string> seen;
  // spine u_0..u_l: u_0 is the root, u_l a leaf, and every u_j in between is
  // either a tree vertex (T) or a reticulation (R); scan generously in l
  const int max_length = 2 * (n + 2 * k) + 2;
  for (int ell = 1; ell <= max_length; ++ell) {
    const int inner = ell - 1;
    if (inner < k) continue;
    const int tree_count = inner - k;
    // each T without a reticulation child carries an off-spine leaf
    if (tree_count - k + 1 != n) continue;

    std::vector<bool> is_ret(static_cast<std::size_t>(inner), false);
    std::fill(is_ret.end() - k, is_ret.end(), true);
    do {
      std::vector<int> t_pos;
      std::vector<int> r_pos;
      for (int j = 0; j < inner; ++j) (is_ret[j] ? r_pos : t_pos).push_back(j + 1);

      // every R takes one further parent among the T's, all distinct
      std::vector<int> extra(static_cast<std::size_t>(k));
      std::vector<bool> used(static_cast<std::size_t>(tree_count), false);
      std::function<void(int)> assign = [&](int i) {
        if (i < k) {
          for (int t = 0; t < tree_count; ++t) {
            if (used[t]) continue;
            used[t] = true;
            extra[i] = t;
            assign(i + 1);
            used[t] = false;
          }
          return;
        }
        NetworkBuilder b;
        std::vector<VertexId> u;
        u.push_back(b.add(VertexKind::root));
        for (int j = 1; j < ell; ++j) u.push_back(b.add(is_ret[j - 1] ? VertexKind::reticulation : VertexKind::tree));
        u.push_back(b.add(VertexKind::leaf));
        for (int j = 0; j < ell; ++j) b.arc(u[j], u[j + 1]);
        for (int r = 0; r < k; ++r) b.arc(u[t_pos[extra[r]]], u[r_pos[r]]);
        for (int t = 0; t < tree_count; ++t) {
          if (!used[t]) b.arc(u[t_pos[t]], b.add(VertexKind::leaf));
        }
        const PhyloNetwork net = b.build();
        if (!validate(net).ok() || !is_tree_child(net) || find_spines(net).empty()) return;
        if (seen.insert(search_canonical_form(net)).second) classes.push_back(net);
      };
      assign(0);
    } while (std::next_permutation(is_ret.begin(), is_ret.end()));
  }

  OracleResult result;
  if (!labeled) {
    result.count = {BigInt(classes.size()), Provenance::oracle};
    result.networks = std::move(classes);
    return result;
  }
  std::unordered_set<std::string> labeled_seen;
  for (const auto& net : classes) {
    const auto leaves = net.leaves();
    std::vector<int> perm(leaves.size());
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::map<VertexId, int> assign;
      for (std::size_t i = 0; i < leaves.size(); ++i) assign[leaves[i]] = perm[i];
      PhyloNetwork ln = net.with_leaf_labels(assign);
      if (labeled_seen.insert(search_canonical_form(ln)).second) result.networks.push_back(std::move(ln));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  result.count = {BigInt(result.networks.size()), Provenance::oracle};
  return result;
}

} // namespace spinal
