#pragma once

#include "spinal/counting.hpp"
#include "spinal/marked_tree.hpp"
#include "spinal/network.hpp"
#include "spinal/word.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace spinal {

struct EnumerationBudget {
  int max_n = 8;
  int max_k = 4;
  std::uint64_t max_objects = 50'000'000;
  double time_limit = 600.0; // seconds
};

/// The oracle's default caps.
EnumerationBudget oracle_budget();

struct EnumerationStatus {
  std::uint64_t emitted = 0;
  bool complete = true; ///< false when the visitor or the budget stopped the stream
};

/// Return false to stop the stream.
template <class T>
using Visitor = std::function<bool(const T&)>;

// Every generator throws RangeError on negative parameters and
// BudgetExceededError when (n, k) lies beyond the budget caps. Parameters
// outside the support give an empty stream. Running out of objects or time
// ends the stream with complete = false.

EnumerationStatus enumerate_pair_partitions(int n, int k, const Visitor<PairPartition>& visit,
                                            const EnumerationBudget& budget = {});
EnumerationStatus enumerate_c1_classes(int n, int k, const Visitor<Word>& visit,
                                       const EnumerationBudget& budget = {});
EnumerationStatus enumerate_c2_classes(int n, int k, const Visitor<Word>& visit,
                                       const EnumerationBudget& budget = {});
/// Decoded C^1_{n-1,k} classes.
EnumerationStatus enumerate_nlstc(int n, int k, const Visitor<PhyloNetwork>& visit,
                                  const EnumerationBudget& budget = {});
/// Decoded C^2_{n-1,k} classes.
EnumerationStatus enumerate_nlsctc(int n, int k, const Visitor<PhyloNetwork>& visit,
                                   const EnumerationBudget& budget = {});

/// Marked trees with n leaves and k paths. Labeled trees carry the leaf
/// labels 1..n.
EnumerationStatus enumerate_marked_trees(int n, int k, bool labeled, const Visitor<MarkedTree>& visit,
                                         const EnumerationBudget& budget = {});
/// Labeled marked trees whose leaves carry exactly `labels`.
EnumerationStatus enumerate_marked_trees_on(const std::vector<int>& labels, int k, const Visitor<MarkedTree>& visit,
                                            const EnumerationBudget& budget = {});

struct DedupStats {
  std::uint64_t generated = 0;  ///< candidate networks built
  std::uint64_t duplicates = 0; ///< candidates isomorphic to an earlier one
  std::uint64_t cherry = 0;
  std::uint64_t non_cherry = 0;
};

/// Labeled spinal tree-child networks: cherry ones rebuilt from marked
/// trees, then non-cherry ones obtained from the cherry networks with one
/// reticulation fewer.
EnumerationStatus enumerate_stc(int n, int k, const Visitor<PhyloNetwork>& visit,
                                const EnumerationBudget& budget = {}, DedupStats* stats = nullptr);

struct OracleResult {
  ExactCount count;
  std::vector<PhyloNetwork> networks;
};

/// Exhaustive search over spine role sequences, independent of the word
/// codecs and of the counting formulas.
OracleResult brute_force_oracle(int n, int k, bool labeled, const EnumerationBudget& budget = oracle_budget());

} // namespace spinal
