#include "spinal/codec.hpp"
#include "spinal/enumeration.hpp"
#include "spinal/errors.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace spinal;

namespace {

template <class T>
std::vector<T> collect(const std::function<EnumerationStatus(const Visitor<T>&)>& run) {
  std::vector<T> out;
  const auto st = run([&out](const T& x) {
    out.push_back(x);
    return true;
  });
  EXPECT_TRUE(st.complete);
  EXPECT_EQ(st.emitted, out.size());
  return out;
}

std::vector<Word> c1(int n, int k) {
  return collect<Word>([=](const Visitor<Word>& v) { return enumerate_c1_classes(n, k, v); });
}
std::vector<Word> c2(int n, int k) {
  return collect<Word>([=](const Visitor<Word>& v) { return enumerate_c2_classes(n, k, v); });
}
std::vector<PhyloNetwork> stc(int n, int k) {
  return collect<PhyloNetwork>([=](const Visitor<PhyloNetwork>& v) { return enumerate_stc(n, k, v); });
}
std::vector<MarkedTree> marked(int n, int k, bool labeled) {
  return collect<MarkedTree>([=](const Visitor<MarkedTree>& v) { return enumerate_marked_trees(n, k, labeled, v); });
}

std::set<oracle::Letters> as_set(const std::vector<Word>& words) {
  std::set<oracle::Letters> out;
  for (const auto& w : words) out.emplace(w.letters().begin(), w.letters().end());
  return out;
}

} // namespace

TEST(Streams, WordClassesEqualReferenceSets) {
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n && 2 * n + k <= 12; ++k) {
      const auto a = c1(n, k);
      EXPECT_EQ(as_set(a).size(), a.size());
      EXPECT_EQ(as_set(a), oracle::brute_classes(n, k, 1)) << n << "," << k;
      const auto b = c2(n, k);
      EXPECT_EQ(as_set(b).size(), b.size());
      EXPECT_EQ(as_set(b), oracle::brute_classes(n, k, 2)) << n << "," << k;
    }
  }
}

TEST(Streams, WordClassCardinalities) {
  EXPECT_EQ(c1(4, 2).size(), 45u);
  EXPECT_EQ(c2(4, 2).size(), 84u);
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= std::min(n, 4); ++k) {
      EXPECT_EQ(oracle::Int(c1(n, k).size()), oracle::pairings(n + k, k));
    }
  }
  EXPECT_TRUE(c1(2, 3).empty());
}

TEST(Streams, PairPartitions) {
  const auto parts = collect<PairPartition>([](const Visitor<PairPartition>& v) { return enumerate_pair_partitions(4, 2, v); });
  EXPECT_EQ(oracle::Int(parts.size()), oracle::pairings(6, 2));
  for (const auto& p : parts) EXPECT_EQ(p.normalized(), p);
}

TEST(Streams, NetworksFromWordsAreDistinct) {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for (bool cat : {false, true}) {
        const auto nets = collect<PhyloNetwork>([=](const Visitor<PhyloNetwork>& v) {
          return cat ? enumerate_nlsctc(n, k, v) : enumerate_nlstc(n, k, v);
        });
        EXPECT_EQ(oracle::Q(nets.size()), cat ? oracle::c2(n - 1, k) : oracle::nlstc(n, k));
        for (std::size_t i = 0; i < nets.size(); ++i) {
          for (std::size_t j = i + 1; j < nets.size(); ++j) ASSERT_FALSE(oracle::same_shape(nets[i], nets[j]));
        }
      }
    }
  }
}

TEST(Streams, MarkedTreeExamples) {
  EXPECT_EQ(marked(2, 2, false).size(), 1u);
  EXPECT_TRUE(marked(1, 2, false).empty());
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(oracle::Int(marked(n, 1, true).size()), oracle::fact(n));
}

TEST(Streams, MarkedTreeCounts) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const auto plain = marked(n, k, false);
      const auto named = marked(n, k, true);
      EXPECT_EQ(oracle::Q(plain.size()), oracle::d(n, k)) << n << "," << k;
      EXPECT_EQ(oracle::Q(named.size()), oracle::s(n, k)) << n << "," << k;
      for (const auto& mt : named) EXPECT_NO_THROW(check_marked_tree(mt));
    }
  }
}

// Unlabeled marked trees with n-1 leaves and k+1 paths are exactly the
// unlabeled cherry networks with n leaves and k reticulations.
TEST(Streams, UnlabeledMarkedTreesAreCherryNetworks) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k <= std::min(3, n - 1); ++k) {
      std::multiset<std::string> from_trees;
      for (const auto& mt : marked(n - 1, k + 1, false)) {
        from_trees.insert(canonical_form(marked_tree_to_network(mt, std::nullopt)));
      }
      std::multiset<std::string> cherries;
      enumerate_nlstc(n, k, [&](const PhyloNetwork& net) {
        if (classify_terminal(net, find_spines(net).front()) == TerminalShape::cherry) cherries.insert(canonical_form(net));
        return true;
      });
      EXPECT_EQ(from_trees, cherries) << n << "," << k;
    }
  }
}

TEST(Streams, LabeledNetworkExamples) {
  EXPECT_EQ(stc(3, 1).size(), 15u);
  EXPECT_EQ(stc(2, 0).size(), 1u);
  EXPECT_EQ(stc(3, 2).size(), 18u);
}

TEST(Streams, LabeledNetworksMatchFormulaAndAreDistinct) {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      DedupStats stats;
      std::vector<PhyloNetwork> nets;
      enumerate_stc(n, k, [&](const PhyloNetwork& net) {
        nets.push_back(net);
        return true;
      }, {}, &stats);
      EXPECT_EQ(oracle::Q(nets.size()), oracle::stc(n, k));
      EXPECT_EQ(stats.cherry + stats.non_cherry, nets.size());
      EXPECT_EQ(stats.duplicates, stats.cherry);
      for (const auto& net : nets) {
        EXPECT_TRUE(validate(net).ok());
        EXPECT_TRUE(is_spinal_tree_child(net));
        EXPECT_EQ(net.leaf_count(), n);
        EXPECT_EQ(net.reticulation_count(), k);
      }
      for (std::size_t i = 0; i < nets.size(); ++i) {
        for (std::size_t j = i + 1; j < nets.size(); ++j) ASSERT_FALSE(oracle::same_shape(nets[i], nets[j]));
      }
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(brute_force_oracle(3, 1, false).count.value, 3);
  EXPECT_EQ(brute_force_oracle(2, 1, true).count.value, 2);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(brute_force_oracle(n, 0, false).count.value, 1);
  EXPECT_EQ(brute_force_oracle(3, 1, false).count.provenance, Provenance::oracle);
}

TEST(Oracle, AgreesWithReferenceFormulas) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k <= std::min(3, n - 1); ++k) {
      EXPECT_EQ(oracle::Q(brute_force_oracle(n, k, false).count.value), oracle::nlstc(n, k)) << n << "," << k;
      EXPECT_EQ(oracle::Q(brute_force_oracle(n, k, true).count.value), oracle::stc(n, k)) << n << "," << k;
    }
  }
}

// Each oracle network matches exactly one decoded reference class.
TEST(Oracle, BijectionWithDecodedClasses) {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      std::vector<PhyloNetwork> decoded;
      for (const auto& letters : oracle::brute_classes(n - 1, k, 1)) decoded.push_back(decode_nlstc(Word(letters, n - 1, k)));
      const auto found = brute_force_oracle(n, k, false).networks;
      ASSERT_EQ(found.size(), decoded.size());
      for (const auto& net : found) {
        int matches = 0;
        for (const auto& d : decoded) matches += oracle::same_shape(net, d) ? 1 : 0;
        EXPECT_EQ(matches, 1);
      }
    }
  }
}

TEST(Budget, CapsAndErrors) {
  EXPECT_THROW(enumerate_c1_classes(9, 0, [](const Word&) { return true; }), BudgetExceededError);
  EXPECT_THROW(enumerate_c1_classes(4, 5, [](const Word&) { return true; }), BudgetExceededError);
  EXPECT_THROW(enumerate_c1_classes(-1, 0, [](const Word&) { return true; }), RangeError);
  EXPECT_THROW(brute_force_oracle(6, 0, false), BudgetExceededError);
  EXPECT_THROW(brute_force_oracle(4, 4, false), BudgetExceededError);
  EXPECT_THROW(enumerate_stc(1, 0, [](const PhyloNetwork&) { return true; }), RangeError);

  EnumerationBudget tiny;
  tiny.max_objects = 10;
  const auto st = enumerate_c1_classes(6, 3, [](const Word&) { return true; }, tiny);
  EXPECT_FALSE(st.complete);
  EXPECT_EQ(st.emitted, 10u);
}

TEST(Budget, VisitorCanStop) {
  int seen = 0;
  const auto st = enumerate_c1_classes(5, 2, [&seen](const Word&) { return ++seen < 3; });
  EXPECT_FALSE(st.complete);
  EXPECT_EQ(seen, 3);
}

TEST(Streams, Deterministic) {
  EXPECT_EQ(c2(4, 2), c2(4, 2));
  const auto a = stc(3, 1);
  const auto b = stc(3, 1);
  EXPECT_EQ(a, b);
}
