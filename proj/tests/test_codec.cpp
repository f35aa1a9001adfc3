#include "spinal/codec.hpp"
#include "spinal/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace spinal;

namespace {

const Word worked_word({3, 1, 2, 1, 1, 2, 2, 4, 3, 4}, 4, 2);
const Word caterpillar_word({3, 1, 2, 1, 4, 1, 2, 5, 6, 2, 7, 3, 4, 5, 6, 7}, 7, 2);

void expect_spinal_shape(const PhyloNetwork& net, int n, int k, bool caterpillar = false) {
  EXPECT_TRUE(validate(net).ok()) << validate(net).to_string();
  EXPECT_TRUE(is_tree_child(net));
  if (caterpillar) EXPECT_TRUE(is_spinal_caterpillar_tree_child(net));
  else EXPECT_FALSE(find_spines(net).empty());
  EXPECT_EQ(net.leaf_count(), n);
  EXPECT_EQ(net.reticulation_count(), k);
  EXPECT_FALSE(net.labeled());
}

} // namespace

TEST(Codec, WorkedExampleEncodes) {
  EXPECT_EQ(encode_nlstc(fixtures::worked_net()), worked_word);
  EXPECT_EQ(encode_nlstc(fixtures::worked_net()).to_string(), "3,1,2,1,1,2,2,4,3,4");
}

TEST(Codec, WorkedExampleDecodes) {
  const auto net = decode_nlstc(worked_word);
  expect_spinal_shape(net, 5, 2);
  EXPECT_TRUE(oracle::same_shape(net, fixtures::worked_net()));
}

TEST(Codec, EquivalentWordsDecodeAlike) {
  const Word w_prime({4, 1, 2, 1, 1, 2, 2, 3, 3, 4}, 4, 2);
  EXPECT_TRUE(oracle::same_shape(decode_nlstc(w_prime), fixtures::worked_net()));
  EXPECT_EQ(encode_nlstc(decode_nlstc(w_prime)), worked_word);
}

TEST(Codec, PathDecomposition) {
  const auto parts = decompose_paths(fixtures::worked_net());
  int segments = 0;
  int exterior = 0;
  for (const auto& p : parts) {
    (p.kind == PathComponent::Kind::spinal_segment ? segments : exterior) += 1;
  }
  EXPECT_EQ(segments, 3);
  EXPECT_EQ(exterior, 2);
  EXPECT_EQ(parts.front().vertices.front(), *fixtures::worked_net().root());
}

TEST(Codec, DecompositionWithWrongSpineThrows) {
  EXPECT_THROW(decompose_paths(fixtures::worked_net(), Spine{{0, 1, 2}, {}}), SpineMismatchError);
}

TEST(Codec, SingleLeafAndEmptyWord) {
  const auto net = decode_nlstc(Word({}, 0, 0));
  expect_spinal_shape(net, 1, 0);
  EXPECT_EQ(encode_nlstc(net), Word({}, 0, 0));
}

TEST(Codec, Rejections) {
  EXPECT_THROW(encode_nlstc(fixtures::tree_child_net()), LabelModeError);
  EXPECT_THROW(encode_nlstc(fixtures::tree_child_net().unlabeled()), NotMemberError);
  EXPECT_THROW(encode_nlstc(fixtures::caterpillar_net()), NotMemberError);
  EXPECT_THROW(decode_nlstc(Word({2, 2, 1, 1}, 2, 0)), ClassMembershipError);
  EXPECT_THROW(decode_nlstc(caterpillar_word), ClassMembershipError);
  EXPECT_THROW(lrq_encode(fixtures::tree_child_net().unlabeled()), NotMemberError);
}

TEST(Codec, LrqOfWorkedExample) {
  EXPECT_EQ(lrq_encode(fixtures::worked_net()).to_string(), "L R1 L R2 L Q1 Q2 L");
  EXPECT_EQ(transform_t(lrq_encode(fixtures::worked_net())), encode_nlstc(fixtures::worked_net()));
}

TEST(Caterpillar, ExampleEncodesAndDecodes) {
  EXPECT_TRUE(is_spinal_caterpillar_tree_child(fixtures::caterpillar_net()));
  EXPECT_EQ(encode_nlsctc(fixtures::caterpillar_net()), caterpillar_word);
  const auto net = decode_nlsctc(caterpillar_word);
  expect_spinal_shape(net, 8, 2, true);
  EXPECT_TRUE(oracle::same_shape(net, fixtures::caterpillar_net()));
}

TEST(Caterpillar, SpinalNetworksAreCaterpillarsToo) {
  EXPECT_TRUE(is_spinal_caterpillar_tree_child(fixtures::worked_net()));
  EXPECT_EQ(encode_nlsctc(fixtures::worked_net()), worked_word);
  EXPECT_FALSE(is_spinal_caterpillar_tree_child(fixtures::tree_child_net().unlabeled()));
}

TEST(Caterpillar, Rejections) {
  EXPECT_THROW(encode_nlsctc(fixtures::cherry_net()), LabelModeError);
  EXPECT_THROW(decode_nlsctc(Word({1, 1, 2, 2, 1}, 2, 1)), ClassMembershipError);
}

// Every reference class decodes to a distinct spinal network, and encoding
// gives the class representative back.
class CodecExhaustive : public ::testing::TestWithParam<int> {};

TEST_P(CodecExhaustive, ReferenceClassesRoundtrip) {
  const int cls = GetParam();
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const auto classes = oracle::brute_classes(n - 1, k, cls);
      std::vector<PhyloNetwork> nets;
      for (const auto& letters : classes) {
        const Word w(letters, n - 1, k);
        const PhyloNetwork net = cls == 1 ? decode_nlstc(w) : decode_nlsctc(w);
        expect_spinal_shape(net, n, k, cls == 2);
        EXPECT_EQ(cls == 1 ? encode_nlstc(net) : encode_nlsctc(net), w);
        nets.push_back(net);
      }
      if (n <= 4) {
        for (std::size_t i = 0; i < nets.size(); ++i) {
          for (std::size_t j = i + 1; j < nets.size(); ++j) ASSERT_FALSE(oracle::same_shape(nets[i], nets[j]));
        }
      }
      const oracle::Q expected = cls == 1 ? oracle::nlstc(n, k) : oracle::c2(n - 1, k);
      EXPECT_EQ(oracle::Q(classes.size()), expected) << "n=" << n << " k=" << k;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Classes, CodecExhaustive, ::testing::Values(1, 2));
