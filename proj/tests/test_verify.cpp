#include "spinal/errors.hpp"
#include "spinal/verify.hpp"

#include <gtest/gtest.h>

using namespace spinal;

namespace {

bool any_failure_named(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.results) {
    if (c.identity == name && c.status == CheckStatus::fail) return true;
  }
  return false;
}

} // namespace

TEST(Verify, MatrixNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& id : identity_matrix()) EXPECT_TRUE(names.insert(id.name).second) << id.name;
  EXPECT_TRUE(names.count("labeled_unlabeled"));
  EXPECT_TRUE(names.count("oracle_labeled"));
}

TEST(Verify, OnlyRunsOneIdentity) {
  VerifyOptions o;
  o.only = "labeled_unlabeled";
  const auto r = run_verification(o);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].identity, "labeled_unlabeled");
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.to_string().rfind("PASS labeled_unlabeled", 0), 0u);
}

TEST(Verify, UnknownIdentity) {
  VerifyOptions o;
  o.only = "no_such_identity";
  EXPECT_THROW(run_verification(o), RangeError);
}

TEST(Verify, OffByOneIsCaught) {
  VerifyOptions o;
  o.counters.stc = [](int n, int k) {
    auto c = count_stc(n, k);
    c.value += 1;
    return c;
  };
  for (const char* name : {"labeled_unlabeled", "marked_labeled", "stc_forms", "four_way", "oracle_labeled"}) {
    o.only = name;
    const auto r = run_verification(o);
    EXPECT_FALSE(r.ok()) << name;
    EXPECT_TRUE(any_failure_named(r, name)) << name;
  }
}

TEST(Verify, FaultInUnlabeledCounterIsCaught) {
  VerifyOptions o;
  o.counters.nlstc = [](int n, int k) {
    auto c = count_nlstc(n, k);
    if (n == 4 && k == 2) c.value *= 2;
    return c;
  };
  o.only = "oracle_unlabeled";
  const auto r = run_verification(o);
  EXPECT_EQ(r.count(CheckStatus::fail), 1u);
  for (const auto& c : r.results) {
    if (c.status == CheckStatus::fail) EXPECT_EQ(c.params, "n=4 k=2");
  }
}

TEST(Verify, ExhaustedBudgetSkipsInsteadOfFailing) {
  VerifyOptions o;
  o.budget.time_limit = 0;
  o.only = "c1_enum";
  const auto r = run_verification(o);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.count(CheckStatus::pass), 0u);
  EXPECT_EQ(r.count(CheckStatus::skipped), r.results.size());
}

TEST(Verify, CapsBelowTheMatrixSkip) {
  VerifyOptions o;
  o.budget.max_n = 4;
  o.only = "c1_enum";
  const auto r = run_verification(o);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.count(CheckStatus::skipped), 0u);
  EXPECT_GT(r.count(CheckStatus::pass), 0u);
}

TEST(Verify, FullMatrixPasses) {
  const auto r = run_verification({});
  EXPECT_TRUE(r.ok()) << r.to_string();
  EXPECT_EQ(r.count(CheckStatus::skipped), 0u);
}
