#pragma once

#include "spinal/counting.hpp"
#include "spinal/enumeration.hpp"

#include <functional>
#include <map>
#include <tuple>
#include <optional>
#include <string>
#include <vector>

namespace spinal {

/// Counters consulted by the identity checks. Replacing one lets a test
/// inject a fault and watch the named identity fail.
struct CounterSet {
  std::function<ExactCount(int, int)> stc = count_stc;
  std::function<ExactCount(int, int)> nlstc = count_nlstc;
  std::function<ExactCount(int, int)> nlsctc = count_nlsctc;
  std::function<ExactCount(int, int)> c1 = count_c1_classes;
  std::function<ExactCount(int, int)> c2 = count_c2_classes;
  std::function<ExactCount(int, int)> s = s_coef;
  std::function<ExactCount(int, int)> d = d_coef;
};

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string identity;
  std::string params; ///< e.g. "n=3 k=1" or a range
  CheckStatus status = CheckStatus::pass;
  std::string detail; ///< mismatch description or skip reason
};

struct VerifyOptions {
  std::optional<std::string> only; ///< run a single identity
  EnumerationBudget budget;        ///< caps for enumeration-backed identities
  CounterSet counters;
};

/// State of one verification run: the options, a deadline and the oracle
/// results computed so far.
class VerifySession {
public:
  explicit VerifySession(VerifyOptions options);

  const VerifyOptions& options() const { return options_; }
  bool out_of_time() const;
  /// Memoized within the session.
  const OracleResult& oracle(int n, int k, bool labeled);

private:
  VerifyOptions options_;
  double start_;
  std::map<std::tuple<int, int, bool>, OracleResult> oracle_;
};

struct Identity {
  std::string name;
  std::string description;
  std::function<std::vector<CheckResult>(VerifySession&)> run;
};

/// Every identity, in report order.
const std::vector<Identity>& identity_matrix();

struct VerifyReport {
  std::vector<CheckResult> results;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
  /// One line per result: "<status> <identity> <params>[: detail]".
  std::string to_string() const;
};

/// Throws RangeError when `only` names no identity.
VerifyReport run_verification(const VerifyOptions& options);

} // namespace spinal
