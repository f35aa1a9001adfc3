#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Provenance { formula, relation, series, enumeration, oracle };
std::string_view to_string(Provenance p);

struct ExactCount {
  BigInt value;
  Provenance provenance = Provenance::formula;

  friend bool operator==(const ExactCount&, const ExactCount&) = default;
};

BigInt factorial(int n);
/// Zero outside 0 <= k <= n.
BigInt binomial(int n, int k);
/// (2m-1)!!, with (-1)!! = 1.
BigInt double_factorial_odd(int m);

// Counters are total on their documented domain: negative arguments (and
// n below the family's minimum) throw RangeError, parameters outside the
// support give 0.

/// (n+k)! / (2^k (n-k)! k!), pair/singleton partitions of an (n+k)-set.
ExactCount count_bessel(int n, int k);
ExactCount count_c1_classes(int n, int k);
/// C(n+2k, n-k) (2k)! / (2^k k!).
ExactCount count_c2_classes(int n, int k);

/// Unlabeled spinal tree-child networks, n >= 1.
ExactCount count_nlstc(int n, int k);
/// Unlabeled spinal caterpillar tree-child networks, n >= 1.
ExactCount count_nlsctc(int n, int k);
/// Labeled spinal tree-child networks, n >= 1.
ExactCount count_stc(int n, int k);
/// Same value computed from the factored-out expression.
ExactCount count_stc_factored_out(int n, int k);
/// n! NL(n,k) - (n!/2) NL(n-1,k), n >= 2.
ExactCount count_stc_via_lemma(int n, int k);

/// Labeled marked trees with n leaves and k paths; s(n,0) = 0.
ExactCount s_coef(int n, int k);
/// Leaf-unlabeled marked trees, s(n,k)/n!.
ExactCount d_coef(int n, int k);
/// (n/2) s(n-1,k+1) + n(n+k-2) s(n-1,k), n >= 2.
ExactCount count_stc_via_marked(int n, int k);
/// d(n-1,k+1) + (n+k-2) d(n-1,k), n >= 2.
ExactCount count_nlstc_via_marked(int n, int k);

enum class Family { stc, nlstc, nlsctc, c1, c2, bessel, s, d };
std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view text);
/// Smallest n accepted by the family's counter.
int family_min_n(Family f);
ExactCount count_family(Family f, int n, int k);

struct CountRow {
  int n = 0;
  int k = 0;
  ExactCount count;
};

struct CountTable {
  std::vector<CountRow> rows; // n ascending, then k

  /// Header "n,k,value,provenance".
  std::string to_csv() const;
};

/// Every cell with family_min_n <= n <= max_n and 0 <= k <= max_k.
CountTable tabulate(Family f, int max_n, int max_k);

// ---------------------------------------------------------------------------
// S(x,z) = 1 - x - sqrt((1-x)^2 - 2xz)

struct SeriesTable {
  int max_n = 0;
  int max_k = 0;
  std::vector<std::vector<Rational>> coef; // coef[n][k], 0 <= n <= max_n, 0 <= k <= max_k

  const Rational& at(int n, int k) const { return coef.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k)); }
};

SeriesTable series_expand_s(int max_n, int max_k);

/// Checks S(x,0) = 0 and dS/dz (1 - x - S) = x on every coefficient the
/// table determines.
bool check_ode_residual(const SeriesTable& table);
bool check_ode_residual(int max_n, int max_k);

} // namespace spinal
