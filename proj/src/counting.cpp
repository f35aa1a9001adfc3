#include "spinal/counting.hpp"

#include "spinal/errors.hpp"
#include "spinal/power_series.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace spinal {

std::string_view to_string(Provenance p) {
  switch (p) {
  case Provenance::formula: return "formula";
  case Provenance::relation: return "relation";
  case Provenance::series: return "series";
  case Provenance::enumeration: return "enumeration";
  case Provenance::oracle: return "oracle";
  }
  return "?";
}

BigInt factorial(int n) {
  if (n < 0) throw RangeError("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt double_factorial_odd(int m) {
  BigInt r = 1;
  for (int i = 3; i <= 2 * m - 1; i += 2) r *= i;
  return r;
}

namespace {

// Quotient of factorials and small integers kept as prime exponents, so the
// product is only formed once everything has cancelled.
class Factored {
public:
  Factored& factorial(int m, int sign = 1) {
    for (int p = 2; p <= m; ++p) {
      if (!is_prime(p)) continue;
      long e = 0;
      for (long q = p; q <= m; q *= p) e += m / q;
      exp_[p] += sign * e;
    }
    return *this;
  }
  Factored& integer(long v, int sign = 1) {
    if (v <= 0) throw std::logic_error("Factored::integer needs a positive value");
    for (long p = 2; p * p <= v; ++p) {
      while (v % p == 0) {
        exp_[static_cast<int>(p)] += sign;
        v /= p;
      }
    }
    if (v > 1) exp_[static_cast<int>(v)] += sign;
    return *this;
  }
  Factored& power_of_two(int e, int sign = 1) {
    exp_[2] += sign * e;
    return *this;
  }
  BigInt value() const {
    BigInt r = 1;
    for (const auto& [p, e] : exp_) {
      if (e < 0) throw std::logic_error("quotient is not an integer");
      for (long i = 0; i < e; ++i) r *= p;
    }
    return r;
  }

private:
  static bool is_prime(int p) {
    for (int d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }
  std::map<int, long> exp_;
};

void require_nonnegative(int n, int k, const char* what) {
  if (n < 0 || k < 0) throw RangeError(std::string(what) + ": arguments must be nonnegative");
}

void require_min_n(int n, int min_n, const char* what) {
  if (n < min_n) throw RangeError(std::string(what) + ": need n >= " + std::to_string(min_n));
}

ExactCount formula(BigInt v) { return {std::move(v), Provenance::formula}; }
ExactCount relation(BigInt v) { return {std::move(v), Provenance::relation}; }

} // namespace

ExactCount count_bessel(int n, int k) {
  require_nonnegative(n, k, "bessel");
  if (k > n) return formula(0);
  return formula(Factored().factorial(n + k).power_of_two(k, -1).factorial(n - k, -1).factorial(k, -1).value());
}

ExactCount count_c1_classes(int n, int k) { return count_bessel(n, k); }

ExactCount count_c2_classes(int n, int k) {
  require_nonnegative(n, k, "c2");
  if (k > n) return formula(0);
  const BigInt pairings = Factored().factorial(2 * k).power_of_two(k, -1).factorial(k, -1).value();
  return formula(binomial(n + 2 * k, n - k) * pairings);
}

ExactCount count_nlstc(int n, int k) {
  require_nonnegative(n, k, "nlstc");
  require_min_n(n, 1, "nlstc");
  if (k > n - 1) return formula(0);
  return formula(
      Factored().factorial(n - 1 + k).power_of_two(k, -1).factorial(n - 1 - k, -1).factorial(k, -1).value());
}

ExactCount count_nlsctc(int n, int k) {
  require_nonnegative(n, k, "nlsctc");
  require_min_n(n, 1, "nlsctc");
  if (k > n - 1) return formula(0);
  return formula(binomial(n - 1 + 2 * k, n - 1 - k) * double_factorial_odd(k));
}

ExactCount count_stc(int n, int k) {
  require_nonnegative(n, k, "stc");
  require_min_n(n, 1, "stc");
  if (n == 1) return formula(k == 0 ? 1 : 0);
  if (k > n - 1) return formula(0);
  return formula(Factored()
                     .factorial(n)
                     .factorial(n - 2 + k)
                     .integer(n - 1 + 3 * k)
                     .power_of_two(k + 1, -1)
                     .factorial(k, -1)
                     .factorial(n - 1 - k, -1)
                     .value());
}

ExactCount count_stc_factored_out(int n, int k) {
  require_nonnegative(n, k, "stc");
  require_min_n(n, 1, "stc");
  if (n == 1) return formula(k == 0 ? 1 : 0);
  if (k > n - 1) return formula(0);
  const Rational prefactor(factorial(n) * factorial(n + k - 2),
                           (BigInt(1) << (k + 1)) * factorial(k) * factorial(n - k - 1));
  const Rational value = prefactor * ((n - k - 1) + 4 * k);
  if (denominator(value) != 1) throw std::logic_error("factored-out expression is not an integer");
  return formula(numerator(value));
}

ExactCount count_stc_via_lemma(int n, int k) {
  require_nonnegative(n, k, "stc via lemma");
  require_min_n(n, 2, "stc via lemma");
  const BigInt f = factorial(n);
  return relation(f * count_nlstc(n, k).value - f / 2 * count_nlstc(n - 1, k).value);
}

ExactCount s_coef(int n, int k) {
  require_nonnegative(n, k, "s");
  if (k == 0 || n < k) return formula(0);
  return formula(Factored()
                     .factorial(n)
                     .factorial(n + k - 2)
                     .power_of_two(k - 1, -1)
                     .factorial(k - 1, -1)
                     .factorial(n - k, -1)
                     .value());
}

ExactCount d_coef(int n, int k) {
  require_nonnegative(n, k, "d");
  if (k == 0 || n < k) return formula(0);
  return formula(
      Factored().factorial(n + k - 2).power_of_two(k - 1, -1).factorial(k - 1, -1).factorial(n - k, -1).value());
}

ExactCount count_stc_via_marked(int n, int k) {
  require_nonnegative(n, k, "stc via marked trees");
  require_min_n(n, 2, "stc via marked trees");
  // n s(n-1,k+1) is even: it counts cherry networks once per spine
  const BigInt cherry = n * s_coef(n - 1, k + 1).value / 2;
  const BigInt non_cherry = BigInt(n) * (n + k - 2) * s_coef(n - 1, k).value;
  return relation(cherry + non_cherry);
}

ExactCount count_nlstc_via_marked(int n, int k) {
  require_nonnegative(n, k, "nlstc via marked trees");
  require_min_n(n, 2, "nlstc via marked trees");
  return relation(d_coef(n - 1, k + 1).value + BigInt(n + k - 2) * d_coef(n - 1, k).value);
}

// ---------------------------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
  case Family::stc: return "stc";
  case Family::nlstc: return "nlstc";
  case Family::nlsctc: return "nlsctc";
  case Family::c1: return "c1";
  case Family::c2: return "c2";
  case Family::bessel: return "bessel";
  case Family::s: return "s";
  case Family::d: return "d";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::stc, Family::nlstc, Family::nlsctc, Family::c1, Family::c2, Family::bessel, Family::s,
                   Family::d}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

int family_min_n(Family f) {
  switch (f) {
  case Family::stc:
  case Family::nlstc:
  case Family::nlsctc: return 1;
  default: return 0;
  }
}

ExactCount count_family(Family f, int n, int k) {
  switch (f) {
  case Family::stc: return count_stc(n, k);
  case Family::nlstc: return count_nlstc(n, k);
  case Family::nlsctc: return count_nlsctc(n, k);
  case Family::c1: return count_c1_classes(n, k);
  case Family::c2: return count_c2_classes(n, k);
  case Family::bessel: return count_bessel(n, k);
  case Family::s: return s_coef(n, k);
  case Family::d: return d_coef(n, k);
  }
  throw RangeError("unknown family");
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "n,k,value,provenance\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.k << ',' << r.count.value << ',' << to_string(r.count.provenance) << '\n';
  }
  return os.str();
}

CountTable tabulate(Family f, int max_n, int max_k) {
  if (max_n < 0 || max_k < 0) throw RangeError("table caps must be nonnegative");
  CountTable t;
  for (int n = family_min_n(f); n <= max_n; ++n) {
    for (int k = 0; k <= max_k; ++k) t.rows.push_back({n, k, count_family(f, n, k)});
  }
  return t;
}

// ---------------------------------------------------------------------------

SeriesTable series_expand_s(int max_n, int max_k) {
  if (max_n < 0 || max_k < 0) throw RangeError("series caps must be nonnegative");
  const int degree = max_n + max_k + 1;
  const PowerSeries one = PowerSeries::constant(degree, 1);
  const PowerSeries x = PowerSeries::monomial(degree, 1, 0);
  const PowerSeries xz = PowerSeries::monomial(degree, 1, 1);
  const PowerSeries f = (one - x) * (one - x) - xz.scaled(2);
  const PowerSeries s = one - x - sqrt_unit(f);

  SeriesTable t;
  t.max_n = max_n;
  t.max_k = max_k;
  t.coef.assign(static_cast<std::size_t>(max_n) + 1, std::vector<Rational>(static_cast<std::size_t>(max_k) + 1));
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= max_k; ++k) t.coef[n][k] = s.at(n, k);
  }
  return t;
}

bool check_ode_residual(const SeriesTable& t) {
  for (int n = 0; n <= t.max_n; ++n) {
    if (t.at(n, 0) != 0) return false;
  }
  // coefficient of x^n z^k in dS/dz (1 - x - S) - x, for k + 1 <= max_k
  for (int n = 0; n <= t.max_n; ++n) {
    for (int k = 0; k + 1 <= t.max_k; ++k) {
      Rational r = (n == 1 && k == 0) ? Rational(-1) : Rational(0);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= k; ++j) {
          const Rational ds = t.at(i, j + 1) * (j + 1);
          if (ds == 0) continue;
          Rational other = -t.at(n - i, k - j);
          if (n - i == 0 && k - j == 0) other += 1;
          if (n - i == 1 && k - j == 0) other -= 1;
          r += ds * other;
        }
      }
      if (r != 0) return false;
    }
  }
  return true;
}

bool check_ode_residual(int max_n, int max_k) { return check_ode_residual(series_expand_s(max_n, max_k)); }

} // namespace spinal
