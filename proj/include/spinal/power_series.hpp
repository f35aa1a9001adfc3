#pragma once

#include "spinal/counting.hpp"

#include <vector>

namespace spinal {

/// Bivariate power series in x, z over the rationals, truncated to total
/// degree <= degree().
class PowerSeries {
public:
  explicit PowerSeries(int degree);

  static PowerSeries constant(int degree, const Rational& c);
  static PowerSeries monomial(int degree, int i, int j, const Rational& c = 1);

  int degree() const noexcept { return degree_; }
  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries scaled(const Rational& c) const;
  /// Partial derivative in z; the top degree is lost and stays zero.
  PowerSeries d_dz() const;
  bool is_zero() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
  std::size_t slot(int i, int j) const;

  int degree_;
  std::vector<Rational> c_; // triangular layout
};

/// Square root with constant term 1 by coupled Newton steps on the root and
/// its inverse; requires f(0,0) = 1.
PowerSeries sqrt_unit(const PowerSeries& f);

} // namespace spinal
