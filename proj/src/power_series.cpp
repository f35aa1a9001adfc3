#include "spinal/power_series.hpp"

#include "spinal/errors.hpp"

#include <stdexcept>

namespace spinal {

PowerSeries::PowerSeries(int degree)
    : degree_(degree), c_(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2)) {
  if (degree < 0) throw RangeError("series degree must be nonnegative");
}

PowerSeries PowerSeries::constant(int degree, const Rational& c) {
  PowerSeries s(degree);
  s.at(0, 0) = c;
  return s;
}

PowerSeries PowerSeries::monomial(int degree, int i, int j, const Rational& c) {
  PowerSeries s(degree);
  if (i + j <= degree) s.at(i, j) = c;
  return s;
}

std::size_t PowerSeries::slot(int i, int j) const {
  const int t = i + j;
  if (i < 0 || j < 0 || t > degree_) throw RangeError("coefficient outside the truncation");
  return static_cast<std::size_t>(t * (t + 1) / 2 + j);
}

const Rational& PowerSeries::at(int i, int j) const { return c_[slot(i, j)]; }
Rational& PowerSeries::at(int i, int j) { return c_[slot(i, j)]; }

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  PowerSeries r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
  PowerSeries r = *this;
  for (auto& v : r.c_) v *= c;
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  PowerSeries r(degree_);
  for (int i1 = 0; i1 <= degree_; ++i1) {
    for (int j1 = 0; i1 + j1 <= degree_; ++j1) {
      const Rational& a = at(i1, j1);
      if (a == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= degree_; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 <= degree_; ++j2) {
          const Rational& b = o.at(i2, j2);
          if (b != 0) r.at(i1 + i2, j1 + j2) += a * b;
        }
      }
    }
  }
  return r;
}

PowerSeries PowerSeries::d_dz() const {
  PowerSeries r(degree_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 1; i + j <= degree_; ++j) r.at(i, j - 1) = at(i, j) * j;
  }
  return r;
}

bool PowerSeries::is_zero() const {
  for (const auto& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

PowerSeries sqrt_unit(const PowerSeries& f) {
  if (f.at(0, 0) != 1) throw RangeError("sqrt_unit needs constant term 1");
  const int d = f.degree();
  const PowerSeries one = PowerSeries::constant(d, 1);
  PowerSeries g = one; // sqrt(f)
  PowerSeries h = one; // 1 / sqrt(f)
  // each round doubles the number of correct total degrees
  for (int round = 0; round < 64; ++round) {
    const PowerSeries err = f - g * g;
    if (err.is_zero()) return g;
    h = h + h * (one - g * h);
    g = g + (h * err).scaled(Rational(1, 2));
  }
  throw std::logic_error("sqrt_unit did not converge");
}

} // namespace spinal
