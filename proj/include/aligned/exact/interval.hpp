#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "aligned/exact/rational.hpp"

namespace aligned::exact {

/// Closed interval [lo, hi] with exact rational endpoints. Arithmetic returns
/// an enclosure of every value the operation can take on the operands.
class Interval {
 public:
  Interval() = default;
  Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT: implicit lift
  Interval(int point) : lo_(point), hi_(point) {}              // NOLINT: implicit lift
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }

  /// +1 / -1 when the whole interval has that sign, nullopt when it straddles
  /// or touches zero.
  std::optional<int> certain_sign() const {
    if (lo_ > 0) return 1;
    if (hi_ < 0) return -1;
    return std::nullopt;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    return a * Interval(Rational(1 / b.hi_), Rational(1 / b.lo_));
  }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

 private:
  Rational lo_;
  Rational hi_;
};

}  // namespace aligned::exact
