#pragma once

#include <string>
#include <vector>

#include "padic/numbers.hpp"

namespace padic {

// Element of Q_p modeled exactly by a rational number (plus a designated
// zero). All arithmetic is exact at every depth; unit_digits exposes the
// residue expansion of the unit part when a digit view is needed.
class PAdicNumber {
 public:
  PAdicNumber() : value_(0) {}
  explicit PAdicNumber(BigRat v) : value_(std::move(v)) {}
  explicit PAdicNumber(long v) : value_(v) {}
  static PAdicNumber parse(const std::string& text) { return PAdicNumber(parse_rational(text)); }

  bool is_zero() const { return value_ == 0; }
  const BigRat& rat() const { return value_; }

  long valuation(long p) const {
    require(!is_zero(), Err::ZeroArgument, "valuation of zero");
    return val_p(value_, p);
  }

  BigRat unit(long p) const { return unit_part(value_, p); }

  // First n base-p digits of the unit part (exact).
  std::vector<long> unit_digits(long p, long n) const;

  PAdicNumber operator+(const PAdicNumber& o) const { return PAdicNumber(value_ + o.value_); }
  PAdicNumber operator-(const PAdicNumber& o) const { return PAdicNumber(value_ - o.value_); }
  PAdicNumber operator*(const PAdicNumber& o) const { return PAdicNumber(value_ * o.value_); }
  PAdicNumber operator/(const PAdicNumber& o) const {
    require(!o.is_zero(), Err::ZeroArgument, "division by zero");
    return PAdicNumber(value_ / o.value_);
  }
  bool operator==(const PAdicNumber& o) const { return value_ == o.value_; }

  std::string str() const { return rational_to_string(value_); }

 private:
  BigRat value_;
};

// Balls a + p^k Z_p. Ultrametric: two balls nest or are disjoint.
struct PAdicBall {
  BigRat center;
  long radius_exp = 0;  // the ball center + p^{radius_exp} Z_p

  bool contains(const BigRat& x, long p) const {
    BigRat d = x - center;
    if (d == 0) return true;
    return val_p(d, p) >= radius_exp;
  }
  bool contains_ball(const PAdicBall& o, long p) const {
    return o.radius_exp >= radius_exp && contains(o.center, p);
  }
  bool disjoint(const PAdicBall& o, long p) const {
    return !contains_ball(o, p) && !o.contains_ball(*this, p);
  }
  // Additive Haar measure with dx(Z_p) = 1.
  BigRat measure(long p) const { return pow_rat(BigRat(p), -radius_exp); }
};

}  // namespace padic
