#pragma once

#include <algorithm>
#include <vector>

#include "padic/characters.hpp"
#include "padic/context.hpp"
#include "padic/padic_number.hpp"

namespace padic {

enum class Role { Function, Measure };

template <class S>
struct ScalarTraits;
template <>
struct ScalarTraits<Complex> {
  static Complex from_rat(const BigRat& r) { return Complex(to_double(r), 0.0); }
};
template <>
struct ScalarTraits<BigRat> {
  static BigRat from_rat(const BigRat& r) { return r; }
};

// Finite linear combination of indicator functions of balls: the exact model
// of Schwartz-Bruhat data on F. Coefficient scalar is a template parameter
// (complex for the analytic paths, rational for the exact ones).
template <class S>
struct BallSumT {
  struct Term {
    PAdicBall ball;
    S coeff;
  };
  std::vector<Term> terms;
  Role role = Role::Function;

  bool empty() const { return terms.empty(); }
  void add(const PAdicBall& b, const S& c) { terms.push_back({b, c}); }

  S eval(const BigRat& x, long p) const {
    S v{};
    for (const auto& t : terms)
      if (t.ball.contains(x, p)) v += t.coeff;
    return v;
  }

  // sum coeff * vol(ball) against dx (dx(Z_p) = 1); exact and linear.
  S integrate_additive(long p) const {
    S v{};
    for (const auto& t : terms) v += t.coeff * ScalarTraits<S>::from_rat(t.ball.measure(p));
    return v;
  }

  BallSumT scaled(const S& c) const {
    BallSumT r = *this;
    for (auto& t : r.terms) t.coeff *= c;
    return r;
  }
  BallSumT plus(const BallSumT& o) const {
    BallSumT r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
  }
  // x -> f(x - a)
  BallSumT translated(const BigRat& a) const {
    BallSumT r = *this;
    for (auto& t : r.terms) t.ball.center += a;
    return r;
  }
  // support of f(x/m): balls scaled by m
  BallSumT dilated(const BigRat& m, long p) const {
    require(m != 0, Err::ZeroArgument, "dilation by zero");
    BallSumT r = *this;
    long v = val_p(m, p);
    for (auto& t : r.terms) {
      t.ball.center *= m;
      t.ball.radius_exp += v;
    }
    return r;
  }

  // min valuation over the support; UnboundedSupport if 0 is covered.
  long support_min_val(long p) const {
    long m = 0;
    bool seen = false;
    for (const auto& t : terms) {
      long v = t.ball.center == 0 ? t.ball.radius_exp
                                  : std::min(val_p(t.ball.center, p), t.ball.radius_exp);
      m = seen ? std::min(m, v) : v;
      seen = true;
    }
    require(seen, Err::UnboundedSupport, "empty sum has no support");
    return m;
  }
  long finest_level() const {
    long m = 0;
    for (const auto& t : terms) m = std::max(m, t.ball.radius_exp);
    return m;
  }

  // Refine to pairwise disjoint balls, merging coefficients; canonical form
  // for equality testing.
  BallSumT normalized(long p, size_t size_guard = 200000) const;
};

using BallSum1D = BallSumT<Complex>;
using ExactBallSum1D = BallSumT<BigRat>;

// Product balls in F^2.
template <class S>
struct BallSum2DT {
  struct Term {
    PAdicBall bx, by;
    S coeff;
  };
  std::vector<Term> terms;
  Role role = Role::Function;

  bool empty() const { return terms.empty(); }
  void add(const PAdicBall& bx, const PAdicBall& by, const S& c) { terms.push_back({bx, by, c}); }

  S eval(const BigRat& x, const BigRat& y, long p) const {
    S v{};
    for (const auto& t : terms)
      if (t.bx.contains(x, p) && t.by.contains(y, p)) v += t.coeff;
    return v;
  }

  S integrate_additive(long p) const {
    S v{};
    for (const auto& t : terms)
      v += t.coeff * ScalarTraits<S>::from_rat(t.bx.measure(p) * t.by.measure(p));
    return v;
  }

  BallSum2DT scaled(const S& c) const {
    BallSum2DT r = *this;
    for (auto& t : r.terms) t.coeff *= c;
    return r;
  }
  BallSum2DT plus(const BallSum2DT& o) const {
    BallSum2DT r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
  }
  BallSum2DT dilated(const BigRat& m, long p) const {
    require(m != 0, Err::ZeroArgument, "dilation by zero");
    BallSum2DT r = *this;
    long v = val_p(m, p);
    for (auto& t : r.terms) {
      t.bx.center *= m;
      t.bx.radius_exp += v;
      t.by.center *= m;
      t.by.radius_exp += v;
    }
    return r;
  }
};

using BallSum2D = BallSum2DT<Complex>;
using ExactBallSum2D = BallSum2DT<BigRat>;

// d^x-integral of a function ball-sum; errors if the support covers 0 with a
// nonzero coefficient (divergent).
Complex integrate_multiplicative(const BallSum1D& f, long p);

extern template struct BallSumT<Complex>;
extern template struct BallSumT<BigRat>;
extern template struct BallSum2DT<Complex>;
extern template struct BallSum2DT<BigRat>;

}  // namespace padic
