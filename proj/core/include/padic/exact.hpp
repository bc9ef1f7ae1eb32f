#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "padic/numbers.hpp"

namespace padic {

// Exact scalar of the form sum_{h,l} r_{h,l} q^{h/2} (log q)^l with rational
// coefficients. Closed under + and *; keeps residue identities exact up to
// the declared (log q)-units and the q^{1/2} measure normalizations.
class ExactScalar {
 public:
  ExactScalar() = default;
  /* implicit */ ExactScalar(const BigRat& r) {
    if (r != 0) terms_[{0, 0}] = r;
  }
  ExactScalar(long h_half, long l, const BigRat& r) {
    if (r != 0) terms_[{h_half, l}] = r;
  }

  static ExactScalar q_power_half(long h_half, const BigRat& coeff = BigRat(1)) {
    return ExactScalar(h_half, 0, coeff);
  }
  static ExactScalar log_q_power(long l, const BigRat& coeff = BigRat(1)) {
    return ExactScalar(0, l, coeff);
  }

  bool is_zero() const { return terms_.empty(); }

  ExactScalar operator+(const ExactScalar& o) const {
    ExactScalar r = *this;
    for (const auto& [k, v] : o.terms_) {
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        r.terms_[k] = v;
      } else {
        it->second += v;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }
  ExactScalar operator-() const {
    ExactScalar r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  ExactScalar operator-(const ExactScalar& o) const { return *this + (-o); }
  ExactScalar operator*(const ExactScalar& o) const {
    ExactScalar r;
    for (const auto& [k1, v1] : terms_)
      for (const auto& [k2, v2] : o.terms_) {
        std::pair<long, long> k{k1.first + k2.first, k1.second + k2.second};
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
          r.terms_[k] = v1 * v2;
          if (r.terms_[k] == 0) r.terms_.erase(k);
        } else {
          it->second += v1 * v2;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }
  bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }

  // Multiplicative inverse of a monomial scalar.
  ExactScalar inverse() const {
    require(terms_.size() == 1, Err::Internal, "inverse of non-monomial ExactScalar");
    const auto& [k, v] = *terms_.begin();
    return ExactScalar(-k.first, -k.second, BigRat(1) / v);
  }

  double to_double(long q) const {
    double s = 0;
    double lq = std::log(static_cast<double>(q));
    for (const auto& [k, v] : terms_)
      s += padic::to_double(v) * std::pow(static_cast<double>(q), 0.5 * k.first) *
           std::pow(lq, k.second);
    return s;
  }

  std::string str() const;

  const std::map<std::pair<long, long>, BigRat>& terms() const { return terms_; }

 private:
  std::map<std::pair<long, long>, BigRat> terms_;
};

// Leading Laurent datum of a meromorphic quantity at a point: value ~
// coeff * s^{-order} (order > 0: pole; order 0: finite value).
struct Laurent {
  long order = 0;
  ExactScalar coeff;
};

}  // namespace padic
