#include "padic/ballsum.hpp"

#include <algorithm>
#include <map>

namespace padic {

namespace {

// Split a ball into its p children one level down.
template <class S>
void split_once(std::vector<typename BallSumT<S>::Term>& terms, size_t idx, long p) {
  auto t = terms[idx];
  terms.erase(terms.begin() + static_cast<long>(idx));
  BigRat step = pow_rat(BigRat(p), t.ball.radius_exp);
  for (long j = 0; j < p; ++j) {
    typename BallSumT<S>::Term child;
    child.ball = PAdicBall{t.ball.center + BigRat(j) * step, t.ball.radius_exp + 1};
    child.coeff = t.coeff;
    terms.push_back(child);
  }
}

}  // namespace

template <class S>
BallSumT<S> BallSumT<S>::normalized(long p, size_t size_guard) const {
  std::vector<Term> work = terms;
  // Refine until all pairs are equal or disjoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < work.size() && !changed; ++i)
      for (size_t j = i + 1; j < work.size() && !changed; ++j) {
        const auto &a = work[i].ball, &b = work[j].ball;
        if (a.radius_exp == b.radius_exp) continue;
        if (a.contains_ball(b, p)) {
          split_once<S>(work, i, p);
          changed = true;
        } else if (b.contains_ball(a, p)) {
          split_once<S>(work, j, p);
          changed = true;
        }
        require(work.size() <= size_guard, Err::UnboundedSupport, "normalization blow-up");
      }
  }
  // Merge equal balls (canonical center = smallest representative).
  std::map<std::pair<BigRat, long>, S> acc;
  for (auto& t : work) {
    BigRat c = t.ball.center;
    // canonical representative of c mod p^{radius_exp}
    long k = t.ball.radius_exp;
    BigRat pk = pow_rat(BigRat(p), k);
    BigRat r = c / pk;
    BigInt floor = num(r) / den(r);
    if (r < 0 && floor * den(r) != num(r)) floor -= 1;
    c -= BigRat(floor) * pk;
    acc[{c, k}] += t.coeff;
  }
  BallSumT out;
  out.role = role;
  for (auto& [key, v] : acc) {
    if (v == S{}) continue;
    out.terms.push_back({PAdicBall{key.first, key.second}, v});
  }
  return out;
}

Complex integrate_multiplicative(const BallSum1D& f, long p) {
  Complex v = 0;
  for (const auto& t : f.terms) {
    bool covers_zero =
        t.ball.center == 0 || val_p(t.ball.center, p) >= t.ball.radius_exp;
    if (covers_zero) {
      require(std::abs(t.coeff) == 0.0, Err::UnboundedSupport,
              "d^x integral divergent at 0");
      continue;
    }
    // |x| constant on the ball: d^x mass = p^{-radius} / |center|.
    long vc = val_p(t.ball.center, p);
    v += t.coeff * std::pow(static_cast<double>(p), static_cast<double>(vc) -
                                                        static_cast<double>(t.ball.radius_exp));
  }
  return v;
}

template struct BallSumT<Complex>;
template struct BallSumT<BigRat>;
template struct BallSum2DT<Complex>;
template struct BallSum2DT<BigRat>;

}  // namespace padic
