#pragma once

#include "padic/slice.hpp"

namespace padic {

// Multiplicative convolution kernel K(x) d^x with
//   K(x) = psi^{sign}(x or 1/x) * omega(x) * |x|^{s}
// omega a quadratic character (value_on_p and any chi(p) q^{-s0} twist may be
// folded into ratio extras via omega.value_on_p and s).
struct Kernel {
  enum Psi { None, Direct, Inverse } psi = None;
  int psi_sign = +1;
  MultChar omega;      // quadratic finite part; value_on_p enters ratio
  Complex s{0.0, 0.0}; // |x|^s

  // chi(p)-type multiplier per annulus: omega(p^k) q^{-ks}.
  Complex ratio(long p) const {
    return omega.value_on_p * std::pow(Complex(static_cast<double>(p), 0.0), -s);
  }

  static Kernel psi_abs(int sign, Complex s_, MultChar w = MultChar::trivial()) {
    return Kernel{Direct, sign, w, s_};
  }
  static Kernel psi_inv_abs(int sign, Complex s_, MultChar w = MultChar::trivial()) {
    return Kernel{Inverse, sign, w, s_};
  }
  static Kernel plain(Complex s_, MultChar w = MultChar::trivial()) {
    return Kernel{None, +1, w, s_};
  }
};

// Gauss sum sum_u legendre(u) e^{2 pi i sign u / p}.
Complex gauss_sum_legendre(long p, int sign);

// int_{val(x)=j, units} psi^{sign}(x) omega(u) d^x u  (exact closed form).
Complex psi_annulus_integral(long p, long j, const UnitChar& omega, int sign);

struct ConvParams {
  long out_kmin = 0;
  long out_kmax = -1;
  bool derive_tails = true;
  long guard = 64;  // hard cap on annulus recursion for stabilization scans
};

// (K * f)(y) = int K(x) f(y/x) d^x, regularized: oscillatory ranges vanish
// exactly past the conductor, smooth tails are summed as geometric series
// from the slice tail data. Output window is [out_kmin, out_kmax] with
// derived tails when derive_tails is set.
Slice mult_convolve(const Kernel& K, const Slice& f, const ConvParams& par);

// Pointwise value of (K * f)(y); same regularization.
Complex mult_convolve_point(const Kernel& K, const Slice& f, const BigRat& y);

// int K(x) f(x) d^x (the full regularized integral of a slice against a
// kernel); used by equivariant integrals and pushforwards.
Complex kernel_integral(const Kernel& K, const Slice& f);

}  // namespace padic
