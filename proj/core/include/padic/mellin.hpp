#pragma once

#include <map>

#include "padic/ballsum.hpp"
#include "padic/conv.hpp"
#include "padic/exact.hpp"
#include "padic/quad_ext.hpp"
#include "padic/slice.hpp"

namespace padic {

// Polynomials over Q in one variable (ascending coefficients).
struct Poly {
  std::vector<BigRat> c;
  static Poly one() { return Poly{{BigRat(1)}}; }
  static Poly monomial(long deg, const BigRat& a);
  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const;
  BigRat eval(const BigRat& v) const;
  Poly plus(const Poly& o) const;
  Poly times(const Poly& o) const;
  Poly scaled(const BigRat& a) const;
  Poly derivative() const;
  // Divide by (v - root); Exact division: fails if remainder nonzero.
  Poly deflate(const BigRat& root) const;
  long order_at(const BigRat& root) const;  // multiplicity of the root
  void trim();
};

// Ratio of polynomials in V; V = q^{1/2} / chi(p) is the Mellin variable,
// so V-degree counts valuation annuli and poles sit at V = eta(p) q.
struct RatFunc {
  Poly num;
  Poly den = Poly::one();
  bool is_zero() const { return num.is_zero(); }
  RatFunc plus(const RatFunc& o) const;
  RatFunc times(const RatFunc& o) const;
  RatFunc scaled(const BigRat& a) const;
  BigRat eval(const BigRat& v) const;
  // Laurent datum at V0: (order of pole, leading coefficient); order <= 0
  // means regular (order gives the vanishing order as a negative number...
  // convention: pole_order > 0 pole, 0 finite nonzero or zero value).
  std::pair<long, BigRat> laurent_at(const BigRat& v0) const;
};

// Exact Mellin transform of a measure slice: one rational function of V per
// finite-order unit character (trivial / Legendre).
struct MellinFunction {
  long p = 3;
  std::map<int, RatFunc> comp;  // key: conductor_exp in {0,1}

  const RatFunc& operator[](int conductor) const;
  bool has(int conductor) const { return comp.count(conductor) > 0; }
};

// checkf(omega component)(V) = sum_k m_k(omega) V^k, with the germ tail
// summed in closed form. kmin < 0 contributes V^{kmin} denominators.
MellinFunction mellin_transform(const ExactSlice& f);

// Laurent data of the s-variable Mellin at chi0 = omega |.|^{s0} with
// V0 = q^{1/2}/chi0(p) rational: converts the V-Laurent to s-Laurent,
// picking up (V0 log q)^{-order}.
Laurent mellin_residue(const MellinFunction& mf, const MultChar& chi0, long q);

// V-value of chi = omega |.|^{s}: V = q^{1/2 + s} / omega(p)-sign; rational
// only for half-integer s; callers on the exact path use s in (1/2)Z.
BigRat mellin_point(const MultChar& chi, long q);

struct LocalLFactor {
  MultChar character;
  Complex shift{0.0, 0.0};
  // (1 - omega(p) q^{-s-shift})^{-1} for unramified omega; 1 if ramified.
  Complex value(Complex s, const PrimeContext& ctx) const;
};

Complex local_L(const MultChar& chi, Complex s, const PrimeContext& ctx);

// Tate gamma factor: the constant with Z(F phi, |.| chi^{-1}) =
// gamma(chi) Z(phi, chi), computed as a ratio of Tate integrals over a test
// function library and checked to be test-function independent.
Complex tate_gamma(const MultChar& chi, const PrimeContext& ctx, int psi_sign = +1);

// Leading Laurent datum of s -> gamma(omega |.|^{s0+s}) at its poles, exact
// for unramified omega.
Laurent tate_gamma_star(const MultChar& chi, const PrimeContext& ctx);

// gamma_E for the trivial character of E^x against psi o tr and the
// self-dual measure (closed form).
Complex gamma_E_trivial(const QuadExtension& E, Complex s);

// AvgVol(F^x) = Res_{s=0} gamma(1-s, psi) and its E-analogues.
ExactScalar avg_vol_F(const PrimeContext& ctx);
ExactScalar avg_vol_E(const QuadExtension& E);

struct LambdaResult {
  Complex value;
  Complex route_gamma_ratio;   // gamma(1,s)gamma(eta,s)/gamma_E(1,s)
  Complex route_volume;        // 2 gamma(eta,1,psi) / Vol(T)
  double max_err;
};

// lambda(E/F, psi) computed both ways and checked to agree.
LambdaResult lambda_constant(const QuadExtension& E);

// Ball-sum (role Function) to d^x-density slice, with constant-at-zero tail.
Slice function_slice(const BallSum1D& f, const PrimeContext& ctx, long kmax_pad = 2);

// Tate integral Z(phi, chi) = int phi(x) chi(x) d^x (meromorphic
// continuation via geometric tails).
Complex tate_integral(const BallSum1D& phi, const MultChar& chi, const PrimeContext& ctx);

}  // namespace padic
