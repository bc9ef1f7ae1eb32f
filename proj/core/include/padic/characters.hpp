#pragma once

#include <complex>
#include <string>

#include "padic/context.hpp"
#include "padic/numbers.hpp"
#include "padic/padic_number.hpp"

namespace padic {

// psi with conductor Z_p: psi(x) = exp(2 pi i frac_p(x)), trivial on Z_p,
// nontrivial on p^{-1} Z_p. The self-dual additive measure gives Z_p mass 1.
struct AdditiveCharacter {
  long p;
  long conductor_exp = 0;

  explicit AdditiveCharacter(long prime) : p(prime) {}

  Complex eval(const BigRat& x) const {
    if (x == 0) return Complex(1.0, 0.0);
    return unit_circle(frac_p(x, p));
  }
  Complex eval(const PAdicNumber& x) const { return eval(x.rat()); }
  Complex eval_inverse(const BigRat& x) const { return std::conj(eval(x)); }
};

// Finite-order part of a multiplicative character on Z_p^x. Everything the
// formulas here need is a quadratic twist, so conductor exponent is 0 or 1
// and the ramified case is the Legendre character.
struct UnitChar {
  int conductor_exp = 0;  // 0: trivial on units; 1: Legendre symbol

  bool trivial() const { return conductor_exp == 0; }
  int eval_sign(const BigRat& unit, long p) const {
    if (trivial()) return 1;
    return legendre(mod_pk(unit, p, 1), p);
  }
  bool operator==(const UnitChar& o) const { return conductor_exp == o.conductor_exp; }
};

// chi(x) = omega(unit(x)) * value_on_p^{val(x)} * q^{-s val(x)}  (= omega |.|^s
// with omega the finite-order part determined by (unit_char, value_on_p)).
struct MultChar {
  UnitChar finite_part;
  Complex value_on_p = Complex(1.0, 0.0);
  Complex exponent = Complex(0.0, 0.0);  // s

  static MultChar trivial() { return MultChar{}; }
  static MultChar norm_power(Complex s) { return MultChar{UnitChar{0}, Complex(1, 0), s}; }
  static MultChar unramified_quadratic() { return MultChar{UnitChar{0}, Complex(-1, 0), {}}; }

  bool is_quadratic() const {
    return exponent == Complex(0, 0) &&
           (value_on_p == Complex(1, 0) || value_on_p == Complex(-1, 0));
  }
  int sign_on_p() const { return value_on_p.real() < 0 ? -1 : 1; }

  // chi(p)^k q^{-s k} packaged once; full evaluation multiplies the unit sign.
  Complex p_direction(const PrimeContext& ctx) const {
    return value_on_p * std::pow(Complex(ctx.qd(), 0.0), -exponent);
  }

  Complex eval(const BigRat& x, const PrimeContext& ctx) const {
    require(x != 0, Err::ZeroArgument, "character at zero");
    long k = val_p(x, ctx.p);
    Complex pk = std::pow(p_direction(ctx), Complex(static_cast<double>(k), 0.0));
    double sign = finite_part.eval_sign(unit_part(x, ctx.p), ctx.p);
    return sign * pk;
  }

  // Exact +-1 evaluation, defined only for quadratic characters.
  int eval_sign(const BigRat& x, long p) const {
    require(is_quadratic(), Err::Internal, "eval_sign wants a quadratic character");
    require(x != 0, Err::ZeroArgument, "character at zero");
    long k = val_p(x, p);
    int s = (k % 2 != 0) ? sign_on_p() : 1;
    return s * finite_part.eval_sign(unit_part(x, p), p);
  }

  MultChar inverse() const {
    return MultChar{finite_part, Complex(1, 0) / value_on_p, -exponent};
  }
  MultChar times_norm_power(Complex ds) const {
    return MultChar{finite_part, value_on_p, exponent + ds};
  }
  // Product with another character whose finite parts multiply (quadratic
  // finite parts: Legendre * Legendre = trivial).
  MultChar times(const MultChar& o) const {
    UnitChar u{(finite_part.conductor_exp + o.finite_part.conductor_exp) % 2};
    return MultChar{u, value_on_p * o.value_on_p, exponent + o.exponent};
  }

  bool same_finite_order(const MultChar& o) const {
    return finite_part == o.finite_part && value_on_p == o.value_on_p;
  }
};

// eta with eta(x) = 1 iff x is a norm from F(sqrt(D)); trivial iff D square.
MultChar quadratic_character_of_discriminant(const BigRat& D, const PrimeContext& ctx);

// The four quadratic classes of Q_p^x (p odd): 1, u, p, up.
enum class QuadClass { Split, UnramifiedUnit, RamifiedP, RamifiedUP };
BigRat quad_class_representative(QuadClass c, const PrimeContext& ctx);
std::string quad_class_name(QuadClass c);

struct HaarMeasure {
  enum Kind { Additive, Multiplicative } kind = Additive;

  // Measure of the ball a + p^k Z_p (additive) resp. of the unit-coset
  // p^k u (1 + p^d Z_p), d >= 1 (multiplicative; independent of k).
  static BigRat additive_ball(long p, long radius_exp) {
    return pow_rat(BigRat(p), -radius_exp);
  }
  static BigRat mult_annulus(long p) { return BigRat(p - 1, p); }  // vol(|x| = q^{-k}) = 1 - 1/p
  static BigRat mult_coset(long p, long depth) { return pow_rat(BigRat(p), -depth); }
};

}  // namespace padic
