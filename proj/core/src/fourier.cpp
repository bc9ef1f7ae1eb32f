#include "padic/fourier.hpp"

#include <cmath>

namespace padic {

namespace {

struct AxisTransform {
  // Transform data of int_{ball} psi(sign * m * x * y) dx as a function of y:
  // support ball, per-sub-ball phase points.
  long support_radius_exp;
  long sub_level;  // sub-ball radius exp (>= support_radius_exp)
  BigRat phase_mult;  // phase at sub-ball rep y0 is psi(sign * phase_mult * y0)
  double mass;
};

AxisTransform axis_data(const PAdicBall& b, const BigRat& scale, long p) {
  AxisTransform a;
  a.support_radius_exp = -b.radius_exp - (scale == 0 ? 0 : val_p(scale, p));
  a.phase_mult = scale * b.center;
  a.mass = to_double(b.measure(p));
  long m0 = a.support_radius_exp;
  if (a.phase_mult != 0) m0 = std::max(m0, -val_p(a.phase_mult, p));
  a.sub_level = m0;
  return a;
}

}  // namespace

BallSum1D fourier_additive(const BallSum1D& f, const PrimeContext& ctx, int psi_sign) {
  AdditiveCharacter psi(ctx.p);
  BallSum1D out;
  out.role = f.role;
  for (const auto& t : f.terms) {
    AxisTransform ax = axis_data(t.ball, BigRat(1), ctx.p);
    long nsub = ax.sub_level - ax.support_radius_exp;
    require(nsub <= 24 && std::pow(static_cast<double>(ctx.p), static_cast<double>(nsub)) <= 2e5,
            Err::UnboundedSupport, "fourier refinement too deep");
    BigRat step = pow_rat(BigRat(ctx.p), ax.support_radius_exp);
    BigInt count = pow_int(BigInt(ctx.p), static_cast<unsigned>(nsub));
    for (BigInt j = 0; j < count; ++j) {
      BigRat y0 = BigRat(j) * step;
      Complex phase = psi.eval(ax.phase_mult * y0);
      if (psi_sign < 0) phase = std::conj(phase);
      out.add(PAdicBall{y0, ax.sub_level}, t.coeff * ax.mass * phase);
    }
  }
  return out.normalized(ctx.p);
}

BallSum2D fourier_symplectic(const BallSum2D& f, const PrimeContext& ctx, const BigRat& scale,
                             int psi_sign) {
  require(scale != 0, Err::ZeroArgument, "symplectic scale zero");
  AdditiveCharacter psi(ctx.p);
  double measure_factor = std::pow(static_cast<double>(ctx.p),
                                   -static_cast<double>(val_p(scale, ctx.p)));  // |scale|
  BallSum2D out;
  out.role = f.role;
  for (const auto& t : f.terms) {
    // phi^(c,d) picks up psi(sign*scale*(x d - y c)): the x-ball drives the
    // d-axis, the y-ball drives the c-axis with opposite sign.
    AxisTransform ax = axis_data(t.bx, scale, ctx.p);   // d-axis data
    AxisTransform ay = axis_data(t.by, scale, ctx.p);   // c-axis data
    long nd = ax.sub_level - ax.support_radius_exp;
    long nc = ay.sub_level - ay.support_radius_exp;
    require(nd + nc <= 24 && std::pow(static_cast<double>(ctx.p),
                                      static_cast<double>(nd + nc)) <= 2e5,
            Err::UnboundedSupport, "fourier refinement too deep");
    BigRat step_d = pow_rat(BigRat(ctx.p), ax.support_radius_exp);
    BigRat step_c = pow_rat(BigRat(ctx.p), ay.support_radius_exp);
    BigInt count_d = pow_int(BigInt(ctx.p), static_cast<unsigned>(nd));
    BigInt count_c = pow_int(BigInt(ctx.p), static_cast<unsigned>(nc));
    for (BigInt jd = 0; jd < count_d; ++jd)
      for (BigInt jc = 0; jc < count_c; ++jc) {
        BigRat d0 = BigRat(jd) * step_d;
        BigRat c0 = BigRat(jc) * step_c;
        Complex phase = psi.eval(ax.phase_mult * d0 - ay.phase_mult * c0);
        if (psi_sign < 0) phase = std::conj(phase);
        out.add(PAdicBall{c0, ay.sub_level}, PAdicBall{d0, ax.sub_level},
                t.coeff * (ax.mass * ay.mass * measure_factor) * phase);
      }
  }
  return out;
}

InnerFormPair fourier_symplectic_pair(const InnerFormPair& f, const QuadExtension& E) {
  InnerFormPair out;
  out.plus = fourier_symplectic(f.plus, E.ctx(), BigRat(1));
  if (!E.split()) out.alpha = fourier_symplectic(f.alpha, E.ctx(), E.kappa());
  return out;
}

}  // namespace padic
