#include "padic/mellin.hpp"

#include "padic/fourier.hpp"

#include <cmath>

namespace padic {

Poly Poly::monomial(long deg, const BigRat& a) {
  Poly r;
  r.c.assign(static_cast<size_t>(deg + 1), BigRat(0));
  r.c.back() = a;
  return r;
}

bool Poly::is_zero() const {
  for (const auto& a : c)
    if (a != 0) return false;
  return true;
}

BigRat Poly::eval(const BigRat& v) const {
  BigRat r(0);
  for (size_t i = c.size(); i-- > 0;) r = r * v + c[i];
  return r;
}

Poly Poly::plus(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()), BigRat(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.trim();
  return r;
}

Poly Poly::times(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly{{BigRat(0)}};
  Poly r;
  r.c.assign(c.size() + o.c.size() - 1, BigRat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.trim();
  return r;
}

Poly Poly::scaled(const BigRat& a) const {
  Poly r = *this;
  for (auto& x : r.c) x *= a;
  return r;
}

Poly Poly::derivative() const {
  Poly r;
  if (c.size() <= 1) return Poly{{BigRat(0)}};
  r.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * BigRat(static_cast<long>(i));
  return r;
}

Poly Poly::deflate(const BigRat& root) const {
  // synthetic division by (v - root)
  require(!c.empty(), Err::Internal, "deflate empty");
  Poly r;
  r.c.assign(c.size() - 1, BigRat(0));
  BigRat carry(0);
  for (size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * root;
    r.c[i - 1] = carry;
  }
  BigRat rem = c[0] + carry * root;
  require(rem == 0, Err::Internal, "deflate with nonzero remainder");
  r.trim();
  return r;
}

long Poly::order_at(const BigRat& root) const {
  if (is_zero()) return -1;  // identically zero
  Poly cur = *this;
  long ord = 0;
  while (cur.eval(root) == 0) {
    cur = cur.deflate(root);
    ++ord;
  }
  return ord;
}

void Poly::trim() {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

RatFunc RatFunc::plus(const RatFunc& o) const {
  RatFunc r;
  r.num = num.times(o.den).plus(o.num.times(den));
  r.den = den.times(o.den);
  return r;
}

RatFunc RatFunc::times(const RatFunc& o) const {
  RatFunc r;
  r.num = num.times(o.num);
  r.den = den.times(o.den);
  return r;
}

RatFunc RatFunc::scaled(const BigRat& a) const {
  RatFunc r = *this;
  r.num = r.num.scaled(a);
  return r;
}

BigRat RatFunc::eval(const BigRat& v) const {
  BigRat d = den.eval(v);
  require(d != 0, Err::PoleHit, "rational function pole");
  return num.eval(v) / d;
}

std::pair<long, BigRat> RatFunc::laurent_at(const BigRat& v0) const {
  if (num.is_zero()) return {0, BigRat(0)};
  long on = num.order_at(v0);
  long od = den.order_at(v0);
  require(od >= 0, Err::Internal, "zero denominator polynomial");
  Poly n = num, d = den;
  for (long i = 0; i < on; ++i) n = n.deflate(v0);
  for (long i = 0; i < od; ++i) d = d.deflate(v0);
  long order = od - on;  // > 0: pole
  if (order < 0) return {0, BigRat(0)};  // zero of positive order: value 0
  return {order, n.eval(v0) / d.eval(v0)};
}

const RatFunc& MellinFunction::operator[](int conductor) const {
  static const RatFunc zero{Poly{{BigRat(0)}}, Poly::one()};
  auto it = comp.find(conductor);
  return it == comp.end() ? zero : it->second;
}

MellinFunction mellin_transform(const ExactSlice& f) {
  MellinFunction out;
  out.p = f.p;
  long shift = std::min<long>(0, f.kmin);  // V^{kmin} denominators for kmin<0
  for (int cond = 0; cond <= 1; ++cond) {
    Poly num{{BigRat(0)}};
    Poly den = Poly::monomial(-shift, BigRat(1));
    if (den.c.size() == 1) den = Poly::one();
    // window part: sum m_k V^{k - shift} over the window
    for (long k = f.kmin; k <= f.kmax; ++k) {
      const BigRat& m = cond == 0 ? f.at(k).m_triv : f.at(k).m_leg;
      if (m == 0) continue;
      num = num.plus(Poly::monomial(k - shift, m));
    }
    // germ tail: sum_{k > kmax} V^k q^{-k} (chi-parts)
    RatFunc total{num, den};
    for (const auto& g : f.germ) {
      bool leg = !g.chi.finite_part.trivial();
      if ((cond == 1) != leg) continue;
      // moments m_k = (1-1/p) a r^k k^e with r = chi(p)/p
      BigRat r = BigRat(g.chi.sign_on_p(), f.p);
      BigRat a = g.a * BigRat(f.p - 1, f.p);
      long K = f.kmax + 1;
      // sum_{k>=K} (rV)^k = (rV)^K / (1 - rV); with k^1: standard closed form
      Poly rV = Poly{{BigRat(0), r}};
      Poly rVK = Poly::one();
      for (long i = 0; i < K; ++i) rVK = rVK.times(rV);  // K >= 0 in practice
      require(K >= 0, Err::Internal, "germ window ends below zero");
      Poly one_minus{{BigRat(1), -r}};
      RatFunc tail;
      if (g.k_power == 0) {
        tail = RatFunc{rVK.scaled(a), one_minus};
      } else {
        // sum k x^k from K: x^K (K - (K-1)x) / (1-x)^2, x = rV
        Poly kpart{{BigRat(K), -r * BigRat(K - 1)}};
        tail = RatFunc{rVK.times(kpart).scaled(a), one_minus.times(one_minus)};
      }
      total = total.plus(tail);
    }
    out.comp[cond] = total;
  }
  return out;
}

BigRat mellin_point(const MultChar& chi, long q) {
  // V = q^{1/2}/chi(p); chi(p) = sign * q^{-s}: rational only for
  // half-integer s with matching parity.
  Complex s = chi.exponent;
  require(std::abs(s.imag()) < 1e-12, Err::Internal, "mellin_point wants real s");
  double twos = 2.0 * s.real();
  long t2 = std::lround(twos);
  require(std::abs(twos - t2) < 1e-9, Err::Internal, "mellin_point wants half-integer s");
  long e2 = 1 + t2;  // V = sign * q^{(1+2s)/2}
  require(e2 % 2 == 0, Err::Internal, "V irrational at this character");
  BigRat v = pow_rat(BigRat(q), e2 / 2);
  return chi.sign_on_p() < 0 ? -v : v;
}

Laurent mellin_residue(const MellinFunction& mf, const MultChar& chi0, long q) {
  const RatFunc& comp = mf[chi0.finite_part.conductor_exp];
  BigRat v0 = mellin_point(chi0, q);
  auto [order, lead] = comp.laurent_at(v0);
  if (order == 0) return Laurent{0, ExactScalar(lead)};
  // F(V) ~ lead/(V-V0)^order; V(s) = V0 q^{s-s0}: V-V0 ~ V0 log q (s-s0).
  ExactScalar v0s(lead);
  for (long i = 0; i < order; ++i)
    v0s = v0s * ExactScalar(0, -1, BigRat(1) / v0);  // (V0 log q)^{-1} per order
  return Laurent{order, v0s};
}

Complex local_L(const MultChar& chi, Complex s, const PrimeContext& ctx) {
  if (!chi.finite_part.trivial()) return Complex(1.0, 0.0);
  Complex x = chi.value_on_p * std::pow(Complex(ctx.qd(), 0), -(chi.exponent + s));
  return 1.0 / (1.0 - x);
}

Complex LocalLFactor::value(Complex s, const PrimeContext& ctx) const {
  return local_L(character, s + shift, ctx);
}

Slice function_slice(const BallSum1D& f, const PrimeContext& ctx, long kmax_pad) {
  long p = ctx.p;
  long kmin = f.support_min_val(p);
  long L = f.finest_level();
  long kmax = L + kmax_pad;
  Slice s(p, kmin, kmax);
  for (long k = kmin; k <= kmax; ++k) {
    long d = std::max<long>(0, L - k);
    AnnulusData& a = s.at(k);
    if (d == 0) {
      a.c_triv = f.eval(pow_rat(BigRat(p), k), p);
    } else {
      const UnitGroup& ug = UnitGroup::get(p, d);
      a.table_depth = d;
      a.table.resize(static_cast<size_t>(ug.size()));
      for (long i = 0; i < ug.size(); ++i)
        a.table[static_cast<size_t>(i)] =
            f.eval(pow_rat(BigRat(p), k) * BigRat(ug.rep(i)), p);
    }
  }
  s.left() = Tail::zero();
  Complex at0 = f.eval(BigRat(0), p);
  if (at0 == Complex{}) {
    s.right() = Tail::zero();
  } else {
    TailComponent c;
    c.omega = UnitChar{0};
    c.a = at0;
    c.ratio_p = Complex(1.0, 0.0);
    s.right().kind = Tail::Components;
    s.right().comps = {c};
  }
  return s;
}

Complex tate_integral(const BallSum1D& phi, const MultChar& chi, const PrimeContext& ctx) {
  Slice s = function_slice(phi, ctx);
  Kernel K = Kernel::plain(chi.exponent, MultChar{chi.finite_part, chi.value_on_p, {}});
  // K(x) = omega(x)|x|^{s}: kernel ratio = value_on_p q^{-s} = chi(p).
  return kernel_integral(K, s);
}

Complex tate_gamma(const MultChar& chi, const PrimeContext& ctx, int psi_sign) {
  // Z(F phi, |.| chi^{-1}) = gamma(chi, psi) Z(phi, chi)
  std::vector<BallSum1D> tests;
  {
    BallSum1D a;
    a.add(PAdicBall{BigRat(0), 0}, Complex(1, 0));  // 1_{Z_p}
    tests.push_back(a);
    BallSum1D b;
    b.add(PAdicBall{BigRat(1), 1}, Complex(1, 0));  // 1_{1+pZ_p}
    tests.push_back(b);
    BallSum1D c;  // 1_{p Z_p} + a ramified-friendly bump
    c.add(PAdicBall{BigRat(1), 2}, Complex(1, 0));
    c.add(PAdicBall{BigRat(2), 1}, Complex(0.5, 0));
    tests.push_back(c);
  }
  MultChar dual = chi.inverse().times_norm_power(Complex(1, 0));
  Complex best{};
  bool have = false;
  for (const auto& phi : tests) {
    Complex zden = tate_integral(phi, chi, ctx);
    if (std::abs(zden) < 1e-8) continue;
    BallSum1D fphi = fourier_additive(phi, ctx, psi_sign);
    Complex znum = tate_integral(fphi, dual, ctx);
    Complex g = znum / zden;
    if (have)
      require(std::abs(g - best) < 1e-7 * std::max(1.0, std::abs(best)), Err::Indeterminate,
              "gamma ratio depends on the test function");
    best = g;
    have = true;
  }
  require(have, Err::Indeterminate, "all test zeta integrals vanish");
  return best;
}

Laurent tate_gamma_star(const MultChar& chi, const PrimeContext& ctx) {
  require(chi.finite_part.trivial(), Err::Internal, "gamma_star for unramified only");
  // gamma(s') = (1 - w^{-1} q^{-s'}) / (1 - w q^{s'-1}) at s' = chi exponent,
  // w = value_on_p; poles where w q^{s-1} = 1.
  Complex s = chi.exponent;
  Complex w = chi.value_on_p;
  Complex numv = 1.0 - std::pow(Complex(ctx.qd(), 0), -s) / w;
  Complex denv = 1.0 - w * std::pow(Complex(ctx.qd(), 0), s - 1.0);
  if (std::abs(denv) > 1e-9 && std::abs(numv) > 1e-9) {
    // regular point: order 0 with a numeric value; exact only for rational data
    fail(Err::Internal, "tate_gamma_star called at a regular point; use tate_gamma");
  }
  if (std::abs(denv) <= 1e-9) {
    // simple pole: gamma ~ (1-q^{-s0}) / (-(s-s0) log q)
    require(std::abs(w - Complex(1, 0)) < 1e-12 || std::abs(w + Complex(1, 0)) < 1e-12,
            Err::Internal, "pole with non-quadratic twist");
    // at the pole q^{s0} = q/w: numerator 1 - q^{-s0}/w = 1 - 1/q
    ExactScalar lead = ExactScalar(BigRat(ctx.q - 1, ctx.q)) * ExactScalar(0, -1, BigRat(-1));
    return Laurent{1, lead};
  }
  // simple zero
  return Laurent{0, ExactScalar(BigRat(0))};
}

Complex gamma_E_trivial(const QuadExtension& E, Complex s) {
  const PrimeContext& ctx = E.ctx();
  double q = ctx.qd();
  if (E.split()) {
    Complex g = (1.0 - std::pow(q, -s)) / (1.0 - std::pow(q, s - 1.0));
    return g * g;
  }
  double qE = E.kind() == QuadExtension::Unramified ? q * q : q;
  long d = E.kind() == QuadExtension::Ramified ? 1 : 0;
  double vol = E.kind() == QuadExtension::Ramified ? std::pow(q, -0.5) : 1.0;
  Complex qe(qE, 0);
  return vol * std::pow(qe, static_cast<double>(d) * (1.0 - s)) *
         (1.0 - std::pow(qe, -s)) / (1.0 - std::pow(qe, s - 1.0));
}

ExactScalar avg_vol_F(const PrimeContext& ctx) {
  return ExactScalar(0, -1, BigRat(ctx.q - 1, ctx.q));
}

ExactScalar avg_vol_E(const QuadExtension& E) {
  long q = E.ctx().q;
  switch (E.kind()) {
    case QuadExtension::Split: {
      ExactScalar a = avg_vol_F(E.ctx());
      return a * a;
    }
    case QuadExtension::Unramified:
      return ExactScalar(0, -1, BigRat(q * q - 1, 2 * q * q));
    case QuadExtension::Ramified:
      return ExactScalar(-1, -1, BigRat(q - 1, q));
  }
  fail(Err::Internal, "bad kind");
}

LambdaResult lambda_constant(const QuadExtension& E) {
  const PrimeContext& ctx = E.ctx();
  LambdaResult r{};
  if (E.split()) {
    r.value = Complex(1, 0);
    r.route_gamma_ratio = Complex(1, 0);
    r.route_volume = Complex(1, 0);
    r.max_err = 0;
    return r;
  }
  // route (i): generic s
  Complex s(0.375, 0.0);
  Complex g1 = tate_gamma(MultChar::norm_power(s), ctx);
  MultChar etas = E.eta().times_norm_power(s);
  Complex g2 = tate_gamma(etas, ctx);
  Complex gE = gamma_E_trivial(E, s);
  r.route_gamma_ratio = g1 * g2 / gE;
  // route (ii): 2 gamma(eta,1,psi) / Vol(T)
  Complex geta1 = tate_gamma(E.eta().times_norm_power(Complex(1, 0)), ctx);
  r.route_volume = 2.0 * geta1 / E.torus_volume();
  r.max_err = std::abs(r.route_gamma_ratio - r.route_volume);
  require(r.max_err < 1e-7, Err::RouteMismatch, "lambda routes disagree");
  r.value = r.route_volume;
  return r;
}

}  // namespace padic
