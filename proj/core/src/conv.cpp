#include "padic/conv.hpp"

#include <cmath>
#include <numbers>

namespace padic {

namespace {

Complex cpow(Complex z, long k) {
  if (k == 0) return Complex(1.0, 0.0);
  return std::pow(z, Complex(static_cast<double>(k), 0.0));
}

constexpr double kRatioEps = 1e-9;

// Continuation value of sum_{k >= k0} x^k k^e (geometric / Abel semantics;
// the regularized convolutions are defined by exactly this continuation).
Complex cont_geom_from(Complex x, long k0, int e) {
  require(std::abs(x - 1.0) > kRatioEps, Err::NonStabilizing, "geometric ratio at 1");
  Complex xk = cpow(x, k0);
  if (e == 0) return xk / (1.0 - x);
  return xk * (static_cast<double>(k0) - static_cast<double>(k0 - 1) * x) /
         ((1.0 - x) * (1.0 - x));
}

Complex cont_geom_upto(Complex x, long k0, int e) {
  Complex g = cont_geom_from(1.0 / x, -k0, e);
  return e == 1 ? -g : g;
}

UnitChar combine(const UnitChar& a, const UnitChar& b) {
  return UnitChar{(a.conductor_exp + b.conductor_exp) % 2};
}

struct ModeInfo {
  Kernel::Psi psi;
  int sign;
  long p;
  // valuation of the psi argument for kernel annulus k (None: +inf behaviour)
  bool has_psi() const { return psi != Kernel::None; }
  long j(long k) const { return psi == Kernel::Direct ? k : -k; }
};

// int_{units} psi-part(annulus k) * comb(u) d^x u.
Complex annulus_I(const ModeInfo& mode, long k, const UnitChar& comb) {
  if (!mode.has_psi())
    return comb.trivial() ? Complex(1.0 - 1.0 / mode.p, 0.0) : Complex(0.0, 0.0);
  return psi_annulus_integral(mode.p, mode.j(k), comb, mode.sign);
}

// True if annulus_I vanishes for this k because of oscillation.
bool osc_zero(const ModeInfo& mode, long k) {
  return mode.has_psi() && mode.j(k) <= -2;
}

}  // namespace

Complex gauss_sum_legendre(long p, int sign) {
  Complex g{};
  for (long u = 1; u < p; ++u) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(sign) *
                   static_cast<double>(u) / static_cast<double>(p);
    g += static_cast<double>(legendre(BigInt(u), p)) * Complex(std::cos(angle), std::sin(angle));
  }
  return g;
}

Complex psi_annulus_integral(long p, long j, const UnitChar& omega, int sign) {
  if (j >= 0) return omega.trivial() ? Complex(1.0 - 1.0 / p, 0.0) : Complex(0.0, 0.0);
  if (j == -1) {
    if (omega.trivial()) return Complex(-1.0 / p, 0.0);
    return gauss_sum_legendre(p, sign) / static_cast<double>(p);
  }
  return Complex(0.0, 0.0);
}

namespace {

class Convolver {
 public:
  Convolver(const Kernel& K, const Slice& f)
      : K_(K), f_(f), p_(f.p()), mode_{K.psi, K.psi_sign, f.p()}, kp_(K.ratio(f.p())) {}

  // Full annulus of (K*f) at output valuation m.
  AnnulusData annulus(long m) const {
    AnnulusData out;
    window_part(m, out);
    tail_part(m, f_.right(), true, out);
    tail_part(m, f_.left(), false, out);
    return out;
  }

  Slice materialize(const ConvParams& par) const {
    long d_max = 0;
    for (long n = f_.kmin(); n <= f_.kmax(); ++n)
      d_max = std::max(d_max, f_.at(n).depth());
    // Pad the window so the fitted tails are already exact at its edges.
    long hi = std::max({par.out_kmax, f_.kmax() + d_max + 2, f_.kmin() + 2, 2L});
    long lo = std::min({par.out_kmin, f_.kmin() - d_max - 2, f_.kmax() - 2, -2L});
    Slice out(p_, lo, hi);
    for (long m = lo; m <= hi; ++m) out.at(m) = annulus(m);
    if (par.derive_tails) {
      out.right() = fit_tail(hi + 1, true);
      out.left() = fit_tail(lo - 1, false);
    } else {
      out.right() = Tail::unknown();
      out.left() = Tail::unknown();
    }
    return out;
  }

 private:
  const Kernel& K_;
  const Slice& f_;
  long p_;
  ModeInfo mode_;
  Complex kp_;

  double unit_vol() const { return 1.0 - 1.0 / static_cast<double>(p_); }

  // Contributions with f-argument inside the window.
  void window_part(long m, AnnulusData& out) const {
    for (long n = f_.kmin(); n <= f_.kmax(); ++n) {
      long k = m - n;
      const AnnulusData& a = f_.at(n);
      if (a.trivial()) continue;
      Complex kf = cpow(kp_, k);
      // character parts
      if (!osc_zero(mode_, k)) {
        if (a.c_triv != Complex{})
          out.c_triv += kf * a.c_triv * annulus_I(mode_, k, K_.omega.finite_part);
        if (a.c_leg != Complex{})
          out.c_leg += kf * a.c_leg * annulus_I(mode_, k, combine(K_.omega.finite_part, UnitChar{1}));
      }
      if (!a.has_table()) continue;
      // table part
      long d = a.table_depth;
      long j = mode_.has_psi() ? mode_.j(k) : 0;
      if (mode_.has_psi() && j + d < 0) continue;  // oscillation kills the cosets
      const UnitGroup& ug = UnitGroup::get(p_, d);
      double cvol = std::pow(static_cast<double>(p_), -d);
      if (!mode_.has_psi() || j >= 0) {
        // psi constant (=1) on the whole annulus at this resolution iff j>=0:
        // the u_x-sum collapses to the omega_K-moment of the table.
        Complex mom{};
        bool leg = !K_.omega.finite_part.trivial();
        for (long i = 0; i < ug.size(); ++i) {
          double sg = leg ? legendre(ug.rep(i), p_) : 1.0;
          mom += a.table[static_cast<size_t>(i)] * sg;
        }
        mom *= cvol;
        // contribution z * omega_K(u_y): a character component
        if (leg)
          out.c_leg += kf * mom;
        else
          out.c_triv += kf * mom;
        continue;
      }
      // -d <= j <= -1: genuine coset convolution.
      AdditiveCharacter psi(p_);
      if (out.table_depth == 0) {
        out.table_depth = d;
        out.table.assign(static_cast<size_t>(ug.size()), Complex{});
      } else if (out.table_depth < d) {
        const UnitGroup& ug2 = UnitGroup::get(p_, out.table_depth);
        std::vector<Complex> t(static_cast<size_t>(ug.size()));
        for (long i = 0; i < ug.size(); ++i)
          t[static_cast<size_t>(i)] = out.table[static_cast<size_t>(ug2.index(ug.rep(i)))];
        out.table_depth = d;
        out.table = std::move(t);
      }
      const UnitGroup& ugo = UnitGroup::get(p_, out.table_depth);
      BigInt mod = pow_int(BigInt(p_), static_cast<unsigned>(d));
      // kernel weights per u_x coset
      std::vector<Complex> W(static_cast<size_t>(ug.size()));
      bool legK = !K_.omega.finite_part.trivial();
      for (long i = 0; i < ug.size(); ++i) {
        BigInt ux = ug.rep(i);
        BigRat arg;
        if (mode_.psi == Kernel::Direct)
          arg = pow_rat(BigRat(p_), k) * BigRat(ux);
        else
          arg = pow_rat(BigRat(p_), -k) * BigRat(mod_inverse(ux, mod));
        Complex ph = psi.eval(arg);
        if (mode_.sign < 0) ph = std::conj(ph);
        double sg = legK ? legendre(ux, p_) : 1.0;
        W[static_cast<size_t>(i)] = ph * sg * cvol;
      }
      for (long iy = 0; iy < ugo.size(); ++iy) {
        BigInt uy = ugo.rep(iy);
        Complex acc{};
        for (long ix = 0; ix < ug.size(); ++ix) {
          BigInt idx = uy % mod * mod_inverse(ug.rep(ix), mod) % mod;
          acc += W[static_cast<size_t>(ix)] * a.table[static_cast<size_t>(ug.index(idx))];
        }
        out.table[static_cast<size_t>(iy)] += kf * acc;
      }
    }
  }

  // Contributions with the f-argument in a tail region. rightside: the germ
  // region n > kmax (else n < kmin).
  void tail_part(long m, const Tail& tail, bool rightside, AnnulusData& out) const {
    if (tail.kind == Tail::Zero) return;
    require(tail.kind != Tail::Unknown, Err::NonStabilizing,
            "convolution reaches an unknown tail");
    for (const auto& c : tail.comps) {
      UnitChar comb = combine(K_.omega.finite_part, c.omega);
      Complex total{};
      // term(k) = kp^k I(k,comb) * a rho^{m-k} (m-k)^e, over the k-range of
      // the region; oscillation bounds one side, geometric continuation the
      // other.
      long k_edge = rightside ? m - f_.kmax() - 1 : m - f_.kmin() + 1;
      if (mode_.has_psi()) {
        bool osc_at_large_k = (mode_.psi == Kernel::Inverse);
        // psi oscillates for j <= -2: Direct: k <= -2; Inverse: k >= 2.
        if (mode_.psi == Kernel::Direct) {
          if (rightside) {
            // k in [-1, k_edge]: finite
            for (long k = -1; k <= k_edge; ++k) total += term(c, comb, m, k);
          } else {
            // k in [k_edge, +inf): specials at k=-1..(-1 or 0) then geometric
            long geo_from = std::max<long>(k_edge, 0);
            for (long k = std::max<long>(k_edge, -1); k < geo_from; ++k)
              total += term(c, comb, m, k);
            total += geom_range(c, comb, m, geo_from, /*upward=*/true);
          }
        } else {  // Inverse
          if (rightside) {
            long geo_upto = std::min<long>(k_edge, 0);
            for (long k = std::min<long>(k_edge, 1); k > geo_upto; --k)
              total += term(c, comb, m, k);
            total += geom_range(c, comb, m, geo_upto, /*upward=*/false);
          } else {
            // k in [k_edge, +inf) with oscillation zero for k >= 2: finite
            for (long k = k_edge; k <= 1; ++k) total += term(c, comb, m, k);
          }
        }
        (void)osc_at_large_k;
      } else {
        total += rightside ? geom_range(c, comb, m, k_edge, /*upward=*/false)
                           : geom_range(c, comb, m, k_edge, /*upward=*/true);
      }
      if (c.omega.trivial())
        out.c_triv += total;
      else
        out.c_leg += total;
    }
  }

  // Single exact term at kernel annulus k against a tail component.
  Complex term(const TailComponent& c, const UnitChar& comb, long m, long k) const {
    Complex I = annulus_I(mode_, k, comb);
    if (I == Complex{}) return {};
    long n = m - k;
    double np = c.k_power == 0 ? 1.0 : static_cast<double>(n);
    return cpow(kp_, k) * I * c.a * cpow(c.ratio_p, n) * np;
  }

  // Geometric continuation of sum over k >= k0 (upward) or k <= k0 of
  // kp^k I0 a rho^{m-k} (m-k)^e with I0 the no-oscillation unit integral.
  Complex geom_range(const TailComponent& c, const UnitChar& comb, long m, long k0,
                     bool upward) const {
    Complex I0 = comb.trivial() ? Complex(unit_vol(), 0.0) : Complex{};
    if (I0 == Complex{} || c.a == Complex{}) return {};
    // sum kp^k rho^{m-k} (m-k)^e = rho^m sum (kp/rho)^k (m-k)^e.
    Complex x = kp_ / c.ratio_p;
    Complex base = cpow(c.ratio_p, m) * I0 * c.a;
    long e = c.k_power;
    Complex s0 = upward ? cont_geom_from(x, k0, 0) : cont_geom_upto(x, k0, 0);
    if (e == 0) return base * s0;
    Complex s1 = upward ? cont_geom_from(x, k0, 1) : cont_geom_upto(x, k0, 1);
    return base * (static_cast<double>(m) * s0 - s1);
  }

  // Fit tail components at deep annuli against the known ratio set.
  Tail fit_tail(long m0, bool rightside) const;
};

Tail Convolver::fit_tail(long m0, bool rightside) const {
  // Candidate ratios: the kernel ratio and every input tail ratio.
  std::vector<Complex> ratios{kp_};
  for (const auto* t : {&f_.right(), &f_.left()}) {
    if (t->kind != Tail::Components) continue;
    for (const auto& c : t->comps) {
      bool dup = false;
      for (const auto& r : ratios)
        if (std::abs(r - c.ratio_p) < 1e-12) dup = true;
      if (!dup) ratios.push_back(c.ratio_p);
    }
  }
  long nr = static_cast<long>(ratios.size());
  long unknowns = 2 * nr;  // e in {0,1} per ratio
  long nsamples = unknowns + 2;
  long dir = rightside ? +1 : -1;
  std::vector<AnnulusData> samples;
  samples.reserve(static_cast<size_t>(nsamples));
  for (long i = 0; i < nsamples; ++i) samples.push_back(annulus(m0 + dir * i));
  Tail out;
  out.kind = Tail::Zero;
  bool any = false;
  for (int want_leg = 0; want_leg <= 1; ++want_leg) {
    std::vector<Complex> v(static_cast<size_t>(nsamples));
    double scale = 0;
    for (long i = 0; i < nsamples; ++i) {
      const AnnulusData& a = samples[static_cast<size_t>(i)];
      require(!a.has_table(), Err::Internal, "table structure in deep tail");
      v[static_cast<size_t>(i)] = want_leg ? a.c_leg : a.c_triv;
      scale = std::max(scale, std::abs(v[static_cast<size_t>(i)]));
    }
    if (scale < 1e-300) continue;
    // Solve sum_j a_j r_j^{m} m^{e_j} = v(m) at m = m0 + dir*i.
    long nu = unknowns;
    std::vector<std::vector<Complex>> A(static_cast<size_t>(nu),
                                        std::vector<Complex>(static_cast<size_t>(nu + 1)));
    for (long row = 0; row < nu; ++row) {
      long m = m0 + dir * row;
      for (long jr = 0; jr < nr; ++jr) {
        Complex r = cpow(ratios[static_cast<size_t>(jr)], m);
        A[static_cast<size_t>(row)][static_cast<size_t>(2 * jr)] = r;
        A[static_cast<size_t>(row)][static_cast<size_t>(2 * jr + 1)] =
            r * static_cast<double>(m);
      }
      A[static_cast<size_t>(row)][static_cast<size_t>(nu)] = v[static_cast<size_t>(row)];
    }
    // Gaussian elimination with partial pivoting.
    for (long col = 0; col < nu; ++col) {
      long piv = col;
      for (long r2 = col + 1; r2 < nu; ++r2)
        if (std::abs(A[static_cast<size_t>(r2)][static_cast<size_t>(col)]) >
            std::abs(A[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
          piv = r2;
      std::swap(A[static_cast<size_t>(col)], A[static_cast<size_t>(piv)]);
      Complex d = A[static_cast<size_t>(col)][static_cast<size_t>(col)];
      if (std::abs(d) < 1e-300) continue;
      for (long r2 = 0; r2 < nu; ++r2) {
        if (r2 == col) continue;
        Complex fac = A[static_cast<size_t>(r2)][static_cast<size_t>(col)] / d;
        if (fac == Complex{}) continue;
        for (long c2 = col; c2 <= nu; ++c2)
          A[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -=
              fac * A[static_cast<size_t>(col)][static_cast<size_t>(c2)];
      }
    }
    std::vector<Complex> sol(static_cast<size_t>(nu));
    for (long i2 = 0; i2 < nu; ++i2) {
      Complex d = A[static_cast<size_t>(i2)][static_cast<size_t>(i2)];
      sol[static_cast<size_t>(i2)] =
          std::abs(d) < 1e-300 ? Complex{} : A[static_cast<size_t>(i2)][static_cast<size_t>(nu)] / d;
    }
    // Verify on the spare samples.
    for (long i = nu; i < nsamples; ++i) {
      long m = m0 + dir * i;
      Complex pred{};
      for (long jr = 0; jr < nr; ++jr) {
        Complex r = cpow(ratios[static_cast<size_t>(jr)], m);
        pred += sol[static_cast<size_t>(2 * jr)] * r +
                sol[static_cast<size_t>(2 * jr + 1)] * r * static_cast<double>(m);
      }
      double err = std::abs(pred - v[static_cast<size_t>(i)]);
      require(err <= 1e-8 * std::max(1.0, scale), Err::NonStabilizing,
              "tail fit failed to verify");
    }
    for (long jr = 0; jr < nr; ++jr)
      for (int e = 0; e <= 1; ++e) {
        Complex a = sol[static_cast<size_t>(2 * jr + e)];
        if (std::abs(a) <= 1e-12 * scale) continue;
        TailComponent tc;
        tc.omega = UnitChar{want_leg};
        tc.a = a;
        tc.ratio_p = ratios[static_cast<size_t>(jr)];
        tc.k_power = e;
        out.comps.push_back(tc);
        any = true;
      }
  }
  if (any) out.kind = Tail::Components;
  return out;
}

}  // namespace

Slice mult_convolve(const Kernel& K, const Slice& f, const ConvParams& par) {
  Convolver c(K, f);
  return c.materialize(par);
}

Complex mult_convolve_point(const Kernel& K, const Slice& f, const BigRat& y) {
  Convolver c(K, f);
  long m = val_p(y, f.p());
  AnnulusData a = c.annulus(m);
  Complex v = a.c_triv;
  if (a.c_leg != Complex{})
    v += a.c_leg * static_cast<double>(legendre(mod_pk(unit_part(y, f.p()), f.p(), 1), f.p()));
  if (a.has_table()) {
    const UnitGroup& ug = UnitGroup::get(f.p(), a.table_depth);
    v += a.table[static_cast<size_t>(ug.index_of(unit_part(y, f.p()), f.p()))];
  }
  return v;
}

Complex kernel_integral(const Kernel& K, const Slice& f) {
  return mult_convolve_point(K, f.flip_arg(BigRat(1)), BigRat(1));
}

}  // namespace padic
