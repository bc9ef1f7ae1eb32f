#include "padic/slice.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace padic {

namespace {
std::map<std::pair<long, long>, std::unique_ptr<UnitGroup>> g_unit_cache;
std::mutex g_unit_mutex;

Complex cpow(Complex z, long k) {
  if (k == 0) return Complex(1.0, 0.0);
  return std::pow(z, Complex(static_cast<double>(k), 0.0));
}

// sum_{k >= k0} r^k k^e for |r| < 1, e in {0,1}.
Complex geom_sum_from(Complex r, long k0, int e) {
  require(std::abs(r) < 1.0 - 1e-9, Err::NonStabilizing, "divergent tail ratio");
  Complex rk = cpow(r, k0);
  if (e == 0) return rk / (1.0 - r);
  return rk * (static_cast<double>(k0) - static_cast<double>(k0 - 1) * r) /
         ((1.0 - r) * (1.0 - r));
}

// sum_{k <= k0} r^k k^e for |r| > 1.
Complex geom_sum_upto(Complex r, long k0, int e) {
  Complex g = geom_sum_from(1.0 / r, -k0, e);
  return e == 1 ? -g : g;
}

}  // namespace

UnitGroup::UnitGroup(long p, long depth) : p_(p), depth_(depth) {
  if (depth <= 0) {
    modulus_ = 1;
    reps_ = {BigInt(1)};
    return;
  }
  modulus_ = pow_int(BigInt(p), static_cast<unsigned>(depth));
  for (BigInt u = 1; u < modulus_; ++u)
    if (u % p != 0) reps_.push_back(u);
}

long UnitGroup::index(const BigInt& u_mod) const {
  if (depth_ <= 0) return 0;
  BigInt u = u_mod % modulus_;
  if (u < 0) u += modulus_;
  BigInt idx = u - 1 - (u - 1) / p_;
  return static_cast<long>(idx);
}

long UnitGroup::index_of(const BigRat& unit, long p) const {
  return index(mod_pk(unit, p, depth_ == 0 ? 1 : depth_));
}

const UnitGroup& UnitGroup::get(long p, long depth) {
  std::lock_guard<std::mutex> lock(g_unit_mutex);
  auto key = std::make_pair(p, depth);
  auto it = g_unit_cache.find(key);
  if (it == g_unit_cache.end())
    it = g_unit_cache.emplace(key, std::make_unique<UnitGroup>(p, depth)).first;
  return *it->second;
}

Complex Tail::eval(const BigRat& x, long k, long p) const {
  require(kind != Unknown, Err::NonStabilizing, "evaluation in an unknown tail");
  if (kind == Zero) return {};
  Complex v{};
  for (const auto& c : comps) {
    double sign = c.omega.trivial() ? 1.0 : c.omega.eval_sign(unit_part(x, p), p);
    double kp = c.k_power == 0 ? 1.0 : static_cast<double>(k);
    v += c.a * sign * cpow(c.ratio_p, k) * kp;
  }
  return v;
}

long Tail::depth() const {
  long d = 0;
  for (const auto& c : comps) d = std::max<long>(d, c.omega.conductor_exp);
  return d;
}

Slice::Slice(long p, long kmin, long kmax) : p_(p), kmin_(kmin), kmax_(kmax) {
  if (kmax >= kmin) ann_.resize(static_cast<size_t>(kmax - kmin + 1));
}

AnnulusData& Slice::at(long k) {
  require(k >= kmin_ && k <= kmax_, Err::Internal, "annulus outside window");
  return ann_[static_cast<size_t>(k - kmin_)];
}
const AnnulusData& Slice::at(long k) const {
  require(k >= kmin_ && k <= kmax_, Err::Internal, "annulus outside window");
  return ann_[static_cast<size_t>(k - kmin_)];
}

Complex Slice::eval(const BigRat& x) const {
  require(x != 0, Err::ZeroArgument, "slice eval at 0");
  long k = val_p(x, p_);
  if (k < kmin_) return left_.eval(x, k, p_);
  if (k > kmax_) return right_.eval(x, k, p_);
  const AnnulusData& a = at(k);
  Complex v = a.c_triv;
  BigRat u = unit_part(x, p_);
  if (a.c_leg != Complex{}) v += a.c_leg * static_cast<double>(legendre(mod_pk(u, p_, 1), p_));
  if (a.has_table()) {
    const UnitGroup& ug = UnitGroup::get(p_, a.table_depth);
    v += a.table[static_cast<size_t>(ug.index_of(u, p_))];
  }
  return v;
}

Complex Slice::eval_coset(long k, long unit_index, const UnitGroup& ug) const {
  BigRat x = pow_rat(BigRat(p_), k) * BigRat(ug.rep(unit_index));
  return eval(x);
}

long Slice::depth_at(long k) const {
  if (k < kmin_) return left_.depth();
  if (k > kmax_) {
    if (right_.kind == Tail::Unknown) return -1;
    return right_.depth();
  }
  return at(k).depth();
}

Slice& Slice::add_inplace(const Slice& o) {
  require(p_ == o.p_, Err::Internal, "prime mismatch");
  bool o_trivial = o.empty_window() && o.left_.kind == Tail::Zero && o.right_.kind == Tail::Zero;
  if (o_trivial) return *this;
  bool this_trivial =
      empty_window() && left_.kind == Tail::Zero && right_.kind == Tail::Zero;
  if (this_trivial) {
    *this = o;
    return *this;
  }
  long nkmin = std::min(kmin_, o.kmin_);
  long nkmax = std::max(kmax_, o.kmax_);
  if (empty_window()) {
    nkmin = o.kmin_;
    nkmax = o.kmax_;
  } else if (o.empty_window()) {
    nkmin = kmin_;
    nkmax = kmax_;
  }
  Slice merged = this->with_window(nkmin, nkmax);
  Slice ob = o.with_window(nkmin, nkmax);
  for (long k = nkmin; k <= nkmax; ++k) {
    AnnulusData& a = merged.at(k);
    const AnnulusData& b = ob.at(k);
    a.c_triv += b.c_triv;
    a.c_leg += b.c_leg;
    if (b.has_table()) {
      if (!a.has_table()) {
        a.table_depth = b.table_depth;
        a.table = b.table;
      } else if (a.table_depth == b.table_depth) {
        for (size_t i = 0; i < a.table.size(); ++i) a.table[i] += b.table[i];
      } else {
        long d = std::max(a.table_depth, b.table_depth);
        const UnitGroup& ug = UnitGroup::get(p_, d);
        const UnitGroup& uga = UnitGroup::get(p_, a.table_depth);
        const UnitGroup& ugb = UnitGroup::get(p_, b.table_depth);
        std::vector<Complex> t(static_cast<size_t>(ug.size()));
        for (long i = 0; i < ug.size(); ++i)
          t[static_cast<size_t>(i)] = a.table[static_cast<size_t>(uga.index(ug.rep(i)))] +
                                      b.table[static_cast<size_t>(ugb.index(ug.rep(i)))];
        a.table_depth = d;
        a.table = std::move(t);
      }
    }
  }
  auto merge_tail = [](const Tail& x, const Tail& y) {
    if (x.kind == Tail::Unknown || y.kind == Tail::Unknown) return Tail::unknown();
    Tail r;
    r.kind = (x.kind == Tail::Zero && y.kind == Tail::Zero) ? Tail::Zero : Tail::Components;
    r.comps = x.comps;
    r.comps.insert(r.comps.end(), y.comps.begin(), y.comps.end());
    return r;
  };
  merged.left_ = merge_tail(merged.left_, ob.left_);
  merged.right_ = merge_tail(merged.right_, ob.right_);
  *this = std::move(merged);
  return *this;
}

Slice Slice::scaled(const Complex& z) const {
  Slice r = *this;
  for (auto& a : r.ann_) {
    a.c_triv *= z;
    a.c_leg *= z;
    for (auto& t : a.table) t *= z;
  }
  for (auto& c : r.left_.comps) c.a *= z;
  for (auto& c : r.right_.comps) c.a *= z;
  return r;
}

Slice Slice::char_twisted(const MultChar& chi) const {
  require(chi.is_quadratic(), Err::Internal, "char_twisted wants a quadratic character");
  Slice r = *this;
  bool ram = !chi.finite_part.trivial();
  for (long k = kmin_; k <= kmax_; ++k) {
    AnnulusData& a = r.at(k);
    double sp = (k % 2 != 0) ? chi.sign_on_p() : 1.0;
    if (ram) std::swap(a.c_triv, a.c_leg);
    a.c_triv *= sp;
    a.c_leg *= sp;
    if (a.has_table()) {
      const UnitGroup& ug = UnitGroup::get(p_, a.table_depth);
      for (long i = 0; i < ug.size(); ++i) {
        double su = ram ? legendre(ug.rep(i), p_) : 1.0;
        a.table[static_cast<size_t>(i)] *= sp * su;
      }
    }
  }
  for (auto* tail : {&r.left_, &r.right_})
    for (auto& c : tail->comps) {
      c.ratio_p *= chi.value_on_p;
      if (ram) c.omega = UnitChar{1 - c.omega.conductor_exp};
    }
  return r;
}

Slice Slice::abs_power(double alpha) const {
  Slice r = *this;
  double base = std::pow(static_cast<double>(p_), -alpha);
  for (long k = kmin_; k <= kmax_; ++k) {
    AnnulusData& a = r.at(k);
    double f = std::pow(base, static_cast<double>(k));
    a.c_triv *= f;
    a.c_leg *= f;
    for (auto& t : a.table) t *= f;
  }
  for (auto* tail : {&r.left_, &r.right_})
    for (auto& c : tail->comps) c.ratio_p *= base;
  return r;
}

Slice Slice::scale_arg(const BigRat& A) const {
  require(A != 0, Err::ZeroArgument, "scale_arg by zero");
  long vA = val_p(A, p_);
  BigRat uA = unit_part(A, p_);
  int legA = legendre(mod_pk(uA, p_, 1), p_);
  Slice r(p_, kmin_ - vA, kmax_ - vA);
  for (long k = r.kmin(); k <= r.kmax(); ++k) {
    const AnnulusData& a = at(k + vA);
    AnnulusData& b = r.at(k);
    b.c_triv = a.c_triv;
    b.c_leg = a.c_leg * static_cast<double>(legA);
    if (a.has_table()) {
      b.table_depth = a.table_depth;
      const UnitGroup& ug = UnitGroup::get(p_, a.table_depth);
      b.table.resize(static_cast<size_t>(ug.size()));
      BigInt uAm = mod_pk(uA, p_, a.table_depth);
      for (long i = 0; i < ug.size(); ++i) {
        BigInt arg = ug.rep(i) * uAm;
        b.table[static_cast<size_t>(i)] = a.table[static_cast<size_t>(ug.index(arg))];
      }
    }
  }
  auto map_tail = [&](const Tail& t) {
    if (t.kind != Tail::Components) return t;
    Tail s = t;
    std::vector<TailComponent> extra;
    for (auto& c : s.comps) {
      double sign = c.omega.trivial() ? 1.0 : c.omega.eval_sign(uA, p_);
      c.a *= sign * cpow(c.ratio_p, vA);
      if (c.k_power == 1 && vA != 0) {
        TailComponent e = c;
        e.k_power = 0;
        e.a = c.a * static_cast<double>(vA);
        extra.push_back(e);
      }
    }
    s.comps.insert(s.comps.end(), extra.begin(), extra.end());
    return s;
  };
  r.left_ = map_tail(left_);
  r.right_ = map_tail(right_);
  return r;
}

Slice Slice::flip_arg(const BigRat& A) const {
  require(A != 0, Err::ZeroArgument, "flip_arg by zero");
  long vA = val_p(A, p_);
  BigRat uA = unit_part(A, p_);
  int legA = legendre(mod_pk(uA, p_, 1), p_);
  Slice r(p_, vA - kmax_, vA - kmin_);
  for (long k = r.kmin(); k <= r.kmax(); ++k) {
    const AnnulusData& a = at(vA - k);
    AnnulusData& b = r.at(k);
    b.c_triv = a.c_triv;
    b.c_leg = a.c_leg * static_cast<double>(legA);
    if (a.has_table()) {
      b.table_depth = a.table_depth;
      const UnitGroup& ug = UnitGroup::get(p_, a.table_depth);
      b.table.resize(static_cast<size_t>(ug.size()));
      BigInt mod = pow_int(BigInt(p_), static_cast<unsigned>(a.table_depth));
      BigInt uAm = mod_pk(uA, p_, a.table_depth);
      for (long i = 0; i < ug.size(); ++i) {
        BigInt arg = uAm * mod_inverse(ug.rep(i), mod) % mod;
        b.table[static_cast<size_t>(i)] = a.table[static_cast<size_t>(ug.index(arg))];
      }
    }
  }
  auto map_tail = [&](const Tail& t) {
    if (t.kind != Tail::Components) return t;
    Tail s;
    s.kind = Tail::Components;
    for (const auto& c : t.comps) {
      // a omega(uA/u) rho^{vA-k} (vA-k)^e
      double sign = c.omega.trivial() ? 1.0 : c.omega.eval_sign(uA, p_);
      TailComponent n;
      n.omega = c.omega;
      n.ratio_p = Complex(1.0, 0.0) / c.ratio_p;
      n.a = c.a * sign * cpow(c.ratio_p, vA);
      n.k_power = 0;
      if (c.k_power == 0) {
        s.comps.push_back(n);
      } else {
        TailComponent lin = n;
        lin.k_power = 1;
        lin.a = -n.a;
        TailComponent cst = n;
        cst.a = n.a * static_cast<double>(vA);
        s.comps.push_back(lin);
        s.comps.push_back(cst);
      }
    }
    return s;
  };
  r.left_ = map_tail(right_);
  r.right_ = map_tail(left_);
  return r;
}

Slice Slice::function_multiplied(const std::function<Complex(const BigRat&)>& f,
                                 const std::function<long(long)>& conductor_at,
                                 bool trivial_at_zero, bool trivial_at_infinity) const {
  Slice r(p_, kmin_, kmax_);
  for (long k = kmin_; k <= kmax_; ++k) {
    const AnnulusData& a = at(k);
    long d = std::max<long>(a.depth(), conductor_at(k));
    AnnulusData& b = r.at(k);
    if (d == 0) {
      Complex fv = f(pow_rat(BigRat(p_), k));
      b.c_triv = a.c_triv * fv;
      b.c_leg = a.c_leg * fv;
    } else {
      const UnitGroup& ug = UnitGroup::get(p_, d);
      b.table_depth = d;
      b.table.resize(static_cast<size_t>(ug.size()));
      for (long i = 0; i < ug.size(); ++i) {
        BigRat x = pow_rat(BigRat(p_), k) * BigRat(ug.rep(i));
        b.table[static_cast<size_t>(i)] = eval(x) * f(x);
      }
    }
  }
  r.left_ = trivial_at_infinity ? left_ : Tail::unknown();
  r.right_ = trivial_at_zero ? right_ : Tail::unknown();
  return r;
}

Complex Slice::integral_dx_mult() const {
  double unit_vol = 1.0 - 1.0 / static_cast<double>(p_);
  Complex total{};
  for (long k = kmin_; k <= kmax_; ++k) {
    const AnnulusData& a = at(k);
    total += a.c_triv * unit_vol;
    if (a.has_table()) {
      double cvol = std::pow(static_cast<double>(p_), -a.table_depth);
      for (const auto& t : a.table) total += t * cvol;
    }
  }
  auto tail_sum = [&](const Tail& t, bool rightside) -> Complex {
    require(t.kind != Tail::Unknown, Err::NonStabilizing, "integral over unknown tail");
    Complex s{};
    for (const auto& c : t.comps) {
      if (!c.omega.trivial()) continue;
      s += c.a * unit_vol *
           (rightside ? geom_sum_from(c.ratio_p, kmax_ + 1, c.k_power)
                      : geom_sum_upto(c.ratio_p, kmin_ - 1, c.k_power));
    }
    return s;
  };
  total += tail_sum(right_, true);
  total += tail_sum(left_, false);
  return total;
}

Complex Slice::mellin_moment(const MultChar& chi, const PrimeContext& ctx) const {
  double unit_vol = 1.0 - 1.0 / static_cast<double>(p_);
  Complex zp = Complex(1.0, 0.0) / chi.p_direction(ctx);
  double sq = std::sqrt(static_cast<double>(p_));
  bool want_leg = !chi.finite_part.trivial();
  Complex total{};
  for (long k = kmin_; k <= kmax_; ++k) {
    const AnnulusData& a = at(k);
    Complex w = cpow(zp * sq, k);
    Complex acc = (want_leg ? a.c_leg : a.c_triv) * unit_vol;
    if (a.has_table()) {
      const UnitGroup& ug = UnitGroup::get(p_, a.table_depth);
      double cvol = std::pow(static_cast<double>(p_), -a.table_depth);
      for (long i = 0; i < ug.size(); ++i) {
        double sgn = want_leg ? legendre(ug.rep(i), p_) : 1.0;
        acc += a.table[static_cast<size_t>(i)] * sgn * cvol;
      }
    }
    total += acc * w;
  }
  auto tail_sum = [&](const Tail& t, bool rightside) -> Complex {
    require(t.kind != Tail::Unknown, Err::NonStabilizing, "mellin over unknown tail");
    Complex s{};
    for (const auto& c : t.comps) {
      if ((c.omega.conductor_exp != 0) != want_leg) continue;
      Complex r = c.ratio_p * zp * sq;
      s += c.a * unit_vol *
           (rightside ? geom_sum_from(r, kmax_ + 1, c.k_power)
                      : geom_sum_upto(r, kmin_ - 1, c.k_power));
    }
    return s;
  };
  total += tail_sum(right_, true);
  total += tail_sum(left_, false);
  return total;
}

Slice Slice::with_window(long nkmin, long nkmax) const {
  if (nkmin == kmin_ && nkmax == kmax_) return *this;
  if (!empty_window())
    require(nkmin <= kmin_ && nkmax >= kmax_, Err::Internal, "window extension only");
  Slice r(p_, nkmin, nkmax);
  r.left_ = left_;
  r.right_ = right_;
  auto fill_from_tail = [&](const Tail& t, long k) {
    require(t.kind != Tail::Unknown, Err::NonStabilizing, "window extension into unknown tail");
    AnnulusData& a = r.at(k);
    for (const auto& c : t.comps) {
      Complex v = c.a * cpow(c.ratio_p, k) * (c.k_power == 0 ? 1.0 : static_cast<double>(k));
      if (c.omega.trivial())
        a.c_triv += v;
      else
        a.c_leg += v;
    }
  };
  for (long k = nkmin; k <= nkmax; ++k) {
    if (k < kmin_)
      fill_from_tail(left_, k);
    else if (k > kmax_)
      fill_from_tail(right_, k);
    else
      r.at(k) = at(k);
  }
  return r;
}

Slice Slice::from_components(long p, long kmin, long kmax,
                             const std::function<AnnulusData(long)>& gen) {
  Slice r(p, kmin, kmax);
  for (long k = kmin; k <= kmax; ++k) r.at(k) = gen(k);
  return r;
}

double Slice::max_abs_window() const {
  double m = 0;
  for (const auto& a : ann_) {
    m = std::max(m, std::abs(a.c_triv) + std::abs(a.c_leg));
    for (const auto& t : a.table) m = std::max(m, std::abs(t));
  }
  return m;
}

ExactMoments ExactSlice::germ_moments(long k) const {
  ExactMoments m;
  BigRat unit_vol(p - 1, p);
  for (const auto& c : germ) {
    BigRat v = c.a * pow_rat(BigRat(p), -k);
    if (k % 2 != 0 && c.chi.sign_on_p() < 0) v = -v;
    if (c.k_power == 1) v *= k;
    if (c.chi.finite_part.trivial())
      m.m_triv += v * unit_vol;
    else
      m.m_leg += v * unit_vol;
  }
  return m;
}

}  // namespace padic
