#include "padic/quad_ext.hpp"

#include <algorithm>
#include <climits>

namespace padic {

QuadExtension::QuadExtension(const PrimeContext& ctx, const BigRat& D) : ctx_(ctx), D_(D) {
  require(D != 0, Err::ZeroArgument, "discriminant zero");
  eta_ = quadratic_character_of_discriminant(D, ctx);
  if (is_square_qp(D, ctx.p)) {
    kind_ = Split;
    kappa_ = BigRat(1);
    return;
  }
  kind_ = (val_p(D, ctx.p) % 2 == 0) ? Unramified : Ramified;
  // Any non-norm will do; prefer p when it is one (unramified case), a
  // nonsquare unit otherwise.
  if (eta_sign(BigRat(ctx.p)) == -1) {
    kappa_ = BigRat(ctx.p);
  } else {
    kappa_ = BigRat(0);
    for (long u = 2; u < ctx.p; ++u)
      if (eta_sign(BigRat(u)) == -1) {
        kappa_ = BigRat(u);
        break;
      }
    require(kappa_ != 0, Err::Internal, "no non-norm unit found");
  }
}

long QuadExtension::val_E(const EElement& e) const {
  require(e.x != 0 || e.y != 0, Err::ZeroArgument, "val of zero");
  long vx = e.x == 0 ? LONG_MAX : val_p(e.x, ctx_.p);
  long vy = e.y == 0 ? LONG_MAX : val_p(e.y, ctx_.p);
  switch (kind_) {
    case Split:
    case Unramified:
      return std::min(vx, vy);
    case Ramified: {
      long vD = val_p(D_, ctx_.p);  // odd
      long a = vx == LONG_MAX ? LONG_MAX : 2 * vx;
      long b = vy == LONG_MAX ? LONG_MAX : 2 * vy + vD;
      return std::min(a, b);
    }
  }
  return 0;
}

bool QuadExtension::trace_in_torus_image(const BigRat& t) const {
  BigRat disc = t * t - 4;
  if (disc == 0) return false;
  if (split()) return is_square_qp(disc, ctx_.p);
  // eta_{t^2-4} = eta <=> (t^2-4)/D is a square.
  return is_square_qp(disc / D_, ctx_.p);
}

ExactScalar QuadExtension::torus_volume_exact() const {
  require(!split(), Err::SplitTorus, "split torus has infinite volume");
  long p = ctx_.p;
  // Bulk: t mod p with t^2-4 a unit in the right square class; weight 1.
  long bulk = 0;
  for (long t = 0; t < p; ++t) {
    BigRat disc = BigRat(t) * t - 4;
    if (disc == 0 || val_p(disc, p) > 0) continue;
    if (trace_in_torus_image(BigRat(t))) ++bulk;
  }
  ExactScalar vol = ExactScalar(BigRat(bulk, p));
  // Shells t = +-2 + p^w s (s unit): val(t^2-4) = w, unit class = class(s) up
  // to the fixed factor (+-4); exactly half the s-classes land in the torus
  // image whenever the parity of w matches val(D).
  long parity = val_p(D_, p) % 2;
  // sum over w >= 1 with w = parity mod 2, both endpoints:
  //   2 * (1/2) (1-1/p) q^{-w} * q^{w/2}  =  (1-1/p) q^{-w/2}
  // Geometric in steps of q^{-1}: first term at w0 = (parity==0 ? 2 : 1).
  long w0 = parity == 0 ? 2 : 1;
  // sum_{w = w0, w0+2, ...} q^{-w/2} = q^{-w0/2} / (1 - 1/q)
  BigRat geom = BigRat(1) / (BigRat(1) - BigRat(1, p));
  ExactScalar shells = ExactScalar::q_power_half(-w0) * ExactScalar(BigRat(p - 1, p) * geom);
  return (vol + shells) * ExactScalar(BigRat(2));
}

double QuadExtension::torus_volume() const { return torus_volume_exact().to_double(ctx_.q); }

std::optional<QuadExtension::TorusPoint> QuadExtension::torus_point(const BigRat& t,
                                                                    long level) const {
  BigRat disc = t * t - 4;
  require(disc != 0, Err::NearTracePole, "t = +-2");
  if (!trace_in_torus_image(t)) return std::nullopt;
  long p = ctx_.p;
  BigRat y2 = disc / (4 * D_);
  long v = val_p(y2, p);
  require(v >= 0 && v % 2 == 0, Err::Internal, "torus point y^2 not integral");
  long slack = v / 2 + 1;
  BigInt unit = mod_pk(unit_part(y2, p), p, level + slack);
  auto root = sqrt_mod_pk(unit, p, level + slack);
  require(root.has_value(), Err::Internal, "square class mismatch");
  BigInt pk = pow_int(BigInt(p), static_cast<unsigned>(level));
  BigInt y = *root % pk * pow_int(BigInt(p), static_cast<unsigned>(v / 2)) % pk;
  BigInt x = mod_pk(t / 2, p, level);
  return TorusPoint{x, y, level};
}

std::vector<std::pair<BigInt, BigInt>> enumerate_norm_one(const QuadExtension& E, long level) {
  long p = E.ctx().p;
  require(val_p(E.D(), p) >= 0, Err::Internal, "integral discriminant expected");
  BigInt pk = pow_int(BigInt(p), static_cast<unsigned>(level));
  BigInt Dm = mod_pk(E.D(), p, level);
  std::vector<std::pair<BigInt, BigInt>> out;
  for (BigInt x = 0; x < pk; ++x)
    for (BigInt y = 0; y < pk; ++y) {
      BigInt n = (x * x - Dm * y * y) % pk;
      if (n < 0) n += pk;
      if (n == 1) out.emplace_back(x, y);
    }
  return out;
}

TorusCharacter::TorusCharacter(const QuadExtension& E, long level, long index)
    : p_(E.ctx().p), level_(level), index_(index) {
  require(!E.split(), Err::SplitTorus, "use MultChar for split tori");
  require(level >= 1, Err::ConfigError, "level >= 1");
  modulus_ = pow_int(BigInt(p_), static_cast<unsigned>(level));
  auto elems = enumerate_norm_one(E, level);
  group_order_ = static_cast<long>(elems.size());
  // The reduction is cyclic for odd p; find a generator by maximal order.
  auto mul = [&](std::pair<BigInt, BigInt> a, std::pair<BigInt, BigInt> b) {
    BigInt Dm = mod_pk(E.D(), p_, level_);
    BigInt x = (a.first * b.first + Dm * a.second * b.second) % modulus_;
    BigInt y = (a.first * b.second + a.second * b.first) % modulus_;
    if (x < 0) x += modulus_;
    if (y < 0) y += modulus_;
    return std::make_pair(x, y);
  };
  for (const auto& g : elems) {
    std::map<std::pair<BigInt, BigInt>, long> table;
    std::pair<BigInt, BigInt> cur{BigInt(1), BigInt(0)};
    long k = 0;
    while (table.find(cur) == table.end()) {
      table[cur] = k++;
      cur = mul(cur, g);
    }
    if (static_cast<long>(table.size()) == group_order_) {
      dlog_ = std::move(table);
      return;
    }
  }
  fail(Err::Internal, "norm-one reduction not cyclic?");
}

Complex TorusCharacter::eval(const QuadExtension::TorusPoint& a) const {
  require(a.level >= level_, Err::PrecisionLoss, "torus point level below character level");
  BigInt x = a.x % modulus_, y = a.y % modulus_;
  if (x < 0) x += modulus_;
  if (y < 0) y += modulus_;
  auto it = dlog_.find({x, y});
  require(it != dlog_.end(), Err::Internal, "point not on torus");
  return unit_circle(BigRat(BigInt(index_) * it->second, BigInt(group_order_)));
}

Complex TorusCharacter::eval_inverse(const QuadExtension::TorusPoint& a) const {
  return std::conj(eval(a));
}

}  // namespace padic
