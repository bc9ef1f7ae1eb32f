#pragma once

#include <map>
#include <optional>
#include <vector>

#include "padic/characters.hpp"
#include "padic/exact.hpp"

namespace padic {

// Element x + y sqrt(D) of E = F(sqrt(D)), exact coordinates. For the split
// model D is a square and E is F + F in disguise.
struct EElement {
  BigRat x, y;
  EElement conj() const { return {x, -y}; }
};

// Quadratic etale algebra E/F together with the data the transforms need:
// the associated quadratic character, a chosen non-norm kappa for the pure
// inner form E^alpha, and the norm-one torus T = ker N^E_F.
class QuadExtension {
 public:
  enum Kind { Split, Unramified, Ramified };

  QuadExtension(const PrimeContext& ctx, const BigRat& D);
  static QuadExtension make(const PrimeContext& ctx, QuadClass c) {
    return QuadExtension(ctx, quad_class_representative(c, ctx));
  }

  Kind kind() const { return kind_; }
  bool split() const { return kind_ == Split; }
  const BigRat& D() const { return D_; }
  const MultChar& eta() const { return eta_; }
  const PrimeContext& ctx() const { return ctx_; }

  // Non-norm scalar marking E^alpha (norms of E^alpha are kappa * N(E^x)).
  const BigRat& kappa() const { return kappa_; }

  BigRat norm(const EElement& e) const { return e.x * e.x - D_ * e.y * e.y; }
  BigRat trace(const EElement& e) const { return 2 * e.x; }
  EElement mul(const EElement& a, const EElement& b) const {
    return {a.x * b.x + D_ * a.y * b.y, a.x * b.y + a.y * b.x};
  }

  // val_E normalized so a uniformizer of E has valuation 1.
  long val_E(const EElement& e) const;
  long residue_degree() const { return kind_ == Unramified ? 2 : 1; }
  long ramification_index() const { return kind_ == Ramified ? 2 : 1; }
  // Self-dual measure for psi o tr gives o_E this mass.
  ExactScalar selfdual_vol_oE() const {
    return kind_ == Ramified ? ExactScalar::q_power_half(-1) : ExactScalar(BigRat(1));
  }

  // eta(x) as exact sign (x != 0).
  int eta_sign(const BigRat& x) const { return eta_.eval_sign(x, ctx_.p); }
  bool is_norm(const BigRat& x) const { return eta_sign(x) == 1; }

  // Trace image of T in the t-line: eta_{t^2-4} = eta (t != +-2).
  bool trace_in_torus_image(const BigRat& t) const;

  // Vol(T, da) with da locally dt / sqrt(|t^2-4|); SplitTorus if split.
  double torus_volume() const;
  ExactScalar torus_volume_exact() const;

  // Torus point of trace t to p-adic precision level (x, y mod p^level).
  struct TorusPoint {
    BigInt x, y;  // mod p^level, coordinates w.r.t. sqrt(D)
    long level;
  };
  std::optional<TorusPoint> torus_point(const BigRat& t, long level) const;

 private:
  PrimeContext ctx_;
  Kind kind_;
  BigRat D_;
  MultChar eta_;
  BigRat kappa_;
};

// Unitary character of T(Q_p) through the finite quotient T(Z/p^level); for
// split tori use MultChar directly. Characters are indexed by an integer
// against a fixed generator of the (cyclic) reduction.
class TorusCharacter {
 public:
  TorusCharacter(const QuadExtension& E, long level, long index);

  long level() const { return level_; }
  long order() const { return group_order_; }
  Complex eval(const QuadExtension::TorusPoint& a) const;
  Complex eval_inverse(const QuadExtension::TorusPoint& a) const;
  bool trivial() const { return index_ % group_order_ == 0; }

 private:
  long p_;
  long level_;
  long index_;
  long group_order_;
  BigInt modulus_;
  std::map<std::pair<BigInt, BigInt>, long> dlog_;
};

// (x + y sqrt(D))-arithmetic helpers on residue pairs mod p^level.
std::vector<std::pair<BigInt, BigInt>> enumerate_norm_one(const QuadExtension& E, long level);

}  // namespace padic
