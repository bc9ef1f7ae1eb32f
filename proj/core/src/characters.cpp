#include "padic/characters.hpp"

namespace padic {

MultChar quadratic_character_of_discriminant(const BigRat& D, const PrimeContext& ctx) {
  require(D != 0, Err::ZeroArgument, "discriminant zero");
  if (is_square_qp(D, ctx.p)) return MultChar::trivial();
  long delta = val_p(D, ctx.p);
  BigInt w = mod_pk(unit_part(D, ctx.p), ctx.p, 1);
  MultChar eta;
  eta.finite_part = UnitChar{delta % 2 == 0 ? 0 : 1};
  int on_p = 1;
  if (delta % 2 != 0 && legendre(BigInt(-1), ctx.p) == -1) on_p = -on_p;
  if (legendre(w, ctx.p) == -1) on_p = -on_p;
  // eta(p) = (D, p)_p = (p,p)^delta (w,p) = legendre(-1)^delta legendre(w).
  eta.value_on_p = Complex(on_p, 0);
  if (eta.finite_part.trivial() && on_p == 1)
    fail(Err::Internal, "nontrivial class with trivial character data");
  return eta;
}

BigRat quad_class_representative(QuadClass c, const PrimeContext& ctx) {
  switch (c) {
    case QuadClass::Split: return BigRat(1);
    case QuadClass::UnramifiedUnit: {
      for (long u = 2; u < ctx.p; ++u)
        if (legendre(BigInt(u), ctx.p) == -1) return BigRat(u);
      fail(Err::Internal, "no nonsquare unit found");
    }
    case QuadClass::RamifiedP: return BigRat(ctx.p);
    case QuadClass::RamifiedUP: {
      for (long u = 2; u < ctx.p; ++u)
        if (legendre(BigInt(u), ctx.p) == -1) return BigRat(u * ctx.p);
      fail(Err::Internal, "no nonsquare unit found");
    }
  }
  fail(Err::Internal, "bad class");
}

std::string quad_class_name(QuadClass c) {
  switch (c) {
    case QuadClass::Split: return "split";
    case QuadClass::UnramifiedUnit: return "unramified";
    case QuadClass::RamifiedP: return "ramified_p";
    case QuadClass::RamifiedUP: return "ramified_up";
  }
  return "?";
}

}  // namespace padic
