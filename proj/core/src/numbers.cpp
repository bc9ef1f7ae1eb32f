#include "padic/numbers.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

namespace padic {

BigInt pow_int(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  unsigned e = exp;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

BigRat pow_rat(const BigRat& base, long exp) {
  if (exp == 0) return BigRat(1);
  require(base != 0 || exp > 0, Err::ZeroArgument, "0 to a negative power");
  BigRat b = exp > 0 ? base : BigRat(1) / base;
  unsigned long e = static_cast<unsigned long>(exp > 0 ? exp : -exp);
  BigRat r = 1;
  while (e) {
    if (e & 1ul) r *= b;
    b *= b;
    e >>= 1ul;
  }
  return r;
}

long val_p(const BigInt& n, long p) {
  require(n != 0, Err::ZeroArgument, "valuation of zero");
  BigInt m = n;
  long v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

long val_p(const BigRat& r, long p) {
  require(r != 0, Err::ZeroArgument, "valuation of zero");
  return val_p(num(r), p) - val_p(den(r), p);
}

BigRat unit_part(const BigRat& r, long p) {
  long v = val_p(r, p);
  return r / pow_rat(BigRat(p), v);
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  require(old_r == 1, Err::ZeroArgument, "not invertible");
  BigInt inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

BigRat frac_p(const BigRat& r, long p) {
  if (r == 0) return BigRat(0);
  long v = val_p(r, p);
  if (v >= 0) return BigRat(0);
  long m = -v;  // r is reduced, so p | den and p does not divide num
  BigInt pk = pow_int(BigInt(p), static_cast<unsigned>(m));
  // r = a/(b p^m) with a,b prime to p; the p-part of r mod Z is (a b^{-1} mod p^m)/p^m.
  BigInt b = den(r) / pk;
  BigInt residue = num(r) % pk * mod_inverse(b % pk, pk) % pk;
  if (residue < 0) residue += pk;
  return BigRat(residue, pk);
}

BigInt mod_pk(const BigRat& r, long p, long k) {
  BigInt pk = pow_int(BigInt(p), static_cast<unsigned>(k));
  if (r == 0) return BigInt(0);
  require(val_p(r, p) >= 0, Err::PrecisionLoss, "mod_pk of non-integral element");
  BigInt b = den(r);
  BigInt res = num(r) % pk * mod_inverse(b % pk, pk) % pk;
  if (res < 0) res += pk;
  return res;
}

int legendre(const BigInt& a, long p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  BigInt e = boost::multiprecision::powm(r, BigInt((p - 1) / 2), BigInt(p));
  return e == 1 ? 1 : -1;
}

int hilbert_symbol(const BigRat& a, const BigRat& b, long p) {
  require(a != 0 && b != 0, Err::ZeroArgument, "hilbert symbol of zero");
  long alpha = val_p(a, p), beta = val_p(b, p);
  BigInt u = mod_pk(unit_part(a, p), p, 1);
  BigInt v = mod_pk(unit_part(b, p), p, 1);
  int sign = 1;
  if ((alpha % 2 != 0) && (beta % 2 != 0) && legendre(BigInt(-1), p) == -1) sign = -sign;
  if (beta % 2 != 0 && legendre(u, p) == -1) sign = -sign;
  if (alpha % 2 != 0 && legendre(v, p) == -1) sign = -sign;
  return sign;
}

std::optional<BigInt> sqrt_mod_pk(const BigInt& a, long p, long k) {
  BigInt pk = pow_int(BigInt(p), static_cast<unsigned>(k));
  BigInt a0 = a % pk;
  if (a0 < 0) a0 += pk;
  if (a0 == 0) return BigInt(0);
  require(a0 % p != 0, Err::ZeroArgument, "sqrt_mod_pk wants a unit");
  if (legendre(a0, p) != 1) return std::nullopt;
  // Tonelli-Shanks mod p.
  BigInt P(p);
  BigInt q = P - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (legendre(z, p) != -1) ++z;
  BigInt m = s, c = boost::multiprecision::powm(z, q, P);
  BigInt t = boost::multiprecision::powm(a0, q, P);
  BigInt r = boost::multiprecision::powm(a0, (q + 1) / 2, P);
  while (t != 1) {
    BigInt tt = t;
    long i = 0;
    while (tt != 1) {
      tt = tt * tt % P;
      ++i;
    }
    BigInt bexp = boost::multiprecision::powm(BigInt(2), m - i - 1, P - 1);
    BigInt bb = boost::multiprecision::powm(c, bexp, P);
    m = i;
    c = bb * bb % P;
    t = t * c % P;
    r = r * bb % P;
  }
  // Hensel lift to p^k.
  BigInt x = r, mod = P;
  while (mod < pk) {
    mod *= mod;
    if (mod > pk) mod = pk;
    BigInt inv2x = mod_inverse(2 * x % mod, mod);
    x = (x - (x * x - a0) % mod * inv2x) % mod;
    if (x < 0) x += mod;
    x %= pk;
  }
  x %= pk;
  if (x < 0) x += pk;
  return x;
}

bool is_square_qp(const BigRat& r, long p) {
  long v = val_p(r, p);
  if (v % 2 != 0) return false;
  return legendre(mod_pk(unit_part(r, p), p, 1), p) == 1;
}

double to_double(const BigRat& r) {
  return static_cast<double>(boost::multiprecision::cpp_bin_float_50(r));
}

Complex unit_circle(const BigRat& r) {
  double angle = 2.0 * std::numbers::pi * to_double(r - BigRat(num(r) / den(r)));
  return Complex(std::cos(angle), std::sin(angle));
}

BigRat parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(text));
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    require(d != 0, Err::ParseError, "zero denominator");
    return BigRat(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::ParseError, "bad rational: " + text);
  }
}

std::string rational_to_string(const BigRat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace padic
