#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "padic/error.hpp"

namespace padic {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline BigInt num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const BigRat& r) { return boost::multiprecision::denominator(r); }

BigInt pow_int(const BigInt& base, unsigned exp);
BigRat pow_rat(const BigRat& base, long exp);

// p-adic valuation of a nonzero integer / rational.
long val_p(const BigInt& n, long p);
long val_p(const BigRat& r, long p);

// r = p^v * unit; returns the unit part (a rational with numerator and
// denominator prime to p).
BigRat unit_part(const BigRat& r, long p);

// Fractional part of r in Q/Z lying in [0,1); requires den(r) a power of p
// after removing prime-to-p factors: frac_p(a/(b p^m)) uses the inverse of b
// mod p^m. This is the p-part of r mod Z.
BigRat frac_p(const BigRat& r, long p);

// r mod p^k as an integer in [0, p^k) for r with val_p(r) >= 0.
BigInt mod_pk(const BigRat& r, long p, long k);

BigInt mod_inverse(const BigInt& a, const BigInt& m);

// Legendre symbol (a|p) in {-1,0,1}, p an odd prime.
int legendre(const BigInt& a, long p);

// Hilbert symbol (a,b)_p for the odd prime p; a,b nonzero rationals.
int hilbert_symbol(const BigRat& a, const BigRat& b, long p);

// Square root of a mod p^k (a a unit square mod p^k), p odd.
std::optional<BigInt> sqrt_mod_pk(const BigInt& a, long p, long k);

// True if the nonzero rational is a square in Q_p (p odd).
bool is_square_qp(const BigRat& r, long p);

double to_double(const BigRat& r);

// e^{2 pi i r} for exact rational r.
Complex unit_circle(const BigRat& r);

BigRat parse_rational(const std::string& text);
std::string rational_to_string(const BigRat& r);

}  // namespace padic
