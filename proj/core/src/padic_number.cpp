#include "padic/padic_number.hpp"

#include <cmath>

#include "padic/context.hpp"

namespace padic {

std::vector<long> PAdicNumber::unit_digits(long p, long n) const {
  require(!is_zero(), Err::ZeroArgument, "digits of zero");
  BigRat u = unit(p);
  BigInt residue = mod_pk(u, p, n);
  std::vector<long> digits;
  digits.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    digits.push_back(static_cast<long>(residue % p));
    residue /= p;
  }
  return digits;
}

double PrimeContext::qpow(double e) const { return std::pow(static_cast<double>(q), e); }

}  // namespace padic
