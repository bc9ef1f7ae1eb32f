#pragma once

#include "padic/error.hpp"

namespace padic {

// Global parameters of one verification run over Q_p.
struct PrimeContext {
  long p = 3;             // odd prime
  long q = 3;             // residue cardinality (= p, base field unramified)
  long precision_depth = 4;  // max valuation depth for coset enumeration
  double tol = 1e-10;

  PrimeContext() = default;
  PrimeContext(long prime, long depth, double tolerance = 1e-10)
      : p(prime), q(prime), precision_depth(depth), tol(tolerance) {
    validate();
  }

  void validate() const {
    require(p >= 3, Err::ConfigError, "p must be an odd prime >= 3");
    for (long d = 2; d * d <= p; ++d)
      require(p % d != 0, Err::ConfigError, "p must be prime");
    require(precision_depth >= 1, Err::ConfigError, "depth >= 1");
    require(tol > 0, Err::ConfigError, "tol > 0");
  }

  double qd() const { return static_cast<double>(q); }
  // q^{-k} as double for signed k.
  double qpow(double e) const;
};

}  // namespace padic
