#pragma once

#include "padic/ballsum.hpp"
#include "padic/quad_ext.hpp"

namespace padic {

// F f(y) = int f(x) psi(xy) dx with the self-dual dx; exact ball-sum output,
// refined so psi(a y) is constant on every output ball.
BallSum1D fourier_additive(const BallSum1D& f, const PrimeContext& ctx, int psi_sign = +1);

// Symplectic Fourier phi^(c,d) = int phi(x,y) psi(xd - yc) dx dy; applying it
// twice gives phi(-x,-y). An optional scale multiplies the symplectic form
// (pairing psi(scale * (xd - yc))), with the matching self-dual measure.
BallSum2D fourier_symplectic(const BallSum2D& f, const PrimeContext& ctx,
                             const BigRat& scale = BigRat(1), int psi_sign = +1);

// Schwartz data on E + E^alpha (the alpha slot is ignored for split E).
struct InnerFormPair {
  BallSum2D plus;   // on E in coordinates x + y sqrt(D)
  BallSum2D alpha;  // on E^alpha, same coordinate model, kappa-scaled norm
};

// Fiberwise symplectic Fourier of the pair: each component transforms with
// its own twisted pairing (kappa-scaled on the alpha component).
InnerFormPair fourier_symplectic_pair(const InnerFormPair& f, const QuadExtension& E);

}  // namespace padic
