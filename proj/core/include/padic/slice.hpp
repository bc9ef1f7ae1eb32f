#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "padic/characters.hpp"
#include "padic/context.hpp"

namespace padic {

// Unit residues coprime to p modulo p^depth, with index lookup.
class UnitGroup {
 public:
  UnitGroup(long p, long depth);
  long size() const { return static_cast<long>(reps_.size()); }
  const BigInt& rep(long i) const { return reps_[static_cast<size_t>(i)]; }
  long index(const BigInt& u_mod) const;
  long index_of(const BigRat& unit, long p) const;
  long depth() const { return depth_; }
  static const UnitGroup& get(long p, long depth);  // cached

 private:
  long p_, depth_;
  BigInt modulus_;
  std::vector<BigInt> reps_;
};

// Function on one annulus |x| = q^{-k}: a quadratic-character profile
// z_triv + z_leg * legendre(u) plus an optional coset table at given depth.
struct AnnulusData {
  Complex c_triv{0.0, 0.0};
  Complex c_leg{0.0, 0.0};
  long table_depth = 0;  // 0: no table
  std::vector<Complex> table;

  bool has_table() const { return table_depth > 0; }
  bool trivial() const {
    return c_triv == Complex{} && c_leg == Complex{} && !has_table();
  }
  long depth() const { return has_table() ? table_depth : (c_leg == Complex{} ? 0 : 1); }
};

// One term of an exact tail expansion: value at val(x) = k is
//   a * omega(unit x) * ratio_p^k * k^e,
// omega the trivial or Legendre unit character. Quadratic twists and |x|^s
// factors both live in ratio_p.
struct TailComponent {
  UnitChar omega;
  Complex a{0.0, 0.0};
  Complex ratio_p{1.0, 0.0};
  int k_power = 0;
};

struct Tail {
  enum Kind { Zero, Components, Unknown } kind = Zero;
  std::vector<TailComponent> comps;

  static Tail zero() { return Tail{}; }
  static Tail unknown() { return Tail{Unknown, {}}; }
  Complex eval(const BigRat& x, long k, long p) const;
  long depth() const;  // max conductor among components (0 or 1)
};

// Locally constant function of one p-adic variable, stored exactly on a
// valuation window with closed-form tails beyond it. Values are densities
// against d^x. All transforms in this codebase reduce to algebra on slices.
class Slice {
 public:
  Slice() = default;
  Slice(long p, long kmin, long kmax);

  long p() const { return p_; }
  long kmin() const { return kmin_; }
  long kmax() const { return kmax_; }
  bool empty_window() const { return kmax_ < kmin_; }

  AnnulusData& at(long k);
  const AnnulusData& at(long k) const;

  Tail& left() { return left_; }
  Tail& right() { return right_; }
  const Tail& left() const { return left_; }
  const Tail& right() const { return right_; }

  // Value at x != 0 (window, or exact tail evaluation).
  Complex eval(const BigRat& x) const;
  // Value at val(x) = k with unit residue index i at the annulus depth.
  Complex eval_coset(long k, long unit_index, const UnitGroup& ug) const;
  // Local constancy depth at annulus k (tails included).
  long depth_at(long k) const;

  Slice& add_inplace(const Slice& o);
  Slice scaled(const Complex& z) const;
  // Pointwise product with quadratic character chi(x).
  Slice char_twisted(const MultChar& chi) const;
  // Pointwise product with |x|^alpha (alpha may be half-integral).
  Slice abs_power(double alpha) const;
  // Slice of x -> f(A x).
  Slice scale_arg(const BigRat& A) const;
  // Slice of x -> f(A / x).
  Slice flip_arg(const BigRat& A) const;
  // Pointwise product with an arbitrary function given with a conductor
  // bound per annulus; right tail becomes Unknown unless the function is
  // asymptotically 1 there (caller asserts via flag).
  Slice function_multiplied(const std::function<Complex(const BigRat&)>& f,
                            const std::function<long(long)>& conductor_at,
                            bool trivial_at_zero, bool trivial_at_infinity) const;

  // Total d^x integral of the slice (window + closed-form tails).
  Complex integral_dx_mult() const;
  // Mellin-style moment: int f(x) chi(x)^{-1} |x|^{-1/2} d^x (numeric),
  // convergence governed by the tails.
  Complex mellin_moment(const MultChar& chi, const PrimeContext& ctx) const;

  // Extend the window (pulling values from tails) or restrict it.
  Slice with_window(long kmin, long kmax) const;

  static Slice zero(long p) { return Slice(p, 0, -1); }
  static Slice from_components(long p, long kmin, long kmax,
                               const std::function<AnnulusData(long)>& gen);

  double max_abs_window() const;

 private:
  long p_ = 3;
  long kmin_ = 0, kmax_ = -1;
  std::vector<AnnulusData> ann_;
  Tail left_, right_;
};

// Exact (rational) counterpart used by the Mellin / residue pipelines. Only
// the quadratic-character moments per annulus are kept:
//   m_k(omega) = int_{val(x)=k} F(x) omega(unit x) d^x.
struct ExactMoments {
  BigRat m_triv{0};
  BigRat m_leg{0};
  const BigRat& operator[](const UnitChar& w) const { return w.trivial() ? m_triv : m_leg; }
};

struct ExactGermComponent {
  MultChar chi;  // quadratic (or trivial)
  BigRat a{0};
  int k_power = 0;  // 0 or 1 (log-type germ carries k^1)
};

// Exact moment slice: window moments plus exact germ data; the germ value at
// val(x) = k > kmax is q^{-k} (sum_i a_i chi_i(x) k^{e_i}) as a d^x-density.
struct ExactSlice {
  long p = 3;
  long kmin = 0, kmax = -1;
  std::vector<ExactMoments> ann;
  std::vector<ExactGermComponent> germ;

  ExactMoments& at(long k) { return ann[static_cast<size_t>(k - kmin)]; }
  const ExactMoments& at(long k) const { return ann[static_cast<size_t>(k - kmin)]; }
  // Moments of the germ tail at annulus k (exact).
  ExactMoments germ_moments(long k) const;
};

}  // namespace padic
