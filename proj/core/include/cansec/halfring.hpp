#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cansec/padic.hpp"

namespace cansec {

// Elements of O[[x,y]]/(xy - p) over O = Z_p in normal form: a pure x-part
// plus a pure y-part, any mixed monomial x^i y^j rewritten eagerly through
// xy = p. Coefficients are integers mod p^A; `coeff_prec` tracks how many
// base-p digits of each coefficient are actually known (an exact division by
// p, used by coordinate rescaling, costs one digit). Truncation at degree D
// may drop terms; `exact` records whether that ever happened, and evaluation
// accounts for the dropped tail.

struct Monomial {
  uint32_t i = 0;
  uint32_t j = 0;
  long long coeff = 0;
};

class HalfSeries {
 public:
  HalfSeries() = default;
  HalfSeries(uint64_t p, uint32_t A, uint32_t D);

  static HalfSeries constant(uint64_t p, uint32_t A, uint32_t D, long long c);
  static HalfSeries x_power(uint64_t p, uint32_t A, uint32_t D, uint32_t i, long long c = 1);
  static HalfSeries y_power(uint64_t p, uint32_t A, uint32_t D, uint32_t j, long long c = 1);

  uint64_t p() const { return p_; }
  uint32_t A() const { return A_; }
  uint32_t D() const { return D_; }
  uint64_t modulus() const { return pA_; }
  uint32_t coeff_prec() const { return coeff_prec_; }
  bool exact() const { return exact_; }

  // x^0..x^D and y^1..y^D (index 0 of ycoeffs() corresponds to y^1).
  const std::vector<uint64_t>& xcoeffs() const { return xc_; }
  const std::vector<uint64_t>& ycoeffs() const { return yc_; }

  uint64_t xcoeff(uint32_t i) const { return i <= D_ ? xc_[i] : 0; }
  uint64_t ycoeff(uint32_t j) const { return (j >= 1 && j <= D_) ? yc_[j - 1] : 0; }

  bool is_zero() const;
  bool operator==(const HalfSeries& o) const;

  std::string str() const;

 private:
  uint64_t p_ = 0;
  uint32_t A_ = 0;
  uint32_t D_ = 0;
  uint64_t pA_ = 0;
  uint32_t coeff_prec_ = 0;
  bool exact_ = true;
  std::vector<uint64_t> xc_;
  std::vector<uint64_t> yc_;

  friend HalfSeries normalize(uint64_t, uint32_t, uint32_t, const std::vector<Monomial>&);
  friend HalfSeries operator+(const HalfSeries&, const HalfSeries&);
  friend HalfSeries operator-(const HalfSeries&, const HalfSeries&);
  friend HalfSeries operator*(const HalfSeries&, const HalfSeries&);
  friend HalfSeries scale(const HalfSeries&, long long);
  friend HalfSeries div_p_exact(const HalfSeries&);
  friend HalfSeries with_coeff_prec(const HalfSeries&, uint32_t);
  friend void add_term(HalfSeries&, uint32_t, uint32_t, uint64_t);
  friend HalfSeries mark_inexact(const HalfSeries&);
  friend HalfSeries lift_degree(const HalfSeries&, uint32_t);
  friend HalfSeries truncate_degree(const HalfSeries&, uint32_t);
};

// Builds the unique normal form of a sum of monomial triples. Rewrites
// x^i y^j with m = min(i,j) >= 1 to p^m x^(i-m) (or p^m y^(j-m)) and merges
// like terms. Throws degree_overflow if a residual degree exceeds D.
HalfSeries normalize(uint64_t p, uint32_t A, uint32_t D, const std::vector<Monomial>& monomials);

HalfSeries operator+(const HalfSeries& f, const HalfSeries& g);
HalfSeries operator-(const HalfSeries& f, const HalfSeries& g);

// Product in normal form. Terms pushed past degree D are discarded and the
// result is marked inexact; evaluation then caps certified precision by the
// tail bound.
HalfSeries operator*(const HalfSeries& f, const HalfSeries& g);

HalfSeries scale(const HalfSeries& f, long long c);
HalfSeries hs_pow(const HalfSeries& f, uint32_t e);

// Exact division by p: every known coefficient must be divisible; costs one
// base-p digit of coefficient precision.
HalfSeries div_p_exact(const HalfSeries& f);

// Inverse of a unit (constant term prime to p), by Newton iteration in the
// (p, x, y)-adic topology.
HalfSeries hs_inv(const HalfSeries& f);

// Copies into a ring with a larger truncation degree (same coefficients).
HalfSeries lift_degree(const HalfSeries& f, uint32_t D2);

// Drops terms beyond D2; marks the result inexact if anything was dropped.
HalfSeries truncate_degree(const HalfSeries& f, uint32_t D2);

// f(X, Y) for half-series arguments; the workhorse of coordinate rescaling.
HalfSeries hs_subst(const HalfSeries& f, const HalfSeries& X, const HalfSeries& Y);

// Evaluation at an annulus point: substitutes y = p/x for x = Q_x with
// certified 0 < val < 1 and returns sum a_i x^i + sum b_j y^j. The result's
// precision reflects the arithmetic chain, the coefficient precision, and,
// for inexact series, the discarded-tail bound D*min(val, 1-val).
RamElem hs_eval(const HalfSeries& f, const RamElem& Q_x);

struct CongruenceSpec {
  bool y_only = false;        // no x^i terms with i >= 1 (constant checked by vanish)
  uint32_t vanish_below_y = 0; // f == 0 mod y^k: y-only, zero constant, no y^j for j < k
  bool unit = false;          // constant term prime to p
  bool one_mod_p = false;     // f == 1 mod p as a series
};

struct CongruenceReport {
  bool y_only_ok = true;
  bool vanish_ok = true;
  bool unit_ok = true;
  bool one_mod_p_ok = true;

  bool all() const { return y_only_ok && vanish_ok && unit_ok && one_mod_p_ok; }
};

CongruenceReport check_congruences(const HalfSeries& f, const CongruenceSpec& spec);

}  // namespace cansec
