#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cansec/errors.hpp"
#include "cansec/rational.hpp"

namespace cansec {

// Totally ramified extension L = Q_p(pi) with pi^n = p, truncated arithmetic.
//
// An element is sum c_i pi^i, i = 0..n-1, with each c_i stored mod p^A. That
// gives M = n*A base-pi digits in total. Every element also carries an
// absolute precision abs_prec <= M: the element is known modulo pi^abs_prec
// and nothing finer. Operations propagate precision pessimistically (min of
// the inputs) and refuse to certify a valuation they cannot see.

struct FieldDesc {
  uint64_t p = 0;       // residue characteristic, prime
  uint32_t n = 0;       // ramification index, pi^n = p
  uint32_t A = 0;       // coefficient precision in base-p digits
  uint64_t p_pow_A = 0; // p^A, coefficient modulus
  uint32_t M = 0;       // n*A, working precision in pi-digits

  bool operator==(const FieldDesc& o) const { return p == o.p && n == o.n && A == o.A; }
  bool operator!=(const FieldDesc& o) const { return !(*this == o); }
};

// Validates p prime, n >= 1, A >= 1 and p^A within a single machine word.
FieldDesc make_field(uint64_t p, uint32_t n, uint32_t A);

// Valuation normalized so val(p) = 1; elements of L have values in (1/n)Z.
// Infinity marks the exact zero element.
struct Valuation {
  Rat q;
  bool infinite = false;

  static Valuation infinity() { return Valuation{Rat(0), true}; }
  static Valuation finite(Rat v) { return Valuation{v, false}; }

  bool operator==(const Valuation& o) const {
    if (infinite != o.infinite) return false;
    return infinite || q == o.q;
  }

  std::string str() const { return infinite ? "inf" : q.str(); }
};

class RamElem {
 public:
  RamElem() = default;

  static RamElem zero(const FieldDesc& fd);
  static RamElem one(const FieldDesc& fd);
  // Integer constant, reduced mod p^A; known to full precision M.
  static RamElem from_integer(const FieldDesc& fd, long long v);
  // pi^k for 0 <= k; reduced via pi^n = p.
  static RamElem pi_power(const FieldDesc& fd, uint32_t k);
  // Raw constructor from coefficients c_0..c_{n-1} (mod p^A applied).
  static RamElem from_coeffs(const FieldDesc& fd, std::vector<uint64_t> coeffs,
                             uint32_t abs_prec);

  const FieldDesc& field() const { return fd_; }
  uint32_t abs_prec() const { return prec_; }
  const std::vector<uint64_t>& coeffs() const { return c_; }

  // pi-digit position of the lowest certified nonzero digit, if any.
  std::optional<uint32_t> first_digit() const;

  bool is_zero_to_precision() const { return !first_digit().has_value(); }

  std::string str() const;

 private:
  FieldDesc fd_;
  std::vector<uint64_t> c_;
  uint32_t prec_ = 0;

  void canonicalize();
  friend RamElem operator+(const RamElem&, const RamElem&);
  friend RamElem operator-(const RamElem&, const RamElem&);
  friend RamElem operator-(const RamElem&);
  friend RamElem operator*(const RamElem&, const RamElem&);
  friend RamElem truncate(const RamElem&, uint32_t);
  friend RamElem representative(const RamElem&);
  friend RamElem shift_up(const RamElem&, uint32_t);
  friend RamElem shift_down(const RamElem&, uint32_t);
};

RamElem operator+(const RamElem& a, const RamElem& b);
RamElem operator-(const RamElem& a, const RamElem& b);
RamElem operator-(const RamElem& a);
RamElem operator*(const RamElem& a, const RamElem& b);

// Exact valuation in units of val(p) = 1. Throws indeterminate_valuation if
// the visible digits all vanish but abs_prec is short of full precision;
// returns Infinity if they vanish at full precision.
Valuation valuation(const RamElem& a);

// Certified lower bound min(valuation, abs_prec/n); never throws.
Rat valuation_lower_bound(const RamElem& a);

// True iff the valuation is certified and equals exactly v pi-digits.
bool has_valuation_digits(const RamElem& a, uint32_t v);

// Unit inverse via Newton lifting; requires certified valuation 0.
RamElem invert(const RamElem& a);

// Restrict knowledge to pi^k (k <= abs_prec keeps digits, higher is a no-op).
RamElem truncate(const RamElem& a, uint32_t k);

// The canonical representative of a's congruence class (zero digits above
// abs_prec), reported at full precision M. Callers own the certification of
// anything computed from it; the section solver uses this together with its
// contraction bound.
RamElem representative(const RamElem& a);

// Multiply by pi^k. Knowledge improves to min(abs_prec + k, M).
RamElem shift_up(const RamElem& a, uint32_t k);

// Exact division by pi^k; requires the low k digits to vanish (certified).
RamElem shift_down(const RamElem& a, uint32_t k);

// a == 0 mod pi^k, checked against certified digits. Throws if abs_prec < k.
bool is_zero_mod(const RamElem& a, uint32_t k);
bool congruent_mod(const RamElem& a, const RamElem& b, uint32_t k);

// y = p/x for x with certified valuation v in (0, n). The result is known to
// min(abs_prec + n - 2v, M) pi-digits and satisfies val(x) + val(y) = 1.
RamElem annulus_complement(const RamElem& x);

}  // namespace cansec
