#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cansec/halfring.hpp"
#include "cansec/newton.hpp"
#include "cansec/padic.hpp"

namespace cansec {

// The local model of the degree-(e+1) map pi on one annulus:
//
//   t  =  x + (y u)^e + f(y) + p g,        xy = p,
//
// with e >= 2, u a unit congruent to 1 mod p, and f a pure y-series vanishing
// through y^e. The canonical storage is the (y u)^e shape; evaluation expands
// u^e internally.
class LocalModel {
 public:
  LocalModel(uint32_t e, HalfSeries u, HalfSeries f, HalfSeries g);

  uint32_t e() const { return e_; }
  const HalfSeries& u() const { return u_; }
  const HalfSeries& f() const { return f_; }
  const HalfSeries& g() const { return g_; }

  // x + (yu)^e + f + p*g assembled in normal form.
  const HalfSeries& defining_series() const { return pi_series_; }
  // defining_series minus the bare x monomial; the section solver's
  // correction term.
  const HalfSeries& correction_series() const { return corr_series_; }

  Rat region_bound() const { return Rat(e_, e_ + 1); }

 private:
  uint32_t e_;
  HalfSeries u_, f_, g_;
  HalfSeries pi_series_, corr_series_;
};

struct ModelReport {
  bool e_ok = true;          // e >= 2
  bool u_unit_ok = true;     // u has unit constant term
  bool u_one_mod_p_ok = true;  // u == 1 mod p as a series
  bool f_vanish_ok = true;   // f pure y-series, == 0 mod y^(e+1)
  bool ring_ok = true;       // u, f, g share (p, A, D)

  bool pass() const { return e_ok && u_unit_ok && u_one_mod_p_ok && f_vanish_ok && ring_ok; }
};

ModelReport validate(const LocalModel& m);

// A closed point of the open annulus (|p|, 1): parameter x with certified
// 0 < val(x) < 1; y = p/x is implicit, so val(x) + val(y) = 1 exactly.
class AnnulusPoint {
 public:
  explicit AnnulusPoint(RamElem x);

  const RamElem& x() const { return x_; }
  RamElem y() const { return annulus_complement(x_); }
  uint32_t val_digits() const { return v_; }
  // measure of singularity on the annulus side
  Rat nu() const { return Rat(v_, x_.field().n); }

 private:
  RamElem x_;
  uint32_t v_;
};

// A closed point of the open unit disc downstairs: parameter t, val(t) > 0.
// The measure val(t) is parameter-independent only below 1; larger values are
// carried but flagged.
class DiscPoint {
 public:
  explicit DiscPoint(RamElem t);

  const RamElem& t() const { return t_; }
  uint32_t val_digits() const { return v_; }
  Rat nu() const { return Rat(v_, t_.field().n); }
  bool nu_parameter_dependent() const { return v_ >= t_.field().n; }

 private:
  RamElem t_;
  uint32_t v_;
};

// t(pi Q) = x + u0(x) (p/x)^e + f0(x) + p g0(x), evaluated through the
// assembled normal form. Requires the annulus point to sit inside the ring's
// certified range; the result precision is certified, not assumed.
DiscPoint eval_pi(const LocalModel& m, const AnnulusPoint& Q);

// Same computation but keeps the raw element (no val(t) > 0 certification);
// used where the image valuation is only bounded below.
RamElem eval_pi_raw(const LocalModel& m, const AnnulusPoint& Q);

// Newton-polygon data of the fiber equation over a disc point of valuation a:
// the defining equation multiplied through by the top y-degree to clear
// y = p/x, with the constant slot carrying min(a, existing valuation).
NewtonData fiber_polygon(const LocalModel& m, Rat a);

// Root valuations of the fiber polygon restricted to the open annulus range
// (0, 1). For a < e/(e+1) this is {a} with {1 - a/e} e times; from the
// boundary on it is {e/(e+1)} with multiplicity e+1.
std::vector<Rat> fiber_valuations(const LocalModel& m, Rat a);

// Re-expresses the model in coordinates x^ = x*w, y^ = y/w for a unit series
// w == 1 mod p (that congruence keeps the defining shape intact with the same
// disc parameter t). w == 1 returns the model unchanged.
LocalModel rescale(const LocalModel& m, const HalfSeries& w);

// --- randomized generators (seeded; used by the verification suites) ---

struct ModelShape {
  uint64_t p = 5;
  uint32_t n = 3;
  uint32_t A = 8;
  uint32_t D = 24;
  uint32_t e = 2;
  uint32_t max_degree = 2;  // degree of the random pieces inside u, f, g
};

// u = 1 + p*(random), f = y^(e+1)*(random y-series), g random: exactly the
// constraints of the normal form, so validate() always passes.
LocalModel random_model(std::mt19937_64& rng, const ModelShape& shape);

// Random unit series (constant term prime to p), for involution twists.
HalfSeries random_unit_series(std::mt19937_64& rng, const ModelShape& shape);

// Random unit of the extension field (valuation 0, full precision).
RamElem random_unit(std::mt19937_64& rng, const FieldDesc& fd);

// x = pi^k * unit: an annulus point with nu = k/n exactly.
AnnulusPoint random_point_with_digits(std::mt19937_64& rng, const FieldDesc& fd, uint32_t k);

uint64_t bounded(std::mt19937_64& rng, uint64_t bound);  // uniform in [0, bound)

}  // namespace cansec
