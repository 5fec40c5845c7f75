#pragma once

#include <cstdint>
#include <variant>

#include "cansec/model.hpp"

namespace cansec {

struct SolveStats {
  uint32_t iterations = 0;
  uint32_t gain_digits = 0;    // certified per-step valuation gain, pi-digits
  uint32_t target_digits = 0;  // precision the iteration was driven to
};

// Inverts the degree-one branch of the map over a disc point with
// 0 < val(t) < e/(e+1): returns the unique annulus preimage at the same
// valuation, by the contraction
//
//   x  <-  t - [ u0(x) (p/x)^e + f0(x) + p g0(x) ],   x_0 = t.
//
// Every correction term exceeds val(t) by at least
// gamma = min(e - (e+1)a, 1 - a) > 0, so successive updates gain gamma per
// step and the iteration count is bounded by ceil(M / (n*gamma)) + guard.
//
// Throws out_of_region for val(t) >= e/(e+1) (no preimage branch of degree
// one exists there, and boundary inputs are refused, never approximated),
// ordinary_point for val(t) = 0.
AnnulusPoint solve_section(const LocalModel& m, const DiscPoint& P, SolveStats* stats = nullptr);

// True iff x(Q) == t(P) and y(Q) == 0 modulo p/t(P), i.e. modulo
// pi^(n(1-a)): the solved section reduces to the mod-p section t -> (x, 0).
bool check_reduction(const LocalModel& m, const DiscPoint& P, const AnnulusPoint& Q);

// Marker for the symbolic branch over the ordinary locus: the section there
// is the component isomorphism, not a coordinate computation.
struct OrdinarySectionMarker {
  Rat nu{0};
};

using SectionResult = std::variant<OrdinarySectionMarker, AnnulusPoint>;

// Dispatch over the full domain: nu = 0 resolves symbolically onto the
// distinguished component, 0 < nu < e/(e+1) delegates to solve_section, and
// nu >= e/(e+1) refuses with out_of_region.
SectionResult total_section(const LocalModel& m, Rat nu);
SectionResult total_section(const LocalModel& m, const DiscPoint& P, SolveStats* stats = nullptr);

}  // namespace cansec
