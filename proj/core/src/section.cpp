#include "cansec/section.hpp"

#include <algorithm>

namespace cansec {

AnnulusPoint solve_section(const LocalModel& m, const DiscPoint& P, SolveStats* stats) {
  const RamElem& t = P.t();
  const FieldDesc& fd = t.field();
  uint32_t n = fd.n;
  uint32_t v = P.val_digits();
  Rat a(v, n);

  if (a >= m.region_bound())
    fail(errc::out_of_region, "val(t) = " + a.str() + " >= " + m.region_bound().str() +
                                  "; the section does not extend there");

  // Contraction gain in pi-digits: min(e*n - (e+1)v, n - v), provably > 0
  // on the open region. Each correction term sits at least `gain` digits
  // above val(t), and a perturbation of the iterate by pi^d moves the
  // correction by at most pi^(d + gain).
  uint32_t e = m.e();
  long long g1 = static_cast<long long>(e) * n - static_cast<long long>(e + 1) * v;
  long long g2 = static_cast<long long>(n) - v;
  uint32_t gain = static_cast<uint32_t>(std::min(g1, g2));
  uint32_t budget = (fd.M + gain - 1) / gain + 3;  // ceil(M/(n*gamma)) + guard

  // `known` tracks the certified agreement (in pi-digits) between the
  // iterate and the section image. The correction is evaluated on the
  // canonical representative; the contraction bound, not the mechanical
  // min-rule, certifies how many of its digits survive, so the per-step
  // arithmetic loss in y = p/x does not compound.
  RamElem x = t;
  uint32_t known = std::min(v + gain, t.abs_prec());
  uint32_t iters = 0;
  for (;; ++iters) {
    if (iters > budget)
      fail(errc::precision_exhausted, "fixed-point iteration exceeded its certified budget");
    RamElem correction = hs_eval(m.correction_series(), representative(x));
    uint32_t cert = std::min(correction.abs_prec(), known + gain);
    RamElem next = truncate(t - truncate(correction, cert), std::min(t.abs_prec(), cert));
    if (!has_valuation_digits(next, v))
      fail(errc::precision_exhausted, "iterate left the valuation sphere; model invalid?");
    RamElem update = representative(next) - representative(x);
    x = next;
    known = next.abs_prec();
    Rat ulb = valuation_lower_bound(truncate(update, known));
    if (ulb >= Rat(known, n)) {
      ++iters;
      break;
    }
  }
  if (stats) {
    stats->iterations = iters;
    stats->gain_digits = gain;
    stats->target_digits = known;
  }
  return AnnulusPoint(x);
}

bool check_reduction(const LocalModel& m, const DiscPoint& P, const AnnulusPoint& Q) {
  (void)m;
  const FieldDesc& fd = P.t().field();
  uint32_t v = P.val_digits();
  if (v >= fd.n) fail(errc::out_of_range, "reduction modulus p/t needs val(t) < 1");
  uint32_t k = fd.n - v;  // modulus pi^(n(1-a))
  bool x_matches = congruent_mod(Q.x(), P.t(), k);
  bool y_vanishes = is_zero_mod(Q.y(), k);
  return x_matches && y_vanishes;
}

SectionResult total_section(const LocalModel& m, Rat nu) {
  if (nu < Rat(0)) fail(errc::out_of_range, "negative measure of singularity");
  if (nu.is_zero()) return OrdinarySectionMarker{Rat(0)};
  if (nu >= m.region_bound())
    fail(errc::out_of_region,
         "nu = " + nu.str() + " >= " + m.region_bound().str() + "; the section does not extend");
  fail(errc::inconsistent_input,
       "a concrete disc point is required to solve at nu = " + nu.str());
}

SectionResult total_section(const LocalModel& m, const DiscPoint& P, SolveStats* stats) {
  return solve_section(m, P, stats);
}

}  // namespace cansec
