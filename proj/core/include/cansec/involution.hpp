#pragma once

#include <optional>
#include <string>

#include "cansec/calculus.hpp"
#include "cansec/model.hpp"

namespace cansec {

// The component-swapping automorphism w realized on coordinates: it carries
// the annulus at one singular point to the annulus at its partner, exchanging
// the roles of x and y up to a unit twist. Configured as data; the theory
// only posits the automorphism abstractly.
class Pairing {
 public:
  Pairing(LocalModel source, LocalModel target, HalfSeries twist);

  const LocalModel& source() const { return source_; }
  const LocalModel& target() const { return target_; }
  const HalfSeries& twist() const { return twist_; }

 private:
  LocalModel source_;
  LocalModel target_;
  HalfSeries twist_;
};

// x(Q^w) = y(Q) * twist(Q). A unit twist cannot move valuations, so
// nu(Q^w) = 1 - nu(Q) exactly.
AnnulusPoint apply_w(const Pairing& pr, const AnnulusPoint& Q);

// The ordinary-locus action is the symbolic component swap.
LocusLabel apply_w(const LocusLabel& label);

// Both computation paths for one annulus point: the coordinate path pushes
// Q and Q^w through the two models and classifies by measure; the rational
// path runs the six-branch map on (nu_X(pi Q), class(Q)). AtLeast
// predictions check as inequalities against certified lower bounds.
struct InvolutionCheck {
  Rat nu_y;
  Rat nu_y_w;
  bool sum_is_one = false;

  NuValue nu_x;        // coordinate path, source model
  PointClass cls;      // from nu_y
  NuValue nu_x_w;      // coordinate path, target model
  PointClass cls_w;    // from nu_y_w

  NuValue predicted_nu_x_w;  // rational path
  PointClass predicted_cls_w;
  int branch = 0;

  bool pass = false;
  std::string detail;
};

InvolutionCheck verify_involution(const Pairing& pr, const AnnulusPoint& Q);

// The symbolic branch over the ordinary locus: labels swap, measures reflect,
// both images are ordinary. Returns the analogous two-path comparison.
InvolutionCheck verify_involution(const LocusLabel& label, uint32_t e);

}  // namespace cansec
