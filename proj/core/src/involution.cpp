#include "cansec/involution.hpp"

#include <sstream>

namespace cansec {

Pairing::Pairing(LocalModel source, LocalModel target, HalfSeries twist)
    : source_(std::move(source)), target_(std::move(target)), twist_(std::move(twist)) {
  if (source_.e() != target_.e())
    fail(errc::inconsistent_input, "paired models must share the ramification index e");
  const HalfSeries& u = source_.u();
  if (twist_.p() != u.p() || twist_.A() != u.A() || twist_.D() != u.D())
    fail(errc::field_mismatch, "twist has different ring parameters");
  CongruenceSpec spec;
  spec.unit = true;
  if (!check_congruences(twist_, spec).unit_ok)
    fail(errc::not_a_unit, "twist must be a unit series");
}

AnnulusPoint apply_w(const Pairing& pr, const AnnulusPoint& Q) {
  RamElem tw = hs_eval(pr.twist(), Q.x());
  return AnnulusPoint(Q.y() * tw);
}

LocusLabel apply_w(const LocusLabel& label) {
  switch (label.kind) {
    case LocusLabel::Zinf: return LocusLabel::z0();
    case LocusLabel::Z0: return LocusLabel::zinf();
    default:
      fail(errc::inconsistent_input, "w swaps the two ordinary components; got " + label.str());
  }
}

namespace {

// Coordinate-path measure of an image point: exact when the valuation is
// certified, otherwise the certified lower bound.
NuValue image_measure(const RamElem& t) {
  if (auto d = t.first_digit()) return NuValue::exact(Rat(*d, t.field().n));
  return NuValue::at_least(valuation_lower_bound(t));
}

bool measure_matches(const NuValue& predicted, const NuValue& computed) {
  if (predicted.kind == NuKind::exact)
    return computed.kind == NuKind::exact && computed.q == predicted.q;
  // lower-bound prediction: any certified information at or above it passes
  return computed.q >= predicted.q;
}

}  // namespace

InvolutionCheck verify_involution(const Pairing& pr, const AnnulusPoint& Q) {
  uint32_t e = pr.source().e();
  InvolutionCheck chk;
  chk.nu_y = Q.nu();
  chk.cls = classify(chk.nu_y, e);

  AnnulusPoint Qw = apply_w(pr, Q);
  chk.nu_y_w = Qw.nu();
  chk.sum_is_one = (chk.nu_y + chk.nu_y_w) == Rat(1);
  chk.cls_w = classify(chk.nu_y_w, e);

  chk.nu_x = image_measure(eval_pi_raw(pr.source(), Q));
  chk.nu_x_w = image_measure(eval_pi_raw(pr.target(), Qw));

  std::ostringstream detail;
  try {
    TheoremBResult pred = involution_map(chk.nu_x, chk.cls, e);
    chk.predicted_nu_x_w = pred.nu_x_w;
    chk.predicted_cls_w = pred.class_w;
    chk.branch = pred.branch;
    bool nu_ok = measure_matches(pred.nu_x_w, chk.nu_x_w);
    bool cls_ok = pred.class_w == chk.cls_w;
    chk.pass = chk.sum_is_one && nu_ok && cls_ok;
    if (!chk.sum_is_one) detail << "nu_Y sum != 1; ";
    if (!nu_ok)
      detail << "nu_X mismatch: predicted " << pred.nu_x_w.str() << ", coordinates give "
             << chk.nu_x_w.str() << "; ";
    if (!cls_ok)
      detail << "class mismatch: predicted " << point_class_name(pred.class_w)
             << ", coordinates give " << point_class_name(chk.cls_w) << "; ";
  } catch (const error& err) {
    chk.pass = false;
    detail << "branch map rejected the coordinate input: " << err.what();
  }
  chk.detail = detail.str();
  return chk;
}

InvolutionCheck verify_involution(const LocusLabel& label, uint32_t e) {
  InvolutionCheck chk;
  LocusLabel image = apply_w(label);
  chk.nu_y = label.nu();
  chk.nu_y_w = image.nu();
  chk.sum_is_one = (chk.nu_y + chk.nu_y_w) == Rat(1);
  chk.cls = classify(chk.nu_y, e);
  chk.cls_w = classify(chk.nu_y_w, e);
  // over the ordinary locus both images have measure zero by construction
  chk.nu_x = NuValue::exact(Rat(0));
  chk.nu_x_w = NuValue::exact(Rat(0));
  TheoremBResult pred = involution_map(chk.nu_x, chk.cls, e);
  chk.predicted_nu_x_w = pred.nu_x_w;
  chk.predicted_cls_w = pred.class_w;
  chk.branch = pred.branch;
  chk.pass = chk.sum_is_one && measure_matches(pred.nu_x_w, chk.nu_x_w) &&
             pred.class_w == chk.cls_w;
  return chk;
}

}  // namespace cansec
