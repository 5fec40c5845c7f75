#include "cansec/calculus.hpp"

#include <sstream>

namespace cansec {

const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::canonical: return "canonical";
    case PointClass::anti_canonical: return "anti-canonical";
    case PointClass::too_singular: return "too-singular";
  }
  return "?";
}

Rat LocusLabel::nu() const {
  switch (kind) {
    case Z: return Rat(0);
    case Zinf: return Rat(0);
    case Z0: return Rat(1);
    case SingularAnnulus:
      fail(errc::inconsistent_input, "annulus points carry a numeric nu, not a label");
  }
  return Rat(0);
}

std::string LocusLabel::str() const {
  switch (kind) {
    case Z: return "Z";
    case Zinf: return "Z_inf";
    case Z0: return "Z_0";
    case SingularAnnulus: return "annulus[" + std::to_string(index) + "]";
  }
  return "?";
}

namespace {
void require_unit_interval(Rat a) {
  if (a < Rat(0) || a > Rat(1))
    fail(errc::out_of_range, "nu_Y = " + a.str() + " outside [0, 1]");
}
}  // namespace

NuValue pushforward_nu(Rat a, uint32_t e) {
  require_unit_interval(a);
  Rat bound(e, e + 1);
  if (a < bound) return NuValue::exact(a);
  if (a > bound) return NuValue::exact(Rat(e) * (Rat(1) - a));
  return NuValue::at_least(bound);
}

PointClass classify(Rat a, uint32_t e) {
  require_unit_interval(a);
  Rat bound(e, e + 1);
  if (a < bound) return PointClass::canonical;
  if (a > bound) return PointClass::anti_canonical;
  return PointClass::too_singular;
}

Rat w_nu(Rat a) {
  require_unit_interval(a);
  return Rat(1) - a;
}

TheoremBResult involution_map(NuValue nu_x, PointClass cls, uint32_t e) {
  Rat bound(e, e + 1);
  Rat inv_bound(1, e + 1);

  if (cls == PointClass::too_singular) {
    // consistency: the image valuation is only constrained from below, and
    // any certified information at or above the bound is acceptable
    bool ok = nu_x.q >= bound;
    if (!ok)
      fail(errc::inconsistent_input,
           "too-singular points have nu_X >= " + bound.str() + ", got " + nu_x.str());
    return {NuValue::exact(inv_bound), PointClass::canonical, 6};
  }

  if (nu_x.kind != NuKind::exact)
    fail(errc::inconsistent_input, "only the too-singular case admits a lower-bound nu_X");
  Rat a = nu_x.q;

  if (cls == PointClass::canonical) {
    if (a < Rat(0) || a >= bound)
      fail(errc::inconsistent_input, "canonical points have nu_X in [0, " + bound.str() + ")");
    if (a.is_zero()) return {NuValue::exact(Rat(0)), PointClass::anti_canonical, 1};
    if (a < inv_bound) return {NuValue::exact(Rat(e) * a), PointClass::anti_canonical, 2};
    if (a == inv_bound) return {NuValue::at_least(bound), PointClass::too_singular, 3};
    return {NuValue::exact(Rat(1) - a), PointClass::canonical, 4};
  }

  // anti-canonical: nu_X = e(1 - nu_Y) lies in [0, e/(e+1))
  if (a < Rat(0) || a >= bound)
    fail(errc::inconsistent_input, "anti-canonical points have nu_X in [0, " + bound.str() + ")");
  if (a.is_zero()) return {NuValue::exact(Rat(0)), PointClass::canonical, 1};
  return {NuValue::exact(a / Rat(e)), PointClass::canonical, 5};
}

std::vector<TableRow> figure_table(uint32_t e, uint32_t grid_denominator) {
  if (e < 2) fail(errc::out_of_range, "need e >= 2");
  uint32_t n = grid_denominator;
  if (n == 0 || n % (e * (e + 1)) != 0)
    fail(errc::grid_error, "grid denominator must be a positive multiple of e(e+1)");

  std::vector<TableRow> rows;
  rows.reserve(n + 1);
  for (uint32_t k = 0; k <= n; ++k) {
    Rat a(k, n);
    Rat aw = w_nu(a);
    TableRow row;
    row.nu_y = a;
    row.nu_x = pushforward_nu(a, e);
    row.cls = classify(a, e);
    row.nu_y_w = aw;
    row.nu_x_w = pushforward_nu(aw, e);
    row.cls_w = classify(aw, e);

    TheoremBResult pred = involution_map(row.nu_x, row.cls, e);
    if (!(pred.nu_x_w == row.nu_x_w) || pred.class_w != row.cls_w)
      fail(errc::inconsistent_input,
           "internal identity failed at nu_Y = " + a.str() + ": forward path gives (" +
               row.nu_x_w.str() + ", " + point_class_name(row.cls_w) + "), branch map gives (" +
               pred.nu_x_w.str() + ", " + point_class_name(pred.class_w) + ")");
    rows.push_back(row);
  }
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "nu_Y,nu_X_piQ,class,nu_Y_Qw,nu_X_piQw,class_w\n";
  for (const auto& r : rows) {
    os << r.nu_y.str() << "," << r.nu_x.str() << "," << point_class_name(r.cls) << ","
       << r.nu_y_w.str() << "," << r.nu_x_w.str() << "," << point_class_name(r.cls_w) << "\n";
  }
  return os.str();
}

std::string table_to_json(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) os << ",";
    os << "{\"nu_y\":\"" << r.nu_y.str() << "\",\"nu_x\":\"" << r.nu_x.str() << "\",\"class\":\""
       << point_class_name(r.cls) << "\",\"nu_y_w\":\"" << r.nu_y_w.str() << "\",\"nu_x_w\":\""
       << r.nu_x_w.str() << "\",\"class_w\":\"" << point_class_name(r.cls_w) << "\"}";
  }
  os << "]";
  return os.str();
}

}  // namespace cansec
