#include "cansec/newton.hpp"

#include <algorithm>

namespace cansec {

namespace {

// Orientation of (a, b, c): sign of the cross product (b-a) x (c-a).
// Negative means c lies below the ray a->b.
int orientation(const HullVertex& a, const HullVertex& b, const HullVertex& c) {
  Rat lhs = (b.val - a.val) * Rat(c.degree - a.degree);
  Rat rhs = (c.val - a.val) * Rat(b.degree - a.degree);
  return rat_cmp(rhs, lhs);
}

std::vector<HullVertex> finite_points(const NewtonData& data) {
  std::vector<HullVertex> pts;
  long long prev = 0;
  bool first = true;
  for (const auto& pt : data.points) {
    if (!first && pt.degree <= prev)
      fail(errc::degenerate_input, "degrees must be strictly increasing");
    prev = pt.degree;
    first = false;
    if (pt.val.infinite) continue;
    if (pt.val.q < Rat(0)) fail(errc::out_of_range, "negative coefficient valuation");
    pts.push_back({pt.degree, pt.val.q});
  }
  return pts;
}

}  // namespace

std::vector<HullVertex> lower_hull(const NewtonData& data) {
  auto pts = finite_points(data);
  if (pts.size() < 2) fail(errc::degenerate_input, "need at least two finite points");
  std::vector<HullVertex> hull;
  for (const auto& pt : pts) {
    // pop while the middle point is on or above the chord
    while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  return hull;
}

std::vector<Rat> root_valuations(const NewtonData& data) {
  if (!data.points.empty() && data.points.back().val.infinite)
    fail(errc::degenerate_input, "leading coefficient must have finite valuation");
  auto hull = lower_hull(data);
  std::vector<Rat> roots;
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    long long len = hull[k + 1].degree - hull[k].degree;
    Rat slope = (hull[k + 1].val - hull[k].val) / Rat(len);
    Rat root_val = -slope;
    for (long long i = 0; i < len; ++i) roots.push_back(root_val);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cansec
