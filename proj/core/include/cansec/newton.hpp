#pragma once

#include <cstdint>
#include <vector>

#include "cansec/padic.hpp"
#include "cansec/rational.hpp"

namespace cansec {

// Newton polygons of p-adic polynomials, with exact rational arithmetic
// throughout: slope comparisons land exactly on boundary cases, and the
// classification below lives on those boundaries.

struct NewtonPoint {
  long long degree = 0;
  Valuation val;
};

struct NewtonData {
  // degrees strictly increasing; infinite entries stand for zero coefficients
  std::vector<NewtonPoint> points;
};

struct HullVertex {
  long long degree = 0;
  Rat val;
};

// Vertices of the lower convex hull in increasing degree. Points lying on a
// chord between vertices are not vertices. Requires >= 2 finite points.
std::vector<HullVertex> lower_hull(const NewtonData& data);

// Root valuations with multiplicity: a hull segment of slope -s and
// horizontal length l contributes s exactly l times. Sorted ascending.
std::vector<Rat> root_valuations(const NewtonData& data);

}  // namespace cansec
