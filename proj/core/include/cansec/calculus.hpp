#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cansec/rational.hpp"

namespace cansec {

// The exact rational calculus of measures of singularity: how the degree-
// (e+1) map pushes them forward, how the involution w reflects them, and the
// classification that the boundary e/(e+1) cuts out. Everything here is pure
// rational arithmetic; the boundary case genuinely carries only a lower
// bound, and AtLeast values are never silently upgraded to Exact.

enum class NuKind { exact, at_least };

struct NuValue {
  NuKind kind = NuKind::exact;
  Rat q;

  static NuValue exact(Rat v) { return {NuKind::exact, v}; }
  static NuValue at_least(Rat v) { return {NuKind::at_least, v}; }

  bool operator==(const NuValue& o) const { return kind == o.kind && q == o.q; }

  std::string str() const { return kind == NuKind::exact ? q.str() : ">=" + q.str(); }
};

enum class PointClass { canonical, anti_canonical, too_singular };

const char* point_class_name(PointClass c);

// Components over the ordinary locus: Z downstairs, Z_inf (nu = 0) and Z_0
// (nu = 1) upstairs, and the residue annuli indexed by singular point.
struct LocusLabel {
  enum Kind { Z, Zinf, Z0, SingularAnnulus } kind = Z;
  uint32_t index = 0;

  static LocusLabel zinf() { return {Zinf, 0}; }
  static LocusLabel z0() { return {Z0, 0}; }

  Rat nu() const;
  std::string str() const;
  bool operator==(const LocusLabel& o) const { return kind == o.kind && index == o.index; }
};

// nu_X of the image of an annulus point with nu_Y = a:
//   a            for a < e/(e+1)
//   e(1 - a)     for a > e/(e+1)
//   >= e/(e+1)   for a = e/(e+1)  (only a bound holds there)
NuValue pushforward_nu(Rat a, uint32_t e);

// canonical / anti-canonical / too singular by strict comparison with
// e/(e+1).
PointClass classify(Rat a, uint32_t e);

// The involution reflects the annulus measure: nu -> 1 - nu.
Rat w_nu(Rat a);

// The six-branch map (nu_X(pi Q), class(Q)) -> (nu_X(pi Q^w), class(Q^w)).
// `branch` reports which case fired (1..6).
struct TheoremBResult {
  NuValue nu_x_w;
  PointClass class_w;
  int branch = 0;
};

TheoremBResult involution_map(NuValue nu_x, PointClass cls, uint32_t e);

struct TableRow {
  Rat nu_y;
  NuValue nu_x;
  PointClass cls;
  Rat nu_y_w;
  NuValue nu_x_w;
  PointClass cls_w;
};

// One row per nu_Y = k/n, k = 0..n, composing pushforward, classification and
// reflection. Requires n to be a multiple of e(e+1) so both boundaries are on
// the grid; checks the internal identity
//   involution_map(pushforward(a), classify(a))
//     == (pushforward(1-a), classify(1-a))
// on every row.
std::vector<TableRow> figure_table(uint32_t e, uint32_t grid_denominator);

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows);

}  // namespace cansec
