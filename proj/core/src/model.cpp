#include "cansec/model.hpp"

#include <algorithm>

namespace cansec {

namespace {

HalfSeries assemble_defining_series(uint32_t e, const HalfSeries& u, const HalfSeries& f,
                                    const HalfSeries& g) {
  HalfSeries x = HalfSeries::x_power(u.p(), u.A(), u.D(), 1);
  HalfSeries y = HalfSeries::y_power(u.p(), u.A(), u.D(), 1);
  HalfSeries yu_e = hs_pow(y * u, e);
  return x + yu_e + f + scale(g, static_cast<long long>(u.p()));
}

}  // namespace

LocalModel::LocalModel(uint32_t e, HalfSeries u, HalfSeries f, HalfSeries g)
    : e_(e),
      u_(std::move(u)),
      f_(std::move(f)),
      g_(std::move(g)),
      pi_series_(assemble_defining_series(e, u_, f_, g_)),
      corr_series_(pi_series_ - HalfSeries::x_power(u_.p(), u_.A(), u_.D(), 1)) {}

ModelReport validate(const LocalModel& m) {
  ModelReport rep;
  rep.e_ok = m.e() >= 2;
  const HalfSeries& u = m.u();
  const HalfSeries& f = m.f();
  const HalfSeries& g = m.g();
  rep.ring_ok = u.p() == f.p() && u.A() == f.A() && u.D() == f.D() && u.p() == g.p() &&
                u.A() == g.A() && u.D() == g.D();
  CongruenceSpec us;
  us.unit = true;
  us.one_mod_p = true;
  auto ur = check_congruences(u, us);
  rep.u_unit_ok = ur.unit_ok;
  rep.u_one_mod_p_ok = ur.one_mod_p_ok;
  CongruenceSpec fs;
  fs.vanish_below_y = m.e() + 1;
  rep.f_vanish_ok = check_congruences(f, fs).vanish_ok;
  return rep;
}

AnnulusPoint::AnnulusPoint(RamElem x) : x_(std::move(x)) {
  auto d = x_.first_digit();
  if (!d) fail(errc::indeterminate_valuation, "annulus point valuation not certified");
  v_ = *d;
  const FieldDesc& fd = x_.field();
  if (v_ == 0 || v_ >= fd.n)
    fail(errc::annulus_violation, "val(x) = " + Rat(v_, fd.n).str() + " outside (0, 1)");
}

DiscPoint::DiscPoint(RamElem t) : t_(std::move(t)) {
  auto d = t_.first_digit();
  if (!d) fail(errc::indeterminate_valuation, "disc point valuation not certified");
  v_ = *d;
  if (v_ == 0) fail(errc::ordinary_point, "val(t) = 0 lies on the ordinary locus");
}

RamElem eval_pi_raw(const LocalModel& m, const AnnulusPoint& Q) {
  return hs_eval(m.defining_series(), Q.x());
}

DiscPoint eval_pi(const LocalModel& m, const AnnulusPoint& Q) {
  return DiscPoint(eval_pi_raw(m, Q));
}

namespace {

Valuation coeff_valuation(uint64_t c, uint64_t p, uint32_t cap) {
  if (c == 0) return Valuation::infinity();
  uint32_t v = 0;
  while (v < cap && c % p == 0) {
    c /= p;
    ++v;
  }
  return Valuation::finite(Rat(v));
}

}  // namespace

NewtonData fiber_polygon(const LocalModel& m, Rat a) {
  if (a <= Rat(0)) fail(errc::out_of_range, "fiber base valuation must be positive");
  const HalfSeries& H = m.defining_series();
  uint64_t p = H.p();
  uint32_t A = H.A();
  if (A < m.e() + 2)
    fail(errc::out_of_range, "coefficient precision too small to certify the fiber polygon");

  // Clearing y = p/x multiplies by x^J, J the top y-degree present, so the
  // y^j slot lands at degree J - j with valuation val(B_j) + j, and x^i at
  // J + i. The constant slot absorbs -t, whose valuation a beats the model's
  // own constant whenever a < 1.
  uint32_t J = m.e();
  for (uint32_t j = 1; j <= H.D(); ++j)
    if (H.ycoeff(j)) J = std::max(J, j);

  NewtonData data;
  for (uint32_t j = J; j >= 1; --j) {
    Valuation bv = coeff_valuation(H.ycoeff(j), p, A);
    if (!bv.infinite) bv.q = bv.q + Rat(j);
    data.points.push_back({static_cast<long long>(J - j), bv});
  }
  Valuation c0 = coeff_valuation(H.xcoeff(0), p, A);
  Valuation cmin = c0.infinite || a < c0.q ? Valuation::finite(a) : c0;
  data.points.push_back({static_cast<long long>(J), cmin});
  for (uint32_t i = 1; i <= H.D(); ++i)
    data.points.push_back({static_cast<long long>(J + i), coeff_valuation(H.xcoeff(i), p, A)});
  return data;
}

std::vector<Rat> fiber_valuations(const LocalModel& m, Rat a) {
  auto roots = root_valuations(fiber_polygon(m, a));
  std::vector<Rat> in_annulus;
  for (const auto& r : roots)
    if (r > Rat(0) && r < Rat(1)) in_annulus.push_back(r);
  return in_annulus;
}

LocalModel rescale(const LocalModel& m, const HalfSeries& w) {
  const HalfSeries& u = m.u();
  if (w.p() != u.p() || w.A() != u.A() || w.D() != u.D())
    fail(errc::field_mismatch, "rescaling unit has different ring parameters");
  CongruenceSpec spec;
  spec.unit = true;
  if (!check_congruences(w, spec).unit_ok) fail(errc::not_a_unit, "rescaling series is not a unit");
  CongruenceSpec one;
  one.one_mod_p = true;
  if (!check_congruences(w, one).one_mod_p_ok)
    fail(errc::not_a_unit, "rescaling unit must be congruent to 1 mod p to keep the model shape");
  if (w == HalfSeries::constant(w.p(), w.A(), w.D(), 1)) return m;

  uint64_t p = w.p();
  uint32_t A = w.A(), D = w.D();
  // Work in a padded ring: anything dropped beyond D + 2A can only re-enter
  // degrees <= D through xy = p with a factor p^A, i.e. invisibly mod p^A.
  uint32_t Dw = D + 2 * A;
  HalfSeries wl = lift_degree(w, Dw);
  HalfSeries xm = HalfSeries::x_power(p, A, Dw, 1);
  HalfSeries ym = HalfSeries::y_power(p, A, Dw, 1);

  // Re-expand w in the rescaled coordinates: W solves W = w(x*W^-1, y*W),
  // which converges p-adically because w == 1 mod p.
  HalfSeries W = wl;
  for (uint32_t round = 0; round < A; ++round) {
    HalfSeries next = hs_subst(wl, xm * hs_inv(W), ym * W);
    if (next == W) break;
    W = next;
  }
  HalfSeries X = xm * hs_inv(W);
  HalfSeries Y = ym * W;

  // Same map, new coordinates: substitute x = x^*W^-1, y = y^*W into the
  // defining series, then split back into the normal shape. The new unit is
  // W * u(X, Y); everything else the substitution scatters is divisible by p
  // or pure y beyond degree e.
  HalfSeries H_hat = hs_subst(lift_degree(m.defining_series(), Dw), X, Y);
  HalfSeries u_hat = W * hs_subst(lift_degree(m.u(), Dw), X, Y);
  HalfSeries rest =
      truncate_degree(H_hat - xm - hs_pow(ym * u_hat, m.e()), D);

  HalfSeries f_hat(p, A, D);
  {
    std::vector<Monomial> tail;
    for (uint32_t j = m.e() + 1; j <= D; ++j)
      if (rest.ycoeff(j)) tail.push_back({0, j, static_cast<long long>(rest.ycoeff(j))});
    f_hat = normalize(p, A, D, tail);
    if (!rest.exact()) f_hat = mark_inexact(f_hat);
  }
  HalfSeries g_hat = div_p_exact(rest - f_hat);
  LocalModel out(m.e(), truncate_degree(u_hat, D), f_hat, g_hat);
  if (!validate(out).pass()) fail(errc::inconsistent_input, "rescaled model left the normal form");
  return out;
}

uint64_t bounded(std::mt19937_64& rng, uint64_t bound) {
  // fixed-width rejection keeps runs reproducible across platforms
  if (bound == 0) return 0;
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

namespace {

HalfSeries random_series(std::mt19937_64& rng, const ModelShape& s, bool y_side_only) {
  std::vector<Monomial> ms;
  uint64_t coeff_bound = 1;
  for (uint32_t k = 0; k < std::min<uint32_t>(s.A, 3); ++k) coeff_bound *= s.p;
  for (uint32_t i = 0; i <= (y_side_only ? 0 : s.max_degree); ++i)
    for (uint32_t j = 0; j <= s.max_degree; ++j) {
      if (i > 0 && j > 0) continue;  // normal form: no mixed monomials needed
      long long c = static_cast<long long>(bounded(rng, coeff_bound));
      if (c) ms.push_back({i, j, c});
    }
  return normalize(s.p, s.A, s.D, ms);
}

}  // namespace

LocalModel random_model(std::mt19937_64& rng, const ModelShape& s) {
  HalfSeries one = HalfSeries::constant(s.p, s.A, s.D, 1);
  HalfSeries u = one + scale(random_series(rng, s, false), static_cast<long long>(s.p));
  HalfSeries fb = random_series(rng, s, true);
  HalfSeries f = fb * HalfSeries::y_power(s.p, s.A, s.D, s.e + 1);
  HalfSeries g = random_series(rng, s, false);
  return LocalModel(s.e, u, f, g);
}

HalfSeries random_unit_series(std::mt19937_64& rng, const ModelShape& s) {
  HalfSeries base = random_series(rng, s, false);
  uint64_t c0 = 1 + bounded(rng, s.p - 1);  // prime to p
  return base - HalfSeries::constant(s.p, s.A, s.D, static_cast<long long>(base.xcoeff(0))) +
         HalfSeries::constant(s.p, s.A, s.D, static_cast<long long>(c0));
}

RamElem random_unit(std::mt19937_64& rng, const FieldDesc& fd) {
  std::vector<uint64_t> c(fd.n);
  for (auto& v : c) v = bounded(rng, fd.p_pow_A);
  if (c[0] % fd.p == 0) c[0] += 1 + bounded(rng, fd.p - 1);
  return RamElem::from_coeffs(fd, std::move(c), fd.M);
}

AnnulusPoint random_point_with_digits(std::mt19937_64& rng, const FieldDesc& fd, uint32_t k) {
  if (k == 0 || k >= fd.n)
    fail(errc::annulus_violation, "requested valuation " + Rat(k, fd.n).str() + " outside (0, 1)");
  RamElem x = shift_up(random_unit(rng, fd), k);
  return AnnulusPoint(std::move(x));
}

}  // namespace cansec
