#include "cansec/halfring.hpp"

#include <algorithm>
#include <sstream>

namespace cansec {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t b, uint32_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

uint64_t reduce_ll(long long c, uint64_t m) {
  long long mm = static_cast<long long>(m);
  long long r = c % mm;
  if (r < 0) r += mm;
  return static_cast<uint64_t>(r);
}

}  // namespace

HalfSeries::HalfSeries(uint64_t p, uint32_t A, uint32_t D) : p_(p), A_(A), D_(D) {
  pA_ = 1;
  for (uint32_t i = 0; i < A; ++i) pA_ *= p;
  coeff_prec_ = A;
  xc_.assign(D + 1, 0);
  yc_.assign(D, 0);
}

HalfSeries HalfSeries::constant(uint64_t p, uint32_t A, uint32_t D, long long c) {
  HalfSeries f(p, A, D);
  f.xc_[0] = reduce_ll(c, f.pA_);
  return f;
}

HalfSeries HalfSeries::x_power(uint64_t p, uint32_t A, uint32_t D, uint32_t i, long long c) {
  if (i > D) fail(errc::degree_overflow, "x-degree " + std::to_string(i) + " exceeds D");
  HalfSeries f(p, A, D);
  f.xc_[i] = reduce_ll(c, f.pA_);
  return f;
}

HalfSeries HalfSeries::y_power(uint64_t p, uint32_t A, uint32_t D, uint32_t j, long long c) {
  if (j > D) fail(errc::degree_overflow, "y-degree " + std::to_string(j) + " exceeds D");
  HalfSeries f(p, A, D);
  if (j == 0)
    f.xc_[0] = reduce_ll(c, f.pA_);
  else
    f.yc_[j - 1] = reduce_ll(c, f.pA_);
  return f;
}

bool HalfSeries::is_zero() const {
  for (auto c : xc_)
    if (c) return false;
  for (auto c : yc_)
    if (c) return false;
  return true;
}

bool HalfSeries::operator==(const HalfSeries& o) const {
  return p_ == o.p_ && A_ == o.A_ && D_ == o.D_ && xc_ == o.xc_ && yc_ == o.yc_;
}

std::string HalfSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (uint32_t i = 0; i <= D_; ++i) {
    if (!xc_[i]) continue;
    if (!first) os << " + ";
    os << xc_[i];
    if (i) os << "*x^" << i;
    first = false;
  }
  for (uint32_t j = 1; j <= D_; ++j) {
    if (!yc_[j - 1]) continue;
    if (!first) os << " + ";
    os << yc_[j - 1] << "*y^" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

void add_term(HalfSeries& f, uint32_t i, uint32_t j, uint64_t c) {
  c %= f.pA_;
  if (c == 0) return;
  uint32_t m = std::min(i, j);
  if (m > 0) {
    c = mulmod(c, pow_mod(f.p_, m, f.pA_), f.pA_);
    i -= m;
    j -= m;
    if (c == 0) return;
  }
  if (j == 0) {
    if (i > f.D_) fail(errc::degree_overflow, "x-degree " + std::to_string(i) + " exceeds D");
    f.xc_[i] = (f.xc_[i] + c) % f.pA_;
  } else {
    if (j > f.D_) fail(errc::degree_overflow, "y-degree " + std::to_string(j) + " exceeds D");
    f.yc_[j - 1] = (f.yc_[j - 1] + c) % f.pA_;
  }
}

HalfSeries mark_inexact(const HalfSeries& f) {
  HalfSeries r = f;
  r.exact_ = false;
  return r;
}

HalfSeries normalize(uint64_t p, uint32_t A, uint32_t D, const std::vector<Monomial>& monomials) {
  HalfSeries f(p, A, D);
  for (const auto& m : monomials) add_term(f, m.i, m.j, reduce_ll(m.coeff, f.pA_));
  return f;
}

namespace {
void require_compatible(const HalfSeries& f, const HalfSeries& g) {
  if (f.p() != g.p() || f.A() != g.A() || f.D() != g.D())
    fail(errc::field_mismatch, "half-series have different ring parameters");
}
}  // namespace

HalfSeries operator+(const HalfSeries& f, const HalfSeries& g) {
  require_compatible(f, g);
  HalfSeries r = f;
  for (uint32_t i = 0; i <= r.D_; ++i) r.xc_[i] = (r.xc_[i] + g.xc_[i]) % r.pA_;
  for (uint32_t j = 1; j <= r.D_; ++j) r.yc_[j - 1] = (r.yc_[j - 1] + g.yc_[j - 1]) % r.pA_;
  r.coeff_prec_ = std::min(f.coeff_prec_, g.coeff_prec_);
  r.exact_ = f.exact_ && g.exact_;
  return r;
}

HalfSeries operator-(const HalfSeries& f, const HalfSeries& g) {
  require_compatible(f, g);
  HalfSeries r = f;
  for (uint32_t i = 0; i <= r.D_; ++i) r.xc_[i] = (r.xc_[i] + r.pA_ - g.xc_[i]) % r.pA_;
  for (uint32_t j = 1; j <= r.D_; ++j)
    r.yc_[j - 1] = (r.yc_[j - 1] + r.pA_ - g.yc_[j - 1]) % r.pA_;
  r.coeff_prec_ = std::min(f.coeff_prec_, g.coeff_prec_);
  r.exact_ = f.exact_ && g.exact_;
  return r;
}

HalfSeries operator*(const HalfSeries& f, const HalfSeries& g) {
  require_compatible(f, g);
  HalfSeries r(f.p(), f.A(), f.D());
  r.coeff_prec_ = std::min(f.coeff_prec_, g.coeff_prec_);
  r.exact_ = f.exact_ && g.exact_;
  uint32_t D = r.D_;
  uint64_t pA = r.pA_;

  auto term = [&](uint32_t i, uint32_t j, uint64_t c) {
    // like add_term but records truncation instead of throwing
    if (c == 0) return;
    uint32_t m = std::min(i, j);
    if (m > 0) {
      c = mulmod(c, pow_mod(r.p_, m, pA), pA);
      i -= m;
      j -= m;
      if (c == 0) return;
    }
    if (j == 0) {
      if (i > D) {
        r.exact_ = false;
        return;
      }
      r.xc_[i] = (r.xc_[i] + c) % pA;
    } else {
      if (j > D) {
        r.exact_ = false;
        return;
      }
      r.yc_[j - 1] = (r.yc_[j - 1] + c) % pA;
    }
  };

  // x-part * x-part and y-part * y-part stay pure; cross terms rewrite.
  for (uint32_t i = 0; i <= D; ++i) {
    if (!f.xc_[i]) continue;
    for (uint32_t k = 0; k <= D; ++k) {
      if (!g.xc_[k]) continue;
      term(i + k, 0, mulmod(f.xc_[i], g.xc_[k], pA));
    }
    for (uint32_t j = 1; j <= D; ++j) {
      if (!g.yc_[j - 1]) continue;
      term(i, j, mulmod(f.xc_[i], g.yc_[j - 1], pA));
    }
  }
  for (uint32_t j = 1; j <= D; ++j) {
    if (!f.yc_[j - 1]) continue;
    for (uint32_t k = 0; k <= D; ++k) {
      if (!g.xc_[k]) continue;
      term(k, j, mulmod(f.yc_[j - 1], g.xc_[k], pA));
    }
    for (uint32_t l = 1; l <= D; ++l) {
      if (!g.yc_[l - 1]) continue;
      term(0, j + l, mulmod(f.yc_[j - 1], g.yc_[l - 1], pA));
    }
  }
  return r;
}

HalfSeries scale(const HalfSeries& f, long long c) {
  HalfSeries r = f;
  uint64_t cc = reduce_ll(c, r.pA_);
  for (auto& v : r.xc_) v = mulmod(v, cc, r.pA_);
  for (auto& v : r.yc_) v = mulmod(v, cc, r.pA_);
  return r;
}

HalfSeries hs_pow(const HalfSeries& f, uint32_t e) {
  HalfSeries r = HalfSeries::constant(f.p(), f.A(), f.D(), 1);
  for (uint32_t k = 0; k < e; ++k) r = r * f;
  return r;
}

HalfSeries div_p_exact(const HalfSeries& f) {
  HalfSeries r = f;
  if (r.coeff_prec_ == 0) fail(errc::precision_exhausted, "no coefficient digits left");
  for (auto& v : r.xc_) {
    if (v % r.p_ != 0) fail(errc::not_divisible, "series coefficient not divisible by p");
    v /= r.p_;
  }
  for (auto& v : r.yc_) {
    if (v % r.p_ != 0) fail(errc::not_divisible, "series coefficient not divisible by p");
    v /= r.p_;
  }
  r.coeff_prec_ -= 1;
  return r;
}

HalfSeries with_coeff_prec(const HalfSeries& f, uint32_t prec) {
  HalfSeries r = f;
  r.coeff_prec_ = std::min(r.coeff_prec_, prec);
  return r;
}

HalfSeries hs_inv(const HalfSeries& f) {
  if (f.xcoeff(0) % f.p() == 0) fail(errc::not_a_unit, "constant term divisible by p");
  // Newton in the (p,x,y)-adic topology: v <- v(2 - f v); each step doubles
  // the order of agreement, so log2(max(D+1, A)) + 1 steps saturate.
  uint64_t c0 = f.xcoeff(0) % f.p();
  uint64_t inv0 = 1, base = c0, e = f.p() - 2;
  while (e) {
    if (e & 1) inv0 = (inv0 * base) % f.p();
    base = (base * base) % f.p();
    e >>= 1;
  }
  HalfSeries v = HalfSeries::constant(f.p(), f.A(), f.D(), static_cast<long long>(inv0));
  HalfSeries two = HalfSeries::constant(f.p(), f.A(), f.D(), 2);
  uint32_t target = std::max(f.D() + 1, f.A());
  for (uint32_t good = 1; good < target; good *= 2) v = v * (two - f * v);
  return v;
}

HalfSeries lift_degree(const HalfSeries& f, uint32_t D2) {
  if (D2 < f.D()) fail(errc::degree_overflow, "lift target below current degree");
  HalfSeries r(f.p(), f.A(), D2);
  r.coeff_prec_ = f.coeff_prec_;
  r.exact_ = f.exact_;
  std::copy(f.xc_.begin(), f.xc_.end(), r.xc_.begin());
  std::copy(f.yc_.begin(), f.yc_.end(), r.yc_.begin());
  return r;
}

HalfSeries truncate_degree(const HalfSeries& f, uint32_t D2) {
  if (D2 >= f.D()) return f;
  HalfSeries r(f.p(), f.A(), D2);
  r.coeff_prec_ = f.coeff_prec_;
  r.exact_ = f.exact_;
  std::copy(f.xc_.begin(), f.xc_.begin() + D2 + 1, r.xc_.begin());
  std::copy(f.yc_.begin(), f.yc_.begin() + D2, r.yc_.begin());
  for (uint32_t i = D2 + 1; i <= f.D(); ++i)
    if (f.xcoeff(i)) r.exact_ = false;
  for (uint32_t j = D2 + 1; j <= f.D(); ++j)
    if (f.ycoeff(j)) r.exact_ = false;
  return r;
}

HalfSeries hs_subst(const HalfSeries& f, const HalfSeries& X, const HalfSeries& Y) {
  require_compatible(X, Y);
  HalfSeries acc = HalfSeries::constant(X.p(), X.A(), X.D(), 0);
  HalfSeries xp = HalfSeries::constant(X.p(), X.A(), X.D(), 1);
  for (uint32_t i = 0; i <= f.D(); ++i) {
    if (f.xcoeff(i)) acc = acc + scale(xp, static_cast<long long>(f.xcoeff(i)));
    if (i < f.D()) xp = xp * X;
  }
  HalfSeries yp = HalfSeries::constant(X.p(), X.A(), X.D(), 1);
  for (uint32_t j = 1; j <= f.D(); ++j) {
    yp = yp * Y;
    if (f.ycoeff(j)) acc = acc + scale(yp, static_cast<long long>(f.ycoeff(j)));
  }
  if (!f.exact()) acc = mark_inexact(acc);
  return acc;
}

RamElem hs_eval(const HalfSeries& f, const RamElem& Q_x) {
  const FieldDesc& fd = Q_x.field();
  if (fd.p != f.p() || fd.A != f.A())
    fail(errc::field_mismatch, "series and point have different base parameters");
  auto d = Q_x.first_digit();
  if (!d) fail(errc::indeterminate_valuation, "point valuation not certified");
  uint32_t v = *d;
  if (v == 0 || v >= fd.n)
    fail(errc::annulus_violation, "val(x) = " + Rat(v, fd.n).str() + " outside (0, 1)");

  // Horner over the x-part, then over the y-part with y = p/x.
  RamElem xpart = RamElem::zero(fd);
  for (uint32_t i = f.D() + 1; i-- > 0;) {
    xpart = xpart * Q_x;
    if (f.xcoeff(i)) xpart = xpart + RamElem::from_integer(fd, static_cast<long long>(f.xcoeff(i)));
  }
  RamElem y = annulus_complement(Q_x);
  RamElem ypart = RamElem::zero(fd);
  for (uint32_t j = f.D(); j >= 1; --j) {
    ypart = (ypart + RamElem::from_integer(fd, static_cast<long long>(f.ycoeff(j)))) * y;
  }
  RamElem r = xpart + ypart;

  uint32_t cap = r.abs_prec();
  // coefficients only known mod p^coeff_prec contribute error >= pi^(n*prec)
  cap = std::min(cap, fd.n * f.coeff_prec());
  if (!f.exact()) {
    // discarded tail has total degree > D, valuation > D*min(v, n-v)
    cap = std::min(cap, f.D() * std::min(v, fd.n - v));
  }
  if (cap == 0) fail(errc::precision_exhausted, "tail bound leaves no certified digits; raise D");
  return truncate(r, cap);
}

CongruenceReport check_congruences(const HalfSeries& f, const CongruenceSpec& spec) {
  CongruenceReport rep;
  if (spec.y_only) {
    for (uint32_t i = 1; i <= f.D(); ++i)
      if (f.xcoeff(i)) rep.y_only_ok = false;
  }
  if (spec.vanish_below_y > 0) {
    for (uint32_t i = 1; i <= f.D(); ++i)
      if (f.xcoeff(i)) rep.vanish_ok = false;
    if (f.xcoeff(0)) rep.vanish_ok = false;
    for (uint32_t j = 1; j < spec.vanish_below_y && j <= f.D(); ++j)
      if (f.ycoeff(j)) rep.vanish_ok = false;
  }
  if (spec.unit) {
    if (f.xcoeff(0) % f.p() == 0) rep.unit_ok = false;
  }
  if (spec.one_mod_p) {
    if (f.xcoeff(0) % f.p() != 1) rep.one_mod_p_ok = false;
    for (uint32_t i = 1; i <= f.D(); ++i)
      if (f.xcoeff(i) % f.p()) rep.one_mod_p_ok = false;
    for (uint32_t j = 1; j <= f.D(); ++j)
      if (f.ycoeff(j) % f.p()) rep.one_mod_p_ok = false;
  }
  return rep;
}

}  // namespace cansec
