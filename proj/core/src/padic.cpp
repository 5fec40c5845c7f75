#include "cansec/padic.hpp"

#include <algorithm>
#include <sstream>

namespace cansec {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_prime: return "non_prime";
    case errc::zero_degree: return "zero_degree";
    case errc::field_mismatch: return "field_mismatch";
    case errc::indeterminate_valuation: return "indeterminate_valuation";
    case errc::precision_exhausted: return "precision_exhausted";
    case errc::degree_overflow: return "degree_overflow";
    case errc::annulus_violation: return "annulus_violation";
    case errc::degenerate_input: return "degenerate_input";
    case errc::not_a_unit: return "not_a_unit";
    case errc::not_divisible: return "not_divisible";
    case errc::out_of_region: return "out_of_region";
    case errc::ordinary_point: return "ordinary_point";
    case errc::out_of_range: return "out_of_range";
    case errc::inconsistent_input: return "inconsistent_input";
    case errc::grid_error: return "grid_error";
    case errc::config_error: return "config_error";
  }
  return "unknown";
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text));
    return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(errc::config_error, "cannot parse rational '" + text + "'");
  }
}

namespace {

bool is_prime_u64(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;  // both < m <= 2^62, no overflow
  return s >= m ? s - m : s;
}

uint64_t submod(uint64_t a, uint64_t b, uint64_t m) { return a >= b ? a - b : a + m - b; }

uint32_t vp(uint64_t c, uint64_t p, uint32_t cap) {
  uint32_t v = 0;
  while (v < cap && c % p == 0) {
    c /= p;
    ++v;
  }
  return v;
}

uint64_t pow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Digits known for coefficient index i at element precision `prec` pi-digits.
uint32_t known_p_digits(const FieldDesc& fd, uint32_t i, uint32_t prec) {
  if (prec <= i) return 0;
  uint32_t k = (prec - i + fd.n - 1) / fd.n;
  return std::min(k, fd.A);
}

}  // namespace

FieldDesc make_field(uint64_t p, uint32_t n, uint32_t A) {
  if (!is_prime_u64(p)) fail(errc::non_prime, "p = " + std::to_string(p) + " is not prime");
  if (n < 1) fail(errc::zero_degree, "ramification index must be >= 1");
  if (A < 1) fail(errc::out_of_range, "coefficient precision must be >= 1");
  unsigned __int128 m = 1;
  for (uint32_t i = 0; i < A; ++i) {
    m *= p;
    if (m > (static_cast<unsigned __int128>(1) << 62))
      fail(errc::out_of_range, "p^A exceeds the 2^62 coefficient-modulus bound");
  }
  FieldDesc fd;
  fd.p = p;
  fd.n = n;
  fd.A = A;
  fd.p_pow_A = static_cast<uint64_t>(m);
  fd.M = n * A;
  return fd;
}

void RamElem::canonicalize() {
  for (uint32_t i = 0; i < fd_.n; ++i) {
    uint32_t k = known_p_digits(fd_, i, prec_);
    if (k >= fd_.A) continue;
    c_[i] %= pow_u64(fd_.p, k);
  }
}

RamElem RamElem::zero(const FieldDesc& fd) {
  RamElem r;
  r.fd_ = fd;
  r.c_.assign(fd.n, 0);
  r.prec_ = fd.M;
  return r;
}

RamElem RamElem::one(const FieldDesc& fd) { return from_integer(fd, 1); }

RamElem RamElem::from_integer(const FieldDesc& fd, long long v) {
  RamElem r = zero(fd);
  long long m = static_cast<long long>(fd.p_pow_A);
  long long c = ((v % m) + m) % m;
  r.c_[0] = static_cast<uint64_t>(c);
  return r;
}

RamElem RamElem::pi_power(const FieldDesc& fd, uint32_t k) {
  RamElem r = zero(fd);
  uint32_t q = k / fd.n, i = k % fd.n;
  if (q >= fd.A) return r;  // pi^k == 0 mod p^A
  r.c_[i] = pow_u64(fd.p, q) % fd.p_pow_A;
  return r;
}

RamElem RamElem::from_coeffs(const FieldDesc& fd, std::vector<uint64_t> coeffs,
                             uint32_t abs_prec) {
  if (coeffs.size() != fd.n) fail(errc::out_of_range, "coefficient vector has wrong length");
  RamElem r;
  r.fd_ = fd;
  r.c_ = std::move(coeffs);
  for (auto& c : r.c_) c %= fd.p_pow_A;
  r.prec_ = std::min(abs_prec, fd.M);
  r.canonicalize();
  return r;
}

std::optional<uint32_t> RamElem::first_digit() const {
  std::optional<uint32_t> best;
  for (uint32_t i = 0; i < fd_.n; ++i) {
    if (c_[i] == 0) continue;
    uint32_t pos = vp(c_[i], fd_.p, fd_.A) * fd_.n + i;
    if (!best || pos < *best) best = pos;
  }
  if (best && *best < prec_) return best;
  return std::nullopt;
}

std::string RamElem::str() const {
  std::ostringstream os;
  os << "[";
  for (uint32_t i = 0; i < fd_.n; ++i) {
    if (i) os << " ";
    os << c_[i];
  }
  os << "] + O(pi^" << prec_ << ")";
  return os.str();
}

namespace {
void require_same_field(const RamElem& a, const RamElem& b) {
  if (a.field() != b.field()) fail(errc::field_mismatch, "operands live in different fields");
}
}  // namespace

RamElem operator+(const RamElem& a, const RamElem& b) {
  require_same_field(a, b);
  RamElem r = a;
  for (uint32_t i = 0; i < r.fd_.n; ++i) r.c_[i] = addmod(r.c_[i], b.c_[i], r.fd_.p_pow_A);
  r.prec_ = std::min(a.prec_, b.prec_);
  r.canonicalize();
  return r;
}

RamElem operator-(const RamElem& a, const RamElem& b) {
  require_same_field(a, b);
  RamElem r = a;
  for (uint32_t i = 0; i < r.fd_.n; ++i) r.c_[i] = submod(r.c_[i], b.c_[i], r.fd_.p_pow_A);
  r.prec_ = std::min(a.prec_, b.prec_);
  r.canonicalize();
  return r;
}

RamElem operator-(const RamElem& a) {
  RamElem r = a;
  for (uint32_t i = 0; i < r.fd_.n; ++i) r.c_[i] = submod(0, r.c_[i], r.fd_.p_pow_A);
  r.canonicalize();
  return r;
}

RamElem operator*(const RamElem& a, const RamElem& b) {
  require_same_field(a, b);
  const FieldDesc& fd = a.fd_;
  RamElem r = RamElem::zero(fd);
  // pi^i * pi^j with i + j = k or k + n; the wrap picks up one factor of p.
  for (uint32_t i = 0; i < fd.n; ++i) {
    if (a.c_[i] == 0) continue;
    for (uint32_t j = 0; j < fd.n; ++j) {
      if (b.c_[j] == 0) continue;
      uint64_t prod = mulmod(a.c_[i], b.c_[j], fd.p_pow_A);
      uint32_t s = i + j;
      if (s >= fd.n) {
        prod = mulmod(prod, fd.p % fd.p_pow_A, fd.p_pow_A);
        s -= fd.n;
      }
      r.c_[s] = addmod(r.c_[s], prod, fd.p_pow_A);
    }
  }
  r.prec_ = std::min(a.prec_, b.prec_);
  r.canonicalize();
  return r;
}

Valuation valuation(const RamElem& a) {
  auto d = a.first_digit();
  if (d) return Valuation::finite(Rat(*d, a.field().n));
  if (a.abs_prec() == a.field().M) return Valuation::infinity();
  fail(errc::indeterminate_valuation,
       "all digits vanish below precision pi^" + std::to_string(a.abs_prec()));
}

Rat valuation_lower_bound(const RamElem& a) {
  auto d = a.first_digit();
  uint32_t v = d ? *d : a.abs_prec();
  return Rat(v, a.field().n);
}

bool has_valuation_digits(const RamElem& a, uint32_t v) {
  auto d = a.first_digit();
  return d && *d == v;
}

RamElem invert(const RamElem& a) {
  const FieldDesc& fd = a.field();
  if (a.abs_prec() == 0) fail(errc::precision_exhausted, "no digits to invert");
  auto d = a.first_digit();
  if (!d) fail(errc::indeterminate_valuation, "cannot certify a unit for inversion");
  if (*d != 0)
    fail(errc::not_a_unit,
         "element has valuation " + Rat(*d, fd.n).str() + "; write it as pi^k * unit first");

  // Newton: x <- x(2 - ax) doubles pi-adic precision per step.
  uint64_t c0 = a.coeffs()[0] % fd.p;
  uint64_t inv0 = 1;
  {  // inverse of c0 mod p by Fermat
    uint64_t base = c0 % fd.p, e = fd.p - 2;
    while (e) {
      if (e & 1) inv0 = (inv0 * base) % fd.p;
      base = (base * base) % fd.p;
      e >>= 1;
    }
  }
  RamElem x = RamElem::from_integer(fd, static_cast<long long>(inv0));
  x = truncate(x, a.abs_prec());
  RamElem two = RamElem::from_integer(fd, 2);
  uint32_t good = 1;
  while (good < a.abs_prec()) {
    x = x * (two - a * x);
    good *= 2;
  }
  return x;
}

RamElem truncate(const RamElem& a, uint32_t k) {
  RamElem r = a;
  r.prec_ = std::min(a.prec_, k);
  r.canonicalize();
  return r;
}

RamElem representative(const RamElem& a) {
  RamElem r = a;  // canonical form already has zeros above abs_prec
  r.prec_ = a.fd_.M;
  return r;
}

namespace {

// Base-pi digit expansion of length prec (digits beyond prec are unknown).
std::vector<uint32_t> to_digits(const RamElem& a) {
  const FieldDesc& fd = a.field();
  std::vector<uint32_t> d(a.abs_prec(), 0);
  for (uint32_t i = 0; i < fd.n; ++i) {
    uint64_t c = a.coeffs()[i];
    for (uint32_t k = 0; c != 0 && k < fd.A; ++k) {
      uint32_t pos = k * fd.n + i;
      if (pos < d.size()) d[pos] = static_cast<uint32_t>(c % fd.p);
      c /= fd.p;
    }
  }
  return d;
}

RamElem from_digits(const FieldDesc& fd, const std::vector<uint32_t>& d, uint32_t prec) {
  std::vector<uint64_t> c(fd.n, 0);
  for (uint32_t pos = std::min<size_t>(d.size(), fd.M); pos-- > 0;) {
    if (d[pos] == 0) continue;
    uint32_t i = pos % fd.n, k = pos / fd.n;
    c[i] = (c[i] + mulmod(d[pos], pow_u64(fd.p, k) % fd.p_pow_A, fd.p_pow_A)) % fd.p_pow_A;
  }
  return RamElem::from_coeffs(fd, std::move(c), prec);
}

}  // namespace

RamElem shift_up(const RamElem& a, uint32_t k) {
  const FieldDesc& fd = a.field();
  auto d = to_digits(a);
  std::vector<uint32_t> s(std::min<uint32_t>(a.abs_prec() + k, fd.M), 0);
  for (uint32_t pos = 0; pos < d.size(); ++pos)
    if (pos + k < s.size()) s[pos + k] = d[pos];
  return from_digits(fd, s, static_cast<uint32_t>(s.size()));
}

RamElem shift_down(const RamElem& a, uint32_t k) {
  if (a.abs_prec() < k)
    fail(errc::indeterminate_valuation, "cannot certify divisibility by pi^" + std::to_string(k));
  auto d = to_digits(a);
  for (uint32_t pos = 0; pos < k; ++pos)
    if (d[pos] != 0) fail(errc::not_divisible, "element not divisible by pi^" + std::to_string(k));
  std::vector<uint32_t> s(d.begin() + k, d.end());
  return from_digits(a.field(), s, a.abs_prec() - k);
}

bool is_zero_mod(const RamElem& a, uint32_t k) {
  if (a.abs_prec() < k)
    fail(errc::indeterminate_valuation,
         "precision pi^" + std::to_string(a.abs_prec()) + " below modulus pi^" + std::to_string(k));
  auto d = a.first_digit();
  return !d || *d >= k;
}

bool congruent_mod(const RamElem& a, const RamElem& b, uint32_t k) { return is_zero_mod(a - b, k); }

RamElem annulus_complement(const RamElem& x) {
  const FieldDesc& fd = x.field();
  auto d = x.first_digit();
  if (!d) fail(errc::indeterminate_valuation, "annulus parameter valuation not certified");
  uint32_t v = *d;
  if (v == 0 || v >= fd.n)
    fail(errc::annulus_violation, "val(x) = " + Rat(v, fd.n).str() + " outside (0, 1)");
  RamElem unit = shift_down(x, v);  // precision M' - v; invert rejects if that hits zero
  return shift_up(invert(unit), fd.n - v);
}

}  // namespace cansec
