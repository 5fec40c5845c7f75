#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "cansec/errors.hpp"

namespace cansec {

// Exact rational arithmetic on the small numbers that show up as valuations
// and polygon slopes. Always stored reduced with den > 0. All comparisons go
// through 128-bit cross multiplication, so there is no rounding anywhere.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) fail(errc::out_of_range, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
inline Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
inline Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
inline Rat operator-(Rat a) { return Rat(-a.num, a.den); }

inline Rat operator/(Rat a, Rat b) {
  if (b.num == 0) fail(errc::out_of_range, "rational division by zero");
  return Rat(a.num * b.den, a.den * b.num);
}

inline int rat_cmp(Rat a, Rat b) {
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

inline bool operator==(Rat a, Rat b) { return rat_cmp(a, b) == 0; }
inline bool operator!=(Rat a, Rat b) { return rat_cmp(a, b) != 0; }
inline bool operator<(Rat a, Rat b) { return rat_cmp(a, b) < 0; }
inline bool operator<=(Rat a, Rat b) { return rat_cmp(a, b) <= 0; }
inline bool operator>(Rat a, Rat b) { return rat_cmp(a, b) > 0; }
inline bool operator>=(Rat a, Rat b) { return rat_cmp(a, b) >= 0; }

// Parses "k" or "k/n". Used by the CLI for --nu style flags.
Rat parse_rat(const std::string& text);

}  // namespace cansec
