#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skein {

using i64 = long long;

/// Exact coefficient a + b·A in Z[A]/(A^2 + 1), A a primitive 4th root of 1.
/// Every identity in scope holds over this ring and specializes by ring maps.
struct CycCoeff {
  i64 re = 0;
  i64 im = 0;

  friend CycCoeff operator+(CycCoeff x, CycCoeff y) { return {x.re + y.re, x.im + y.im}; }
  friend CycCoeff operator-(CycCoeff x, CycCoeff y) { return {x.re - y.re, x.im - y.im}; }
  friend CycCoeff operator-(CycCoeff x) { return {-x.re, -x.im}; }
  friend CycCoeff operator*(CycCoeff x, CycCoeff y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  CycCoeff& operator+=(CycCoeff y) { return *this = *this + y; }
  CycCoeff& operator-=(CycCoeff y) { return *this = *this - y; }
  CycCoeff& operator*=(CycCoeff y) { return *this = *this * y; }
  friend bool operator==(CycCoeff, CycCoeff) = default;

  bool is_zero() const { return re == 0 && im == 0; }
};

inline constexpr CycCoeff cyc_zero{0, 0};
inline constexpr CycCoeff cyc_one{1, 0};
inline constexpr CycCoeff cyc_a{0, 1};

/// Integer class mod 4, canonical value in {0,1,2,3}.
struct Z4 {
  int v = 0;
  Z4() = default;
  explicit Z4(i64 x) : v(static_cast<int>(((x % 4) + 4) % 4)) {}
  friend Z4 operator+(Z4 a, Z4 b) { return Z4(i64{a.v} + b.v); }
  friend Z4 operator-(Z4 a, Z4 b) { return Z4(i64{a.v} - b.v); }
  friend Z4 operator-(Z4 a) { return Z4(-i64{a.v}); }
  friend bool operator==(Z4, Z4) = default;
};

/// A^e for e in Z/4Z: 1, A, -1, -A. a_pow(e)·a_pow(-e) = 1.
inline CycCoeff a_pow(Z4 e) {
  switch (e.v) {
    case 0: return cyc_one;
    case 1: return cyc_a;
    case 2: return -cyc_one;
    default: return -cyc_a;
  }
}
inline CycCoeff a_pow(i64 e) { return a_pow(Z4(e)); }

/// Exact rational, reduced, den > 0. Carries lk values in (1/r)Z and lf entries.
struct Frac {
  i64 num = 0;
  i64 den = 1;

  Frac() = default;
  Frac(i64 n, i64 d = 1) {
    if (d == 0) throw std::invalid_argument("Frac: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
  }

  friend Frac operator+(Frac x, Frac y) { return Frac(x.num * y.den + y.num * x.den, x.den * y.den); }
  friend Frac operator-(Frac x, Frac y) { return Frac(x.num * y.den - y.num * x.den, x.den * y.den); }
  friend Frac operator-(Frac x) { return Frac(-x.num, x.den); }
  friend Frac operator*(Frac x, Frac y) { return Frac(x.num * y.num, x.den * y.den); }
  friend bool operator==(Frac, Frac) = default;

  bool is_integer() const { return den == 1; }
  /// Fractional part in [0,1).
  Frac mod_one() const {
    i64 n = num % den;
    if (n < 0) n += den;
    return Frac(n, den);
  }
};

/// Element of (1/den)·Z/4Z, stored fully reduced with num in [0, 4·den).
/// The reduced representative with minimal positive denominator is unique,
/// so equality is structural.
struct QuarterFrac {
  i64 num = 0;
  i64 den = 1;

  QuarterFrac() = default;
  QuarterFrac(i64 n, i64 d) {
    if (d <= 0) throw std::invalid_argument("QuarterFrac: denominator must be positive");
    i64 g = std::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    i64 m = 4 * d;
    n %= m;
    if (n < 0) n += m;
    num = n;
    den = d;
  }
  explicit QuarterFrac(Frac f) : QuarterFrac(f.num, f.den) {}
  explicit QuarterFrac(Z4 e) : QuarterFrac(e.v, 1) {}

  friend QuarterFrac operator+(QuarterFrac x, QuarterFrac y) {
    i64 c = x.den / std::gcd(x.den, y.den) * y.den;
    return QuarterFrac(x.num * (c / x.den) + y.num * (c / y.den), c);
  }
  friend QuarterFrac operator-(QuarterFrac x) { return QuarterFrac(-x.num, x.den); }
  friend QuarterFrac operator-(QuarterFrac x, QuarterFrac y) { return x + (-y); }
  friend QuarterFrac operator*(i64 k, QuarterFrac x) { return QuarterFrac(k * x.num, x.den); }
  friend bool operator==(QuarterFrac, QuarterFrac) = default;

  bool is_integral() const { return den == 1; }
  Z4 as_z4() const {
    if (den != 1) throw std::domain_error("QuarterFrac: value " + std::to_string(num) + "/" +
                                          std::to_string(den) + " is not an integer class");
    return Z4(num);
  }
};

std::string to_string(CycCoeff c);      // "a+bA", e.g. "0-1A"
std::string to_string(Z4 e);
std::string to_string(QuarterFrac q);   // "num/den", e.g. "16/5"
std::string to_string(Frac f);          // "n" or "n/d"

CycCoeff parse_cyc(std::string_view s);
QuarterFrac parse_quarter(std::string_view s);
Frac parse_frac(std::string_view s);

}  // namespace skein
