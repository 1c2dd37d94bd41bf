#pragma once

#include <cmath>

#include "itercert/errors.hpp"

namespace itercert {

// Moduli at or below this threshold count as zero (double-precision noise
// floor with headroom).
inline constexpr double eps_zero = 1e-14;

// Complex scalar as an explicit (re, im) pair of doubles.
struct ComplexScalar {
  double re = 0.0;
  double im = 0.0;
};

constexpr ComplexScalar operator+(ComplexScalar a, ComplexScalar b) {
  return {a.re + b.re, a.im + b.im};
}

constexpr ComplexScalar operator-(ComplexScalar a, ComplexScalar b) {
  return {a.re - b.re, a.im - b.im};
}

constexpr ComplexScalar operator-(ComplexScalar a) { return {-a.re, -a.im}; }

constexpr ComplexScalar operator*(ComplexScalar a, ComplexScalar b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

constexpr ComplexScalar operator*(double s, ComplexScalar a) {
  return {s * a.re, s * a.im};
}

constexpr bool operator==(ComplexScalar a, ComplexScalar b) {
  return a.re == b.re && a.im == b.im;
}

// |z| = sqrt(re^2 + im^2), overflow-safe.
inline double cmod(ComplexScalar z) { return std::hypot(z.re, z.im); }

constexpr ComplexScalar conj(ComplexScalar z) { return {z.re, -z.im}; }

// Smith's scaling algorithm; avoids overflow in re^2 + im^2 of the
// denominator. Throws when the denominator modulus is at the zero threshold.
inline ComplexScalar operator/(ComplexScalar a, ComplexScalar b) {
  if (cmod(b) <= eps_zero) {
    throw Error(errc::division_by_zero, "complex division by (near-)zero");
  }
  if (std::abs(b.re) >= std::abs(b.im)) {
    const double t = b.im / b.re;
    const double d = b.re + b.im * t;
    return {(a.re + a.im * t) / d, (a.im - a.re * t) / d};
  }
  const double t = b.re / b.im;
  const double d = b.re * t + b.im;
  return {(a.re * t + a.im) / d, (a.im * t - a.re) / d};
}

// z^n for natural n by binary exponentiation.
inline ComplexScalar cpow(ComplexScalar z, unsigned long n) {
  ComplexScalar result{1.0, 0.0};
  ComplexScalar base = z;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    base = base * base;
    n >>= 1UL;
  }
  return result;
}

}  // namespace itercert
