#pragma once

#include <mpfr.h>

#include <utility>

#include "oscint/precision.hpp"

namespace oscint {

/// Complex scalar over Real. Arithmetic runs at the precision of fresh Real
/// temporaries, i.e. the active ScopedPrecision.
struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0) {}
  explicit Complex(long v) : re(v), im(0) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Real& s) { return a /= s; }

inline Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

/// i*z without multiplications.
inline Complex mul_i(const Complex& z) { return {-z.im, z.re}; }

inline Real abs(const Complex& z) {
  Real r(0);
  mpfr_hypot(r.backend().data(), z.re.backend().data(), z.im.backend().data(),
             MPFR_RNDN);
  return r;
}

inline Real abs_sq(const Complex& z) { return z.re * z.re + z.im * z.im; }

/// e^{i theta} via a single mpfr_sin_cos call.
inline Complex unit_phase(const Real& theta) {
  Real s(0), c(0);
  mpfr_sin_cos(s.backend().data(), c.backend().data(), theta.backend().data(),
               MPFR_RNDN);
  return {std::move(c), std::move(s)};
}

inline Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  Complex u = unit_phase(z.im);
  return {m * u.re, m * u.im};
}

/// Principal branch; im in (-pi, pi].
inline Complex log(const Complex& z) {
  Real mag = abs(z);
  Real arg(0);
  mpfr_atan2(arg.backend().data(), z.im.backend().data(),
             z.re.backend().data(), MPFR_RNDN);
  return {boost::multiprecision::log(mag), std::move(arg)};
}

/// z^n by binary exponentiation; n may be negative.
inline Complex pow_int(Complex z, long n) {
  if (n < 0) {
    Real d = abs_sq(z);
    z = {z.re / d, -z.im / d};
    n = -n;
  }
  Complex acc(1L);
  while (n > 0) {
    if (n & 1) acc *= z;
    z *= z;
    n >>= 1;
  }
  return acc;
}

}  // namespace oscint
