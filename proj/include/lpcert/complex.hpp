#ifndef LPCERT_COMPLEX_HPP
#define LPCERT_COMPLEX_HPP

#include "lpcert/real.hpp"

namespace lpcert {

/// Minimal complex type over Real. std::complex is only specified for the
/// builtin floating types, so the few operations needed here are spelled out.
struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0) {}
  explicit Complex(double r) : re(r), im(0) {}

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
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }

inline Real norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return sqrt(norm2(a)); }
inline Complex conj(const Complex& a) { return {a.re, -a.im}; }

/// a / b. The MPFR exponent range makes the naive formula safe.
inline Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }

/// Principal argument in (-pi, pi].
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }

inline Complex polar(const Real& mag, const Real& angle) {
  return {mag * cos(angle), mag * sin(angle)};
}

inline Complex unit_circle(const Real& angle) { return {cos(angle), sin(angle)}; }

inline Real pi() { return 4 * atan(Real(1)); }

}  // namespace lpcert

#endif
