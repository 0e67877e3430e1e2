#pragma once

#include <iosfwd>
#include <string>

#include "crlie/rational.hpp"

namespace crlie {

/// Gaussian rational a + b*i with exact rational components.
struct GaussRational {
  Rational re, im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GaussRational(long n) : re(n) {}                 // NOLINT: implicit by design
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  /// |x|^2 = x * conj(x), always a nonnegative rational.
  Rational norm2() const { return re * re + im * im; }

  GaussRational inv() const {
    Rational n = norm2();
    if (n.is_zero()) throw Error("GaussRational: division by zero");
    return {re / n, -im / n};
  }

  std::string str() const;

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inv(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
  // Lexicographic order; used for canonical container keys, not as a field order.
  friend bool operator<(const GaussRational& a, const GaussRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline GaussRational conj(const GaussRational& x) { return {x.re, -x.im}; }

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

}  // namespace crlie
