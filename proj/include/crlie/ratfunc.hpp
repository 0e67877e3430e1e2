#pragma once

#include <string>
#include <utility>

#include "crlie/upoly.hpp"

namespace crlie {

struct PoleError : Error {
  using Error::Error;
};

/// Rational function in a formal parameter s over the Gaussian rationals,
/// kept in canonical form: gcd(num, den) = 1 and den monic. The parameter is
/// treated as real, so conjugation acts on coefficients only.
class RatFuncS {
 public:
  RatFuncS() : num_(), den_(GaussRational(1)) {}
  RatFuncS(GaussRational c) : num_(std::move(c)), den_(GaussRational(1)) {}  // NOLINT
  RatFuncS(UPoly num, UPoly den);
  explicit RatFuncS(UPoly num) : num_(std::move(num)), den_(GaussRational(1)) {}

  static RatFuncS var() { return RatFuncS(UPoly::var()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }

  RatFuncS inv() const {
    if (is_zero()) throw Error("RatFuncS: division by zero");
    return RatFuncS(den_, num_);
  }

  /// Exact substitution s = s0; throws PoleError when s0 is a pole.
  GaussRational eval(const Rational& s0) const;

  std::string str(const std::string& var = "s") const;

  RatFuncS operator-() const { return RatFuncS(-num_, den_); }
  friend RatFuncS operator+(const RatFuncS& a, const RatFuncS& b) {
    return RatFuncS(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFuncS operator-(const RatFuncS& a, const RatFuncS& b) { return a + (-b); }
  friend RatFuncS operator*(const RatFuncS& a, const RatFuncS& b) {
    return RatFuncS(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFuncS operator/(const RatFuncS& a, const RatFuncS& b) { return a * b.inv(); }
  RatFuncS& operator+=(const RatFuncS& o) { return *this = *this + o; }
  RatFuncS& operator-=(const RatFuncS& o) { return *this = *this - o; }
  RatFuncS& operator*=(const RatFuncS& o) { return *this = *this * o; }
  RatFuncS& operator/=(const RatFuncS& o) { return *this = *this / o; }

  friend bool operator==(const RatFuncS& a, const RatFuncS& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFuncS& a, const RatFuncS& b) { return !(a == b); }

 private:
  UPoly num_, den_;
};

RatFuncS conj(const RatFuncS& f);

}  // namespace crlie
