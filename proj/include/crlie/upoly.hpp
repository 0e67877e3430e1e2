#pragma once

#include <string>
#include <vector>

#include "crlie/gauss.hpp"

namespace crlie {

/// Dense univariate polynomial over the Gaussian rationals. Coefficients are
/// stored low degree first with no trailing zeros; the zero polynomial has an
/// empty coefficient list and degree -1.
class UPoly {
 public:
  UPoly() = default;
  UPoly(GaussRational c) { coef_.push_back(std::move(c)); trim(); }  // NOLINT
  explicit UPoly(std::vector<GaussRational> coef) : coef_(std::move(coef)) { trim(); }

  static UPoly var() { return UPoly(std::vector<GaussRational>{GaussRational(0), GaussRational(1)}); }
  static UPoly monomial(GaussRational c, int deg);

  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  bool is_zero() const { return coef_.empty(); }
  bool is_one() const { return coef_.size() == 1 && coef_[0] == GaussRational(1); }
  const GaussRational& leading() const;
  GaussRational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coef_.size())) ? coef_[k] : GaussRational(0);
  }
  const std::vector<GaussRational>& coeffs() const { return coef_; }

  GaussRational eval(const GaussRational& x) const;

  /// True when every coefficient is real.
  bool is_real() const;
  /// Splits into (real part, imaginary part) with rational coefficients.
  std::pair<UPoly, UPoly> real_imag() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coef_ == b.coef_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Scales so the leading coefficient becomes 1. Zero stays zero.
  UPoly monic() const;

  std::string str(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<GaussRational> coef_;
};

/// Exact quotient/remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// All rational roots of p (p nonzero), found exactly.
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace crlie
