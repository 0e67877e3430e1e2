#pragma once

#include <map>
#include <string>
#include <vector>

#include "crlie/gauss.hpp"

namespace crlie {

/// Sparse multivariate polynomial over the Gaussian rationals in generic
/// coefficients a0, a1, .... Exponent vectors are kept with trailing zeros
/// trimmed and no zero terms are stored, so structural equality is
/// polynomial identity and is_zero() is just emptiness.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly() = default;
  MultiPoly(GaussRational constant) {  // NOLINT: implicit by design
    if (!constant.is_zero()) terms_[Exponents{}] = std::move(constant);
  }

  static MultiPoly var(int k);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, GaussRational>& terms() const { return terms_; }

  /// 1 + largest variable index that occurs (0 for constants).
  int nvars() const;
  int degree_in(int k) const;
  int total_degree() const;

  GaussRational eval(const std::vector<GaussRational>& point) const;
  /// Substitutes variable k := value.
  MultiPoly substitute(int k, const GaussRational& value) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str(const std::vector<std::string>& names = {}) const;

  friend MultiPoly conj(const MultiPoly& p);

 private:
  void add_term(Exponents e, const GaussRational& c);
  std::map<Exponents, GaussRational> terms_;
};

/// Conjugates coefficients; generic variables are treated as real.
MultiPoly conj(const MultiPoly& p);

}  // namespace crlie
