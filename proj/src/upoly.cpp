#include "crlie/upoly.hpp"

#include <algorithm>

namespace crlie {

void UPoly::trim() {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

UPoly UPoly::monomial(GaussRational c, int deg) {
  if (c.is_zero()) return UPoly();
  std::vector<GaussRational> v(deg + 1, GaussRational(0));
  v[deg] = std::move(c);
  return UPoly(std::move(v));
}

const GaussRational& UPoly::leading() const {
  if (coef_.empty()) throw Error("UPoly::leading on zero polynomial");
  return coef_.back();
}

GaussRational UPoly::eval(const GaussRational& x) const {
  GaussRational acc(0);
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool UPoly::is_real() const {
  return std::all_of(coef_.begin(), coef_.end(), [](const GaussRational& c) { return c.is_real(); });
}

std::pair<UPoly, UPoly> UPoly::real_imag() const {
  std::vector<GaussRational> re, im;
  re.reserve(coef_.size());
  im.reserve(coef_.size());
  for (const auto& c : coef_) {
    re.emplace_back(c.re);
    im.emplace_back(c.im);
  }
  return {UPoly(std::move(re)), UPoly(std::move(im))};
}

UPoly UPoly::operator-() const {
  std::vector<GaussRational> v(coef_);
  for (auto& c : v) c = -c;
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<GaussRational> v(std::max(a.coef_.size(), b.coef_.size()), GaussRational(0));
  for (size_t k = 0; k < a.coef_.size(); ++k) v[k] += a.coef_[k];
  for (size_t k = 0; k < b.coef_.size(); ++k) v[k] += b.coef_[k];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<GaussRational> v(a.coef_.size() + b.coef_.size() - 1, GaussRational(0));
  for (size_t i = 0; i < a.coef_.size(); ++i)
    for (size_t j = 0; j < b.coef_.size(); ++j) v[i + j] += a.coef_[i] * b.coef_[j];
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  GaussRational inv = leading().inv();
  std::vector<GaussRational> v(coef_);
  for (auto& c : v) c *= inv;
  return UPoly(std::move(v));
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    GaussRational c = coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += (cs == "-1") ? "-" : ((cs.find('+') != std::string::npos || (cs.find('-', 1) != std::string::npos)) ? "(" + cs + ")*" : cs + "*");
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error("UPoly divmod: division by zero polynomial");
  UPoly rem = a, quot;
  GaussRational lead_inv = b.leading().inv();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int d = rem.degree() - b.degree();
    GaussRational c = rem.leading() * lead_inv;
    UPoly t = UPoly::monomial(c, d);
    quot += t;
    rem -= t * b;
  }
  return {quot, rem};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

namespace {

// Divisors of |n| for small n; n must fit into long for root enumeration.
std::vector<mpz_class> divisors(const mpz_class& n_in) {
  mpz_class n = ::abs(n_in);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      mpz_class q = n / d;
      if (q != d) out.push_back(q);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p_in) {
  std::vector<Rational> roots;
  if (p_in.is_zero()) throw Error("rational_roots: zero polynomial");
  if (!p_in.is_real()) throw Error("rational_roots: expects a real polynomial");
  // Strip powers of the variable: x = 0 is a root iff the constant term vanishes.
  UPoly p = p_in;
  bool zero_root = false;
  while (p.coeff(0).is_zero() && !p.is_zero()) {
    zero_root = true;
    std::vector<GaussRational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
    p = UPoly(std::move(shifted));
  }
  if (zero_root) roots.emplace_back(0);
  if (p.degree() <= 0) return roots;
  // Clear denominators to get an integer polynomial.
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_class d = c.re.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::vector<mpz_class> ic;
  ic.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) ic.push_back(c.re.num() * (den_lcm / c.re.den()));
  const mpz_class& a0 = ic.front();
  const mpz_class& an = ic.back();
  for (const auto& r : divisors(a0)) {
    for (const auto& s : divisors(an)) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Rational cand(mpq_class(sign * r, s));
        if (p.eval(GaussRational(cand)).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace crlie
