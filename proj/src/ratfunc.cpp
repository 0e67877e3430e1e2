#include "crlie/ratfunc.hpp"

namespace crlie {

RatFuncS::RatFuncS(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("RatFuncS: zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly(GaussRational(1));
    return;
  }
  UPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  GaussRational lead_inv = den_.leading().inv();
  if (!(den_.leading() == GaussRational(1))) {
    std::vector<GaussRational> n(num_.coeffs()), d(den_.coeffs());
    for (auto& c : n) c *= lead_inv;
    for (auto& c : d) c *= lead_inv;
    num_ = UPoly(std::move(n));
    den_ = UPoly(std::move(d));
  }
}

GaussRational RatFuncS::eval(const Rational& s0) const {
  GaussRational x{s0};
  GaussRational d = den_.eval(x);
  if (d.is_zero()) throw PoleError("RatFuncS::eval: pole at s = " + s0.str());
  return num_.eval(x) / d;
}

std::string RatFuncS::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFuncS conj(const RatFuncS& f) {
  auto conj_poly = [](const UPoly& p) {
    std::vector<GaussRational> v(p.coeffs());
    for (auto& c : v) c = conj(c);
    return UPoly(std::move(v));
  };
  return RatFuncS(conj_poly(f.num()), conj_poly(f.den()));
}

}  // namespace crlie
