#include "crlie/gauss.hpp"

#include <ostream>

namespace crlie {

std::string GaussRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag = (im == Rational(1)) ? "i" : (im == Rational(-1)) ? "-i" : im.str() + "i";
  if (re.is_zero()) return imag;
  if (im.sign() > 0) return re.str() + "+" + imag;
  return re.str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

}  // namespace crlie
