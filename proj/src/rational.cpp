#include "crlie/rational.hpp"

#include <cctype>
#include <ostream>

namespace crlie {

Rational Rational::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error("Rational::parse: empty string");
  if (t[0] == '+') t.erase(t.begin());  // GMP rejects an explicit plus sign
  if (t.empty()) throw Error("Rational::parse: empty string");
  for (size_t k = 0; k < t.size(); ++k) {
    char c = t[k];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              ((c == '-' || c == '+') && (k == 0 || t[k - 1] == '/'));
    if (!ok) throw Error("Rational::parse: bad character in '" + text + "'");
  }
  try {
    mpq_class v(t);
    if (v.get_den() == 0) throw Error("Rational::parse: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
  } catch (const std::invalid_argument&) {
    throw Error("Rational::parse: cannot parse '" + text + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (e < 0) return pow(base.inv(), -e);
  Rational acc(1), b = base;
  int n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace crlie
