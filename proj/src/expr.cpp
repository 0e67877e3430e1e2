#include "crlie/expr.hpp"

#include <algorithm>
#include <cctype>

namespace crlie {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

int find_name(const std::string& tok, const std::vector<std::string>& names) {
  for (size_t k = 0; k < names.size(); ++k)
    if (names[k] == tok) return static_cast<int>(k);
  std::string lt = lower(tok);
  for (size_t k = 0; k < names.size(); ++k)
    if (lower(names[k]) == lt) return static_cast<int>(k);
  return -1;
}

}  // namespace

Vec<GaussRational> parse_linear_combination(const std::string& text,
                                            const std::vector<std::string>& names) {
  Vec<GaussRational> out(names.size(), GaussRational(0));
  size_t p = 0;
  auto skip_ws = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  skip_ws();
  if (p == text.size()) throw Error("expr: empty expression");
  bool first = true;
  while (p < text.size()) {
    skip_ws();
    int sign = 1;
    if (text[p] == '+' || text[p] == '-') {
      sign = (text[p] == '-') ? -1 : 1;
      ++p;
      skip_ws();
    } else if (!first) {
      throw Error("expr: expected '+' or '-' near '" + text.substr(p) + "'");
    }
    first = false;
    // Optional rational magnitude.
    std::string numtext;
    while (p < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[p])) || text[p] == '/')) {
      numtext.push_back(text[p]);
      ++p;
    }
    Rational mag = numtext.empty() ? Rational(1) : Rational::parse(numtext);
    skip_ws();
    // Optional imaginary unit (only when not the start of a longer name).
    bool imag = false;
    if (p < text.size() && (text[p] == 'i' || text[p] == 'I')) {
      bool name_continues =
          p + 1 < text.size() && (std::isalnum(static_cast<unsigned char>(text[p + 1])) ||
                                  text[p + 1] == '_');
      if (!name_continues) {
        imag = true;
        ++p;
        skip_ws();
      }
    }
    if (p < text.size() && text[p] == '*') {
      ++p;
      skip_ws();
    }
    std::string tok;
    while (p < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_' || text[p] == '\'')) {
      tok.push_back(text[p]);
      ++p;
    }
    if (tok.empty()) throw Error("expr: expected a generator name in '" + text + "'");
    int idx = find_name(tok, names);
    if (idx < 0) throw Error("expr: unknown generator '" + tok + "'");
    Rational signed_mag = (sign < 0) ? -mag : mag;
    GaussRational coeff = imag ? GaussRational(Rational(0), signed_mag) : GaussRational(signed_mag);
    out[idx] += coeff;
    skip_ws();
  }
  return out;
}

}  // namespace crlie
