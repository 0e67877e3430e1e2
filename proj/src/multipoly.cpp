#include "crlie/multipoly.hpp"

#include <algorithm>

namespace crlie {

namespace {
void trim(MultiPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}
}  // namespace

MultiPoly MultiPoly::var(int k) {
  if (k < 0) throw Error("MultiPoly::var: negative index");
  MultiPoly p;
  Exponents e(k + 1, 0);
  e[k] = 1;
  p.terms_[e] = GaussRational(1);
  return p;
}

int MultiPoly::nvars() const {
  size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  return static_cast<int>(n);
}

int MultiPoly::degree_in(int k) const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    if (k < static_cast<int>(e.size())) d = std::max(d, static_cast<int>(e[k]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (unsigned x : e) t += static_cast<int>(x);
    d = std::max(d, t);
  }
  return d;
}

GaussRational MultiPoly::eval(const std::vector<GaussRational>& point) const {
  GaussRational acc(0);
  for (const auto& [e, c] : terms_) {
    if (e.size() > point.size()) throw Error("MultiPoly::eval: point too short");
    GaussRational t = c;
    for (size_t k = 0; k < e.size(); ++k)
      for (unsigned r = 0; r < e[k]; ++r) t *= point[k];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(int k, const GaussRational& value) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    GaussRational t = c;
    Exponents e2 = e;
    if (k < static_cast<int>(e2.size())) {
      for (unsigned r = 0; r < e2[k]; ++r) t *= value;
      e2[k] = 0;
    }
    out.add_term(std::move(e2), t);
  }
  return out;
}

void MultiPoly::add_term(Exponents e, const GaussRational& c) {
  if (c.is_zero()) return;
  trim(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (k < names.size()) ? names[k] : "a" + std::to_string(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    std::string cs = c.str();
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else if (cs == "-1") {
      out += "-" + mono;
    } else {
      out += "(" + cs + ")*" + mono;
    }
  }
  return out;
}

MultiPoly conj(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [e, c] : p.terms_) out.add_term(e, conj(c));
  return out;
}

}  // namespace crlie
