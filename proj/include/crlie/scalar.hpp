#pragma once

#include <string>

#include "crlie/gauss.hpp"
#include "crlie/multipoly.hpp"
#include "crlie/ratfunc.hpp"

namespace crlie {

/// Embeds a Gaussian-rational constant into a wider scalar ring. Forms and
/// brackets are generic over the scalar; structure constants stay Gaussian
/// rational and get promoted on use.
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<GaussRational> {
  static GaussRational promote(const GaussRational& c) { return c; }
  static GaussRational conjugate(const GaussRational& c) { return conj(c); }
  static std::string str(const GaussRational& c) { return c.str(); }
};

template <>
struct ScalarOps<RatFuncS> {
  static RatFuncS promote(const GaussRational& c) { return RatFuncS(c); }
  static RatFuncS conjugate(const RatFuncS& c) { return conj(c); }
  static std::string str(const RatFuncS& c) { return c.str(); }
};

template <>
struct ScalarOps<MultiPoly> {
  static MultiPoly promote(const GaussRational& c) { return MultiPoly(c); }
  static MultiPoly conjugate(const MultiPoly& c) { return conj(c); }
  static std::string str(const MultiPoly& c) { return c.str(); }
};

template <class K>
K promote_scalar(const GaussRational& c) {
  return ScalarOps<K>::promote(c);
}

}  // namespace crlie
