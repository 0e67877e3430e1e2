#pragma once

#include <array>

#include "crlie/cr.hpp"
#include "crlie/report.hpp"
#include "crlie/sugrp.hpp"

namespace crlie {

struct ModifyError : Error {
  using Error::Error;
};

/// Bracket modification data: commuting derivations of h together with a map
/// tau from h into their span. tau is stored as a (derivations x dim h)
/// coefficient matrix.
struct Modification {
  const LieAlgebra* h = nullptr;
  std::vector<Mat<GaussRational>> a_action;
  Mat<GaussRational> tau;
};

/// New algebra on the same space with [X,Y]_tau = [X,Y] + tau(X)Y - tau(Y)X.
/// Verifies that each action entry is a derivation, that they commute, and
/// that the modified bracket satisfies Jacobi; an invalid tau (for instance
/// one that does not kill the modified derived algebra) fails the Jacobi
/// postcondition and raises ModifyError.
LieAlgebra modify(const Modification& mod);

struct FlatModelCandidate {
  LieAlgebra source;
  Mat<GaussRational> omega0;  // model-dim x source-dim
};

enum class FlatVerdict { flat, not_injective, not_homomorphism, not_complement };

struct FlatReport {
  FlatVerdict verdict = FlatVerdict::flat;
  std::optional<std::pair<int, int>> witness;  // source pair for the bracket defect

  bool flat() const { return verdict == FlatVerdict::flat; }
};
std::string verdict_name(FlatVerdict v);

/// Flat-model check: omega0 injective, a bracket homomorphism, and its
/// image a vector-space complement of h0.
FlatReport is_flat_model(const FlatModelCandidate& cand, const SUModel& model);

enum class PhiKind { su2, sl2R, heis3 };
PhiKind phi_kind_from_name(const std::string& name);
std::string phi_kind_name(PhiKind k);

/// The one-parameter family of su(2,1)-valued forms over the deformation
/// parameter t = s^2, built from the calibrated block normalization.
FlatModelCandidate phi_family(PhiKind kind, const Rational& s, const SUModel& model);

struct PhiFormal {
  LieAlgebra source;
  Mat<RatFuncS> omega;
};
PhiFormal phi_family_formal(PhiKind kind, const SUModel& model);

struct FlatLocus {
  bool all_s = false;
  std::vector<Rational> roots;  // positive rational parameter values
};

/// Exact parameter locus { s > 0 : curvature(Phi_{s^2}) = 0 }, decided by
/// common rational roots of the curvature coefficient numerators.
FlatLocus flat_locus(PhiKind kind, const SUModel& model);

/// Calibration data for the family normalization: the diagonal rescale of
/// the source basis (signs and positive scales) that makes the unit-normalized
/// blocks close under brackets at t = 1.
struct FamilyCalibration {
  std::array<int, 3> signs{1, 1, 1};
  std::array<Rational, 3> scales{Rational(1), Rational(1), Rational(1)};
  int flat_sign_patterns = 0;   // sign patterns flat at these scales
  bool pure_sign_flat = false;  // whether any sign pattern is flat unscaled
};

/// Exhaustive search over the 8 sign patterns and a small positive scale
/// grid; returns the canonical (all-plus) solution.
FamilyCalibration calibrate_family(PhiKind kind, const SUModel& model);

/// Induced CR structure on the source of a flat candidate: D is the omega0
/// preimage of g^{-1} + h0 and J lifts multiplication by i on the u-block.
CRStructure flat_pullback_cr(const FlatModelCandidate& cand, const SUModel& model);

struct SubalgebraReport {
  bool closed = false;
  bool complement = false;
  int radical_dim = 0;
  std::string type;  // semisimple | solvable | mixed
  bool consistent = true;
};
SubalgebraReport subalgebra_report(const SUModel& model, const Subspace& L);

/// Modification graph inside the model: span of h_k + tau(h_k) over the
/// Heisenberg basis (model order Z, X_1.., Y_1..), with tau a coefficient
/// matrix over (U, V_1..V_m).
Subspace modification_graph(const SUModel& model, const Mat<GaussRational>& tau);

/// Abstract modification of the model's Heisenberg part by the same tau.
LieAlgebra modification_algebra(const SUModel& model, const Mat<GaussRational>& tau);

/// Classification table for the three-dimensional candidates over su(2,1).
CheckReport classify3_harness(const SUModel& model);

/// Verification rows for the Borel modification constructions at p + q = m.
CheckReport thm4_harness(const SUModel& model, uint64_t seed = 42);

}  // namespace crlie
