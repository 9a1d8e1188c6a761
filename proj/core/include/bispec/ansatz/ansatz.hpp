#pragma once

#include "bispec/adcond/adcond.hpp"

#include <optional>
#include <vector>

namespace bispec {

/// V = (P/Θ')'. Throws Error(Domain) "Θ′ vanishes" for constant Θ.
XRat build_V(const XPoly& theta, const XPoly& P);

/// unknown = value.
struct ForcedRelation {
  VarId unknown;
  Scalar value;
};

/// Polynomial conditions on Θ = sum_{i>=1} a_i x^i and P = sum c_i x^i for
/// -D^2 + (P/Θ')' to satisfy a given ad-condition.
struct AnsatzSystem {
  std::vector<VarId> theta_unknowns;  // a_1 .. a_{n-1}
  std::vector<VarId> p_unknowns;      // c_0 .. c_{n+1}
  /// Linear relations solved from the third coefficient from the top.
  std::vector<ForcedRelation> forced;
  /// Remaining numerator x-coefficients, with the forced relations applied.
  std::vector<MPoly> equations;
  /// Largest power of a denominator base cleared from the residual.
  int cleared_power = 0;
  /// Nonconstant pivots used while solving the forced relations.
  std::vector<MPoly> assumptions;
};

/// Needs top order n >= 2. Unknowns are named a1.., c0...
AnsatzSystem generate_system(const WeightVector& w);

/// verify_condition for L = -D^2 + V.
ConditionReport verify_candidate(const WeightVector& w, const XPoly& theta, const XRat& V);

/// P of degree <= max_degree with (P/Θ')' = V, when one exists.
std::optional<XPoly> recover_P(const XPoly& theta, const XRat& V, int max_degree);

/// Substitutes Θ's and P's coefficients for the unknowns (simultaneously)
/// into the forced relations and the equations; true when all vanish.
bool satisfies_system(const AnsatzSystem& sys, const XPoly& theta, const XPoly& P);

/// When every remaining equation is linear in the unknowns, solves them and
/// returns the general (Θ, V) with the solved unknowns eliminated.
struct GeneralSolution {
  XPoly theta;
  XRat V;
  std::vector<ForcedRelation> relations;
  std::vector<MPoly> assumptions;
};
std::optional<GeneralSolution> solve_linear_subcase(const AnsatzSystem& sys);

}  // namespace bispec
