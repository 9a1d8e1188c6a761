#pragma once

#include "bispec/diffop/diffop.hpp"

#include <optional>
#include <vector>

namespace bispec {

/// A = factor * B, when B is nonzero; nullopt otherwise or when not proportional.
std::optional<Scalar> proportionality(const DiffOp& a, const DiffOp& b);

/// A_{order} = factor * A_{order-2}.
struct StepRelation {
  int order;
  Scalar factor;
};

struct HeisenbergReport {
  /// A_0 .. A_N.
  std::vector<DiffOp> terms;
  /// Every detected A_{j+2} = c A_j, for j = 0 .. N-2.
  std::vector<StepRelation> relations;
  /// ω² used for the closed form cosh(ωt) A_0 + sinh(ωt) A_1 / ω, whose
  /// t^n/n! coefficient is ω^n A_0 (n even) or ω^{n-1} A_1 (n odd).
  std::optional<Scalar> omega_squared;
  /// matches[n]: A_n equals the closed-form coefficient (index 0 and 1 are
  /// trivially true). Empty when no ω² is known.
  std::vector<bool> matches;
};

/// e^{tL} Θ e^{-tL} = sum_n t^n/n! A_n, up to N. Without an explicit ω²,
/// ω² is taken from a detected relation A_3 = ω² A_1.
HeisenbergReport heisenberg_series(const DiffOp& L, const DiffOp& theta, int N,
                                   std::optional<Scalar> omega_squared = std::nullopt);

}  // namespace bispec
