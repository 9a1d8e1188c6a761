#pragma once

#include "bispec/adcond/weights.hpp"
#include "bispec/diffop/diffop.hpp"
#include "bispec/exact/nullspace.hpp"

#include <vector>

namespace bispec {

/// A_j = ad_L^j(Θ): A_0 = Θ, A_{j+1} = [L, A_j].
DiffOp ad_power(const DiffOp& L, const DiffOp& theta, int j);
/// A_0, ..., A_n.
std::vector<DiffOp> ad_powers(const DiffOp& L, const DiffOp& theta, int n);

struct ConditionReport {
  bool holds = false;
  DiffOp residual;
  std::vector<MPoly> assumptions;
};

/// residual = sum_j w_j A_j; holds iff the residual is the zero operator.
ConditionReport verify_condition(const DiffOp& L, const DiffOp& theta, const WeightVector& w);
/// Same, reusing precomputed A_0..A_n (n >= w.top_order()).
ConditionReport verify_condition(const std::vector<DiffOp>& powers, const WeightVector& w);

struct WeightFit {
  std::vector<WeightVector> basis;
  std::vector<MPoly> assumptions;
};

/// All weight vectors supported on `orders` with sum_j w_j A_j = 0. Every
/// x-coefficient of every derivative order of the residual is one equation.
WeightFit fit_weights(const DiffOp& L, const DiffOp& theta, const std::vector<int>& orders);

struct ThetaSolution {
  std::vector<XPoly> basis;
  std::vector<MPoly> assumptions;
};

/// Polynomials Θ of degree <= deg_bound with sum_j w_j A_j(Θ) = 0. The
/// constant term is fixed to 0 unless allow_constant is set, since a
/// constant Θ commutes with everything.
ThetaSolution solve_theta(const DiffOp& L, const WeightVector& w, int deg_bound, bool allow_constant = false);

/// Linear system over unknowns u_i: sum_i u_i ops[i] = 0, one row per
/// x-coefficient of every derivative order.
ScalarMatrix operator_relation_system(const std::vector<DiffOp>& ops);

}  // namespace bispec
