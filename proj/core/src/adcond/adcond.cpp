#include "bispec/adcond/adcond.hpp"

#include "bispec/error.hpp"
#include "bispec/exact/nullspace.hpp"

#include <algorithm>
#include <set>

namespace bispec {

std::vector<DiffOp> ad_powers(const DiffOp& L, const DiffOp& theta, int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "ad power needs j >= 0");
  DerivativeTable lt(L);
  std::vector<DiffOp> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back(theta);
  for (int j = 1; j <= n; ++j) out.push_back(commutator(lt, out.back()));
  return out;
}

DiffOp ad_power(const DiffOp& L, const DiffOp& theta, int j) { return ad_powers(L, theta, j).back(); }

ConditionReport verify_condition(const std::vector<DiffOp>& powers, const WeightVector& w) {
  if (static_cast<int>(powers.size()) <= w.top_order()) {
    throw Error(ErrorKind::Internal, "not enough ad powers for weight vector");
  }
  ConditionReport rep;
  for (const auto& [j, a] : w.weights()) rep.residual += powers[static_cast<std::size_t>(j)].scaled(a);
  rep.holds = rep.residual.is_zero();
  return rep;
}

ConditionReport verify_condition(const DiffOp& L, const DiffOp& theta, const WeightVector& w) {
  return verify_condition(ad_powers(L, theta, w.top_order()), w);
}

ScalarMatrix operator_relation_system(const std::vector<DiffOp>& ops) {
  int top = -1;
  for (const auto& op : ops) top = std::max(top, op.order());
  ScalarMatrix rows;
  for (int r = 0; r <= top; ++r) {
    std::vector<XRat> cs;
    cs.reserve(ops.size());
    for (const auto& op : ops) cs.push_back(op.coeff(r));
    const auto nums = over_common_denominator(cs);
    int deg = -1;
    for (const auto& n : nums) deg = std::max(deg, n.degree());
    for (int d = 0; d <= deg; ++d) {
      ScalarRow row;
      row.reserve(nums.size());
      bool any = false;
      for (const auto& n : nums) {
        row.push_back(n.coeff(d));
        any = any || !row.back().is_zero();
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return rows;
}

WeightFit fit_weights(const DiffOp& L, const DiffOp& theta, const std::vector<int>& orders) {
  if (orders.empty()) throw Error(ErrorKind::Domain, "fit_weights needs at least one order");
  if (std::set<int>(orders.begin(), orders.end()).size() != orders.size()) {
    throw Error(ErrorKind::Domain, "fit_weights orders must be distinct");
  }
  for (int j : orders) {
    if (j < 0) throw Error(ErrorKind::Domain, "fit_weights orders must be nonnegative");
  }
  const int top = *std::max_element(orders.begin(), orders.end());
  const auto powers = ad_powers(L, theta, top);
  std::vector<DiffOp> cols;
  for (int j : orders) cols.push_back(powers[static_cast<std::size_t>(j)]);
  auto ns = nullspace(operator_relation_system(cols), cols.size());

  WeightFit fit;
  fit.assumptions = std::move(ns.assumptions);
  for (const auto& v : ns.basis) {
    std::map<int, Scalar> w;
    for (std::size_t i = 0; i < orders.size(); ++i) w.emplace(orders[i], v[i]);
    WeightVector wv(w);
    if (!verify_condition(powers, wv).holds) {
      throw Error(ErrorKind::Internal, "fitted weight vector fails verification");
    }
    fit.basis.push_back(std::move(wv));
  }
  return fit;
}

ThetaSolution solve_theta(const DiffOp& L, const WeightVector& w, int deg_bound, bool allow_constant) {
  if (deg_bound < 1) throw Error(ErrorKind::Domain, "solve_theta needs deg_bound >= 1");
  const int lo = allow_constant ? 0 : 1;
  std::vector<DiffOp> cols;
  for (int i = lo; i <= deg_bound; ++i) {
    const auto theta = DiffOp::multiplication(XRat(XPoly::monomial(i, Scalar(1))));
    cols.push_back(verify_condition(L, theta, w).residual);
  }
  auto ns = nullspace(operator_relation_system(cols), cols.size());

  ThetaSolution sol;
  sol.assumptions = std::move(ns.assumptions);
  for (const auto& v : ns.basis) {
    std::vector<Scalar> coeffs(static_cast<std::size_t>(lo), Scalar());
    coeffs.insert(coeffs.end(), v.begin(), v.end());
    XPoly theta(std::move(coeffs));
    if (!verify_condition(L, DiffOp::multiplication(XRat(theta)), w).holds) {
      throw Error(ErrorKind::Internal, "solved theta fails verification");
    }
    sol.basis.push_back(std::move(theta));
  }
  return sol;
}

}  // namespace bispec
