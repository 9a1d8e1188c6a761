#include "bispec/ansatz/ansatz.hpp"

#include "bispec/error.hpp"
#include "bispec/exact/param.hpp"

#include <algorithm>

namespace bispec {

XRat build_V(const XPoly& theta, const XPoly& P) {
  const XPoly dt = theta.derivative();
  if (dt.is_zero()) throw Error(ErrorKind::Domain, "Θ′ vanishes");
  return XRat::fraction(P, dt).derivative();
}

ConditionReport verify_candidate(const WeightVector& w, const XPoly& theta, const XRat& V) {
  return verify_condition(DiffOp::schrodinger(V), DiffOp::multiplication(XRat(theta)), w);
}

namespace {

bool mentions(const MPoly& p, VarId v) { return p.degree_in(v) > 0; }

// Degree of p in the unknowns jointly.
int unknown_degree(const MPoly& p, const std::vector<VarId>& unknowns) {
  int best = 0;
  for (const auto& t : p.terms()) {
    int d = 0;
    for (const auto& f : t.mono.factors()) {
      if (std::find(unknowns.begin(), unknowns.end(), f.var) != unknowns.end()) d += static_cast<int>(f.exp);
    }
    best = std::max(best, d);
  }
  return best;
}

// Coefficient of unknown u in a linear p, and p with u removed.
std::pair<MPoly, MPoly> split_linear(const MPoly& p, VarId u) {
  std::vector<Term> with;
  std::vector<Term> without;
  for (const auto& t : p.terms()) {
    if (t.mono.exponent(u) > 0) {
      with.push_back({t.mono.divided_by(Monomial::variable(u)), t.coef});
    } else {
      without.push_back(t);
    }
  }
  return {MPoly::from_terms(std::move(with)), MPoly::from_terms(std::move(without))};
}

void push_equation(std::vector<MPoly>& eqs, MPoly p) {
  if (p.is_zero()) return;
  p = p.primitive();
  for (const auto& e : eqs) {
    if (e == p) return;
  }
  eqs.push_back(std::move(p));
}

MPoly apply_relations(const MPoly& p, const std::vector<ForcedRelation>& rels) {
  Scalar s(p);
  for (const auto& r : rels) s = s.substitute(r.unknown, r.value);
  return s.num();
}

// Gaussian elimination on the linear equations, solving for unknowns in
// `preference` order. Returns nullopt if some equation is nonlinear.
std::optional<std::vector<ForcedRelation>> eliminate(std::vector<MPoly> eqs, const std::vector<VarId>& preference,
                                                     std::vector<MPoly>& assumptions) {
  std::vector<ForcedRelation> rels;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    MPoly e = apply_relations(eqs[i], rels);
    if (e.is_zero()) continue;
    if (unknown_degree(e, preference) > 1) return std::nullopt;
    std::optional<VarId> pick;
    for (VarId u : preference) {
      if (!mentions(e, u)) continue;
      const auto [coef, rest] = split_linear(e, u);
      if (!pick || coef.is_constant()) pick = u;
      if (coef.is_constant()) break;
    }
    if (!pick) return std::nullopt;  // inconsistent: nonzero equation free of unknowns
    const auto [coef, rest] = split_linear(e, *pick);
    if (!coef.is_constant()) assumptions.push_back(coef.primitive());
    const Scalar value = Scalar::fraction(-rest, coef);
    for (auto& r : rels) r.value = r.value.substitute(*pick, value);
    rels.push_back({*pick, value});
  }
  return rels;
}

std::vector<MPoly> coefficient_equations(const XRat& c, int& cleared) {
  std::vector<MPoly> out;
  for (const auto& f : c.factors()) cleared = std::max(cleared, -f.exp);
  const XPoly num = c.numerator();
  for (int d = 0; d <= num.degree(); ++d) push_equation(out, num.coeff(d).num());
  return out;
}

}  // namespace

AnsatzSystem generate_system(const WeightVector& w) {
  const int n = w.top_order();
  if (n < 2) throw Error(ErrorKind::Domain, "generate_system needs a condition of top order >= 2");
  AnsatzSystem sys;
  std::vector<Scalar> tc(static_cast<std::size_t>(n), Scalar());
  for (int i = 1; i <= n - 1; ++i) {
    const VarId v = param("a" + std::to_string(i));
    sys.theta_unknowns.push_back(v);
    tc[static_cast<std::size_t>(i)] = Scalar::variable(v);
  }
  std::vector<Scalar> pc;
  for (int i = 0; i <= n + 1; ++i) {
    const VarId v = param("c" + std::to_string(i));
    sys.p_unknowns.push_back(v);
    pc.push_back(Scalar::variable(v));
  }
  const XPoly theta(std::move(tc));
  const XPoly P(std::move(pc));
  const DiffOp residual = verify_candidate(w, theta, build_V(theta, P)).residual;

  std::vector<MPoly> top_eqs;
  std::vector<MPoly> rest;
  for (int r = 0; r <= residual.order(); ++r) {
    auto eqs = coefficient_equations(residual.coeff(r), sys.cleared_power);
    auto& dst = r == n - 2 ? top_eqs : rest;
    for (auto& e : eqs) push_equation(dst, std::move(e));
  }
  std::vector<VarId> pref(sys.p_unknowns.rbegin(), sys.p_unknowns.rend());
  auto forced = eliminate(top_eqs, pref, sys.assumptions);
  if (!forced) {
    // Not linear in P: keep everything as equations.
    for (auto& e : top_eqs) push_equation(rest, std::move(e));
  } else {
    sys.forced = std::move(*forced);
  }
  for (const auto& e : rest) push_equation(sys.equations, apply_relations(e, sys.forced));
  return sys;
}

std::optional<XPoly> recover_P(const XPoly& theta, const XRat& V, int max_degree) {
  const XPoly dt = theta.derivative();
  if (dt.is_zero()) throw Error(ErrorKind::Domain, "Θ′ vanishes");
  // (P/Θ')' = V  <=>  P'Θ' - PΘ'' - VΘ'^2 = 0; unknowns c_0..c_m and a scale t on V.
  std::vector<DiffOp> cols;
  const XPoly ddt = dt.derivative();
  for (int i = 0; i <= max_degree; ++i) {
    const XPoly xi = XPoly::monomial(i, Scalar(1));
    cols.push_back(DiffOp::multiplication(XRat(xi.derivative() * dt - xi * ddt)));
  }
  cols.push_back(DiffOp::multiplication(-(V * XRat(dt * dt))));
  const auto ns = nullspace(operator_relation_system(cols), cols.size());
  for (const auto& v : ns.basis) {
    const Scalar& t = v.back();
    if (t.is_zero()) continue;
    std::vector<Scalar> coeffs;
    for (int i = 0; i <= max_degree; ++i) coeffs.push_back(v[static_cast<std::size_t>(i)] / t);
    XPoly P(std::move(coeffs));
    if (build_V(theta, P) == V) return P;
  }
  return std::nullopt;
}

bool satisfies_system(const AnsatzSystem& sys, const XPoly& theta, const XPoly& P) {
  std::vector<std::pair<VarId, Scalar>> values;
  for (std::size_t i = 0; i < sys.theta_unknowns.size(); ++i) values.push_back({sys.theta_unknowns[i], theta.coeff(static_cast<int>(i) + 1)});
  for (std::size_t i = 0; i < sys.p_unknowns.size(); ++i) values.push_back({sys.p_unknowns[i], P.coeff(static_cast<int>(i))});
  if (theta.degree() > static_cast<int>(sys.theta_unknowns.size()) || P.degree() >= static_cast<int>(sys.p_unknowns.size())) {
    return false;
  }
  // Two-phase renaming so values may mention the unknowns' names.
  std::vector<std::pair<VarId, VarId>> temps;
  for (std::size_t i = 0; i < values.size(); ++i) temps.push_back({values[i].first, param("_u" + std::to_string(i))});
  auto subst = [&](Scalar s) {
    for (const auto& [u, t] : temps) s = s.substitute(u, Scalar::variable(t));
    for (std::size_t i = 0; i < values.size(); ++i) s = s.substitute(temps[i].second, values[i].second);
    return s;
  };
  for (const auto& f : sys.forced) {
    if (!(subst(Scalar::variable(f.unknown)) - subst(f.value)).is_zero()) return false;
  }
  for (const auto& e : sys.equations) {
    if (!subst(Scalar(e)).is_zero()) return false;
  }
  return true;
}

std::optional<GeneralSolution> solve_linear_subcase(const AnsatzSystem& sys) {
  std::vector<VarId> pref(sys.p_unknowns.rbegin(), sys.p_unknowns.rend());
  pref.insert(pref.end(), sys.theta_unknowns.rbegin(), sys.theta_unknowns.rend());
  GeneralSolution sol;
  sol.assumptions = sys.assumptions;
  auto rels = eliminate(sys.equations, pref, sol.assumptions);
  if (!rels) return std::nullopt;
  sol.relations = sys.forced;
  for (auto& r : sol.relations) {
    for (const auto& s : *rels) r.value = r.value.substitute(s.unknown, s.value);
  }
  sol.relations.insert(sol.relations.end(), rels->begin(), rels->end());
  auto value_of = [&](VarId v) {
    Scalar s = Scalar::variable(v);
    for (const auto& r : sol.relations) s = s.substitute(r.unknown, r.value);
    return s;
  };
  std::vector<Scalar> tc{Scalar()};
  for (VarId v : sys.theta_unknowns) tc.push_back(value_of(v));
  std::vector<Scalar> pc;
  for (VarId v : sys.p_unknowns) pc.push_back(value_of(v));
  sol.theta = XPoly(std::move(tc));
  sol.V = build_V(sol.theta, XPoly(std::move(pc)));
  return sol;
}

}  // namespace bispec
