#include "bispec/darboux/darboux.hpp"

#include "bispec/expr/printer.hpp"

namespace bispec {

XRat log_potential(const QuasiRat& q) { return log_derivative(q).derivative().scaled(Scalar(-2)); }

DarbouxResult darboux_step(const DiffOp& L, const QuasiRat& seed) {
  const auto V = L.potential();
  if (!V) throw Error(ErrorKind::Domain, "darboux_step needs an operator of the form -D^2 + V");
  const XRat ratio = eigen_ratio(L, seed);
  const auto lambda = ratio.constant_value();
  if (!lambda) {
    throw NotEigenfunctionError("seed is not an eigenfunction: (L psi)/psi = " + to_string(ratio), ratio);
  }
  XRat out = *V + log_potential(seed);
  return {DiffOp::schrodinger(out), {seed, *lambda, *V, out}};
}

std::vector<DarbouxResult> darboux_chain(const DiffOp& L, const std::vector<QuasiRat>& seeds) {
  std::vector<DarbouxResult> out;
  DiffOp cur = L;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    try {
      out.push_back(darboux_step(cur, seeds[i]));
    } catch (const NotEigenfunctionError& e) {
      throw NotEigenfunctionError("step " + std::to_string(i) + ": " + e.what(), e.ratio());
    }
    cur = out.back().op;
  }
  return out;
}

bool intertwine_check(const DiffOp& L, const DiffOp& L_new, const QuasiRat& seed) {
  const XRat w = log_derivative(seed);
  const DiffOp A = DiffOp::derivative(1) - DiffOp::multiplication(w);
  return compose(L_new, A) == compose(A, L);
}

bool same_potential(const XRat& a, const XRat& b, PotentialCompare mode) {
  if (mode == PotentialCompare::Exact) return a == b;
  return a.derivative() == b.derivative();
}

}  // namespace bispec
