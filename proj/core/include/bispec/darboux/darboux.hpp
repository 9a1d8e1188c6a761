#pragma once

#include "bispec/diffop/quasirat.hpp"
#include "bispec/error.hpp"

#include <vector>

namespace bispec {

struct DarbouxStep {
  QuasiRat seed;
  Scalar eigenvalue;
  XRat input_V;
  XRat output_V;
};

struct DarbouxResult {
  DiffOp op;
  DarbouxStep step;
};

/// Raised when a seed is not an eigenfunction; carries (L psi)/psi.
class NotEigenfunctionError : public Error {
 public:
  NotEigenfunctionError(const std::string& what, XRat ratio)
      : Error(ErrorKind::NotEigenfunction, what), ratio_(std::move(ratio)) {}
  const XRat& ratio() const { return ratio_; }

 private:
  XRat ratio_;
};

/// -D^2 + V  ->  -D^2 + V - 2 w', w = psi'/psi. The eigenvalue is recomputed
/// from the seed.
DarbouxResult darboux_step(const DiffOp& L, const QuasiRat& seed);
/// Successive steps; an error names the failing step index (0-based).
std::vector<DarbouxResult> darboux_chain(const DiffOp& L, const std::vector<QuasiRat>& seeds);

/// L_new ∘ (D - w) = (D - w) ∘ L as operators.
bool intertwine_check(const DiffOp& L, const DiffOp& L_new, const QuasiRat& seed);

enum class PotentialCompare { UpToConstant, Exact };

/// Compares potentials exactly or through their derivatives.
bool same_potential(const XRat& a, const XRat& b, PotentialCompare mode = PotentialCompare::UpToConstant);

/// -2 (log q)''.
XRat log_potential(const QuasiRat& q);

}  // namespace bispec
