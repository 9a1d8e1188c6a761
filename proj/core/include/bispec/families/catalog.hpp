#pragma once

#include "bispec/diffop/quasirat.hpp"
#include "bispec/families/hermite.hpp"
#include "bispec/matrixop/matrixop.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bispec {

struct ScalarEntry {
  DiffOp L;
  XPoly theta;
  WeightVector weights;
  /// Polynomial under the logarithm of the potential, when known.
  std::optional<XPoly> tau;
};

struct MatrixEntry {
  MatDiffOp L;
  MatCondition condition;
};

struct CatalogEntry {
  std::string id;
  /// Quoted anchor phrase of the source display.
  std::string anchor;
  std::vector<std::string> params;
  /// The claim: the condition holds (true) or is stated not to hold (false).
  bool claim_holds = true;
  /// Printed data suspected to be wrong; outcome is diagnostic.
  bool flagged = false;
  std::string note;
  std::variant<ScalarEntry, MatrixEntry> body;

  bool is_matrix() const { return std::holds_alternative<MatrixEntry>(body); }
  const ScalarEntry& scalar() const { return std::get<ScalarEntry>(body); }
  const MatrixEntry& matrix() const { return std::get<MatrixEntry>(body); }
};

/// All entries, sorted by id. Built once; safe for concurrent reads.
const std::vector<CatalogEntry>& catalog();
/// Throws Error(UnknownId).
const CatalogEntry& find_entry(const std::string& id);

/// Laguerre chain potentials with symbolic k; step in 0..3.
const CatalogEntry& laguerre_catalog(int step);
/// The classical Laguerre operator in terms of m, and the seed
/// x^{m+1/2} L_1^m(-x^2/4) e^{x^2/8} with m = -(k^2+4)/4.
XRat laguerre_classical_potential_m();
QuasiRat laguerre_step1_seed();
/// Seeds for three successive steps from the classical operator. Later seeds
/// are x^e tau_new/tau_old e^{x^2/8}; tau_3 takes its constant term as
/// given (default -k^6 + 12k^4 - 32k^2).
std::vector<QuasiRat> laguerre_chain_seeds(const std::string& tau3_constant = "-k^6 + 12*k^4 - 32*k^2");

/// Equation ids: A2-4A0, A3-16A1, A5-5A3+4A1, A4-40A2+144A0; 1-based index.
/// Throws Error(UnknownId).
std::pair<XPoly, XRat> ansatz_solution_catalog(const std::string& equation, int index);
WeightVector ansatz_equation_weights(const std::string& equation);

/// Θ' is a scalar multiple of τ. False when the entry has no τ.
bool theta_tau_check(const CatalogEntry& entry);

struct EntryCheck {
  /// The condition itself holds (zero residual).
  bool condition_holds = false;
  /// The entry's claim agrees with the computation.
  bool verdict = false;
  std::optional<DiffOp> residual;
  std::optional<MatDiffOp> matrix_residual;
};

EntryCheck check_entry(const CatalogEntry& entry, ActionSide side = ActionSide::Right);

}  // namespace bispec
