#pragma once

#include "bispec/exact/scalar.hpp"

#include <vector>

namespace bispec {

using ScalarRow = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarRow>;

struct NullspaceResult {
  /// Right-nullspace basis, one vector per free column, entries polynomial
  /// and content-normalized (not scaled to make any entry 1).
  std::vector<ScalarRow> basis;
  /// Non-constant pivots; the basis is valid wherever none of them vanishes.
  std::vector<MPoly> assumptions;
};

/// Right nullspace of a rows x cols matrix over the parameter field, by
/// Bareiss fraction-free elimination on polynomial rows. Every returned
/// vector is checked to annihilate every row exactly.
NullspaceResult nullspace(const ScalarMatrix& matrix, std::size_t cols);

}  // namespace bispec
