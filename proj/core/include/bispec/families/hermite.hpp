#pragma once

#include "bispec/diffop/diffop.hpp"

namespace bispec {

/// Physicists' Hermite polynomial: H_0 = 1, H_1 = 2x,
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
XPoly hermite_poly(int k);

struct ScalarPair {
  DiffOp L;
  XPoly theta;
};

/// L = -D^2 + x^2 - 2 (log tau)'', tau given as a polynomial.
DiffOp hermite_type_operator(const XPoly& tau);

/// L = -D^2 + x^2 - 2 (log H_k)'', Θ = H_{k+1}.
ScalarPair exceptional_hermite(int k);

/// tau = 4x^4 + 3, Θ = 4x^5 + 15x.
ScalarPair hermite_partition_22();

}  // namespace bispec
