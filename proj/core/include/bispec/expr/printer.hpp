#pragma once

#include "bispec/diffop/diffop.hpp"
#include "bispec/diffop/quasirat.hpp"
#include "bispec/matrixop/matrixop.hpp"

#include <string>

namespace bispec {

// Text forms accepted back by parse_expr (operators excepted: D has no
// grammar and is printed for reports only).
std::string to_string(const Monomial& m);
std::string to_string(const MPoly& p);
std::string to_string(const Scalar& s);
std::string to_string(const XPoly& p);
std::string to_string(const XRat& f);
std::string to_string(const QuasiRat& q);
std::string to_string(const DiffOp& op);
/// [[a, b], [c, d]]
std::string to_string(const XMatrix& m);
/// Coefficients by order, "D^r: [[...]]" joined with "; "; "0" when zero.
std::string to_string(const MatDiffOp& op);

}  // namespace bispec
