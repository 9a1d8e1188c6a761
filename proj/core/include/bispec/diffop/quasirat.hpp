#pragma once

#include "bispec/diffop/diffop.hpp"

#include <optional>
#include <vector>

namespace bispec {

/// prod base_i(x)^exponent_i * exp(exp_part(x)); exponents may be symbolic.
/// Only products are supported; the logarithmic derivative is what matters.
class QuasiRat {
 public:
  struct Factor {
    XPoly base;
    Scalar exponent;
  };

  QuasiRat() = default;
  QuasiRat(std::vector<Factor> factors, XPoly exp_part);
  static QuasiRat from_xrat(const XRat& r);
  static QuasiRat exponential(XPoly q) { return QuasiRat({}, std::move(q)); }

  const std::vector<Factor>& factors() const { return factors_; }
  const XPoly& exp_part() const { return exp_part_; }

  QuasiRat operator*(const QuasiRat& o) const;
  QuasiRat pow(const Scalar& e) const;
  QuasiRat substitute(VarId v, const Scalar& value) const;

 private:
  std::vector<Factor> factors_;
  XPoly exp_part_;
};

/// sum e_i b_i'/b_i + q'. Throws on a zero base.
XRat log_derivative(const QuasiRat& psi);

/// (L psi)/psi when it is independent of x, computed through w = psi'/psi:
/// for L = c2 D^2 + c1 D + c0 it equals c2 (w' + w^2) + c1 w + c0.
std::optional<Scalar> is_eigenfunction(const DiffOp& l, const QuasiRat& psi);
/// The same ratio without the constancy check.
XRat eigen_ratio(const DiffOp& l, const QuasiRat& psi);

}  // namespace bispec
