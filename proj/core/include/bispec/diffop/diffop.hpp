#pragma once

#include "bispec/diffop/xrat.hpp"

#include <vector>

namespace bispec {

/// Differential operator sum_r c_r(x) D^r in right normal form (all
/// coefficients to the left of the derivatives).
class DiffOp {
 public:
  DiffOp() = default;
  /// Coefficients indexed by derivative order.
  explicit DiffOp(std::vector<XRat> coeffs);
  /// Order-0 multiplication operator f(x)·.
  static DiffOp multiplication(XRat f);
  /// D^n.
  static DiffOp derivative(int n = 1);
  /// -D^2 + V.
  static DiffOp schrodinger(XRat potential);

  /// -1 for the zero operator.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const XRat& coeff(int r) const;
  const std::vector<XRat>& coeffs() const { return coeffs_; }

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  /// Left multiplication by a function or scalar.
  DiffOp scaled(const XRat& f) const;
  DiffOp scaled(const Scalar& c) const;

  /// When the operator is -D^2 + V, the potential V.
  std::optional<XRat> potential() const;

  DiffOp substitute(VarId v, const Scalar& value) const;

 private:
  void trim();
  std::vector<XRat> coeffs_;
};

/// Derivatives f, f', f'', ... of each coefficient, reused across many
/// compositions with the same right-hand operator.
class DerivativeTable {
 public:
  explicit DerivativeTable(const DiffOp& op) : op_(op) {}
  /// The n-th derivative of coefficient r.
  const XRat& get(int r, int n);
  const DiffOp& op() const { return op_; }

 private:
  DiffOp op_;
  std::vector<std::vector<XRat>> cache_;
};

/// (A∘B)(f) = A(B(f)), by the Leibniz rule.
DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp compose(const DiffOp& a, DerivativeTable& b);
/// [A, B] = A∘B - B∘A.
DiffOp commutator(const DiffOp& a, const DiffOp& b);
DiffOp commutator(DerivativeTable& a, const DiffOp& b);
/// sum_r c_r(x) f^(r)(x).
XRat apply(const DiffOp& a, const XRat& f);
/// Canonical coefficient comparison of A - B.
bool equals(const DiffOp& a, const DiffOp& b);
inline bool operator==(const DiffOp& a, const DiffOp& b) { return equals(a, b); }

/// Independent zero test: an operator of order <= r is zero iff it
/// annihilates 1, x, ..., x^r.
bool annihilates_monomials(const DiffOp& a);

}  // namespace bispec
