#pragma once

#include "bispec/adcond/adcond.hpp"

#include <optional>
#include <vector>

namespace bispec {

enum class ActionSide { Left, Right };

/// Square matrix of rational functions of x, row-major.
class XMatrix {
 public:
  XMatrix() = default;
  explicit XMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {}
  static XMatrix identity(int n, const XRat& diag = XRat(1));
  static XMatrix from_rows(const std::vector<std::vector<XRat>>& rows);

  int size() const { return n_; }
  const XRat& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  XRat& at(int i, int j) { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  bool is_zero() const;

  XMatrix& operator+=(const XMatrix& o);
  XMatrix& operator-=(const XMatrix& o);
  friend XMatrix operator+(XMatrix a, const XMatrix& b) { return a += b; }
  friend XMatrix operator-(XMatrix a, const XMatrix& b) { return a -= b; }
  friend XMatrix operator*(const XMatrix& a, const XMatrix& b);
  XMatrix scaled(const Scalar& c) const;
  XMatrix derivative() const;
  XMatrix substitute(VarId v, const Scalar& value) const;

 private:
  int n_ = 0;
  std::vector<XRat> entries_;
};

/// sum_r C_r(x) acting on matrix functions F: right action gives
/// sum_r F^(r) C_r, left action sum_r C_r F^(r).
class MatDiffOp {
 public:
  MatDiffOp(int n, ActionSide side) : n_(n), side_(side) {}
  MatDiffOp(std::vector<XMatrix> coeffs, ActionSide side);
  /// F -> F·Θ (right) or Θ·F (left) for an order-0 coefficient.
  static MatDiffOp multiplication(const XMatrix& m, ActionSide side);
  /// Scalar operator tensored with the identity matrix.
  static MatDiffOp embed(const DiffOp& op, int n, ActionSide side);

  int size() const { return n_; }
  ActionSide side() const { return side_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<XMatrix>& coeffs() const { return coeffs_; }
  /// Zero matrix above the order.
  XMatrix coeff(int r) const;

  MatDiffOp& operator+=(const MatDiffOp& o);
  MatDiffOp& operator-=(const MatDiffOp& o);
  friend MatDiffOp operator+(MatDiffOp a, const MatDiffOp& b) { return a += b; }
  friend MatDiffOp operator-(MatDiffOp a, const MatDiffOp& b) { return a -= b; }
  /// Every coefficient multiplied on the right by m: the operator applied,
  /// then its output multiplied by m (right action).
  MatDiffOp times_right(const XMatrix& m) const;
  MatDiffOp with_side(ActionSide side) const;
  MatDiffOp substitute(VarId v, const Scalar& value) const;
  /// Throws Error(Domain) on a size or side mismatch.
  void check(const MatDiffOp& o) const;

 private:
  void trim();
  int n_;
  ActionSide side_;
  std::vector<XMatrix> coeffs_;
};

MatDiffOp mat_compose(const MatDiffOp& a, const MatDiffOp& b);
MatDiffOp mat_commutator(const MatDiffOp& a, const MatDiffOp& b);
MatDiffOp mat_ad_power(const MatDiffOp& L, const MatDiffOp& theta, int j);
std::vector<MatDiffOp> mat_ad_powers(const MatDiffOp& L, const MatDiffOp& theta, int n);

struct MatCondition {
  /// (j, M_j) pairs; at least one M_j nonzero.
  std::vector<std::pair<int, XMatrix>> terms;
  MatDiffOp theta;
};

struct MatConditionReport {
  bool holds = false;
  MatDiffOp residual;
};

/// residual = sum_j A_j M_j, where A_j M_j has coefficients C_r M_j.
MatConditionReport verify_matrix_condition(const MatDiffOp& L, const MatCondition& cond);

struct ProbeResult {
  bool left = false;
  bool right = false;
  MatDiffOp left_residual;
  MatDiffOp right_residual;
  /// Preferred side when both pass or neither does: right.
  std::optional<ActionSide> selected() const;
};

/// Runs the condition under both action conventions.
ProbeResult convention_probe(const MatDiffOp& L, const MatCondition& cond);

}  // namespace bispec
