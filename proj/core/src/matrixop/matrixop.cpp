#include "bispec/matrixop/matrixop.hpp"

#include "bispec/error.hpp"

namespace bispec {

XMatrix XMatrix::identity(int n, const XRat& diag) {
  XMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = diag;
  return m;
}

XMatrix XMatrix::from_rows(const std::vector<std::vector<XRat>>& rows) {
  const int n = static_cast<int>(rows.size());
  XMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorKind::Domain, "matrix must be square");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool XMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

XMatrix& XMatrix::operator+=(const XMatrix& o) {
  if (n_ != o.n_) throw Error(ErrorKind::Domain, "matrix size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

XMatrix& XMatrix::operator-=(const XMatrix& o) {
  if (n_ != o.n_) throw Error(ErrorKind::Domain, "matrix size mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

XMatrix operator*(const XMatrix& a, const XMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::Domain, "matrix size mismatch");
  XMatrix out(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    for (int k = 0; k < a.n_; ++k) {
      const XRat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

XMatrix XMatrix::scaled(const Scalar& c) const {
  XMatrix out = *this;
  for (auto& e : out.entries_) e = e.scaled(c);
  return out;
}

XMatrix XMatrix::derivative() const {
  XMatrix out = *this;
  for (auto& e : out.entries_) e = e.derivative();
  return out;
}

XMatrix XMatrix::substitute(VarId v, const Scalar& value) const {
  XMatrix out = *this;
  for (auto& e : out.entries_) e = e.substitute(v, value);
  return out;
}

MatDiffOp::MatDiffOp(std::vector<XMatrix> coeffs, ActionSide side)
    : n_(coeffs.empty() ? 0 : coeffs.front().size()), side_(side), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.size() != n_) throw Error(ErrorKind::Domain, "coefficient matrices differ in size");
  }
  trim();
}

MatDiffOp MatDiffOp::multiplication(const XMatrix& m, ActionSide side) { return MatDiffOp({m}, side); }

MatDiffOp MatDiffOp::embed(const DiffOp& op, int n, ActionSide side) {
  MatDiffOp out(n, side);
  for (const auto& c : op.coeffs()) out.coeffs_.push_back(XMatrix::identity(n, c));
  out.trim();
  return out;
}

XMatrix MatDiffOp::coeff(int r) const {
  if (r < 0 || r > order()) return XMatrix(n_);
  return coeffs_[static_cast<std::size_t>(r)];
}

void MatDiffOp::check(const MatDiffOp& o) const {
  if (n_ != o.n_) throw Error(ErrorKind::Domain, "matrix operator size mismatch");
  if (side_ != o.side_) throw Error(ErrorKind::Domain, "matrix operator action side mismatch");
}

void MatDiffOp::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

MatDiffOp& MatDiffOp::operator+=(const MatDiffOp& o) {
  check(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), XMatrix(n_));
  for (std::size_t r = 0; r < o.coeffs_.size(); ++r) coeffs_[r] += o.coeffs_[r];
  trim();
  return *this;
}

MatDiffOp& MatDiffOp::operator-=(const MatDiffOp& o) {
  check(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), XMatrix(n_));
  for (std::size_t r = 0; r < o.coeffs_.size(); ++r) coeffs_[r] -= o.coeffs_[r];
  trim();
  return *this;
}

MatDiffOp MatDiffOp::times_right(const XMatrix& m) const {
  MatDiffOp out(n_, side_);
  for (const auto& c : coeffs_) out.coeffs_.push_back(c * m);
  out.trim();
  return out;
}

MatDiffOp MatDiffOp::with_side(ActionSide side) const {
  MatDiffOp out = *this;
  out.side_ = side;
  return out;
}

MatDiffOp MatDiffOp::substitute(VarId v, const Scalar& value) const {
  MatDiffOp out(n_, side_);
  for (const auto& c : coeffs_) out.coeffs_.push_back(c.substitute(v, value));
  out.trim();
  return out;
}

namespace {

Scalar binomial(int n, int k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(Rat(b));
}

}  // namespace

MatDiffOp mat_compose(const MatDiffOp& a, const MatDiffOp& b) {
  a.check(b);
  MatDiffOp out(a.size(), a.side());
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<XMatrix> coeffs(static_cast<std::size_t>(a.order() + b.order() + 1), XMatrix(a.size()));
  for (int s = 0; s <= b.order(); ++s) {
    XMatrix bd = b.coeffs()[static_cast<std::size_t>(s)];
    for (int i = 0; i <= a.order(); ++i) {
      if (!bd.is_zero()) {
        for (int r = i; r <= a.order(); ++r) {
          const XMatrix& ar = a.coeffs()[static_cast<std::size_t>(r)];
          if (ar.is_zero()) continue;
          const XMatrix prod = a.side() == ActionSide::Right ? bd * ar : ar * bd;
          coeffs[static_cast<std::size_t>(r + s - i)] += prod.scaled(binomial(r, i));
        }
      }
      if (i < a.order()) bd = bd.derivative();
    }
  }
  return MatDiffOp(std::move(coeffs), a.side());
}

MatDiffOp mat_commutator(const MatDiffOp& a, const MatDiffOp& b) { return mat_compose(a, b) - mat_compose(b, a); }

std::vector<MatDiffOp> mat_ad_powers(const MatDiffOp& L, const MatDiffOp& theta, int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "ad power needs j >= 0");
  std::vector<MatDiffOp> out{theta};
  for (int j = 1; j <= n; ++j) out.push_back(mat_commutator(L, out.back()));
  return out;
}

MatDiffOp mat_ad_power(const MatDiffOp& L, const MatDiffOp& theta, int j) { return mat_ad_powers(L, theta, j).back(); }

MatConditionReport verify_matrix_condition(const MatDiffOp& L, const MatCondition& cond) {
  int top = 0;
  bool any = false;
  for (const auto& [j, m] : cond.terms) {
    if (m.size() != L.size()) throw Error(ErrorKind::Domain, "condition matrix size mismatch");
    top = std::max(top, j);
    any = any || !m.is_zero();
  }
  if (!any) throw Error(ErrorKind::Domain, "matrix condition has no nonzero coefficient");
  const auto powers = mat_ad_powers(L, cond.theta.with_side(L.side()), top);
  MatConditionReport rep{false, MatDiffOp(L.size(), L.side())};
  for (const auto& [j, m] : cond.terms) rep.residual += powers[static_cast<std::size_t>(j)].times_right(m);
  rep.holds = rep.residual.is_zero();
  return rep;
}

std::optional<ActionSide> ProbeResult::selected() const {
  if (right) return ActionSide::Right;
  if (left) return ActionSide::Left;
  return std::nullopt;
}

ProbeResult convention_probe(const MatDiffOp& L, const MatCondition& cond) {
  ProbeResult out{false, false, MatDiffOp(L.size(), ActionSide::Left), MatDiffOp(L.size(), ActionSide::Right)};
  auto l = verify_matrix_condition(L.with_side(ActionSide::Left), cond);
  auto r = verify_matrix_condition(L.with_side(ActionSide::Right), cond);
  out.left = l.holds;
  out.right = r.holds;
  out.left_residual = std::move(l.residual);
  out.right_residual = std::move(r.residual);
  return out;
}

}  // namespace bispec
