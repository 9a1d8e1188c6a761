#include "bispec/diffop/quasirat.hpp"

#include "bispec/error.hpp"

namespace bispec {

QuasiRat::QuasiRat(std::vector<Factor> factors, XPoly exp_part)
    : factors_(std::move(factors)), exp_part_(std::move(exp_part)) {
  for (const auto& f : factors_) {
    if (f.base.is_zero()) throw Error(ErrorKind::Domain, "quasi-rational factor with zero base");
  }
}

QuasiRat QuasiRat::from_xrat(const XRat& r) {
  if (r.is_zero()) throw Error(ErrorKind::Domain, "quasi-rational function cannot be zero");
  std::vector<Factor> fs;
  if (!r.raw_num().is_constant()) fs.push_back({r.raw_num(), Scalar(1)});
  for (const auto& f : r.factors()) fs.push_back({f.base, Scalar(f.exp)});
  return QuasiRat(std::move(fs), XPoly());
}

QuasiRat QuasiRat::operator*(const QuasiRat& o) const {
  QuasiRat out = *this;
  out.factors_.insert(out.factors_.end(), o.factors_.begin(), o.factors_.end());
  out.exp_part_ += o.exp_part_;
  return out;
}

QuasiRat QuasiRat::pow(const Scalar& e) const {
  QuasiRat out = *this;
  for (auto& f : out.factors_) f.exponent *= e;
  out.exp_part_ *= e;
  return out;
}

QuasiRat QuasiRat::substitute(VarId v, const Scalar& value) const {
  std::vector<Factor> fs;
  for (const auto& f : factors_) fs.push_back({f.base.substitute(v, value), f.exponent.substitute(v, value)});
  return QuasiRat(std::move(fs), exp_part_.substitute(v, value));
}

XRat log_derivative(const QuasiRat& psi) {
  XRat w(psi.exp_part().derivative());
  for (const auto& f : psi.factors()) {
    if (f.base.is_zero()) throw Error(ErrorKind::Domain, "log_derivative of a zero base");
    if (f.base.is_constant() || f.exponent.is_zero()) continue;
    w += XRat::fraction(f.base.derivative(), f.base).scaled(f.exponent);
  }
  return w;
}

XRat eigen_ratio(const DiffOp& l, const QuasiRat& psi) {
  if (l.order() > 2) throw Error(ErrorKind::Domain, "eigenfunction test needs an operator of order <= 2");
  const XRat w = log_derivative(psi);
  XRat out = l.coeff(0);
  if (!l.coeff(1).is_zero()) out += l.coeff(1) * w;
  if (!l.coeff(2).is_zero()) out += l.coeff(2) * (w.derivative() + w * w);
  return out;
}

std::optional<Scalar> is_eigenfunction(const DiffOp& l, const QuasiRat& psi) {
  return eigen_ratio(l, psi).constant_value();
}

}  // namespace bispec
