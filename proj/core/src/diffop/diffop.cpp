#include "bispec/diffop/diffop.hpp"

#include "bispec/error.hpp"

namespace bispec {
namespace {

const XRat kZeroRat{};

// Binomial coefficients for small orders.
Scalar binomial(int n, int k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(Rat(b));
}

}  // namespace

DiffOp::DiffOp(std::vector<XRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DiffOp DiffOp::multiplication(XRat f) { return DiffOp(std::vector<XRat>{std::move(f)}); }

DiffOp DiffOp::derivative(int n) {
  std::vector<XRat> c(static_cast<std::size_t>(n) + 1);
  c.back() = XRat(1);
  return DiffOp(std::move(c));
}

DiffOp DiffOp::schrodinger(XRat potential) {
  return DiffOp(std::vector<XRat>{std::move(potential), XRat(), XRat(-1)});
}

void DiffOp::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const XRat& DiffOp::coeff(int r) const {
  if (r < 0 || r >= static_cast<int>(coeffs_.size())) return kZeroRat;
  return coeffs_[static_cast<std::size_t>(r)];
}

DiffOp DiffOp::operator-() const {
  DiffOp out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  }
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  }
  trim();
  return *this;
}

DiffOp DiffOp::scaled(const XRat& f) const {
  std::vector<XRat> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * f);
  return DiffOp(std::move(out));
}

DiffOp DiffOp::scaled(const Scalar& c) const {
  std::vector<XRat> out;
  out.reserve(coeffs_.size());
  for (const auto& r : coeffs_) out.push_back(r.scaled(c));
  return DiffOp(std::move(out));
}

std::optional<XRat> DiffOp::potential() const {
  if (order() != 2) return std::nullopt;
  if (!coeff(1).is_zero()) return std::nullopt;
  auto lead = coeff(2).constant_value();
  if (!lead || !(*lead == Scalar(-1))) return std::nullopt;
  return coeff(0);
}

DiffOp DiffOp::substitute(VarId v, const Scalar& value) const {
  std::vector<XRat> out;
  for (const auto& c : coeffs_) out.push_back(c.substitute(v, value));
  return DiffOp(std::move(out));
}

const XRat& DerivativeTable::get(int r, int n) {
  if (r < 0 || r > op_.order()) return kZeroRat;
  if (cache_.size() < op_.coeffs().size()) cache_.resize(op_.coeffs().size());
  auto& col = cache_[static_cast<std::size_t>(r)];
  if (col.empty()) col.push_back(op_.coeff(r));
  while (static_cast<int>(col.size()) <= n) {
    const XRat& last = col.back();
    col.push_back(last.is_zero() ? XRat() : last.derivative());
  }
  return col[static_cast<std::size_t>(n)];
}

DiffOp compose(const DiffOp& a, DerivativeTable& b) {
  // a_r D^r b_s D^s = sum_i C(r,i) a_r b_s^(i) D^(r+s-i)
  if (a.is_zero() || b.op().is_zero()) return {};
  std::vector<XRat> out(static_cast<std::size_t>(a.order() + b.op().order()) + 1);
  for (int r = 0; r <= a.order(); ++r) {
    const XRat& ar = a.coeff(r);
    if (ar.is_zero()) continue;
    for (int s = 0; s <= b.op().order(); ++s) {
      if (b.op().coeff(s).is_zero()) continue;
      for (int i = 0; i <= r; ++i) {
        const XRat& bd = b.get(s, i);
        if (bd.is_zero()) continue;
        XRat term = ar * bd;
        if (i != 0 && i != r) term = term.scaled(binomial(r, i));
        out[static_cast<std::size_t>(r + s - i)] += term;
      }
    }
  }
  return DiffOp(std::move(out));
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  DerivativeTable table(b);
  return compose(a, table);
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
  DerivativeTable ta(a);
  return compose(a, b) - compose(b, ta);
}

DiffOp commutator(DerivativeTable& a, const DiffOp& b) { return compose(a.op(), b) - compose(b, a); }

XRat apply(const DiffOp& a, const XRat& f) {
  XRat out;
  XRat d = f;
  for (int r = 0; r <= a.order(); ++r) {
    if (r > 0) d = d.derivative();
    if (d.is_zero()) break;
    if (!a.coeff(r).is_zero()) out += a.coeff(r) * d;
  }
  return out;
}

bool equals(const DiffOp& a, const DiffOp& b) { return (a - b).is_zero(); }

bool annihilates_monomials(const DiffOp& a) {
  XPoly mono = 1;
  for (int r = 0; r <= std::max(a.order(), 0); ++r) {
    if (!apply(a, XRat(mono)).is_zero()) return false;
    mono = mono * XPoly::x();
  }
  return true;
}

}  // namespace bispec
