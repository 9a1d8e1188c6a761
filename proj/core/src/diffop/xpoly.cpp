#include "bispec/diffop/xpoly.hpp"

#include "bispec/error.hpp"

#include <algorithm>

namespace bispec {
namespace {
const Scalar kZero{};
}

XPoly::XPoly(Scalar c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

XPoly::XPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::monomial(int degree, Scalar c) {
  XPoly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Scalar());
  p.coeffs_.back() = std::move(c);
  return p;
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Scalar& XPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

int XPoly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return 0;
}

bool XPoly::is_parameter_free() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_rational(); });
}

bool XPoly::has_polynomial_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_polynomial(); });
}

XPoly XPoly::operator-() const {
  XPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  }
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  }
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& s : coeffs_) {
    if (!s.is_zero()) s *= c;
  }
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return XPoly(std::move(out));
}

XPoly XPoly::pow(unsigned e) const {
  XPoly result = 1;
  XPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

XPoly XPoly::shift_up(int k) const {
  if (is_zero() || k == 0) return *this;
  XPoly out;
  out.coeffs_.assign(static_cast<std::size_t>(k), Scalar());
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

XPoly XPoly::shift_down(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (low_degree() < k) throw Error(ErrorKind::Internal, "shift_down below lowest degree");
  XPoly out;
  out.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return out;
}

XPoly XPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out[i - 1] = coeffs_[i] * Scalar(static_cast<int>(i));
  }
  return XPoly(std::move(out));
}

XPoly XPoly::derivative(int n) const {
  XPoly out = *this;
  for (int i = 0; i < n && !out.is_zero(); ++i) out = out.derivative();
  return out;
}

XPoly XPoly::compose(const XPoly& q) const {
  XPoly out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    out = out * q + XPoly(coeffs_[i]);
  }
  return out;
}

Scalar XPoly::evaluate(const Scalar& at) const {
  Scalar out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    out = out * at + coeffs_[i];
  }
  return out;
}

XPoly XPoly::substitute(VarId v, const Scalar& value) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.substitute(v, value));
  return XPoly(std::move(out));
}

std::pair<XPoly, XPoly> XPoly::divmod(const XPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::Domain, "division by zero polynomial");
  if (degree() < d.degree()) return {XPoly{}, *this};
  const int dd = d.degree();
  const Scalar inv_lc = d.lc().inverse();
  std::vector<Scalar> rem = coeffs_;
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    const Scalar& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Scalar q = d.lc().is_one() ? top : top * inv_lc;
    for (int j = 0; j <= dd; ++j) {
      const Scalar& dj = d.coeffs_[static_cast<std::size_t>(j)];
      if (dj.is_zero()) continue;
      rem[static_cast<std::size_t>(i - dd + j)] -= q * dj;
    }
    rem[static_cast<std::size_t>(i)] = Scalar();
    quot[static_cast<std::size_t>(i - dd)] = std::move(q);
  }
  return {XPoly(std::move(quot)), XPoly(std::move(rem))};
}

XPoly XPoly::gcd(const XPoly& a, const XPoly& b) {
  if (!a.is_parameter_free() || !b.is_parameter_free()) {
    throw Error(ErrorKind::Domain, "univariate gcd requires parameter-free polynomials");
  }
  XPoly u = a;
  XPoly v = b;
  while (!v.is_zero()) {
    XPoly r = u.divmod(v).second;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u * u.lc().inverse();
}

bool operator==(const XPoly& a, const XPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  }
  return true;
}

bool XPoly::identical(const XPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].identical(o.coeffs_[i])) return false;
  }
  return true;
}

int XPoly::compare(const XPoly& a, const XPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    int c = Scalar::compare(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

BaseSplit split_base(const XPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::Domain, "division by zero polynomial");
  BaseSplit out;
  out.x_power = p.low_degree();
  XPoly rest = p.shift_down(out.x_power);
  if (rest.degree() == 0) {
    out.scale = rest.lc();
    return out;
  }
  // Clear coefficient denominators.
  std::vector<MPoly> dens;
  bool all_monomial = true;
  for (const auto& c : rest.coeffs()) {
    if (c.is_zero() || c.is_polynomial()) continue;
    if (std::none_of(dens.begin(), dens.end(), [&](const MPoly& d) { return d == c.den(); })) {
      dens.push_back(c.den());
      all_monomial &= c.den().is_monomial();
    }
  }
  MPoly multiplier = 1;
  if (all_monomial) {
    Monomial l;
    for (const auto& d : dens) l = Monomial::lcm(l, d.leading().mono);
    multiplier = MPoly::monomial(l);
  } else {
    for (const auto& d : dens) multiplier *= d;
  }
  std::vector<MPoly> polys;
  for (const auto& c : rest.coeffs()) {
    polys.push_back(c.is_zero() ? MPoly{} : (c * Scalar(multiplier)).num());
  }
  // Monomial and rational content.
  Monomial g;
  bool first = true;
  for (const auto& q : polys) {
    if (q.is_zero()) continue;
    g = first ? q.monomial_content() : Monomial::gcd(g, q.monomial_content());
    first = false;
  }
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& q : polys) {
    for (const auto& t : q.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
    }
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(polys.back().leading().coef) < 0) content = -content;
  std::vector<Scalar> base_coeffs;
  for (auto& q : polys) {
    if (q.is_zero()) {
      base_coeffs.emplace_back();
      continue;
    }
    MPoly r = q.divided_by(g);
    r *= 1 / content;
    base_coeffs.emplace_back(std::move(r));
  }
  out.base = XPoly(std::move(base_coeffs));
  // p = x^m * rest, rest * multiplier = content * g * base.
  out.scale = Scalar::fraction(MPoly::monomial(g, content), multiplier);
  return out;
}

}  // namespace bispec
