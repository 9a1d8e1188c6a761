#include "bispec/diffop/xrat.hpp"

#include "bispec/error.hpp"

#include <algorithm>

namespace bispec {
namespace {

const XPoly& x_base() {
  static const XPoly base = XPoly::x();
  return base;
}

bool is_x_base(const XPoly& b) { return b.degree() == 1 && b.coeff(0).is_zero() && b.lc().is_one(); }

// A base can be divided out cheaply when its leading coefficient is a
// monomial (the quotient then stays free of polynomial denominators).
bool cheap_divisor(const XPoly& b) { return b.lc().is_polynomial() && b.lc().num().is_monomial(); }

}  // namespace

XRat::XRat(XPoly p) : num_(std::move(p)) {}
XRat::XRat(Scalar c) : num_(std::move(c)) {}

XRat XRat::fraction(const XPoly& num, const XPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::Domain, "division by zero polynomial");
  XRat r(num);
  if (num.is_zero()) return r;
  r.add_factor(den, -1);
  r.reduce();
  return r;
}

XRat XRat::power_of(const XPoly& p, int e) {
  if (p.is_zero()) {
    if (e < 0) throw Error(ErrorKind::Domain, "division by zero polynomial");
    return e == 0 ? XRat(1) : XRat();
  }
  XRat r(1);
  r.add_factor(p, e);
  return r;
}

void XRat::insert_base(const XPoly& base, int exp) {
  if (exp == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), base,
                             [](const Factor& f, const XPoly& b) { return XPoly::compare(f.base, b) < 0; });
  if (it != factors_.end() && XPoly::compare(it->base, base) == 0) {
    it->exp += exp;
    if (it->exp == 0) factors_.erase(it);
  } else {
    factors_.insert(it, Factor{base, exp});
  }
}

void XRat::add_factor(const XPoly& p, int exp) {
  if (exp == 0) return;
  BaseSplit s = split_base(p);
  num_ *= s.scale.pow(exp);
  if (s.x_power != 0) insert_base(x_base(), s.x_power * exp);
  if (!s.base.is_zero()) insert_base(s.base, exp);
}

void XRat::reduce() {
  if (num_.is_zero()) {
    factors_.clear();
    return;
  }
  for (std::size_t i = 0; i < factors_.size();) {
    Factor& f = factors_[i];
    if (f.exp > 0) {
      ++i;
      continue;
    }
    if (is_x_base(f.base)) {
      const int k = std::min(num_.low_degree(), -f.exp);
      if (k > 0) {
        num_ = num_.shift_down(k);
        f.exp += k;
      }
    } else if (cheap_divisor(f.base)) {
      while (f.exp < 0 && num_.degree() >= f.base.degree()) {
        auto [q, r] = num_.divmod(f.base);
        if (!r.is_zero()) break;
        num_ = std::move(q);
        ++f.exp;
      }
    }
    if (f.exp == 0) {
      factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
}

XPoly XRat::numerator() const {
  XPoly out = num_;
  for (const auto& f : factors_) {
    if (f.exp > 0) out = out * f.base.pow(static_cast<unsigned>(f.exp));
  }
  return out;
}

XPoly XRat::denominator() const {
  XPoly out = 1;
  for (const auto& f : factors_) {
    if (f.exp < 0) out = out * f.base.pow(static_cast<unsigned>(-f.exp));
  }
  return out;
}

std::pair<XPoly, XPoly> XRat::canonical_fraction() const {
  XPoly n = numerator();
  XPoly d = denominator();
  if (n.is_zero()) return {XPoly{}, XPoly(1)};
  if (n.is_parameter_free() && d.is_parameter_free()) {
    XPoly g = XPoly::gcd(n, d);
    if (g.degree() > 0) {
      n = n.divmod(g).first;
      d = d.divmod(g).first;
    }
    Scalar inv = d.lc().inverse();
    return {n * inv, d * inv};
  }
  return {n, d};
}

bool XRat::is_polynomial() const {
  return std::none_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp < 0; });
}

std::optional<Scalar> XRat::constant_value() const {
  if (num_.is_zero()) return Scalar();
  if (is_scalar()) return num_.coeff(0);
  if (!derivative().is_zero()) return std::nullopt;
  XPoly n = numerator();
  XPoly d = denominator();
  if (n.degree() != d.degree()) return std::nullopt;
  Scalar c = n.lc() / d.lc();
  if (!(n - d * c).is_zero()) throw Error(ErrorKind::Internal, "constant_value: inconsistent constant");
  return c;
}

bool XRat::is_parameter_free() const {
  if (!num_.is_parameter_free()) return false;
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.base.is_parameter_free(); });
}

XRat XRat::operator-() const {
  XRat out = *this;
  out.num_ = -out.num_;
  return out;
}

XRat& XRat::operator+=(const XRat& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  // Common factorization: min exponent per base, the rest expanded.
  XPoly a = num_;
  XPoly b = o.num_;
  std::vector<Factor> common;
  auto ia = factors_.begin();
  auto ib = o.factors_.begin();
  while (ia != factors_.end() || ib != o.factors_.end()) {
    int c;
    if (ia == factors_.end()) {
      c = 1;
    } else if (ib == o.factors_.end()) {
      c = -1;
    } else {
      c = XPoly::compare(ia->base, ib->base);
    }
    const XPoly& base = c <= 0 ? ia->base : ib->base;
    const int ea = c <= 0 ? ia->exp : 0;
    const int eb = c >= 0 ? ib->exp : 0;
    const int e = std::min(ea, eb);
    if (ea > e) a = a * base.pow(static_cast<unsigned>(ea - e));
    if (eb > e) b = b * base.pow(static_cast<unsigned>(eb - e));
    if (e != 0) common.push_back(Factor{base, e});
    if (c <= 0) ++ia;
    if (c >= 0) ++ib;
  }
  num_ = a + b;
  factors_ = std::move(common);
  reduce();
  return *this;
}

XRat& XRat::operator-=(const XRat& o) { return *this += -o; }

XRat& XRat::operator*=(const XRat& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = XRat();
  num_ = num_ * o.num_;
  bool cross = false;
  for (const auto& f : o.factors_) {
    insert_base(f.base, f.exp);
    cross = true;
  }
  if (cross || !o.num_.is_constant()) reduce();
  return *this;
}

XRat XRat::scaled(const Scalar& c) const {
  if (c.is_zero()) return XRat();
  XRat out = *this;
  out.num_ *= c;
  return out;
}

XRat XRat::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::Domain, "division by zero rational function");
  XRat out(1);
  out.factors_ = factors_;
  for (auto& f : out.factors_) f.exp = -f.exp;
  out.add_factor(num_, -1);
  out.reduce();
  return out;
}

XRat& XRat::operator/=(const XRat& o) { return *this *= o.inverse(); }

XRat XRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  XRat out(num_.pow(static_cast<unsigned>(e)));
  if (num_.is_zero()) return e == 0 ? XRat(1) : XRat();
  for (const auto& f : factors_) out.insert_base(f.base, f.exp * e);
  return out;
}

XRat XRat::derivative() const {
  if (num_.is_zero()) return {};
  if (factors_.empty()) return XRat(num_.derivative());
  // d/dx [n * prod b^e] = (n' * prod b + n * sum e_i b_i' prod_{j!=i} b_j) * prod b^(e-1)
  const std::size_t k = factors_.size();
  std::vector<XPoly> prefix(k + 1), suffix(k + 1);
  prefix[0] = 1;
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * factors_[i].base;
  suffix[k] = 1;
  for (std::size_t i = k; i-- > 0;) suffix[i] = factors_[i].base * suffix[i + 1];
  XPoly sum = num_.derivative() * prefix[k];
  for (std::size_t i = 0; i < k; ++i) {
    XPoly term = factors_[i].base.derivative() * prefix[i] * suffix[i + 1];
    sum += num_ * term * Scalar(factors_[i].exp);
  }
  XRat out(std::move(sum));
  if (out.num_.is_zero()) return out;
  for (const auto& f : factors_) {
    if (f.exp - 1 != 0) out.factors_.push_back(Factor{f.base, f.exp - 1});
  }
  out.reduce();
  return out;
}

XRat XRat::derivative(int n) const {
  XRat out = *this;
  for (int i = 0; i < n && !out.is_zero(); ++i) out = out.derivative();
  return out;
}

Scalar XRat::evaluate(const Scalar& at) const {
  Scalar v = num_.evaluate(at);
  for (const auto& f : factors_) {
    Scalar b = f.base.evaluate(at);
    if (b.is_zero() && f.exp < 0) throw Error(ErrorKind::Domain, "pole at evaluation point");
    v *= b.pow(f.exp);
  }
  return v;
}

XRat XRat::substitute(VarId v, const Scalar& value) const {
  XRat out(num_.substitute(v, value));
  for (const auto& f : factors_) {
    XPoly b = f.base.substitute(v, value);
    if (b.is_zero()) {
      if (f.exp < 0) throw Error(ErrorKind::Domain, "substitution makes a denominator vanish");
      return XRat();
    }
    out *= power_of(b, f.exp);
  }
  return out;
}

XRat XRat::compose(const XPoly& q) const {
  XRat out(num_.compose(q));
  for (const auto& f : factors_) out *= power_of(f.base.compose(q), f.exp);
  return out;
}

bool operator==(const XRat& a, const XRat& b) { return (a - b).is_zero(); }

}  // namespace bispec

namespace bispec {

std::vector<XPoly> over_common_denominator(const std::vector<XRat>& fs) {
  // Lowest exponent per base across all inputs (0 when absent).
  std::vector<XRat::Factor> lowest;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    for (const auto& fac : f.factors()) {
      auto it = std::find_if(lowest.begin(), lowest.end(),
                             [&](const XRat::Factor& l) { return XPoly::compare(l.base, fac.base) == 0; });
      if (it == lowest.end()) {
        lowest.push_back({fac.base, std::min(fac.exp, 0)});
      } else {
        it->exp = std::min(it->exp, fac.exp);
      }
    }
  }
  std::vector<XPoly> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    if (f.is_zero()) {
      out.emplace_back();
      continue;
    }
    XPoly n = f.raw_num();
    for (const auto& l : lowest) {
      int e = 0;
      for (const auto& fac : f.factors()) {
        if (XPoly::compare(fac.base, l.base) == 0) e = fac.exp;
      }
      if (e - l.exp > 0) n = n * l.base.pow(static_cast<unsigned>(e - l.exp));
    }
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace bispec
