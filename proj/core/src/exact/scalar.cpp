#include "bispec/exact/scalar.hpp"

#include "bispec/error.hpp"

#include <set>

namespace bispec {

Scalar Scalar::fraction(MPoly num, MPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::Domain, "division by zero polynomial");
  Scalar s(std::move(num), std::move(den), true);
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.is_one()) return;
  if (!den_.is_constant()) {
    Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
    if (!g.is_one()) {
      num_ = num_.divided_by(g);
      den_ = den_.divided_by(g);
    }
    // A monomial denominator carrying algebraic parameters is rationalized
    // (s^2 = r makes it constant after at most one multiplication per param).
    if (den_.is_monomial() && den_.has_algebraic()) {
      const auto& table = ParamTable::global();
      Monomial m;
      for (const auto& f : den_.leading().mono.factors()) {
        if (table.relation(f.var)) m = m * Monomial::variable(f.var, 1);
      }
      num_ = num_.times(m);
      den_ = den_.times(m);
    }
  }
  if (den_.is_constant()) {
    num_ *= 1 / den_.constant_value();
    den_ = 1;
    return;
  }
  Rat c = den_.content();
  if (c != 1) {
    Rat inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
  if (num_ == den_) {
    num_ = 1;
    den_ = 1;
    return;
  }
  if (num_.size() >= den_.size() && num_.total_degree() >= den_.total_degree()) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = 1;
    }
  }
}

std::vector<VarId> Scalar::variables() const {
  std::set<VarId> vs;
  for (VarId v : num_.variables()) vs.insert(v);
  for (VarId v : den_.variables()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.is_monomial() && o.den_.is_monomial()) {
    // Normalized monomial denominators have coefficient 1.
    const Monomial& m1 = den_.leading().mono;
    const Monomial& m2 = o.den_.leading().mono;
    Monomial l = Monomial::lcm(m1, m2);
    num_ = num_.times(l.divided_by(m1)) + o.num_.times(l.divided_by(m2));
    den_ = MPoly::monomial(l);
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = Scalar();
  num_ *= o.num_;
  if (!o.den_.is_one()) {
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::Domain, "division by zero polynomial");
  return fraction(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return Scalar(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), true);
}

Scalar Scalar::substitute(VarId v, const Scalar& value) const {
  // num(value) / den(value) with value = p/q: homogenize by q^deg.
  const unsigned dn = num_.degree_in(v);
  const unsigned dd = den_.degree_in(v);
  if (dn == 0 && dd == 0) return *this;
  if (value.is_polynomial()) {
    return fraction(num_.substitute(v, value.num()), den_.substitute(v, value.num()));
  }
  const unsigned d = std::max(dn, dd);
  const VarId t = v;
  auto homog = [&](const MPoly& p) {
    // Sum over terms of coef * rest * p^e * q^(d-e).
    std::map<std::uint32_t, std::vector<Term>> by_exp;
    for (const auto& term : p.terms()) {
      const std::uint32_t e = term.mono.exponent(t);
      by_exp[e].push_back({e == 0 ? term.mono : term.mono.divided_by(Monomial::variable(t, e)), term.coef});
    }
    MPoly out;
    for (auto& [e, ts] : by_exp) {
      out += MPoly::from_terms(std::move(ts)) * value.num().pow(e) * value.den().pow(d - e);
    }
    return out;
  };
  return fraction(homog(num_), homog(den_));
}

Rat Scalar::evaluate(const std::map<VarId, Rat>& values) const {
  Rat d = den_.evaluate(values);
  if (sgn(d) == 0) throw Error(ErrorKind::Domain, "denominator vanishes at evaluation point");
  return num_.evaluate(values) / d;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_.is_one() && b.den_.is_one()) return a.num_ == b.num_;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  int c = MPoly::compare(a.num_, b.num_);
  return c != 0 ? c : MPoly::compare(a.den_, b.den_);
}

}  // namespace bispec
