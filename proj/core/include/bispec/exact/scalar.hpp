#pragma once

#include "bispec/exact/mpoly.hpp"

namespace bispec {

/// Element of the coefficient field: a fraction of parameter polynomials.
///
/// Fractions are normalized by integer content, sign of the denominator's
/// leading term, common monomial factors, and exact division when it happens
/// to apply. There is no multivariate gcd, so two equal values may be stored
/// differently; equality is decided by cross-multiplication and expansion.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(int c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const Rat& c) : num_(c), den_(1) {}  // NOLINT
  Scalar(MPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  /// Throws Error(Domain, "division by zero polynomial") when den == 0.
  static Scalar fraction(MPoly num, MPoly den);
  static Scalar variable(VarId v) { return Scalar(MPoly::variable(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_one(); }
  /// Requires is_rational().
  Rat rational_value() const { return num_.constant_value(); }
  bool has_algebraic() const { return num_.has_algebraic() || den_.has_algebraic(); }
  std::vector<VarId> variables() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(int e) const;

  Scalar substitute(VarId v, const Scalar& value) const;
  Rat evaluate(const std::map<VarId, Rat>& values) const;

  /// Value equality (cross-multiplication).
  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Same stored representation.
  bool identical(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  static int compare(const Scalar& a, const Scalar& b);

 private:
  Scalar(MPoly num, MPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  MPoly num_;
  MPoly den_;
};

/// Free-function form of the fraction constructor.
inline Scalar normalize_fraction(MPoly num, MPoly den) { return Scalar::fraction(std::move(num), std::move(den)); }
inline bool is_zero(const Scalar& s) { return s.is_zero(); }

}  // namespace bispec
