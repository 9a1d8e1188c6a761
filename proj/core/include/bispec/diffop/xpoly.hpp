#pragma once

#include "bispec/exact/scalar.hpp"

#include <utility>
#include <vector>

namespace bispec {

/// Polynomial in the distinguished variable x with parameter-field coefficients.
/// Stored densely by degree; the top coefficient is never zero.
class XPoly {
 public:
  XPoly() = default;
  XPoly(Scalar c);  // NOLINT
  XPoly(int c) : XPoly(Scalar(c)) {}  // NOLINT
  explicit XPoly(std::vector<Scalar> coeffs);
  static XPoly x() { return monomial(1, 1); }
  static XPoly monomial(int degree, Scalar c);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Scalar& coeff(int i) const;
  const Scalar& lc() const { return coeffs_.back(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  int low_degree() const;
  bool is_parameter_free() const;
  bool has_polynomial_coeffs() const;

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const Scalar& c);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(XPoly a, const Scalar& c) { return a *= c; }
  friend XPoly operator*(const Scalar& c, XPoly a) { return a *= c; }
  XPoly pow(unsigned e) const;
  XPoly shift_up(int k) const;    // * x^k
  XPoly shift_down(int k) const;  // / x^k, requires low_degree() >= k

  XPoly derivative() const;
  XPoly derivative(int n) const;
  /// p(q(x)).
  XPoly compose(const XPoly& q) const;
  Scalar evaluate(const Scalar& at) const;
  XPoly substitute(VarId v, const Scalar& value) const;

  /// Quotient and remainder over the parameter field.
  std::pair<XPoly, XPoly> divmod(const XPoly& d) const;
  /// Monic gcd over Q; both inputs must be parameter-free.
  static XPoly gcd(const XPoly& a, const XPoly& b);

  /// Value equality, coefficient by coefficient.
  friend bool operator==(const XPoly& a, const XPoly& b);
  bool identical(const XPoly& o) const;
  static int compare(const XPoly& a, const XPoly& b);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// p = scale * x^x_power * base, with base either absent (p is a monomial in x)
/// or of positive degree with polynomial, content-free coefficients, positive
/// leading term and nonzero constant term. p must be nonzero.
struct BaseSplit {
  Scalar scale;
  int x_power = 0;
  XPoly base;  // zero when absent
};
BaseSplit split_base(const XPoly& p);

}  // namespace bispec
