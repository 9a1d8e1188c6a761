#pragma once

#include "bispec/diffop/xpoly.hpp"

#include <optional>
#include <vector>

namespace bispec {

/// Rational function of x over the parameter field.
///
/// Stored as `num * prod(base_i ^ exp_i)` with nonzero integer exponents over
/// normalized bases (see split_base). Keeping the denominator factored means
/// sums and derivatives never need a multivariate gcd: common bases are
/// merged by exponent, and a base is cancelled whenever it divides the
/// numerator exactly.
class XRat {
 public:
  struct Factor {
    XPoly base;
    int exp;
  };

  XRat() = default;
  XRat(XPoly p);   // NOLINT
  XRat(Scalar c);  // NOLINT
  XRat(int c) : XRat(Scalar(c)) {}  // NOLINT
  static XRat x() { return XRat(XPoly::x()); }
  /// num / den; throws on den == 0.
  static XRat fraction(const XPoly& num, const XPoly& den);
  /// p^e with p kept as a factor (e may be negative).
  static XRat power_of(const XPoly& p, int e);

  const XPoly& raw_num() const { return num_; }
  const std::vector<Factor>& factors() const { return factors_; }
  /// Expanded numerator and denominator; the denominator is the product of
  /// the negative-exponent bases.
  XPoly numerator() const;
  XPoly denominator() const;
  /// Reduced (num, den): for parameter-free values, gcd-free with monic den.
  std::pair<XPoly, XPoly> canonical_fraction() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  /// Structurally x-free (no bases, constant numerator).
  bool is_scalar() const { return factors_.empty() && num_.is_constant(); }
  /// The constant value when this function does not depend on x.
  std::optional<Scalar> constant_value() const;
  bool is_parameter_free() const;

  XRat operator-() const;
  XRat& operator+=(const XRat& o);
  XRat& operator-=(const XRat& o);
  XRat& operator*=(const XRat& o);
  XRat& operator/=(const XRat& o);
  friend XRat operator+(XRat a, const XRat& b) { return a += b; }
  friend XRat operator-(XRat a, const XRat& b) { return a -= b; }
  friend XRat operator*(XRat a, const XRat& b) { return a *= b; }
  friend XRat operator/(XRat a, const XRat& b) { return a /= b; }
  XRat scaled(const Scalar& c) const;
  XRat inverse() const;
  XRat pow(int e) const;

  XRat derivative() const;
  XRat derivative(int n) const;
  Scalar evaluate(const Scalar& at) const;
  XRat substitute(VarId v, const Scalar& value) const;
  /// f(q(x)) for a polynomial q.
  XRat compose(const XPoly& q) const;

  /// Value equality: the difference has a zero numerator.
  friend bool operator==(const XRat& a, const XRat& b);

 private:
  void add_factor(const XPoly& base, int exp);
  void insert_base(const XPoly& base, int exp);
  void reduce();

  XPoly num_;
  std::vector<Factor> factors_;  // sorted by XPoly::compare on base
};

}  // namespace bispec

namespace bispec {

/// Numerators of `fs` over one shared factored denominator, so that
/// sum_i w_i fs[i] = 0 iff sum_i w_i result[i] = 0.
std::vector<XPoly> over_common_denominator(const std::vector<XRat>& fs);

}  // namespace bispec
