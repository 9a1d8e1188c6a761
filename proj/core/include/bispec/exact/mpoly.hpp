#pragma once

#include "bispec/exact/monomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace bispec {

struct Term {
  Monomial mono;
  Rat coef;
};

/// Sparse multivariate polynomial over Q in the registered parameters.
/// Terms are kept in strictly decreasing graded-lex order with nonzero
/// coefficients, and relation-bearing parameters never reach exponent 2.
class MPoly {
 public:
  MPoly() = default;
  MPoly(int c);  // NOLINT(google-explicit-constructor): literals are natural here
  MPoly(const Rat& c);  // NOLINT
  static MPoly variable(VarId v, std::uint32_t exp = 1);
  static MPoly monomial(const Monomial& m, const Rat& c = 1);
  /// Sorts, merges, rewrites relations and drops zeros.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Requires is_constant().
  Rat constant_value() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Requires !is_zero().
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const;
  unsigned degree_in(VarId v) const;
  std::vector<VarId> variables() const;
  bool has_algebraic() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  MPoly pow(unsigned e) const;
  /// Multiply every term by a monomial (with relation rewriting).
  MPoly times(const Monomial& m, const Rat& c = 1) const;

  /// Signed rational content: (*this) / content() has coprime integer
  /// coefficients and a positive leading coefficient. Zero for the zero poly.
  Rat content() const;
  MPoly primitive() const;
  /// gcd of all term monomials.
  Monomial monomial_content() const;
  MPoly divided_by(const Monomial& m) const;  // requires m | every term

  /// Exact division; nullopt when `d` does not divide this polynomial in the
  /// graded-lex division algorithm (always nullopt for d == 0).
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  MPoly substitute(VarId v, const MPoly& value) const;
  /// Evaluate with rational values for every variable occurring.
  Rat evaluate(const std::map<VarId, Rat>& values) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  /// Structural total order (for canonical sorting only).
  static int compare(const MPoly& a, const MPoly& b);
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace bispec
