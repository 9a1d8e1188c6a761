#pragma once

#include "bispec/exact/param.hpp"

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>

namespace bispec {

struct VarPow {
  VarId var;
  std::uint32_t exp;
  friend bool operator==(const VarPow&, const VarPow&) = default;
};

/// Power product of parameters, sorted by VarId with positive exponents.
class Monomial {
 public:
  using Storage = boost::container::small_vector<VarPow, 3>;

  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t exp = 1);

  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  std::uint32_t exponent(VarId v) const;
  const Storage& factors() const { return factors_; }

  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial divided_by(const Monomial& divisor) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Plain product with no relation rewriting.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Graded lexicographic order; returns <0, 0, >0.
  static int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

  std::size_t hash() const;

 private:
  Storage factors_;
};

/// Rewrites every relation-bearing parameter with exponent >= 2 using p^2 = r,
/// multiplying `factor` by the rational produced. Returns false (and leaves
/// both untouched) when nothing needed rewriting.
bool reduce_relations(Monomial& m, Rat& factor);

}  // namespace bispec
