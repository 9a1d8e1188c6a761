#pragma once

#include "bispec/adcond/weights.hpp"
#include "bispec/diffop/diffop.hpp"
#include "bispec/diffop/quasirat.hpp"
#include "bispec/expr/parser.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace bispec::test {

/// Parameters available to test expressions (same names and relations as
/// the catalog).
const std::vector<std::string>& names();

XRat R(std::string_view text);
XPoly P(std::string_view text);
Scalar S(std::string_view text);
QuasiRat Q(std::string_view text);
VarId V(std::string_view name);

/// Order-0 operator.
DiffOp mul(std::string_view text);
/// sum_r coeffs[r] D^r.
DiffOp op(std::vector<std::string_view> coeffs);
WeightVector W(std::initializer_list<std::pair<const int, int>> w);

/// Zero test by the monomial oracle: an operator of order n vanishes iff it
/// kills 1, x, ..., x^n. Uses apply() only.
bool kills_monomials(const DiffOp& a);

/// A_j f computed through function application only:
/// A_0 f = Θ f, A_{j} f = L(A_{j-1} f) - A_{j-1}(L f).
XRat ad_applied(const DiffOp& L, const DiffOp& theta, int j, const XRat& f);

/// Small random objects for property checks. Deterministic per seed.
class Random {
 public:
  explicit Random(std::uint32_t seed) : gen_(seed) {}

  int integer(int lo, int hi);
  Rat rat(int num_bound = 5, int den_bound = 3);
  Rat nonzero_rat();
  /// Rational, or linear in k when `params` is set.
  Scalar scalar(bool params = false);
  MPoly mpoly();
  XPoly poly(int max_degree, bool params = false);
  /// Polynomial over a product of simple factors (x - r)^e.
  XRat rational(int max_degree, bool params = false);
  DiffOp op(int max_order, bool params = false, bool rational_coeffs = false);
  /// x^e (x - r)^n exp(c x^2) with small rational e, r, c.
  QuasiRat quasi();

 private:
  std::mt19937 gen_;
};

}  // namespace bispec::test
