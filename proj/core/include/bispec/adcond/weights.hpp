#pragma once

#include "bispec/exact/scalar.hpp"

#include <map>
#include <vector>

namespace bispec {

/// Linear spectrum lambda_n = s * n.
struct SpectrumStep {
  Rat s;
};

/// Universal weights a_j of an ad-condition sum_j a_j A_j = 0, keyed by
/// commutator order j. Zero weights are not stored; the top weight is nonzero.
class WeightVector {
 public:
  /// Throws Error(Domain) when every weight is zero.
  explicit WeightVector(const std::map<int, Scalar>& weights);

  int top_order() const { return weights_.rbegin()->first; }
  const std::map<int, Scalar>& weights() const { return weights_; }
  Scalar weight(int j) const;
  /// Scaled so the top weight is 1.
  WeightVector normalized() const;

  /// Equal as weight maps (exact value comparison, no rescaling).
  friend bool operator==(const WeightVector& a, const WeightVector& b);

 private:
  std::map<int, Scalar> weights_;
};

/// Coefficients of prod_i (z - roots[i]), lowest degree first.
std::vector<Rat> expand_monic_product(const std::vector<Rat>& roots);

/// prod_{i=1..n} (ad^2 - (s i)^2) ad, as weights on orders 2n+1, 2n-1, ..., 1.
WeightVector reach_weights(int n, SpectrumStep step);

/// Exceptional Hermite conditions of top order k+2:
/// k odd:  prod_{i=1..(k+1)/2} (ad^2 - (4i)^2) ad;
/// k even: prod_{i=0..k/2} (ad^2 - (2+4i)^2).
WeightVector hermite_new_weights(int k);

}  // namespace bispec
