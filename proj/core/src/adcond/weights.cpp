#include "bispec/adcond/weights.hpp"

#include "bispec/error.hpp"

namespace bispec {

WeightVector::WeightVector(const std::map<int, Scalar>& weights) {
  for (const auto& [j, w] : weights) {
    if (j < 0) throw Error(ErrorKind::Domain, "negative commutator order in weight vector");
    if (!w.is_zero()) weights_.emplace(j, w);
  }
  if (weights_.empty()) throw Error(ErrorKind::Domain, "weight vector has no nonzero weight");
}

Scalar WeightVector::weight(int j) const {
  auto it = weights_.find(j);
  return it == weights_.end() ? Scalar() : it->second;
}

WeightVector WeightVector::normalized() const {
  const Scalar inv = weights_.rbegin()->second.inverse();
  std::map<int, Scalar> out;
  for (const auto& [j, w] : weights_) out.emplace(j, w * inv);
  return WeightVector(out);
}

bool operator==(const WeightVector& a, const WeightVector& b) {
  if (a.weights_.size() != b.weights_.size()) return false;
  auto ib = b.weights_.begin();
  for (const auto& [j, w] : a.weights_) {
    if (ib->first != j || !(ib->second == w)) return false;
    ++ib;
  }
  return true;
}

std::vector<Rat> expand_monic_product(const std::vector<Rat>& roots) {
  std::vector<Rat> coeffs{Rat(1)};
  for (const auto& r : roots) {
    std::vector<Rat> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= r * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

namespace {

// Weights of P(ad^2) ad^base for P monic with the given roots.
WeightVector ladder(const std::vector<Rat>& roots, int base) {
  const auto coeffs = expand_monic_product(roots);
  std::map<int, Scalar> w;
  for (std::size_t m = 0; m < coeffs.size(); ++m) w.emplace(base + 2 * static_cast<int>(m), Scalar(coeffs[m]));
  return WeightVector(w);
}

}  // namespace

WeightVector reach_weights(int n, SpectrumStep step) {
  if (n < 1) throw Error(ErrorKind::Domain, "reach_weights needs n >= 1");
  if (sgn(step.s) == 0) throw Error(ErrorKind::Domain, "spectrum step must be nonzero");
  std::vector<Rat> roots;
  for (int i = 1; i <= n; ++i) roots.push_back((step.s * i) * (step.s * i));
  return ladder(roots, 1);
}

WeightVector hermite_new_weights(int k) {
  if (k < 0) throw Error(ErrorKind::Domain, "hermite_new_weights needs k >= 0");
  std::vector<Rat> roots;
  if (k % 2 == 1) {
    for (int i = 1; i <= (k + 1) / 2; ++i) roots.push_back(Rat(16 * i * i));
    return ladder(roots, 1);
  }
  for (int i = 0; i <= k / 2; ++i) roots.push_back(Rat((2 + 4 * i) * (2 + 4 * i)));
  return ladder(roots, 0);
}

}  // namespace bispec
