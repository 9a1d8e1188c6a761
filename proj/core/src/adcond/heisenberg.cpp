#include "bispec/adcond/heisenberg.hpp"

#include "bispec/adcond/adcond.hpp"
#include "bispec/error.hpp"

namespace bispec {

std::optional<Scalar> proportionality(const DiffOp& a, const DiffOp& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Scalar();
  if (a.order() != b.order()) return std::nullopt;
  const int r = b.order();
  const auto c = (a.coeff(r) / b.coeff(r)).constant_value();
  if (!c) return std::nullopt;
  if (!(a - b.scaled(*c)).is_zero()) return std::nullopt;
  return c;
}

HeisenbergReport heisenberg_series(const DiffOp& L, const DiffOp& theta, int N,
                                   std::optional<Scalar> omega_squared) {
  if (N < 1) throw Error(ErrorKind::Domain, "heisenberg_series needs N >= 1");
  HeisenbergReport rep;
  rep.terms = ad_powers(L, theta, N);
  for (int j = 2; j <= N; ++j) {
    if (auto c = proportionality(rep.terms[j], rep.terms[j - 2])) rep.relations.push_back({j, *c});
  }
  if (!omega_squared) {
    for (const auto& rel : rep.relations) {
      if (rel.order == 3) omega_squared = rel.factor;
    }
  }
  rep.omega_squared = omega_squared;
  if (omega_squared) {
    Scalar power(1);  // ω^{2i}
    for (int n = 0; n <= N; ++n) {
      if (n >= 2 && n % 2 == 0) power *= *omega_squared;
      const DiffOp& base = rep.terms[n % 2];
      rep.matches.push_back((rep.terms[n] - base.scaled(power)).is_zero());
    }
  }
  return rep;
}

}  // namespace bispec
