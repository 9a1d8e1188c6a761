#include "bispec/families/hermite.hpp"

#include "bispec/darboux/darboux.hpp"

namespace bispec {

XPoly hermite_poly(int k) {
  if (k < 0) throw Error(ErrorKind::Domain, "hermite_poly needs k >= 0");
  XPoly prev(1);
  if (k == 0) return prev;
  const XPoly two_x = XPoly::monomial(1, Scalar(2));
  XPoly cur = two_x;
  for (int n = 1; n < k; ++n) {
    XPoly next = two_x * cur - prev * Scalar(2 * n);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

DiffOp hermite_type_operator(const XPoly& tau) {
  const XRat V = XRat(XPoly::monomial(2, Scalar(1))) + log_potential(QuasiRat::from_xrat(XRat(tau)));
  return DiffOp::schrodinger(V);
}

ScalarPair exceptional_hermite(int k) {
  return {hermite_type_operator(hermite_poly(k)), hermite_poly(k + 1)};
}

ScalarPair hermite_partition_22() {
  const XPoly tau(std::vector<Scalar>{Scalar(3), Scalar(), Scalar(), Scalar(), Scalar(4)});
  const XPoly theta(std::vector<Scalar>{Scalar(), Scalar(15), Scalar(), Scalar(), Scalar(), Scalar(4)});
  return {hermite_type_operator(tau), theta};
}

}  // namespace bispec
