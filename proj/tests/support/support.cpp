#include "support.hpp"

#include "bispec/exact/param.hpp"

namespace bispec::test {

const std::vector<std::string>& names() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> out;
    for (const char* n : {"k", "m", "a", "b", "c", "e", "t", "r1", "r2", "a1", "a2", "a3", "a4", "c1", "c3", "c4", "s"}) {
      out.push_back(declare_param(n));
    }
    for (const char* n : {"s2^2=2", "s3^2=3", "i^2=-1"}) out.push_back(declare_param(n));
    return out;
  }();
  return all;
}

XRat R(std::string_view text) { return parse_expr(text, names()).as_xrat(); }
XPoly P(std::string_view text) { return parse_expr(text, names()).as_xpoly(); }
Scalar S(std::string_view text) { return parse_expr(text, names()).as_scalar(); }
QuasiRat Q(std::string_view text) { return parse_expr(text, names()).as_quasirat(); }

VarId V(std::string_view name) {
  names();
  return param(name);
}

DiffOp mul(std::string_view text) { return DiffOp::multiplication(R(text)); }

DiffOp op(std::vector<std::string_view> coeffs) {
  std::vector<XRat> c;
  for (auto t : coeffs) c.push_back(R(t));
  return DiffOp(std::move(c));
}

WeightVector W(std::initializer_list<std::pair<const int, int>> w) {
  std::map<int, Scalar> m;
  for (const auto& [j, a] : w) m[j] = Scalar(a);
  return WeightVector(m);
}

bool kills_monomials(const DiffOp& a) {
  const int n = std::max(a.order(), 0);
  XRat xm(1);
  for (int m = 0; m <= n; ++m) {
    if (!apply(a, xm).is_zero()) return false;
    xm *= XRat::x();
  }
  return true;
}

XRat ad_applied(const DiffOp& L, const DiffOp& theta, int j, const XRat& f) {
  if (j == 0) return apply(theta, f);
  return apply(L, ad_applied(L, theta, j - 1, f)) - ad_applied(L, theta, j - 1, apply(L, f));
}

int Random::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

Rat Random::rat(int num_bound, int den_bound) {
  Rat r(integer(-num_bound, num_bound), integer(1, den_bound));
  r.canonicalize();
  return r;
}

Rat Random::nonzero_rat() {
  Rat r;
  do {
    r = rat();
  } while (r == 0);
  return r;
}

Scalar Random::scalar(bool params) {
  Scalar s(rat());
  if (params && integer(0, 2) == 0) s += Scalar(rat()) * Scalar::variable(V("k"));
  return s;
}

MPoly Random::mpoly() {
  const VarId k = V("k");
  const VarId a = V("a");
  MPoly p;
  const int terms = integer(0, 3);
  for (int t = 0; t < terms; ++t) {
    p += MPoly::variable(k, static_cast<std::uint32_t>(integer(0, 2))) *
         MPoly::variable(a, static_cast<std::uint32_t>(integer(0, 2))) * rat();
  }
  return p;
}

XPoly Random::poly(int max_degree, bool params) {
  std::vector<Scalar> c;
  const int d = integer(0, max_degree);
  for (int i = 0; i <= d; ++i) c.push_back(scalar(params));
  return XPoly(std::move(c));
}

XRat Random::rational(int max_degree, bool params) {
  XRat f(poly(max_degree, params));
  if (integer(0, 1) == 0) {
    const XPoly base(std::vector<Scalar>{Scalar(-Rat(integer(-2, 2))), Scalar(1)});
    f /= XRat::power_of(base, integer(1, 2));
  }
  return f;
}

DiffOp Random::op(int max_order, bool params, bool rational_coeffs) {
  std::vector<XRat> c;
  const int n = integer(0, max_order);
  for (int r = 0; r <= n; ++r) {
    c.push_back(rational_coeffs && integer(0, 2) == 0 ? rational(2, params) : XRat(poly(2, params)));
  }
  return DiffOp(std::move(c));
}

QuasiRat Random::quasi() {
  std::vector<QuasiRat::Factor> factors;
  if (integer(0, 1) == 0) factors.push_back({XPoly::x(), Scalar(rat(3, 2))});
  Rat r = nonzero_rat();
  factors.push_back({XPoly(std::vector<Scalar>{Scalar(-r), Scalar(1)}), Scalar(integer(1, 2))});
  static const Rat cs[] = {Rat(0), Rat(1, 2), Rat(-1, 2), Rat(1, 8)};
  const Rat c = cs[integer(0, 3)];
  return QuasiRat(std::move(factors), XPoly::monomial(2, Scalar(c)));
}

}  // namespace bispec::test
