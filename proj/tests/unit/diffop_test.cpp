#include "support.hpp"

#include "bispec/diffop/diffop.hpp"
#include "bispec/diffop/quasirat.hpp"
#include "bispec/error.hpp"
#include "bispec/expr/printer.hpp"

#include <gtest/gtest.h>

namespace bispec {
namespace {

using test::mul;
using test::op;
using test::P;
using test::Q;
using test::R;
using test::S;

// A and B agree on 1, x, ..., x^n.
void expect_same_on_monomials(const DiffOp& a, const DiffOp& b, int n) {
  XRat xm(1);
  for (int m = 0; m <= n; ++m) {
    EXPECT_TRUE(apply(a, xm) == apply(b, xm)) << "x^" << m;
    xm *= XRat::x();
  }
}

TEST(Compose, DerivativeThenMultiplication) {
  const DiffOp c = compose(DiffOp::derivative(), mul("x"));
  EXPECT_EQ(c, op({"1", "x"}));
  expect_same_on_monomials(c, op({"1", "x"}), 4);
}

TEST(Compose, SecondDerivativeThenMultiplication) {
  const DiffOp c = compose(DiffOp::derivative(2), mul("x"));
  EXPECT_EQ(c, op({"0", "2", "x"}));
  // x D^2 + 2D on x^m: m(m-1) x^{m-1} + 2m x^{m-1} = m(m+1) x^{m-1} = (x^{m+1})''.
  XRat xm(1);
  for (int m = 0; m <= 4; ++m) {
    EXPECT_TRUE(apply(c, xm) == XRat::x().pow(m + 1).derivative(2));
    xm *= XRat::x();
  }
}

TEST(Compose, EulerOperatorSquared) {
  const DiffOp xd = op({"0", "x"});
  const DiffOp c = compose(xd, xd);
  EXPECT_EQ(c, op({"0", "x", "x^2"}));
  // (xD)^2 x^m = m^2 x^m.
  XRat xm(1);
  for (int m = 0; m <= 4; ++m) {
    EXPECT_TRUE(apply(c, xm) == xm.scaled(Scalar(m * m)));
    xm *= XRat::x();
  }
}

TEST(Compose, OrderAdds) {
  EXPECT_EQ(compose(op({"x", "1", "x^2"}), op({"1", "x"})).order(), 3);
}

TEST(Commutator, DerivativeAndX) { EXPECT_EQ(commutator(DiffOp::derivative(), mul("x")), mul("1")); }

TEST(Commutator, SelfIsZero) {
  const DiffOp a = op({"k*x", "1/(x - 1)", "x^2 + 3"});
  EXPECT_TRUE(commutator(a, a).is_zero());
}

TEST(Commutator, SchrodingerWithPolynomial) {
  const DiffOp L = DiffOp::schrodinger(R("1/(x^2 + 1) + k*x"));
  const XRat g = R("a*x^3 + b*x + c");
  const DiffOp expected = DiffOp({-g.derivative(2), g.derivative().scaled(Scalar(-2))});
  const DiffOp got = commutator(L, DiffOp::multiplication(g));
  EXPECT_EQ(got, expected);
  expect_same_on_monomials(got, expected, 3);
}

TEST(Apply, Examples) {
  EXPECT_TRUE(apply(DiffOp::derivative().scaled(Scalar(-2)), R("x^3")) == R("-6*x^2"));
  EXPECT_TRUE(apply(DiffOp::schrodinger(R("x^2")), R("1")) == R("x^2"));
  const DiffOp a1 = commutator(DiffOp::schrodinger(R("x^2")), mul("x"));
  EXPECT_TRUE(apply(a1, R("x")) == R("-2"));
}

TEST(Equals, ZeroCoefficientsIgnored) {
  const DiffOp a = op({"x", "1"});
  EXPECT_EQ(a, a + op({"0", "0"}));
  EXPECT_EQ(DiffOp(std::vector<XRat>{R("x"), R("0"), R("0")}).order(), 0);
}

TEST(Equals, FirstCommutatorIndependentOfPotential) {
  for (const char* v : {"x^2", "1/(x - 2)^2 + k", "(x^3 + 1)/(x^2 + 3)"}) {
    const DiffOp a1 = commutator(DiffOp::schrodinger(R(v)), mul("x"));
    EXPECT_EQ(a1, DiffOp::derivative().scaled(Scalar(-2))) << v;
  }
}

TEST(Equals, SecondCommutatorOfOscillator) {
  const DiffOp L = DiffOp::schrodinger(R("x^2"));
  const DiffOp a2 = commutator(L, commutator(L, mul("x")));
  EXPECT_EQ(a2, mul("4*x"));
  EXPECT_FALSE(a2 == mul("2*x"));
}

TEST(Equals, AgreesWithMonomialOracle) {
  const DiffOp a = op({"1/x", "x", "1"});
  EXPECT_TRUE(test::kills_monomials(a - a));
  EXPECT_FALSE(test::kills_monomials(a));
  EXPECT_TRUE(annihilates_monomials(commutator(mul("x"), mul("x^2 + 1/x"))));
}

TEST(Potential, RecognizesSchrodingerForm) {
  const auto v = DiffOp::schrodinger(R("x^2 + 2/x^2")).potential();
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(*v == R("x^2 + 2/x^2"));
  EXPECT_FALSE(op({"x", "1", "-1"}).potential().has_value());
}

TEST(LogDerivative, PowerOfX) {
  EXPECT_TRUE(log_derivative(Q("x^a")) == R("a/x"));
  EXPECT_TRUE(log_derivative(Q("exp(x^2/8)")) == R("x/4"));
}

TEST(LogDerivative, LaguerreSeed) {
  const QuasiRat phi = Q("x^(m + 1/2)*exp(x^2/8)*(x^2 - k^2)/4");
  EXPECT_TRUE(log_derivative(phi) == R("(m + 1/2)/x + 2*x/(x^2 - k^2) + x/4"));
}

TEST(LogDerivative, ZeroBaseThrows) {
  EXPECT_THROW(log_derivative(QuasiRat({{XPoly(), Scalar(1)}}, XPoly())), Error);
}

TEST(IsEigenfunction, Examples) {
  auto e = is_eigenfunction(DiffOp::schrodinger(R("0")), Q("x"));
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(e->is_zero());

  const DiffOp osc = DiffOp::schrodinger(R("x^2"));
  e = is_eigenfunction(osc, Q("exp(-x^2/2)"));
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(*e == Scalar(1));

  e = is_eigenfunction(osc, Q("x*exp(-x^2/2)"));
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(*e == Scalar(3));

  EXPECT_FALSE(is_eigenfunction(osc, Q("x^2*exp(-x^2/2)")).has_value());
}

TEST(XRat, ParsedFractionHasExpectedParts) {
  const auto [num, den] = R("x^2 + 2/x^2").canonical_fraction();
  EXPECT_TRUE(num == P("x^4 + 2"));
  EXPECT_TRUE(den == P("x^2"));
}

TEST(XRat, ArithmeticAndDerivative) {
  const XRat f = R("1/(x - 1) + 1/(x + 1)");
  EXPECT_TRUE(f == R("2*x/(x^2 - 1)"));
  EXPECT_TRUE(f.derivative() == R("-1/(x - 1)^2 - 1/(x + 1)^2"));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_THROW(R("x") / R("0"), Error);
}

TEST(XPoly, DivisionAndGcd) {
  const auto [q, r] = P("x^3 - 1").divmod(P("x - 1"));
  EXPECT_TRUE(q == P("x^2 + x + 1"));
  EXPECT_TRUE(r.is_zero());
  const XPoly g = XPoly::gcd(P("x^2 - 1"), P("x^2 - 2*x + 1"));
  EXPECT_TRUE(g * Scalar(g.lc()).inverse() == P("x - 1"));
}

}  // namespace
}  // namespace bispec
