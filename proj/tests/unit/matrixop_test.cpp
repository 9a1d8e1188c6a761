#include "support.hpp"

#include "bispec/error.hpp"
#include "bispec/families/catalog.hpp"
#include "bispec/matrixop/matrixop.hpp"

#include <gtest/gtest.h>

namespace bispec {
namespace {

using test::R;

XMatrix M(std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<XRat>> r;
  for (const auto& row : rows) {
    std::vector<XRat> rr;
    for (const char* e : row) rr.push_back(R(e));
    r.push_back(std::move(rr));
  }
  return XMatrix::from_rows(r);
}

bool same(const MatDiffOp& a, const MatDiffOp& b) { return (a - b).is_zero(); }

const MatDiffOp& hermite_L() { return find_entry("matrix:hermite:1").matrix().L; }

TEST(XMatrix, Arithmetic) {
  const XMatrix a = M({{"x", "1"}, {"0", "x^2"}});
  const XMatrix b = M({{"1", "0"}, {"x", "1"}});
  const XMatrix p = a * b;
  EXPECT_TRUE(p.at(0, 0) == R("2*x"));
  EXPECT_TRUE(p.at(1, 0) == R("x^3"));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE(a.derivative().at(1, 1) == R("2*x"));
  EXPECT_TRUE(XMatrix::identity(2, R("x")).at(0, 1).is_zero());
}

TEST(MatDiffOp, SelfCommutatorVanishes) {
  EXPECT_TRUE(mat_commutator(hermite_L(), hermite_L()).is_zero());
}

TEST(MatDiffOp, CommutatorWithX) {
  // L(F x) - (L F) x = 2F' + F B for L F = F'' + F' B + F C.
  const MatDiffOp& L = hermite_L();
  const MatDiffOp X = MatDiffOp::multiplication(XMatrix::identity(2, R("x")), ActionSide::Right);
  const MatDiffOp c = mat_commutator(L, X);
  const MatDiffOp expected({L.coeff(1), XMatrix::identity(2, R("2"))}, ActionSide::Right);
  EXPECT_TRUE(same(c, expected));
  EXPECT_TRUE(same(mat_ad_power(L, X, 1), c));
  EXPECT_TRUE(same(mat_ad_power(L, X, 0), X));
}

TEST(MatDiffOp, SideMismatchThrows) {
  const MatDiffOp a = MatDiffOp::embed(DiffOp::derivative(), 2, ActionSide::Right);
  const MatDiffOp b = MatDiffOp::embed(DiffOp::derivative(), 2, ActionSide::Left);
  EXPECT_THROW(mat_compose(a, b), Error);
  EXPECT_THROW(mat_compose(a, MatDiffOp::embed(DiffOp::derivative(), 3, ActionSide::Right)), Error);
}

TEST(MatDiffOp, TimesRightComposes) {
  const MatDiffOp a({M({{"x", "1"}, {"0", "1"}}), M({{"1", "0"}, {"x", "0"}})}, ActionSide::Right);
  const XMatrix m1 = M({{"1", "x"}, {"0", "1"}});
  const XMatrix m2 = M({{"0", "1"}, {"1", "x^2"}});
  EXPECT_TRUE(same(a.times_right(m1).times_right(m2), a.times_right(m1 * m2)));
}

TEST(MatrixCatalog, EntriesAgreeWithClaims) {
  for (const char* id : {"matrix:hermite:1", "matrix:hermite:r1", "matrix:hermite:r2", "matrix:laguerre:1:weight4",
                         "matrix:laguerre:2:weight4", "matrix:laguerre:3:shifted"}) {
    const auto c = check_entry(find_entry(id));
    EXPECT_TRUE(c.condition_holds) << id;
    EXPECT_TRUE(c.verdict) << id;
  }
  for (const char* id : {"matrix:laguerre:1", "matrix:laguerre:2", "matrix:laguerre:3"}) {
    const auto c = check_entry(find_entry(id));
    EXPECT_FALSE(c.condition_holds) << id;
    ASSERT_TRUE(c.matrix_residual.has_value()) << id;
    EXPECT_FALSE(c.matrix_residual->is_zero()) << id;
  }
}

TEST(MatrixCatalog, ProbeSelectsRight) {
  const auto& e = find_entry("matrix:hermite:1");
  const auto p = convention_probe(e.matrix().L, e.matrix().condition);
  EXPECT_TRUE(p.right);
  ASSERT_TRUE(p.selected().has_value());
  EXPECT_EQ(*p.selected(), ActionSide::Right);

  const auto& bad = find_entry("matrix:laguerre:3");
  const auto q = convention_probe(bad.matrix().L, bad.matrix().condition);
  EXPECT_FALSE(q.left);
  EXPECT_FALSE(q.right);
}

// Under the right action A_2 - 4A_0 vanishes outright, so any M works; under
// the left action only the first row survives.
TEST(MatrixCatalog, SecondRowDependsOnSide) {
  const auto& e = find_entry("matrix:hermite:1");
  const XMatrix E21 = M({{"0", "0"}, {"1", "0"}});
  const XMatrix E11 = M({{"1", "0"}, {"0", "0"}});
  const MatDiffOp& L = e.matrix().L;
  const MatDiffOp& theta = e.matrix().condition.theta;
  EXPECT_TRUE(verify_matrix_condition(L, {{{2, E21}, {0, E21.scaled(Scalar(-4))}}, theta}).holds);

  const MatDiffOp Ll = L.with_side(ActionSide::Left);
  const MatDiffOp tl = theta.with_side(ActionSide::Left);
  const auto rep = verify_matrix_condition(Ll, {{{2, E21}, {0, E21.scaled(Scalar(-4))}}, tl});
  EXPECT_FALSE(rep.holds);
  EXPECT_FALSE(rep.residual.is_zero());
  EXPECT_TRUE(verify_matrix_condition(Ll, {{{2, E11}, {0, E11.scaled(Scalar(-4))}}, tl}).holds);
}

}  // namespace
}  // namespace bispec
