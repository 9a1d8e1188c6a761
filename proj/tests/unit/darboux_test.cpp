#include "support.hpp"

#include "bispec/darboux/darboux.hpp"
#include "bispec/families/catalog.hpp"

#include <gtest/gtest.h>

namespace bispec {
namespace {

using test::Q;
using test::R;
using test::S;
using test::V;

TEST(DarbouxStep, FreeParticleWithLinearSeed) {
  const auto r = darboux_step(DiffOp::schrodinger(R("0")), Q("x"));
  EXPECT_TRUE(r.step.eigenvalue.is_zero());
  ASSERT_TRUE(r.op.potential().has_value());
  EXPECT_TRUE(*r.op.potential() == R("2/x^2"));
  EXPECT_TRUE(r.step.output_V == R("2/x^2"));
  EXPECT_TRUE(r.step.input_V.is_zero());
}

TEST(DarbouxStep, OscillatorFirstExcitedState) {
  const DiffOp L = DiffOp::schrodinger(R("x^2"));
  const auto r = darboux_step(L, Q("x*exp(-x^2/2)"));
  EXPECT_TRUE(r.step.eigenvalue == Scalar(3));
  EXPECT_TRUE(*r.op.potential() == R("x^2 + 2/x^2 + 2"));
  EXPECT_TRUE(intertwine_check(L, r.op, Q("x*exp(-x^2/2)")));
}

TEST(DarbouxStep, NonEigenfunctionCarriesRatio) {
  const DiffOp L = DiffOp::schrodinger(R("x^2"));
  try {
    darboux_step(L, Q("x^2*exp(-x^2/2)"));
    FAIL() << "no throw";
  } catch (const NotEigenfunctionError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEigenfunction);
    EXPECT_TRUE(e.ratio() == R("5 - 2/x^2"));
  }
}

TEST(Intertwine, PerturbedOperatorFails) {
  const DiffOp L = DiffOp::schrodinger(R("x^2"));
  const auto r = darboux_step(L, Q("exp(-x^2/2)"));
  EXPECT_TRUE(intertwine_check(L, r.op, Q("exp(-x^2/2)")));
  const DiffOp bumped = r.op + DiffOp::multiplication(R("1/x"));
  EXPECT_FALSE(intertwine_check(L, bumped, Q("exp(-x^2/2)")));
}

TEST(DarbouxChain, SingletonMatchesStep) {
  const DiffOp L = DiffOp::schrodinger(R("x^2"));
  const auto chain = darboux_chain(L, {Q("x*exp(-x^2/2)")});
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0].op, darboux_step(L, Q("x*exp(-x^2/2)")).op);
}

TEST(SamePotential, UpToConstantAndExact) {
  EXPECT_TRUE(same_potential(R("x^2 + 1/x"), R("x^2 + 1/x + k")));
  EXPECT_FALSE(same_potential(R("x^2 + 1/x"), R("x^2 + 1/x + k"), PotentialCompare::Exact));
  EXPECT_FALSE(same_potential(R("x^2"), R("x^2 + x")));
}

TEST(LogPotential, Examples) {
  EXPECT_TRUE(log_potential(Q("x")) == R("2/x^2"));
  EXPECT_TRUE(log_potential(Q("x^2 - k^2")) == R("2/(x - k)^2 + 2/(x + k)^2"));
  EXPECT_TRUE(log_potential(Q("exp(x^2)")) == R("-4"));
}

TEST(Laguerre, MFormMatchesKForm) {
  const XRat vm = laguerre_classical_potential_m();
  const XRat vk = vm.substitute(V("m"), S("-(k^2 + 4)/4"));
  EXPECT_TRUE(vk == *laguerre_catalog(0).scalar().L.potential());
}

TEST(Laguerre, FirstStepMatchesCatalog) {
  const DiffOp& L0 = laguerre_catalog(0).scalar().L;
  const auto r = darboux_step(L0, laguerre_step1_seed());
  EXPECT_TRUE(r.step.eigenvalue == S("k^2/8 - 1"));
  EXPECT_TRUE(same_potential(*r.op.potential(), *laguerre_catalog(1).scalar().L.potential()));
  EXPECT_TRUE(intertwine_check(L0, r.op, laguerre_step1_seed()));
}

TEST(Laguerre, ChainReachesThirdStep) {
  const auto chain = darboux_chain(laguerre_catalog(0).scalar().L, laguerre_chain_seeds());
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_TRUE(chain[1].step.eigenvalue == S("k^2/8 - 2"));
  EXPECT_TRUE(chain[2].step.eigenvalue == S("k^2/8 - 3"));
  EXPECT_TRUE(same_potential(*chain[1].op.potential(), *laguerre_catalog(2).scalar().L.potential()));
  EXPECT_TRUE(same_potential(*chain[2].op.potential(), *find_entry("laguerre-step:3:k6").scalar().L.potential()));
  EXPECT_FALSE(same_potential(*chain[2].op.potential(), *laguerre_catalog(3).scalar().L.potential()));
}

TEST(Laguerre, PrintedTauConstantBreaksThirdSeed) {
  try {
    darboux_chain(laguerre_catalog(0).scalar().L, laguerre_chain_seeds("12*k^4 - 32*k^2 - k"));
    FAIL() << "no throw";
  } catch (const NotEigenfunctionError& e) {
    EXPECT_NE(std::string(e.what()).find("step 2"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace bispec
