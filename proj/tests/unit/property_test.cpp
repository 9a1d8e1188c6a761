#include "properties.hpp"

#include <gtest/gtest.h>

namespace bispec::test {
namespace {

void expect_ok(const PropertyOutcome& o, int n) {
  EXPECT_EQ(o.instances, n) << o.name;
  EXPECT_EQ(o.failures, 0) << o.name << ": " << o.first_failure;
}

TEST(Property, MpolyRingLaws) { expect_ok(mpoly_ring_laws(100, 1000u), 100); }
TEST(Property, FractionEquality) { expect_ok(fraction_equality(100, 1001u), 100); }
TEST(Property, AlgebraicRelations) { expect_ok(algebraic_relations(100, 1002u), 100); }
TEST(Property, NullspaceBackSubstitution) { expect_ok(nullspace_back_substitution(100, 1003u), 100); }
TEST(Property, ComposeMatchesApplication) { expect_ok(compose_matches_application(100, 1004u), 100); }
TEST(Property, JacobiIdentity) { expect_ok(jacobi_identity(100, 1005u), 100); }
TEST(Property, DerivationLaw) { expect_ok(derivation_law(100, 1006u), 100); }
TEST(Property, CommutatorBilinearAntisymmetric) { expect_ok(commutator_bilinear_antisymmetric(100, 1007u), 100); }
TEST(Property, CommutatorOrderBound) { expect_ok(commutator_order_bound(100, 1008u), 100); }
TEST(Property, MultiplicationOperatorsCommute) { expect_ok(multiplication_operators_commute(100, 1009u), 100); }
TEST(Property, EqualsMatchesMonomialOracle) { expect_ok(equals_matches_monomial_oracle(100, 1010u), 100); }
TEST(Property, AdPowerLinearInTheta) { expect_ok(ad_power_linear_in_theta(100, 1011u), 100); }
TEST(Property, AdPowerMatchesApplication) { expect_ok(ad_power_matches_application(100, 1012u), 100); }
TEST(Property, DarbouxStepsIntertwine) { expect_ok(darboux_steps_intertwine(100, 1013u), 100); }
TEST(Property, MatrixRightFactorComposition) { expect_ok(matrix_right_factor_composition(100, 1014u), 100); }
TEST(Property, MatrixEmbeddingMatchesScalar) { expect_ok(matrix_embedding_matches_scalar(100, 1015u), 100); }

// The equality oracle must see equal pairs too, not only distinct ones.
TEST(Property, EqualityOracleSeesEqualPairs) { EXPECT_GT(equals_matches_monomial_oracle(100, 7u).positives, 0); }

}  // namespace
}  // namespace bispec::test
