#include "sps/errors.hpp"
#include "sps/oracle_verify.hpp"
#include "sps/phi_sequence.hpp"
#include "sps/root_bounds.hpp"
#include "support/builders.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

using namespace sps;
using namespace sps::testing;

namespace {

const SparsePoly X = SparsePoly::x();

// phi = f + f^2 with f = X
SpsExpression f_plus_f2() { return expression({X}, {{ints({1}), cst(1)}, {ints({2}), cst(1)}}); }

}  // namespace

TEST(TermDegree, Examples) {
  LevelState s = initial_state(expression({poly({{"1", "1"}, {"1", "0"}})}, {{ints({5}), cst(1)}}));
  EXPECT_EQ(term_degree(s, 0), 5);

  SpsExpression e = expression({poly({{"1", "2"}}), poly({{"1", "1"}, {"2", "0"}})},
                               {{{Integer("1000000000000"), Integer(3)}, poly({{"1", "3"}})}});
  s = initial_state(e);
  EXPECT_EQ(term_degree(s, 0), Integer("2000000000006"));

  s = initial_state(expression({X}, {{ints({0}), cst(7)}}));
  EXPECT_EQ(term_degree(s, 0), 0);
  EXPECT_THROW(term_degree(s, 3), InvalidArgument);
}

TEST(TermLeadingCoeff, Examples) {
  LevelState s = initial_state(expression({poly({{"2", "1"}, {"1", "0"}})}, {{ints({3}), cst(1)}}));
  EXPECT_EQ(term_leading_coeff(s, 0), Rational(8));
  EXPECT_EQ(expand_term(s, 0).leading_coeff(), Rational(8));

  s = initial_state(expression({poly({{"1", "1"}, {"-5", "0"}})}, {{ints({4}), poly({{"-3", "1"}})}}));
  EXPECT_EQ(term_leading_coeff(s, 0), Rational(-3));
  EXPECT_EQ(expand_term(s, 0).leading_coeff(), Rational(-3));

  s = initial_state(expression({X, X}, {{ints({0, 0}), cst(1)}}));
  EXPECT_EQ(term_leading_coeff(s, 0), Rational(1));
}

TEST(TildeTransform, FPlusF2PivotTermOne) {
  const LevelState s = initial_state(f_plus_f2());
  const LevelState next = tilde_transform(s, 0);
  ASSERT_EQ(next.active_terms.size(), 1u);
  EXPECT_EQ(next.active_terms[0].original_index, 1u);
  EXPECT_EQ(next.active_terms[0].g, cst(1));
  EXPECT_EQ(next.active_terms[0].alphas, ints({2}));
  EXPECT_EQ(expand_level(next), poly({{"1", "2"}}));
  EXPECT_TRUE(check_transform_identity(s, next, 0));
}

TEST(TildeTransform, ScalarMultipleIsDropped) {
  // phi = T + 3T with T = (X+1)^2 X
  const SpsExpression e = expression({poly({{"1", "1"}, {"1", "0"}}), X},
                                     {{ints({2, 1}), poly({{"1", "1"}, {"2", "0"}})},
                                      {ints({2, 1}), poly({{"3", "1"}, {"6", "0"}})}});
  const LevelState s = initial_state(e);
  const LevelState next = tilde_transform(s, 0);
  EXPECT_TRUE(next.syntactically_zero());
  EXPECT_TRUE(check_transform_identity(s, next, 0));
}

TEST(TildeTransform, EqualRowsConstantGsVanish) {
  const SpsExpression e = expression({poly({{"1", "2"}, {"-1", "0"}})}, {{ints({3}), cst(2)}, {ints({3}), cst(-5)}});
  EXPECT_TRUE(tilde_transform(initial_state(e), 0).syntactically_zero());
}

TEST(TildeTransform, RejectsInactivePivot) {
  const LevelState s = initial_state(f_plus_f2());
  EXPECT_THROW(tilde_transform(s, 7), InvalidArgument);
}

TEST(PhiSequence, SingleTermHasOneLevel) {
  const auto levels = phi_sequence(expression({X}, {{ints({4}), cst(1)}}));
  ASSERT_EQ(levels.size(), 1u);
  EXPECT_FALSE(levels[0].pivot.has_value());
}

TEST(PhiSequence, FPlusF2PivotIsHigherDegree) {
  const auto levels = phi_sequence(f_plus_f2());
  ASSERT_EQ(levels.size(), 2u);
  EXPECT_EQ(levels[0].pivot, 1u);
  ASSERT_EQ(levels[1].active_terms.size(), 1u);
  // Surviving term 1: g~ = (1 - 2) f' = -1, so phi_2 = -X.
  EXPECT_EQ(levels[1].active_terms[0].original_index, 0u);
  EXPECT_EQ(levels[1].active_terms[0].g, cst(-1));
  EXPECT_EQ(expand_level(levels[1]), poly({{"-1", "1"}}));
  EXPECT_TRUE(check_transform_identity(levels[0], levels[1], 1));
}

TEST(PhiSequence, AllZeroMultipliersAreSyntacticallyZero) {
  const auto levels = phi_sequence(expression({X}, {{ints({1}), SparsePoly()}, {ints({2}), SparsePoly()}}));
  ASSERT_EQ(levels.size(), 1u);
  EXPECT_TRUE(levels[0].syntactically_zero());
}

TEST(PhiSequence, PivotTiesGoToLowestIndex) {
  const SpsExpression e = expression({X, poly({{"1", "1"}, {"1", "0"}})},
                                     {{ints({0, 1}), cst(1)}, {ints({1, 0}), cst(2)}, {ints({0, 0}), cst(1)}});
  const auto levels = phi_sequence(e);
  EXPECT_EQ(levels[0].pivot, 0u);
}

TEST(PhiSequence, PropagatesValidation) {
  EXPECT_THROW(phi_sequence(expression({SparsePoly()}, {{ints({1}), cst(1)}})), InvalidExpression);
}

TEST(PhiSequenceProperty, IdentityAndGrowthOnRandomInstances) {
  Rng rng(2024);
  InstanceParams params;
  params.max_alpha = 5;
  params.max_factor_degree = 3;
  for (int iter = 0; iter < 150; ++iter) {
    const SpsExpression e = iter % 3 == 0 ? planted_zero(rng, params) : random_expression(rng, params);
    const auto levels = phi_sequence(e);
    const IntSet s = support_base_set(e);
    const std::size_t m = e.m();
    const std::size_t t = e.max_factor_sparsity();
    for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
      ASSERT_TRUE(check_transform_identity(levels[l], levels[l + 1], *levels[l].pivot)) << "iter " << iter;
      const std::size_t h = levels[l].max_g_sparsity();
      IntSet sg, sg_next;
      for (const auto& t_ : levels[l].active_terms) sg = set_union(sg, support(t_.g));
      for (const auto& t_ : levels[l + 1].active_terms) {
        sg_next = set_union(sg_next, support(t_.g));
        Integer cap = Integer(static_cast<unsigned long>(m + 2)) * Integer(static_cast<unsigned long>(h * h));
        for (std::size_t j = 0; j < m; ++j) cap *= static_cast<unsigned long>(t);
        ASSERT_LE(Integer(static_cast<unsigned long>(t_.g.sparsity())), cap);
      }
      ASSERT_TRUE(is_subset(sg_next, sumset(sumset_power(sg, 2), s)));
    }
  }
}
