#include "lcpbound/bounds.h"

#include <cmath>

#include <gtest/gtest.h>

#include "lcpbound/errors.h"
#include "lcpbound/matcore.h"
#include "lcpbound/verify.h"
#include "test_util.h"

namespace lcpbound {
namespace {

using test::RelNear;

// Frozen from tests/oracles/example1_oracle.py (exact rational arithmetic).
constexpr double kLi2016K1 = 14.8064161656;
constexpr double kNewK1 = 14.3775905016;
constexpr double kWcdd = 15.2674897119;
constexpr double kLi2016K2 = 14.8228691512;
constexpr double kNewK2 = 14.4245659162;

void ExpectVectorNear(const Vector& actual, const Vector& expected, double tol) {
  ASSERT_EQ(actual.size(), expected.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    EXPECT_NEAR(actual[i], expected[i], tol) << "index " << i;
  }
}

TEST(BetaProfileTest, Example1) {
  const BetaProfile p = beta_profile(bplus_decompose(example1_matrix(1)));
  EXPECT_NEAR(p.beta, 0.05, 1e-14);
  ExpectVectorNear(p.beta_i, {0.9, 0.1, 0.05, 0.1}, 1e-14);
  ExpectVectorNear(p.beta_tilde, {0.9, 0.9, 0.9, 1.0}, 1e-14);
  ExpectVectorNear(p.l, {0.95, 0.95, 0.1, 0.0}, 1e-14);
  ExpectVectorNear(p.beta_bar, {0.905, 0.905, 0.99, 1.0}, 1e-14);
}

TEST(BetaProfileTest, Identity) {
  const BetaProfile p = beta_profile(bplus_decompose(Matrix::Identity(4)));
  EXPECT_EQ(p.beta, 1.0);
  EXPECT_EQ(p.beta_i, Vector(4, 1.0));
  EXPECT_EQ(p.l, Vector(4, 0.0));
  EXPECT_EQ(p.beta_tilde, Vector(4, 1.0));
  EXPECT_EQ(p.beta_bar, Vector(4, 1.0));
}

TEST(BetaProfileTest, Diagonal) {
  const BetaProfile p = beta_profile(bplus_decompose(Matrix{{2, 0.5}, {0.5, 2}}));
  EXPECT_EQ(p.beta, 1.5);
  EXPECT_EQ(p.l, (Vector{0, 0}));
  EXPECT_EQ(p.beta_bar, (Vector{1.5, 1.5}));
}

TEST(BetaProfileTest, RejectsNonPositiveDiagonal) {
  EXPECT_THROW(beta_profile(bplus_decompose(Matrix{{1, 0}, {0, -1}})),
               NotApplicable);
  EXPECT_THROW(beta_profile(bplus_decompose(Matrix{{0.0}})), NotApplicable);
}

TEST(BoundGpTest, Examples) {
  EXPECT_TRUE(RelNear(bound_gp(example1_matrix(1)), 60.0, 1e-12));
  EXPECT_TRUE(RelNear(bound_gp(example1_matrix(2)), 90.0, 1e-12));
  EXPECT_EQ(bound_gp(Matrix::Identity(4)), 3.0);
  EXPECT_EQ(bound_gp(Matrix{{2, 0.5}, {0.5, 2}}), 1.0);
}

TEST(BoundLi2016Test, Examples) {
  EXPECT_NEAR(bound_li2016(example1_matrix(1)), kLi2016K1, 1e-9);
  EXPECT_NEAR(bound_li2016(example1_matrix(2)), kLi2016K2, 1e-9);
  EXPECT_EQ(bound_li2016(Matrix::Identity(4)), 12.0);
  EXPECT_EQ(bound_li2016(Matrix{{2, 0.5}, {0.5, 2}}), 2.0);
}

TEST(BoundWcddTest, Examples) {
  EXPECT_NEAR(bound_wcdd(example1_matrix(1)), kWcdd, 1e-9);
  EXPECT_EQ(bound_wcdd(Matrix::Identity(4)), 12.0);
  EXPECT_EQ(bound_wcdd(Matrix{{2, 0.5}, {0.5, 2}}), 2.0);
}

TEST(BoundNewTest, Examples) {
  EXPECT_NEAR(bound_new(example1_matrix(1)), kNewK1, 1e-9);
  EXPECT_NEAR(bound_new(example1_matrix(2)), kNewK2, 1e-9);
  EXPECT_EQ(bound_new(Matrix::Identity(4)), 12.0);
  EXPECT_EQ(bound_new(Matrix{{2, 0.5}, {0.5, 2}}), 2.0);
}

TEST(BoundsTest, RejectNonBMatrices) {
  const Matrix m{{1, 2}, {0, 1}};
  EXPECT_THROW(bound_gp(m), NotBMatrix);
  EXPECT_THROW(bound_li2016(m), NotBMatrix);
  EXPECT_THROW(bound_wcdd(m), NotBMatrix);
  EXPECT_THROW(bound_new(m), NotBMatrix);
  EXPECT_THROW(compute_bounds(m), NotBMatrix);
}

TEST(BoundsTest, OneByOneIsZero) {
  const BoundReport r = compute_bounds(Matrix{{2.5}});
  EXPECT_EQ(r.gp, 0.0);
  EXPECT_EQ(r.li2016, 0.0);
  EXPECT_EQ(r.wcdd, 0.0);
  EXPECT_EQ(r.new_bound, 0.0);
}

TEST(BoundsTest, ReportMatchesIndividualBounds) {
  const Matrix m = gen_b_matrix(6, 11);
  const BoundReport r = compute_bounds(m);
  EXPECT_EQ(r.n, 6u);
  EXPECT_EQ(r.gp, bound_gp(m));
  EXPECT_EQ(r.li2016, bound_li2016(m));
  EXPECT_EQ(r.wcdd, bound_wcdd(m));
  EXPECT_EQ(r.new_bound, bound_new(m));
}

TEST(BoundsProperty, OrderingChain) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Matrix m = gen_b_matrix(2 + seed % 9, seed);
    const BoundReport r = compute_bounds(m);
    EXPECT_LE(r.new_bound, r.li2016 * (1 + 1e-9)) << "seed " << seed;
    EXPECT_LE(r.li2016, r.wcdd * (1 + 1e-9)) << "seed " << seed;
    EXPECT_TRUE(std::isfinite(r.gp) && r.gp > 0);
    EXPECT_TRUE(std::isfinite(r.wcdd) && r.wcdd > 0);
  }
}

TEST(BoundsProperty, ProfileFacts) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Matrix m = gen_b_matrix(1 + seed % 10, seed);
    const BPlusDecomposition d = bplus_decompose(m);
    const BetaProfile p = beta_profile(d);
    for (std::size_t i = 0; i < m.size(); ++i) {
      EXPECT_LT(p.l[i], 1.0);
      EXPECT_GT(p.beta_tilde[i], 0.0);
      EXPECT_LE(p.beta_tilde[i], p.beta_bar[i]);
      EXPECT_LE(p.beta_bar[i], d.b_plus(i, i));
    }
    EXPECT_EQ(p.l.back(), 0.0);
  }
}

TEST(BoundsProperty, PerTermDomination) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const BPlusDecomposition d = bplus_decompose(gen_b_matrix(2 + seed % 9, seed));
    const BetaProfile p = beta_profile(d);
    const Matrix& b = d.b_plus;
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      double tail = 0.0;
      for (std::size_t k = j + 1; k < b.size(); ++k) tail += std::abs(b(j, k));
      const double li_factor = 1 + tail / p.beta_bar[j];
      const double wcdd_factor = b(j, j) / p.beta_tilde[j];
      const double new_factor = b(j, j) / p.beta_bar[j];
      EXPECT_LE(li_factor, wcdd_factor * (1 + 1e-12));
      EXPECT_LE(new_factor, li_factor * (1 + 1e-12));
    }
  }
}

TEST(BoundsProperty, Example1Family) {
  for (int k = 1; k <= 50; ++k) {
    const Matrix m = example1_matrix(k);
    EXPECT_TRUE(RelNear(bound_gp(m), 30.0 * (k + 1), 1e-9)) << "k=" << k;
    EXPECT_NEAR(bound_wcdd(m), kWcdd, 1e-9) << "k=" << k;
  }
}

TEST(WangInverseBoundTest, Examples) {
  EXPECT_NEAR(wang_inverse_bound(Matrix{{2, -1}, {0, 2}}), 4.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(inf_norm(inverse(Matrix{{2, -1}, {0, 2}})), 0.75);
  EXPECT_EQ(wang_inverse_bound(Matrix::Identity(5)), 5.0);
  EXPECT_EQ(wang_inverse_bound(Matrix{{2, 0}, {0, 4}}), 0.75);
}

TEST(WangInverseBoundTest, RejectsOutsideClass) {
  EXPECT_THROW(wang_inverse_bound(Matrix{{2, 1}, {0, 2}}), NotSddM);
  EXPECT_THROW(wang_inverse_bound(Matrix{{1, -1}, {0, 2}}), NotSddM);
  EXPECT_THROW(wang_inverse_bound(Matrix{{-2, 0}, {0, 2}}), NotSddM);
}

TEST(WangInverseBoundProperty, DominatesTrueNorm) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Matrix a = gen_sdd_m_matrix(1 + seed % 10, seed);
    EXPECT_GE(wang_inverse_bound(a) * (1 + 1e-12), inf_norm(inverse(a)))
        << "seed " << seed;
  }
}

TEST(LemmaScalarChecksTest, Examples) {
  EXPECT_EQ(lemma_scalar_checks(2, 0, 1), std::pair(true, true));
  EXPECT_EQ(lemma_scalar_checks(0.5, 1, 0), std::pair(true, true));
  // 1/0.51 = 1.96 <= 3.33 and 1.4/0.51 = 2.75 <= 6.67
  EXPECT_EQ(lemma_scalar_checks(0.3, 2, 0.7), std::pair(true, true));
}

TEST(LemmaScalarChecksTest, DomainErrors) {
  EXPECT_THROW(lemma_scalar_checks(0, 1, 0.5), DomainError);
  EXPECT_THROW(lemma_scalar_checks(-1, 1, 0.5), DomainError);
  EXPECT_THROW(lemma_scalar_checks(1, -1, 0.5), DomainError);
  EXPECT_THROW(lemma_scalar_checks(1, 1, 1.5), DomainError);
  EXPECT_THROW(lemma_scalar_checks(1, 1, -0.1), DomainError);
  EXPECT_THROW(lemma_scalar_checks(NAN, 1, 0.5), DomainError);
}

TEST(Example1ClosedFormsTest, PrintedValues) {
  const Example1ClosedForms k1 = example1_closed_forms(1);
  EXPECT_EQ(k1.gp, 60.0);
  EXPECT_NEAR(k1.new_paper, 13.6777, 1e-4);
  EXPECT_NEAR(k1.li2016_paper, 14.1044, 1e-4);
  const Example1ClosedForms k2 = example1_closed_forms(2);
  EXPECT_EQ(k2.gp, 90.0);
  EXPECT_NEAR(k2.new_paper, 13.7110, 1e-4);
  EXPECT_NEAR(k2.li2016_paper, 14.1079, 1e-4);
  EXPECT_THROW(example1_closed_forms(0), DomainError);
  EXPECT_THROW(example1_matrix(0), DomainError);
}

}  // namespace
}  // namespace lcpbound
