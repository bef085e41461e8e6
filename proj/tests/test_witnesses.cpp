#include <gtest/gtest.h>

#include "oracles.hpp"

namespace baxter {
namespace {

const RingId Q = RingId::rational();

Scalar q(long num, long den = 1) { return Scalar::from_rational(Q, mpq_class(num, den)); }

TEST(CharP, MembershipByDefinition) {
  EXPECT_FALSE(char_p_ideal_member(TensorWord::unit_power(3), CharPIdealSpec(2, 1)));
  EXPECT_TRUE(char_p_ideal_member(TensorWord::unit_power(3), CharPIdealSpec(2, 2)));
  EXPECT_FALSE(char_p_ideal_member(TensorWord::unit_power(1), CharPIdealSpec(5, 3)));
  EXPECT_THROW(CharPIdealSpec(4, 1), Error);
  EXPECT_THROW(CharPIdealSpec(3, 0), Error);
  EXPECT_THROW(char_p_ideal_member(TensorWord({Monomial::variable(0)}), CharPIdealSpec(3, 1)), Error);
}

TEST(CharP, ClosureHoldsForEveryWeight) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (std::uint64_t k : {1u, 2u}) {
      const RingId fp = RingId::prime_field(p);
      for (std::uint64_t l = 0; l < p; ++l) {
        const auto report = char_p_closure_check(CharPIdealSpec(p, k), 20, Scalar::from_integer(fp, long(l)));
        EXPECT_TRUE(report.passed()) << p << "," << k << "," << l;
        EXPECT_GT(report.products_checked, 0u);
        EXPECT_FALSE(report.strict_at.empty());
      }
    }
  }
}

TEST(CharP, ClosedFormModPMatchesBruteForce) {
  const RingId f3 = RingId::prime_field(3);
  const auto ctx = AlgebraCtx::make(f3, {}, Scalar::from_integer(f3, 2));
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      ShuffleElement closed(ctx);
      for (const auto& [deg, c] : unit_power_product(m, n, ctx->weight())) closed.add_term(TensorWord::unit_power(deg + 1), c);
      EXPECT_EQ(closed, oracle::product_brute(ctx, TensorWord::unit_power(m + 1), TensorWord::unit_power(n + 1)));
    }
  }
}

TEST(CharP, WeightOutsideFieldIsRejected) {
  EXPECT_THROW((void)char_p_closure_check(CharPIdealSpec(2, 1), 10, q(1)), Error);
}

TEST(GSum, Examples) {
  const auto one = gsum_solve({1, q(1)});
  EXPECT_TRUE(one.inconsistent);
  const auto three = gsum_solve({3, q(2)});
  EXPECT_TRUE(three.inconsistent);
  ASSERT_EQ(three.forced.size(), 3u);
  EXPECT_EQ(three.forced[0].first, 3u);
  for (const auto& [index, value] : three.forced) EXPECT_TRUE(value.is_zero()) << index;
  EXPECT_TRUE(three.lambda_g1.is_zero());
  EXPECT_TRUE(gsum_solve({1, q(0)}).inconsistent);
  for (std::size_t n = 1; n <= 8; ++n)
    for (long l : {-3L, 0L, 1L, 5L}) EXPECT_TRUE(gsum_solve({n, q(l)}).inconsistent);
}

TEST(GSum, RequiresCharacteristicZero) {
  try {
    (void)gsum_solve({2, Scalar::one(RingId::prime_field(7))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonQAlgebra);
  }
}

TEST(SigmaChain, AgreesWithGSum) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (long l : {0L, 1L, 2L}) {
      const auto report = sigma_chain_check(n, q(l), n + 2);
      EXPECT_TRUE(report.passed()) << n << "," << l;
      EXPECT_FALSE(report.excluded.is_member());
      EXPECT_TRUE(report.included.is_member());
      EXPECT_TRUE(report.gsum.inconsistent);
      auto larger = report.generators;
      larger.push_back(report.target);
      EXPECT_TRUE(verify_membership(report.target, larger, report.included));
    }
  }
}

TEST(SigmaChain, Examples) {
  EXPECT_FALSE(sigma_chain_check(1, q(1), 3).excluded.is_member());
  EXPECT_FALSE(sigma_chain_check(2, q(0), 4).excluded.is_member());
}

TEST(LemmaIdeal, BothBranches) {
  const Monomial x = Monomial::variable(0);
  for (std::size_t L = 1; L <= 3; ++L) {
    for (std::uint64_t D = 1; D <= 3; ++D) {
      const auto linear = lemma_ideal_check({x}, q(0), false, L, D);
      EXPECT_TRUE(linear.passed()) << L << "," << D << " " << linear.difference_text.value_or("");
      std::vector<Monomial> ideal;
      for (std::uint32_t e = 1; e <= D; ++e) ideal.push_back(Monomial::variable(0, e));
      const auto trunc = lemma_ideal_check(ideal, q(1), true, L, D);
      EXPECT_TRUE(trunc.passed()) << L << "," << D << " " << trunc.difference_text.value_or("");
      EXPECT_EQ(trunc.span_rank, trunc.ideal_rank);
    }
  }
}

TEST(LemmaIdeal, NonIdealModuleNeedsWeightZero) {
  try {
    (void)lemma_ideal_check({Monomial::variable(0)}, q(1), false, 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PropertyViolation);
  }
}

TEST(LemmaIdeal, WeightMattersWhenModuleIsNotAnIdeal) {
  // with lambda = 1, (1(x)x)^2 contributes 1(x)x^2, which is outside span(S) for M = span{x}
  const auto ctx = AlgebraCtx::make(Q, {"x"}, q(1));
  const auto sat = baxter_ideal_saturate(ctx, {parse_element(ctx, "1⊗x")}, 2, 2);
  EXPECT_TRUE(sat.basis.contains(parse_element(ctx, "1⊗x^2")));
}

TEST(ModuleChain, StrictAndMatchesProjection) {
  const auto report = module_chain_check(3, 2, 3, q(0));
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.ranks.size(), 3u);
  EXPECT_TRUE(std::is_sorted(report.ranks.begin(), report.ranks.end()));
  for (bool b : report.strict) EXPECT_TRUE(b);
  for (bool b : report.projection_matches_module) EXPECT_TRUE(b);
  EXPECT_THROW((void)module_chain_check(3, 2, 3, q(1)), Error);
  EXPECT_THROW((void)module_chain_check(3, 2, 2, q(0)), Error);
}

TEST(BaxterReductionCheck, SmallRunPasses) {
  const auto report = baxter_reduction_check(7, 12);
  EXPECT_TRUE(report.passed()) << report.failure_text.value_or("");
  EXPECT_EQ(report.reduced_to_zero, 12u);
  EXPECT_EQ(report.exact_traces, 12u);
  EXPECT_EQ(report.in_saturated_span, 12u);
  const auto again = baxter_reduction_check(7, 12);
  EXPECT_EQ(certify(again).to_json().dump(), certify(report).to_json().dump());
}

TEST(Certificates, ShapeAndVerdict) {
  const Json j = certify(char_p_closure_check(CharPIdealSpec(3, 1), 10, Scalar::one(RingId::prime_field(3)))).to_json();
  EXPECT_TRUE(j.contains("claim"));
  EXPECT_TRUE(j.contains("bounds"));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_TRUE(j.contains("evidence"));
  const auto bad = check_annihilation(TruncatedBaxterSeries::unit_word(q(1), 0, 6), 1);
  EXPECT_EQ(certify(bad).to_json()["verdict"], "fail");
}

}  // namespace
}  // namespace baxter
