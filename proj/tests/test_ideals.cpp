#include <gtest/gtest.h>

#include "oracles.hpp"

namespace baxter {
namespace {

const RingId Q = RingId::rational();

Scalar q(long num, long den = 1) { return Scalar::from_rational(Q, mpq_class(num, den)); }

CtxPtr ctx_q(std::vector<std::string> vars, long lambda) { return AlgebraCtx::make(Q, std::move(vars), q(lambda)); }

ShuffleElement units(const CtxPtr& ctx, std::size_t count) { return ShuffleElement::word(ctx, TensorWord::unit_power(count)); }

TEST(Slices, WordCounts) {
  const auto ctx = ctx_q({"x"}, 1);
  // Degree d over tensor length L+1 in one variable: C(d + L, L) compositions, summed over lengths.
  const auto rows = oracle::pascal(20);
  for (std::uint64_t d = 0; d <= 4; ++d) {
    for (std::size_t L = 0; L <= 3; ++L) {
      std::size_t expected = 0;
      for (std::size_t t = 0; t <= L; ++t) expected += rows[d + t][t].get_ui();
      const auto slice = graded_slice(ctx, d, L);
      EXPECT_EQ(slice.words.size(), expected) << d << "," << L;
      EXPECT_TRUE(std::is_sorted(slice.words.begin(), slice.words.end()));
      for (const auto& w : slice.words) EXPECT_EQ(w.total_degree(), d);
    }
  }
  EXPECT_EQ(monomials_of_degree(2, 3).size(), 4u);
  EXPECT_EQ(slice_words(ctx_q({}, 1), 3, 5).size(), 4u);
}

TEST(Membership, Examples) {
  const auto ctx = ctx_q({"x"}, 1);
  const std::vector<ShuffleElement> gens{parse_element(ctx, "1⊗x")};
  const auto non = homogeneous_membership(parse_element(ctx, "1⊗x^2"), gens, 3);
  EXPECT_FALSE(non.is_member());
  EXPECT_EQ(non.rank_augmented, non.rank_plain + 1);

  const auto self = homogeneous_membership(gens[0], gens, 3);
  ASSERT_TRUE(self.is_member());
  EXPECT_TRUE(verify_membership(gens[0], gens, self));

  const auto zero = ctx_q({"x"}, 0);
  const std::vector<ShuffleElement> g0{parse_element(zero, "1⊗x")};
  const auto target = parse_element(zero, "1⊗x⊗x");
  const auto cert = homogeneous_membership(target, g0, 3);
  ASSERT_TRUE(cert.is_member());
  EXPECT_TRUE(verify_membership(target, g0, cert));
  ShuffleElement sum(zero);
  for (const auto& [i, mult] : cert.combination) sum += product(g0[i], mult);
  EXPECT_EQ(sum, target);
}

TEST(Membership, CertificatesAlwaysReMultiply) {
  oracle::Random rnd(41);
  const auto ctx = ctx_q({"x", "y"}, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ShuffleElement> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(homogeneous_component(rnd.element(ctx, 2, 3, 1), 1));
    std::erase_if(gens, [](const ShuffleElement& g) { return g.is_zero(); });
    if (gens.empty()) continue;
    // a combination of gens times words of degree 1 is a member by construction
    ShuffleElement target(ctx);
    for (const auto& g : gens) target += product(g, homogeneous_component(rnd.element(ctx, 1, 2, 1), 1));
    if (target.is_zero()) continue;
    const auto cert = homogeneous_membership(target, gens, 3);
    EXPECT_TRUE(cert.is_member());
    EXPECT_TRUE(verify_membership(target, gens, cert));
  }
}

TEST(Membership, RejectsBadInput) {
  const auto ctx = ctx_q({"x"}, 1);
  const std::vector<ShuffleElement> gens{parse_element(ctx, "1⊗x")};
  try {
    (void)homogeneous_membership(parse_element(ctx, "1⊗x + x^2"), gens, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHomogeneous);
  }
  const auto z = AlgebraCtx::make(RingId::integer(), {"x"}, Scalar::one(RingId::integer()));
  try {
    (void)homogeneous_membership(parse_element(z, "1⊗x"), {parse_element(z, "1⊗x")}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFieldRing);
  }
}

TEST(RingReduction, Examples) {
  const auto zero = ctx_q({}, 0);
  const auto t0 = reduce_by_generators(units(zero, 3), {units(zero, 2)});
  EXPECT_TRUE(t0.remainder.is_zero());
  ASSERT_EQ(t0.steps.size(), 1u);
  EXPECT_EQ(t0.steps[0].cofactor, units(zero, 2) * q(1, 2));

  const auto empty = reduce_by_generators(ShuffleElement(zero), {units(zero, 2)});
  EXPECT_TRUE(empty.remainder.is_zero());
  EXPECT_TRUE(empty.steps.empty());

  const auto one = ctx_q({}, 1);
  const auto t1 = reduce_by_generators(units(one, 3), {units(one, 2)});
  EXPECT_TRUE(t1.remainder.is_zero());
  EXPECT_EQ(t1.steps.size(), 2u);
  EXPECT_TRUE(t1.reconstructs(units(one, 3)));
}

TEST(RingReduction, RejectsUnsupportedAlgebras) {
  const auto fp = AlgebraCtx::make(RingId::prime_field(5), {}, Scalar::one(RingId::prime_field(5)));
  try {
    (void)reduce_by_generators(units(fp, 2), {units(fp, 2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonQAlgebra);
  }
  const auto x = ctx_q({"x"}, 1);
  try {
    (void)reduce_by_generators(units(x, 2), {units(x, 2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedContext);
  }
}

TEST(RingReduction, TracesAreExactOnRandomInput) {
  oracle::Random rnd(42);
  for (long lambda : {0L, 1L, -2L}) {
    const auto ctx = ctx_q({}, lambda);
    for (int i = 0; i < 100; ++i) {
      std::vector<ShuffleElement> gens;
      const int count = rnd.uniform(0, 3);
      for (int g = 0; g < count; ++g) gens.push_back(rnd.element(ctx, 3, 3));
      const auto f = rnd.element(ctx, 6, 5);
      const auto trace = reduce_by_generators(f, gens);
      EXPECT_TRUE(trace.reconstructs(f));
      // the remainder is either zero or has a leading degree below every generator
      if (!trace.remainder.is_zero()) {
        std::size_t min_deg = SIZE_MAX;
        for (const auto& g : gens)
          if (!g.is_zero()) min_deg = std::min(min_deg, g.max_tensor_degree());
        EXPECT_LT(trace.remainder.max_tensor_degree(), min_deg);
      }
    }
  }
}

TEST(BaxterReduction, Examples) {
  const auto ctx = ctx_q({}, 1);
  const auto t = baxter_reduce(units(ctx, 3), {units(ctx, 2)});
  EXPECT_TRUE(t.remainder.is_zero());
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].p_shift, 1u);
  EXPECT_EQ(t.steps[0].subtracted, units(ctx, 3));

  EXPECT_TRUE(baxter_reduce(ShuffleElement::scalar(ctx, q(5)), {ShuffleElement::one(ctx)}).remainder.is_zero());

  const auto f = units(ctx, 2) + ShuffleElement::one(ctx);
  const auto stuck = baxter_reduce(f, {units(ctx, 3)});
  EXPECT_EQ(stuck.remainder, f);
  EXPECT_TRUE(stuck.steps.empty());
}

TEST(BaxterReduction, IntegerCoefficientsNeedDivisibility) {
  const RingId z = RingId::integer();
  const auto ctx = AlgebraCtx::make(z, {}, Scalar::one(z));
  const auto g = ShuffleElement::word(ctx, TensorWord::unit_power(2)) * Scalar::from_integer(z, 2);
  const auto odd = ShuffleElement::word(ctx, TensorWord::unit_power(3)) * Scalar::from_integer(z, 3);
  EXPECT_FALSE(baxter_reduce(odd, {g}).remainder.is_zero());
  EXPECT_TRUE(baxter_reduce(odd * Scalar::from_integer(z, 2), {g}).remainder.is_zero());
}

TEST(Saturation, Examples) {
  const auto ctx = ctx_q({"x"}, 0);
  const auto sat = baxter_ideal_saturate(ctx, {parse_element(ctx, "1⊗x")}, 2, 2);
  for (const char* w : {"1⊗x", "1⊗1⊗x", "x⊗x", "1⊗x⊗x"}) EXPECT_TRUE(sat.basis.contains(parse_element(ctx, w))) << w;
  EXPECT_FALSE(sat.basis.contains(parse_element(ctx, "x⊗1")));

  EXPECT_EQ(baxter_ideal_saturate(ctx, {}, 3, 3).basis.rank(), 0u);
  const auto whole = baxter_ideal_saturate(ctx, {ShuffleElement::one(ctx)}, 2, 3);
  EXPECT_EQ(whole.basis.rank(), slice_words(ctx, 2, 3).size());
}

TEST(Saturation, ConstructedElementsLieInTheSlice) {
  oracle::Random rnd(43);
  for (long lambda : {0L, 1L}) {
    const auto ctx = ctx_q({"x"}, lambda);
    const std::vector<ShuffleElement> gens{parse_element(ctx, "1⊗x"), parse_element(ctx, "x⊗1 + 1⊗1")};
    const auto sat = baxter_ideal_saturate(ctx, gens, 3, 3);
    for (int i = 0; i < 60; ++i) {
      ShuffleElement f(ctx);
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const std::size_t j = static_cast<std::size_t>(rnd.uniform(0, 1));
        const auto w = rnd.element(ctx, 1, 2, 1);
        const auto term = product(w, baxter_P_power(gens[gi], j));
        bool fits = true;
        for (const auto& [word, c] : term.terms())
          if (word.tensor_degree() > 3 || word.total_degree() > 3) fits = false;
        if (fits) f += term;
      }
      EXPECT_TRUE(sat.basis.contains(f)) << format_element(f);
    }
  }
}

TEST(Saturation, GrowingBoundsNeverShrinksTheSpan) {
  const auto ctx = ctx_q({"x"}, 1);
  const std::vector<ShuffleElement> gens{parse_element(ctx, "1⊗x^2 - x⊗1")};
  for (IdealKind kind : {IdealKind::Ring, IdealKind::Baxter}) {
    for (std::size_t L = 1; L <= 3; ++L) {
      for (std::uint64_t D = 1; D <= 3; ++D) {
        const auto small = ideal_saturate(ctx, gens, L, D, kind);
        EXPECT_TRUE(span_contains(ideal_saturate(ctx, gens, L + 1, D, kind).basis, small.basis));
        EXPECT_TRUE(span_contains(ideal_saturate(ctx, gens, L, D + 1, kind).basis, small.basis));
      }
    }
  }
}

TEST(Saturation, RingIdealIsInsideBaxterIdeal) {
  const auto ctx = ctx_q({"x"}, 2);
  const std::vector<ShuffleElement> gens{parse_element(ctx, "1⊗x")};
  const auto ring = ideal_saturate(ctx, gens, 3, 3, IdealKind::Ring);
  const auto bax = ideal_saturate(ctx, gens, 3, 3, IdealKind::Baxter);
  EXPECT_TRUE(span_contains(bax.basis, ring.basis));
  EXPECT_LT(ring.basis.rank(), bax.basis.rank());
}

TEST(LeadingIdealChain, Examples) {
  const auto ctx = ctx_q({}, 0);
  const auto chain = leading_ideal_chain(ctx, {units(ctx, 2)}, 5);
  ASSERT_EQ(chain.sigma.size(), 6u);
  EXPECT_EQ(chain.sigma[0], LeadingIdeal::Zero);
  for (std::size_t j = 1; j <= 5; ++j) EXPECT_EQ(chain.sigma[j], LeadingIdeal::Whole) << j;
  EXPECT_TRUE(chain.ascending);

  for (LeadingIdeal s : leading_ideal_chain(ctx, {}, 4).sigma) EXPECT_EQ(s, LeadingIdeal::Zero);
  for (LeadingIdeal s : leading_ideal_chain(ctx, {ShuffleElement::one(ctx)}, 4).sigma) EXPECT_EQ(s, LeadingIdeal::Whole);
}

TEST(LeadingTermBasis, ReducesIdealElementsOfLowDegree) {
  // 1^{(x)3} + 1 generates elements of leading degree below its own.
  const auto ctx = ctx_q({}, 1);
  const std::vector<ShuffleElement> gens{units(ctx, 3) + ShuffleElement::one(ctx)};
  const auto basis = leading_term_basis(ctx, gens, 4, IdealKind::Baxter);
  ASSERT_FALSE(basis.empty());
  for (const auto& b : basis) EXPECT_TRUE(b.leading_coefficient().is_one());
  const auto sat = baxter_ideal_saturate(ctx, gens, 4, 0);
  for (const auto& v : sat.basis.basis()) {
    std::vector<ShuffleElement> all = gens;
    all.insert(all.end(), basis.begin(), basis.end());
    EXPECT_TRUE(baxter_reduce(v, all).remainder.is_zero()) << format_element(v);
  }
}

TEST(Certificates, JsonCarriesFullMultipliers) {
  const auto ctx = ctx_q({"x"}, 0);
  const std::vector<ShuffleElement> gens{parse_element(ctx, "1⊗x")};
  const auto target = parse_element(ctx, "1⊗x⊗x");
  const auto cert = homogeneous_membership(target, gens, 3);
  const Json j = membership_to_json(cert, gens);
  EXPECT_EQ(j["verdict"], "Member");
  ShuffleElement sum(ctx);
  for (const auto& entry : j["combination"])
    sum += product(element_from_json(ctx, entry["generator_element"]), element_from_json(ctx, entry["multiplier"]));
  EXPECT_EQ(sum, target);
  const auto trace = reduce_by_generators(units(ctx_q({}, 0), 3), {units(ctx_q({}, 0), 2)});
  EXPECT_EQ(trace_to_json(trace)["steps"].size(), 1u);
}

}  // namespace
}  // namespace baxter
