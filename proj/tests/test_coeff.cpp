#include <gtest/gtest.h>

#include "oracles.hpp"

namespace baxter {
namespace {

const RingId Q = RingId::rational();
const RingId LQ = RingId::laurent();
const RingId ZZ = RingId::integer();

Scalar q(long num, long den = 1) { return Scalar::from_rational(Q, mpq_class(num, den)); }

TEST(RingId, ParsesEveryName) {
  EXPECT_EQ(RingId::parse("Q"), Q);
  EXPECT_EQ(RingId::parse("laurent"), LQ);
  EXPECT_EQ(RingId::parse("Z"), ZZ);
  EXPECT_EQ(RingId::parse("fp:7"), RingId::prime_field(7));
  EXPECT_EQ(RingId::prime_field(7).name(), "fp:7");
  EXPECT_THROW(RingId::parse("fp:9"), Error);
  EXPECT_THROW(RingId::parse("R"), Error);
}

TEST(RingId, CompositeModulusRejected) {
  try {
    RingId::prime_field(91);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
}

TEST(RingId, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
  EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
  EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Laurent, TextFormatIsAscendingExponents) {
  const Laurent f = Laurent::parse("x^3 + 3*x^-2 + 1/2*x^0");
  EXPECT_EQ(f.to_string(), "3*x^-2 + 1/2*x^0 + x^3");
  EXPECT_EQ(Laurent::parse(f.to_string()), f);
  EXPECT_EQ(Laurent().to_string(), "0");
  EXPECT_EQ(Laurent::parse("-x^1 - 2*x^-1").to_string(), "-2*x^-1 - x^1");
}

TEST(Laurent, ArithmeticAndExactQuotient) {
  const Laurent a = Laurent::parse("1*x^0 + 1*x^1");
  const Laurent b = Laurent::parse("1*x^0 - 1*x^1");
  EXPECT_EQ((a * b).to_string(), "x^0 - x^2");
  auto quotient = Laurent::exact_quotient(a * b, b);
  ASSERT_TRUE(quotient);
  EXPECT_EQ(*quotient, a);
  EXPECT_FALSE(Laurent::exact_quotient(a, b).has_value());
  EXPECT_EQ(Laurent::x().shifted(-3), Laurent::monomial(1, -2));
}

TEST(Laurent, EvaluationAndZeroSubstitution) {
  const Laurent f = Laurent::parse("2*x^-1 + 3*x^2");
  EXPECT_EQ(f.evaluate(2), mpq_class(13));
  EXPECT_EQ(f.evaluate(mpq_class(1, 2)), mpq_class(19, 4));
  try {
    f.evaluate(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroSubstitutionIntoNegativePower);
  }
  EXPECT_EQ(Laurent::parse("5*x^0 + x^2").evaluate(0), mpq_class(5));
}

TEST(Scalar, PrimeFieldArithmetic) {
  const RingId f5 = RingId::prime_field(5);
  const Scalar three = Scalar::from_integer(f5, 3);
  EXPECT_EQ(three.to_string(), "3 mod 5");
  EXPECT_EQ((three * three.inverse()).residue(), 1u);
  EXPECT_EQ(Scalar::from_rational(f5, mpq_class(1, 2)).residue(), 3u);
  EXPECT_EQ(Scalar::parse(f5, "4 mod 5"), Scalar::from_integer(f5, -1));
  EXPECT_THROW(Scalar::from_rational(f5, mpq_class(1, 5)), Error);
  EXPECT_THROW(Scalar::zero(f5).inverse(), Error);
}

TEST(Scalar, UnitsPerRing) {
  EXPECT_TRUE(q(2, 3).is_unit());
  EXPECT_FALSE(Scalar::zero(Q).is_unit());
  EXPECT_TRUE(Scalar::from_integer(ZZ, -1).is_unit());
  EXPECT_FALSE(Scalar::from_integer(ZZ, 2).is_unit());
  EXPECT_TRUE(Scalar::from_laurent(Laurent::monomial(3, -4)).is_unit());
  EXPECT_FALSE(Scalar::parse(LQ, "1*x^0 + x^1").is_unit());
  try {
    Scalar::from_rational(ZZ, mpq_class(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByNonUnit);
  }
}

TEST(Scalar, ExactDivision) {
  const Scalar six = Scalar::from_integer(ZZ, 6);
  EXPECT_EQ(*six.exact_div(Scalar::from_integer(ZZ, 3)), Scalar::from_integer(ZZ, 2));
  EXPECT_FALSE(six.exact_div(Scalar::from_integer(ZZ, 4)).has_value());
  const Scalar p = Scalar::parse(LQ, "x^0 - x^2");
  EXPECT_EQ(*p.exact_div(Scalar::parse(LQ, "x^0 + x^1")), Scalar::parse(LQ, "x^0 - x^1"));
}

TEST(Scalar, RingMismatchIsReported) {
  try {
    (void)(q(1) + Scalar::one(ZZ));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
  }
}

TEST(Scalar, TextRoundTripsForEveryRing) {
  oracle::Random rnd(11);
  for (RingId ring : {Q, LQ, ZZ, RingId::prime_field(7), RingId::prime_field(1000003)}) {
    for (int i = 0; i < 200; ++i) {
      const Scalar s = rnd.scalar(ring);
      EXPECT_EQ(Scalar::parse(ring, s.to_string()), s) << s.to_string();
    }
  }
}

TEST(Scalar, RingAxiomsOnRandomTriples) {
  oracle::Random rnd(12);
  for (RingId ring : {Q, LQ, ZZ, RingId::prime_field(5)}) {
    for (int i = 0; i < 300; ++i) {
      const Scalar a = rnd.scalar(ring), b = rnd.scalar(ring), c = rnd.scalar(ring);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, Scalar::zero(ring));
      EXPECT_EQ(a * Scalar::one(ring), a);
      if (a.is_unit()) {
        EXPECT_EQ(a * a.inverse(), Scalar::one(ring));
      }
    }
  }
}

TEST(Binomial, MatchesPascalInEveryRing) {
  const auto rows = oracle::pascal(40);
  for (RingId ring : {Q, ZZ, RingId::prime_field(2), RingId::prime_field(3), RingId::prime_field(7)}) {
    for (long n = 0; n <= 40; ++n) {
      for (long k = -1; k <= n + 1; ++k) {
        const mpz_class expected = (k < 0 || k > n) ? mpz_class(0) : rows[n][k];
        EXPECT_EQ(binomial(ring, n, k), Scalar::from_integer(ring, expected)) << n << " " << k;
      }
    }
  }
  try {
    binomial(Q, -1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeN);
  }
}

TEST(Binomial, EvaluationIntoQ) {
  const Scalar f = Scalar::parse(LQ, "1*x^-1 + 2*x^1");
  EXPECT_EQ(eval_at(f, q(2)), q(9, 2));
  EXPECT_FALSE(is_polynomial(f));
  EXPECT_TRUE(is_polynomial(Scalar::parse(LQ, "3*x^0 + x^4")));
}

}  // namespace
}  // namespace baxter
