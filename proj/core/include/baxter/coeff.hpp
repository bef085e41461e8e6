#ifndef BAXTER_COEFF_HPP
#define BAXTER_COEFF_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "baxter/error.hpp"

namespace baxter {

enum class RingKind { RationalQ, LaurentQ, PrimeField, IntegerZ };

/// Identifies one of the supported exact coefficient rings.
class RingId {
 public:
  static RingId rational() { return RingId(RingKind::RationalQ, 0); }
  static RingId laurent() { return RingId(RingKind::LaurentQ, 0); }
  static RingId integer() { return RingId(RingKind::IntegerZ, 0); }
  /// Throws NotPrime unless p is prime.
  static RingId prime_field(std::uint64_t p);

  /// Accepts "Q", "laurent", "fp:<p>", "Z".
  static RingId parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }

  bool is_field() const { return kind_ == RingKind::RationalQ || kind_ == RingKind::PrimeField; }
  bool is_q_algebra() const { return kind_ == RingKind::RationalQ || kind_ == RingKind::LaurentQ; }

  std::string name() const;

  friend bool operator==(const RingId&, const RingId&) = default;

 private:
  RingId(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Laurent polynomial in one indeterminate x over Q, stored as exponent -> coefficient
/// with no zero coefficients.
class Laurent {
 public:
  using Terms = std::map<std::int64_t, mpq_class>;

  Laurent() = default;
  explicit Laurent(const mpq_class& constant);
  static Laurent monomial(const mpq_class& coeff, std::int64_t exponent);
  static Laurent x() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<mpq_class> constant_value() const;
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent shifted(std::int64_t by) const;
  Laurent scaled(const mpq_class& c) const;

  /// Exact quotient a / b in Q[x, x^-1] if it exists.
  static std::optional<Laurent> exact_quotient(const Laurent& a, const Laurent& b);

  /// Substitutes x -> value. Throws ZeroSubstitutionIntoNegativePower when value
  /// is zero and a negative exponent is present.
  mpq_class evaluate(const mpq_class& value) const;

  /// "3*x^-2 + 1/2*x^0 + x^3": ascending exponents, "0" for zero.
  std::string to_string() const;
  static Laurent parse(std::string_view text);

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void add_term(std::int64_t exponent, const mpq_class& coeff);

  Terms terms_;
};

/// Element of a supported coefficient ring, always in canonical form so that
/// structural equality is ring equality.
class Scalar {
 public:
  using Value = std::variant<mpq_class, Laurent, std::uint64_t, mpz_class>;

  explicit Scalar(RingId ring);  // zero
  static Scalar zero(RingId ring) { return Scalar(ring); }
  static Scalar one(RingId ring) { return from_integer(ring, 1); }
  static Scalar from_integer(RingId ring, const mpz_class& n);
  static Scalar from_integer(RingId ring, long n) { return from_integer(ring, mpz_class(n)); }
  /// Maps p/q into ring; throws DivisionByNonUnit when q is not invertible there.
  static Scalar from_rational(RingId ring, const mpq_class& q);
  static Scalar from_laurent(const Laurent& f);
  /// The indeterminate x of LaurentQ.
  static Scalar indeterminate() { return from_laurent(Laurent::x()); }

  /// Scalar text formats: "p/q" or "n"; Laurent as in Laurent::to_string;
  /// prime field "k mod p" (a bare "k" or "p/q" is also accepted).
  static Scalar parse(RingId ring, std::string_view text);

  RingId ring() const { return ring_; }
  const Value& value() const { return value_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  const mpq_class& rational() const;
  const Laurent& laurent() const;
  std::uint64_t residue() const;
  const mpz_class& integer() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Throws DivisionByNonUnit unless this is a unit.
  Scalar inverse() const;
  /// a / b where b is a unit.
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  /// Exact quotient when one exists (b need not be a unit).
  std::optional<Scalar> exact_div(const Scalar& divisor) const;

  Scalar pow(std::uint64_t exponent) const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(RingId ring, Value value) : ring_(ring), value_(std::move(value)) {}
  void check_same_ring(const Scalar& other) const;

  RingId ring_;
  Value value_;
};

/// C(n, k) mapped into ring; zero when k < 0 or k > n. Throws NegativeN for n < 0.
Scalar binomial(RingId ring, long n, long k);

/// Substitution x -> lambda of a LaurentQ scalar into RationalQ.
Scalar eval_at(const Scalar& f, const Scalar& lambda);

/// True iff the LaurentQ scalar has no negative exponents.
bool is_polynomial(const Scalar& f);

}  // namespace baxter

#endif
