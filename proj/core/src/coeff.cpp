#include "baxter/coeff.hpp"

#include "parse_util.hpp"

namespace baxter {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

RingId RingId::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return RingId(RingKind::PrimeField, p);
}

RingId RingId::parse(std::string_view text) {
  if (text == "Q") return rational();
  if (text == "laurent") return laurent();
  if (text == "Z") return integer();
  if (text.substr(0, 3) == "fp:") {
    detail::Cursor cur(text.substr(3));
    mpz_class p = cur.parse_natural();
    if (!cur.done() || !p.fits_ulong_p()) throw Error(ErrorCode::ParseError, "bad prime in ring \"" + std::string(text) + "\"");
    return prime_field(p.get_ui());
  }
  throw Error(ErrorCode::ParseError, "unknown ring \"" + std::string(text) + "\" (expected Q, laurent, fp:<p>, Z)");
}

std::string RingId::name() const {
  switch (kind_) {
    case RingKind::RationalQ: return "Q";
    case RingKind::LaurentQ: return "laurent";
    case RingKind::PrimeField: return "fp:" + std::to_string(modulus_);
    case RingKind::IntegerZ: return "Z";
  }
  return "?";
}

Scalar::Scalar(RingId ring) : ring_(ring) {
  switch (ring.kind()) {
    case RingKind::RationalQ: value_ = mpq_class(0); break;
    case RingKind::LaurentQ: value_ = Laurent(); break;
    case RingKind::PrimeField: value_ = std::uint64_t{0}; break;
    case RingKind::IntegerZ: value_ = mpz_class(0); break;
  }
}

Scalar Scalar::from_integer(RingId ring, const mpz_class& n) {
  switch (ring.kind()) {
    case RingKind::RationalQ: return Scalar(ring, mpq_class(n));
    case RingKind::LaurentQ: return Scalar(ring, Laurent(mpq_class(n)));
    case RingKind::PrimeField: return Scalar(ring, reduce_mod(n, ring.modulus()));
    case RingKind::IntegerZ: return Scalar(ring, n);
  }
  return Scalar(ring);
}

Scalar Scalar::from_rational(RingId ring, const mpq_class& raw) {
  mpq_class q = raw;
  q.canonicalize();
  switch (ring.kind()) {
    case RingKind::RationalQ: return Scalar(ring, q);
    case RingKind::LaurentQ: return Scalar(ring, Laurent(q));
    case RingKind::PrimeField: {
      const std::uint64_t den = reduce_mod(q.get_den(), ring.modulus());
      if (den == 0) throw Error(ErrorCode::DivisionByNonUnit, q.get_str() + " has denominator divisible by " + std::to_string(ring.modulus()));
      return from_integer(ring, q.get_num()) * Scalar(ring, den).inverse();
    }
    case RingKind::IntegerZ:
      if (q.get_den() != 1) throw Error(ErrorCode::DivisionByNonUnit, q.get_str() + " is not an integer");
      return Scalar(ring, q.get_num());
  }
  return Scalar(ring);
}

Scalar Scalar::from_laurent(const Laurent& f) { return Scalar(RingId::laurent(), f); }

Scalar Scalar::parse(RingId ring, std::string_view text) {
  if (ring.kind() == RingKind::LaurentQ) return from_laurent(Laurent::parse(text));
  detail::Cursor cur(text);
  cur.skip_ws();
  bool neg = cur.accept('-');
  cur.skip_ws();
  mpq_class q = cur.parse_rational();
  if (neg) q = -q;
  cur.skip_ws();
  if (cur.accept("mod")) {
    if (ring.kind() != RingKind::PrimeField) throw cur.error("\"mod\" outside a prime field");
    cur.skip_ws();
    mpz_class p = cur.parse_natural();
    if (p != ring.modulus()) throw cur.error("modulus does not match ring " + ring.name());
    cur.skip_ws();
  }
  if (!cur.done()) throw cur.error("trailing characters");
  return from_rational(ring, q);
}

void Scalar::check_same_ring(const Scalar& other) const {
  if (ring_ != other.ring_)
    throw Error(ErrorCode::RingMismatch, ring_.name() + " vs " + other.ring_.name());
}

bool Scalar::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::RationalQ: return std::get<mpq_class>(value_) == 0;
    case RingKind::LaurentQ: return std::get<Laurent>(value_).is_zero();
    case RingKind::PrimeField: return std::get<std::uint64_t>(value_) == 0;
    case RingKind::IntegerZ: return std::get<mpz_class>(value_) == 0;
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

bool Scalar::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::RationalQ:
    case RingKind::PrimeField: return !is_zero();
    case RingKind::LaurentQ: return std::get<Laurent>(value_).is_monomial();
    case RingKind::IntegerZ: return abs(std::get<mpz_class>(value_)) == 1;
  }
  return false;
}

const mpq_class& Scalar::rational() const {
  if (ring_.kind() != RingKind::RationalQ) throw Error(ErrorCode::RingMismatch, "expected Q, got " + ring_.name());
  return std::get<mpq_class>(value_);
}

const Laurent& Scalar::laurent() const {
  if (ring_.kind() != RingKind::LaurentQ) throw Error(ErrorCode::RingMismatch, "expected laurent, got " + ring_.name());
  return std::get<Laurent>(value_);
}

std::uint64_t Scalar::residue() const {
  if (ring_.kind() != RingKind::PrimeField) throw Error(ErrorCode::RingMismatch, "expected a prime field, got " + ring_.name());
  return std::get<std::uint64_t>(value_);
}

const mpz_class& Scalar::integer() const {
  if (ring_.kind() != RingKind::IntegerZ) throw Error(ErrorCode::RingMismatch, "expected Z, got " + ring_.name());
  return std::get<mpz_class>(value_);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_ring(other);
  switch (ring_.kind()) {
    case RingKind::RationalQ: std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_); break;
    case RingKind::LaurentQ: std::get<Laurent>(value_) += std::get<Laurent>(other.value_); break;
    case RingKind::PrimeField: {
      const std::uint64_t p = ring_.modulus();
      auto& a = std::get<std::uint64_t>(value_);
      a = static_cast<std::uint64_t>((static_cast<u128>(a) + std::get<std::uint64_t>(other.value_)) % p);
      break;
    }
    case RingKind::IntegerZ: std::get<mpz_class>(value_) += std::get<mpz_class>(other.value_); break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_ring(other);
  switch (ring_.kind()) {
    case RingKind::RationalQ: std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_); break;
    case RingKind::LaurentQ: {
      auto& a = std::get<Laurent>(value_);
      a = a * std::get<Laurent>(other.value_);
      break;
    }
    case RingKind::PrimeField: {
      auto& a = std::get<std::uint64_t>(value_);
      a = mul_mod(a, std::get<std::uint64_t>(other.value_), ring_.modulus());
      break;
    }
    case RingKind::IntegerZ: std::get<mpz_class>(value_) *= std::get<mpz_class>(other.value_); break;
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (ring_.kind()) {
    case RingKind::RationalQ: return Scalar(ring_, mpq_class(-std::get<mpq_class>(value_)));
    case RingKind::LaurentQ: return Scalar(ring_, -std::get<Laurent>(value_));
    case RingKind::PrimeField: {
      const std::uint64_t a = std::get<std::uint64_t>(value_);
      return Scalar(ring_, a == 0 ? 0 : ring_.modulus() - a);
    }
    case RingKind::IntegerZ: return Scalar(ring_, mpz_class(-std::get<mpz_class>(value_)));
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::DivisionByNonUnit, to_string() + " is not a unit in " + ring_.name());
  switch (ring_.kind()) {
    case RingKind::RationalQ: return Scalar(ring_, mpq_class(1 / std::get<mpq_class>(value_)));
    case RingKind::LaurentQ: {
      const auto& [e, c] = *std::get<Laurent>(value_).terms().begin();
      return Scalar(ring_, Laurent::monomial(mpq_class(1 / c), -e));
    }
    case RingKind::PrimeField: {
      const std::uint64_t p = ring_.modulus();
      return Scalar(ring_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
    }
    case RingKind::IntegerZ: return *this;
  }
  return *this;
}

std::optional<Scalar> Scalar::exact_div(const Scalar& divisor) const {
  check_same_ring(divisor);
  if (divisor.is_zero()) return std::nullopt;
  switch (ring_.kind()) {
    case RingKind::RationalQ:
    case RingKind::PrimeField: return *this / divisor;
    case RingKind::LaurentQ: {
      auto q = Laurent::exact_quotient(std::get<Laurent>(value_), std::get<Laurent>(divisor.value_));
      if (!q) return std::nullopt;
      return Scalar(ring_, std::move(*q));
    }
    case RingKind::IntegerZ: {
      const auto& a = std::get<mpz_class>(value_);
      const auto& b = std::get<mpz_class>(divisor.value_);
      if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return Scalar(ring_, q);
    }
  }
  return std::nullopt;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = one(ring_);
  Scalar base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  switch (ring_.kind()) {
    case RingKind::RationalQ: return std::get<mpq_class>(value_).get_str();
    case RingKind::LaurentQ: return std::get<Laurent>(value_).to_string();
    case RingKind::PrimeField:
      return std::to_string(std::get<std::uint64_t>(value_)) + " mod " + std::to_string(ring_.modulus());
    case RingKind::IntegerZ: return std::get<mpz_class>(value_).get_str();
  }
  return "?";
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.ring_ != b.ring_) return false;
  switch (a.ring_.kind()) {
    case RingKind::RationalQ: return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    case RingKind::LaurentQ: return std::get<Laurent>(a.value_) == std::get<Laurent>(b.value_);
    case RingKind::PrimeField: return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
    case RingKind::IntegerZ: return std::get<mpz_class>(a.value_) == std::get<mpz_class>(b.value_);
  }
  return false;
}

Scalar binomial(RingId ring, long n, long k) {
  if (n < 0) throw Error(ErrorCode::NegativeN, "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  if (k < 0 || k > n) return Scalar::zero(ring);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar::from_integer(ring, c);
}

Scalar eval_at(const Scalar& f, const Scalar& lambda) {
  return Scalar::from_rational(RingId::rational(), f.laurent().evaluate(lambda.rational()));
}

bool is_polynomial(const Scalar& f) { return f.laurent().is_polynomial(); }

}  // namespace baxter
