#include "baxter/complete.hpp"

#include <algorithm>

#include "baxter/linalg.hpp"

namespace baxter {

// ---------------------------------------------------------------------------
// TruncatedBaxterSeries / SequenceElement

TruncatedBaxterSeries::TruncatedBaxterSeries(Scalar weight, std::vector<Scalar> coeffs)
    : weight_(std::move(weight)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "a truncated series stores at least b_0");
  for (const auto& c : coeffs_)
    if (c.ring() != weight_.ring())
      throw Error(ErrorCode::RingMismatch, "coefficient in " + c.ring().name() + ", weight in " + weight_.ring().name());
}

TruncatedBaxterSeries TruncatedBaxterSeries::zero(const Scalar& weight, std::size_t precision) {
  return TruncatedBaxterSeries(weight, std::vector<Scalar>(precision + 1, Scalar::zero(weight.ring())));
}

TruncatedBaxterSeries TruncatedBaxterSeries::unit_word(const Scalar& weight, std::size_t k, std::size_t precision) {
  auto s = zero(weight, precision);
  if (k <= precision) s.coeffs_[k] = Scalar::one(weight.ring());
  return s;
}

bool TruncatedBaxterSeries::is_zero() const { return !first_nonzero().has_value(); }

std::optional<std::size_t> TruncatedBaxterSeries::first_nonzero() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return i;
  return std::nullopt;
}

void TruncatedBaxterSeries::check_compatible(const TruncatedBaxterSeries& other) const {
  if (weight_ != other.weight_ || coeffs_.size() != other.coeffs_.size())
    throw Error(ErrorCode::Mismatch, "series differ in ring, weight or precision (" + std::to_string(precision()) +
                                         " vs " + std::to_string(other.precision()) + ")");
}

TruncatedBaxterSeries& TruncatedBaxterSeries::operator+=(const TruncatedBaxterSeries& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedBaxterSeries& TruncatedBaxterSeries::operator-=(const TruncatedBaxterSeries& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedBaxterSeries& TruncatedBaxterSeries::operator*=(const Scalar& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TruncatedBaxterSeries TruncatedBaxterSeries::truncated(std::size_t precision) const {
  if (precision > this->precision()) throw Error(ErrorCode::Mismatch, "cannot raise precision by truncation");
  return TruncatedBaxterSeries(weight_, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + precision + 1));
}

SequenceElement::SequenceElement(RingId ring, std::vector<Scalar> comps) : ring_(ring), comps_(std::move(comps)) {
  for (const auto& c : comps_)
    if (c.ring() != ring_) throw Error(ErrorCode::RingMismatch, "component outside " + ring_.name());
}

SequenceElement operator*(const SequenceElement& a, const SequenceElement& b) {
  if (a.ring_ != b.ring_ || a.comps_.size() != b.comps_.size())
    throw Error(ErrorCode::Mismatch, "sequence elements differ in ring or length");
  std::vector<Scalar> out;
  out.reserve(a.comps_.size());
  for (std::size_t i = 0; i < a.comps_.size(); ++i) out.push_back(a.comps_[i] * b.comps_[i]);
  return SequenceElement(a.ring_, std::move(out));
}

// ---------------------------------------------------------------------------
// Products

namespace {

class BinomialTable {
 public:
  BinomialTable(RingId ring, std::size_t max_n) {
    rows_.reserve(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
      std::vector<Scalar> row;
      row.reserve(n + 1);
      for (std::size_t k = 0; k <= n; ++k) row.push_back(binomial(ring, static_cast<long>(n), static_cast<long>(k)));
      rows_.push_back(std::move(row));
    }
  }
  const Scalar& operator()(std::size_t n, std::size_t k) const { return rows_[n][k]; }

 private:
  std::vector<std::vector<Scalar>> rows_;
};

std::vector<Scalar> powers(const Scalar& base, std::size_t max_power) {
  std::vector<Scalar> p;
  p.reserve(max_power + 1);
  p.push_back(Scalar::one(base.ring()));
  for (std::size_t i = 1; i <= max_power; ++i) p.push_back(p.back() * base);
  return p;
}

}  // namespace

std::map<std::size_t, Scalar> unit_power_product(std::size_t m, std::size_t n, const Scalar& lambda) {
  const RingId ring = lambda.ring();
  std::map<std::size_t, Scalar> out;
  Scalar lambda_k = Scalar::one(ring);
  for (std::size_t k = 0; k <= std::min(m, n); ++k) {
    Scalar c = binomial(ring, static_cast<long>(m + n - k), static_cast<long>(n)) *
               binomial(ring, static_cast<long>(n), static_cast<long>(k)) * lambda_k;
    if (!c.is_zero()) out.emplace(m + n - k, std::move(c));
    lambda_k *= lambda;
  }
  return out;
}

TruncatedBaxterSeries series_product(const TruncatedBaxterSeries& s, const TruncatedBaxterSeries& t) {
  if (s.weight() != t.weight() || s.precision() != t.precision())
    throw Error(ErrorCode::Mismatch, "series product needs equal ring, weight and precision");
  const std::size_t N = s.precision();
  const RingId ring = s.ring();
  const BinomialTable binom(ring, 2 * N);
  const auto lambda_pow = powers(s.weight(), N);
  std::vector<Scalar> out(N + 1, Scalar::zero(ring));
  for (std::size_t m = 0; m <= N; ++m) {
    if (s[m].is_zero()) continue;
    for (std::size_t n = 0; n <= N; ++n) {
      if (t[n].is_zero()) continue;
      const Scalar st = s[m] * t[n];
      // Terms of degree m+n-k with k <= min(m, n); only degrees <= N survive.
      const std::size_t k_lo = m + n > N ? m + n - N : 0;
      for (std::size_t k = k_lo; k <= std::min(m, n); ++k) {
        out[m + n - k] += st * binom(m + n - k, n) * binom(n, k) * lambda_pow[k];
      }
    }
  }
  return TruncatedBaxterSeries(s.weight(), std::move(out));
}

TruncatedBaxterSeries series_from_element(const ShuffleElement& e, std::size_t precision) {
  if (e.ctx().num_variables() != 0)
    throw Error(ErrorCode::UnsupportedContext, "series live over C = C[{}]; element has variables");
  auto s = TruncatedBaxterSeries::zero(e.ctx().weight(), precision);
  std::vector<Scalar> coeffs = s.coeffs();
  for (const auto& [w, c] : e.terms())
    if (w.tensor_degree() <= precision) coeffs[w.tensor_degree()] = c;
  return TruncatedBaxterSeries(e.ctx().weight(), std::move(coeffs));
}

ShuffleElement element_from_series(const CtxPtr& ctx, const TruncatedBaxterSeries& s) {
  if (ctx->num_variables() != 0) throw Error(ErrorCode::UnsupportedContext, "target algebra must have X = {}");
  if (ctx->weight() != s.weight()) throw Error(ErrorCode::Mismatch, "series weight differs from the algebra's");
  ShuffleElement e(ctx);
  for (std::size_t n = 0; n <= s.precision(); ++n) e.add_term(TensorWord::unit_power(n + 1), s[n]);
  return e;
}

// ---------------------------------------------------------------------------
// Phi

namespace {

void check_phi_weight(const Scalar& lambda) {
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroDivisorWeight, "phi needs a weight that is not a zero divisor");
}

}  // namespace

SequenceElement phi(const TruncatedBaxterSeries& s) {
  check_phi_weight(s.weight());
  const std::size_t N = s.precision();
  const RingId ring = s.ring();
  const BinomialTable binom(ring, N);
  const auto lambda_pow = powers(s.weight(), N);
  std::vector<Scalar> comps;
  comps.reserve(N + 1);
  for (std::size_t n = 1; n <= N + 1; ++n) {
    Scalar acc = Scalar::zero(ring);
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i].is_zero()) continue;
      acc += binom(n - 1, i) * lambda_pow[i] * s[i];
    }
    comps.push_back(std::move(acc));
  }
  return SequenceElement(ring, std::move(comps));
}

std::size_t phi_rank(const Scalar& lambda, std::size_t precision) {
  check_phi_weight(lambda);
  const RingId ring = lambda.ring();
  const auto lambda_pow = powers(lambda, precision);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t n = 1; n <= precision + 1; ++n) {
    std::vector<Scalar> row;
    for (std::size_t i = 0; i <= precision; ++i)
      row.push_back(binomial(ring, static_cast<long>(n - 1), static_cast<long>(i)) * lambda_pow[i]);
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

// ---------------------------------------------------------------------------
// Annihilators

TruncatedBaxterSeries annihilator_b(std::size_t k, std::size_t precision) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "annihilator index k must be positive");
  if (precision < k) throw Error(ErrorCode::BoundsTooSmall, "precision must be at least k");
  const RingId ring = RingId::laurent();
  const Scalar x = Scalar::indeterminate();
  std::vector<Scalar> b(precision + 1, Scalar::zero(ring));
  b[0] = Scalar::one(ring);
  std::vector<Scalar> term_coeff;  // C(k, i) x^i
  for (std::size_t i = 0; i < k; ++i)
    term_coeff.push_back(binomial(ring, static_cast<long>(k), static_cast<long>(i)) *
                         Scalar::from_laurent(Laurent::monomial(1, static_cast<std::int64_t>(i))));
  const Scalar minus_x_inv_k = Scalar::from_laurent(Laurent::monomial(-1, -static_cast<std::int64_t>(k)));
  for (std::size_t m = k; m <= precision; ++m) {
    Scalar acc = Scalar::zero(ring);
    for (std::size_t i = 0; i < k; ++i) acc += term_coeff[i] * b[m - k + i];
    b[m] = minus_x_inv_k * acc;
  }
  return TruncatedBaxterSeries(x, std::move(b));
}

TruncatedBaxterSeries specialize_b(std::size_t k, const Scalar& lambda, const Scalar& c, std::size_t precision) {
  if (lambda.ring() != RingId::rational() || c.ring() != RingId::rational())
    throw Error(ErrorCode::RingMismatch, "specialisation runs over Q");
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroWeight, "cannot substitute x -> 0 into b^{(k)}");
  const TruncatedBaxterSeries b = annihilator_b(k, precision);
  std::vector<Scalar> coeffs;
  coeffs.reserve(precision + 1);
  for (std::size_t n = 0; n <= precision; ++n) {
    const Laurent& bn = b[n].laurent();
    if (!bn.shifted(static_cast<std::int64_t>(n)).is_polynomial())
      throw Error(ErrorCode::PropertyViolation, "x^" + std::to_string(n) + " b_" + std::to_string(n) + " is not a polynomial");
    coeffs.push_back(c * eval_at(b[n], lambda));
  }
  return TruncatedBaxterSeries(lambda, std::move(coeffs));
}

AnnihilationReport check_annihilation(const TruncatedBaxterSeries& d, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "annihilator index k must be positive");
  if (d.precision() < k + 1) throw Error(ErrorCode::BoundsTooSmall, "check needs precision >= k+1");
  const std::size_t N = d.precision();
  AnnihilationReport r;
  r.k = k;
  r.precision = N;
  r.weight = d.weight();
  r.c = d[0];
  auto fail = [&r](const char* check, std::size_t index) {
    if (!r.violation) r.violation = std::make_pair(std::string(check), index);
  };

  const auto killed = series_product(TruncatedBaxterSeries::unit_word(d.weight(), k, N), d);
  const auto bad = killed.first_nonzero();
  r.kills_unit_word = !bad.has_value();
  if (bad) fail("i", *bad);

  const SequenceElement image = phi(d);
  r.phi_vanishes_above = true;
  for (std::size_t n = k + 1; n <= N + 1; ++n) {
    if (!image.at(n).is_zero()) {
      r.phi_vanishes_above = false;
      fail("ii", n);
      break;
    }
  }
  r.phi_constant_below = true;
  for (std::size_t n = 1; n <= k; ++n) {
    if (image.at(n) != r.c) {
      r.phi_constant_below = false;
      fail("iii", n);
      break;
    }
  }

  const auto shifted = series_product(d, TruncatedBaxterSeries::unit_word(d.weight(), k - 1, N));
  const Scalar expected = r.c * d.weight().pow(k - 1);
  const Scalar got = phi(shifted).at(k);
  r.witness_nonzero = got == expected && !got.is_zero();
  if (!r.witness_nonzero) fail("iv", k);
  return r;
}

bool ChainStrictnessReport::passed() const {
  return std::all_of(lower_ideal_kills.begin(), lower_ideal_kills.end(), [](bool b) { return b; }) &&
         std::all_of(next_ideal_survives.begin(), next_ideal_survives.end(), [](bool b) { return b; });
}

ChainStrictnessReport check_chain_strictness(std::size_t n_max, const Scalar& lambda, const Scalar& c,
                                             std::size_t precision) {
  if (precision < n_max + 2) throw Error(ErrorCode::BoundsTooSmall, "chain check needs precision >= n_max + 2");
  std::vector<TruncatedBaxterSeries> d;
  for (std::size_t j = 1; j <= n_max + 1; ++j) d.push_back(specialize_b(j, lambda, c, precision));

  ChainStrictnessReport r;
  r.n_max = n_max;
  r.precision = precision;
  r.weight = lambda;
  for (std::size_t n = 1; n <= n_max; ++n) {
    bool kills = true;
    for (std::size_t j = 1; j <= n && kills; ++j) {
      for (std::size_t i = n; i <= precision && kills; ++i) {
        const auto w = TruncatedBaxterSeries::unit_word(lambda, i, precision);
        kills = series_product(d[j - 1], w).is_zero();
      }
    }
    r.lower_ideal_kills.push_back(kills);
    const auto witness = TruncatedBaxterSeries::unit_word(lambda, n, precision);
    r.next_ideal_survives.push_back(!series_product(d[n], witness).is_zero());
  }
  return r;
}

}  // namespace baxter
