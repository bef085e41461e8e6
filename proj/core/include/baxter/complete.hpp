#ifndef BAXTER_COMPLETE_HPP
#define BAXTER_COMPLETE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "baxter/coeff.hpp"
#include "baxter/shuffle.hpp"

namespace baxter {

/// sum_{n<=N} b_n 1^{(x)(n+1)} in the complete algebra over C, modulo Fil^{N+1}.
class TruncatedBaxterSeries {
 public:
  TruncatedBaxterSeries(Scalar weight, std::vector<Scalar> coeffs);
  static TruncatedBaxterSeries zero(const Scalar& weight, std::size_t precision);
  /// The series 1^{(x)(k+1)}.
  static TruncatedBaxterSeries unit_word(const Scalar& weight, std::size_t k, std::size_t precision);

  RingId ring() const { return weight_.ring(); }
  const Scalar& weight() const { return weight_; }
  std::size_t precision() const { return coeffs_.size() - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t n) const { return coeffs_[n]; }
  bool is_zero() const;
  std::optional<std::size_t> first_nonzero() const;

  TruncatedBaxterSeries& operator+=(const TruncatedBaxterSeries& other);
  TruncatedBaxterSeries& operator-=(const TruncatedBaxterSeries& other);
  TruncatedBaxterSeries& operator*=(const Scalar& c);
  friend TruncatedBaxterSeries operator+(TruncatedBaxterSeries a, const TruncatedBaxterSeries& b) { return a += b; }
  friend TruncatedBaxterSeries operator-(TruncatedBaxterSeries a, const TruncatedBaxterSeries& b) { return a -= b; }

  /// Drops coefficients above `precision` (which must not exceed the current one).
  TruncatedBaxterSeries truncated(std::size_t precision) const;

  friend bool operator==(const TruncatedBaxterSeries&, const TruncatedBaxterSeries&) = default;

 private:
  void check_compatible(const TruncatedBaxterSeries& other) const;

  Scalar weight_;
  std::vector<Scalar> coeffs_;
};

/// Truncated element (a_1, ..., a_N) of the componentwise product algebra prod_{n>=1} C.
class SequenceElement {
 public:
  explicit SequenceElement(RingId ring, std::vector<Scalar> comps);

  RingId ring() const { return ring_; }
  std::size_t length() const { return comps_.size(); }
  const std::vector<Scalar>& comps() const { return comps_; }
  /// 1-based component access, matching the indexing of the product.
  const Scalar& at(std::size_t n) const { return comps_.at(n - 1); }

  friend SequenceElement operator*(const SequenceElement& a, const SequenceElement& b);
  friend bool operator==(const SequenceElement&, const SequenceElement&) = default;

 private:
  RingId ring_;
  std::vector<Scalar> comps_;
};

/// Coefficients of 1^{(x)(m+1)} 1^{(x)(n+1)} keyed by tensor degree; zero entries omitted.
std::map<std::size_t, Scalar> unit_power_product(std::size_t m, std::size_t n, const Scalar& lambda);

/// Product in the truncated complete algebra; both sides must share ring, weight and precision.
TruncatedBaxterSeries series_product(const TruncatedBaxterSeries& s, const TruncatedBaxterSeries& t);

/// Bridges to the X = {} shuffle algebra.
TruncatedBaxterSeries series_from_element(const ShuffleElement& e, std::size_t precision);
ShuffleElement element_from_series(const CtxPtr& ctx, const TruncatedBaxterSeries& s);

/// Component n (1 <= n <= N+1) is sum_{i<n} C(n-1, i) lambda^i b_i.
/// Throws ZeroDivisorWeight when lambda is zero.
SequenceElement phi(const TruncatedBaxterSeries& s);

/// Rank of the (N+1)x(N+1) matrix sending b_0..b_N to the first N+1 components of phi.
std::size_t phi_rank(const Scalar& lambda, std::size_t precision);

/// Solution b^{(k)} of 1^{(x)(k+1)} b = 0 over LaurentQ with weight x, normalised by
/// b_0 = 1 and b_1 = ... = b_{k-1} = 0.
TruncatedBaxterSeries annihilator_b(std::size_t k, std::size_t precision);

/// d^{(k)} = c * b^{(k)}(lambda) over RationalQ with weight lambda. Throws ZeroWeight on
/// lambda = 0 and PropertyViolation if some x^n b_n fails to be a polynomial.
TruncatedBaxterSeries specialize_b(std::size_t k, const Scalar& lambda, const Scalar& c, std::size_t precision);

struct AnnihilationReport {
  std::size_t k = 0;
  std::size_t precision = 0;
  Scalar weight = Scalar::zero(RingId::rational());
  Scalar c = Scalar::zero(RingId::rational());
  bool kills_unit_word = false;     // (i)   1^{(x)(k+1)} d == 0 mod Fil^{N+1}
  bool phi_vanishes_above = false;  // (ii)  phi(d)_n == 0 for k+1 <= n <= N+1
  bool phi_constant_below = false;  // (iii) phi(d)_n == c for 1 <= n <= k
  bool witness_nonzero = false;     // (iv)  phi(d 1^{(x)k})_k == c lambda^{k-1} != 0
  /// First failing check ("i".."iv") and the index at which it failed.
  std::optional<std::pair<std::string, std::size_t>> violation;

  bool passed() const { return !violation.has_value(); }
};

AnnihilationReport check_annihilation(const TruncatedBaxterSeries& d, std::size_t k);

struct ChainStrictnessReport {
  std::size_t n_max = 0;
  std::size_t precision = 0;
  Scalar weight = Scalar::zero(RingId::rational());
  /// For each n: d^{(j)} w == 0 for j <= n and every basis word w in Fil^n.
  std::vector<bool> lower_ideal_kills;
  /// For each n: d^{(n+1)} 1^{(x)(n+1)} != 0, so I_{n+1} Fil^n != 0.
  std::vector<bool> next_ideal_survives;

  bool passed() const;
};

/// Truncated certificate that I_n Fil^n = 0 != I_{n+1} Fil^n for n = 1..n_max,
/// with I_n generated by d^{(1)}, ..., d^{(n)}.
ChainStrictnessReport check_chain_strictness(std::size_t n_max, const Scalar& lambda, const Scalar& c,
                                             std::size_t precision);

}  // namespace baxter

#endif
