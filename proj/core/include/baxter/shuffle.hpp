#ifndef BAXTER_SHUFFLE_HPP
#define BAXTER_SHUFFLE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "baxter/coeff.hpp"

namespace baxter {

/// Monomial in the variables of an AlgebraCtx, stored as an exponent vector
/// indexed by variable position. Trailing zeros are never stored, so the empty
/// vector is the monomial 1 and equal monomials are structurally equal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t exponent(std::size_t var) const { return var < exps_.size() ? exps_[var] : 0; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t degree() const;
  bool is_one() const { return exps_.empty(); }
  /// Largest variable index with a nonzero exponent, plus one.
  std::size_t support_size() const { return exps_.size(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic: total degree first, then the earlier variable dominates.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> exps_;
};

/// Basis word w_0 (x) w_1 (x) ... (x) w_m of A^{(x)(m+1)}; never empty.
class TensorWord {
 public:
  TensorWord() : factors_(1) {}
  explicit TensorWord(std::vector<Monomial> factors);
  /// 1^{(x)count}, count >= 1.
  static TensorWord unit_power(std::size_t count);

  std::size_t length() const { return factors_.size(); }
  std::size_t tensor_degree() const { return factors_.size() - 1; }
  /// Sum of all exponents across all factors.
  std::uint64_t total_degree() const;
  const Monomial& operator[](std::size_t i) const { return factors_[i]; }
  std::span<const Monomial> factors() const { return factors_; }
  std::span<const Monomial> tail() const { return std::span<const Monomial>(factors_).subspan(1); }

  /// 1 (x) w, the image under the Baxter operator.
  TensorWord with_unit_prefix() const;

  friend bool operator==(const TensorWord&, const TensorWord&) = default;
  /// Tensor degree ascending, then lexicographic on factors with graded-lex monomials.
  friend std::strong_ordering operator<=>(const TensorWord& a, const TensorWord& b);

 private:
  std::vector<Monomial> factors_;
};

/// Coefficient ring, ordered variable list X and weight lambda of a shuffle Baxter
/// algebra over C[X].
class AlgebraCtx {
 public:
  AlgebraCtx(RingId ring, std::vector<std::string> variables, Scalar weight);

  static std::shared_ptr<const AlgebraCtx> make(RingId ring, std::vector<std::string> variables, Scalar weight) {
    return std::make_shared<const AlgebraCtx>(ring, std::move(variables), std::move(weight));
  }

  RingId ring() const { return ring_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  const Scalar& weight() const { return weight_; }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  friend bool operator==(const AlgebraCtx&, const AlgebraCtx&);

 private:
  RingId ring_;
  std::vector<std::string> vars_;
  Scalar weight_;
};

using CtxPtr = std::shared_ptr<const AlgebraCtx>;

/// Finitely supported C-linear combination of tensor words.
class ShuffleElement {
 public:
  using Terms = std::map<TensorWord, Scalar>;

  explicit ShuffleElement(CtxPtr ctx);  // zero
  static ShuffleElement word(CtxPtr ctx, TensorWord w);
  static ShuffleElement term(CtxPtr ctx, TensorWord w, Scalar coeff);
  static ShuffleElement scalar(CtxPtr ctx, Scalar c);
  static ShuffleElement one(CtxPtr ctx);

  const CtxPtr& ctx_ptr() const { return ctx_; }
  const AlgebraCtx& ctx() const { return *ctx_; }
  RingId ring() const { return ctx_->ring(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const TensorWord& w) const;

  /// Largest word in the canonical order; throws ZeroElement on zero.
  const TensorWord& leading_word() const;
  const Scalar& leading_coefficient() const;
  std::size_t max_tensor_degree() const;

  void add_term(const TensorWord& w, const Scalar& coeff);

  ShuffleElement& operator+=(const ShuffleElement& other);
  ShuffleElement& operator-=(const ShuffleElement& other);
  ShuffleElement operator-() const;
  ShuffleElement& operator*=(const Scalar& c);
  friend ShuffleElement operator+(ShuffleElement a, const ShuffleElement& b) { return a += b; }
  friend ShuffleElement operator-(ShuffleElement a, const ShuffleElement& b) { return a -= b; }
  friend ShuffleElement operator*(ShuffleElement a, const Scalar& c) { return a *= c; }
  friend ShuffleElement operator*(const Scalar& c, ShuffleElement a) { return a *= c; }

  /// Adds c * other without materialising the intermediate.
  void add_scaled(const ShuffleElement& other, const Scalar& c);

  friend bool operator==(const ShuffleElement& a, const ShuffleElement& b);

 private:
  void check_ctx(const ShuffleElement& other) const;

  CtxPtr ctx_;
  Terms terms_;
};

/// (sigma, T) in the set of (m,n)-mixable shuffles. `positions` lists the
/// 1-based slots receiving the m x-factors (sigma^{-1}({1..m})), ascending;
/// `merges` lists the left slot k of each merged admissible pair (k, k+1).
struct MixableShuffle {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::size_t> positions;
  std::vector<std::size_t> merges;

  friend bool operator==(const MixableShuffle&, const MixableShuffle&) = default;
};

inline constexpr std::size_t kDefaultShuffleLimit = 16;

/// All of S-bar(m, n), ordered lexicographically by positions and then by the
/// bitmask order of merged admissible pairs. Throws EnumerationTooLarge when
/// m + n exceeds limit.
std::vector<MixableShuffle> enumerate_mixable_shuffles(std::size_t m, std::size_t n,
                                                       std::size_t limit = kDefaultShuffleLimit);

/// Shared, cached enumeration used by the product kernel.
std::shared_ptr<const std::vector<MixableShuffle>> cached_mixable_shuffles(std::size_t m, std::size_t n);

struct MixedFactors {
  std::vector<Monomial> factors;
  std::size_t merge_count = 0;
};

/// sigma(x+ (x) y+; T): the shuffled factor list with merged slots multiplied.
MixedFactors apply_mixable_shuffle(std::span<const Monomial> xplus, std::span<const Monomial> yplus,
                                   const MixableShuffle& s);

/// Mixed shuffle product.
ShuffleElement product(const ShuffleElement& a, const ShuffleElement& b);
/// Recursive quasi-shuffle product, kept independent of the enumeration for cross-checks.
ShuffleElement product_oracle(const ShuffleElement& a, const ShuffleElement& b);

/// Baxter operator: prefix every word with the factor 1.
ShuffleElement baxter_P(const ShuffleElement& a);
ShuffleElement baxter_P_power(const ShuffleElement& a, std::size_t times);

/// P(a)P(b) - P(aP(b)) - P(bP(a)) - lambda P(ab) == 0.
bool verify_baxter_identity(const ShuffleElement& a, const ShuffleElement& b);

inline std::uint64_t total_degree(const TensorWord& w) { return w.total_degree(); }
ShuffleElement homogeneous_component(const ShuffleElement& a, std::uint64_t degree);
bool is_homogeneous(const ShuffleElement& a);

/// Minimum tensor degree over the support: the largest k with a in Fil^k.
std::size_t filtration_degree(const ShuffleElement& a);

}  // namespace baxter

#endif
