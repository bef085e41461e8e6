#ifndef BAXTER_WITNESSES_HPP
#define BAXTER_WITNESSES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "baxter/ideals.hpp"
#include "baxter/serialize.hpp"

namespace baxter {

/// Machine-checkable record of one witness run.
struct Certificate {
  std::string claim;
  Json bounds = Json::object();
  bool passed = false;
  Json evidence = Json::object();

  /// {"claim", "bounds", "verdict": "pass"|"fail", "evidence"}.
  Json to_json() const;
};

// ---------------------------------------------------------------------------
// Ideals I_k = span{1^{(x)(n+1)} : p^k does not divide n} in characteristic p.

class CharPIdealSpec {
 public:
  /// Throws NotPrime unless p is prime, InvalidArgument unless k >= 1.
  CharPIdealSpec(std::uint64_t p, std::uint64_t k);

  std::uint64_t p() const { return p_; }
  std::uint64_t k() const { return k_; }
  /// True iff p^k does not divide n.
  bool contains_index(std::uint64_t n) const;

 private:
  std::uint64_t p_;
  std::uint64_t k_;
};

/// w must be 1^{(x)(n+1)} over X = {}; true iff p^k does not divide n.
bool char_p_ideal_member(const TensorWord& w, const CharPIdealSpec& spec);

struct CharPClosureReport {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::uint64_t max_degree = 0;
  std::string weight;
  std::size_t products_checked = 0;
  /// First (m, n, i) whose term 1^{(x)(m+n-i+1)} escaped I_k.
  std::optional<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> violation;
  /// Exponents e with p^e <= D for which 1^{(x)(p^e+1)} lies in I_{e+1} but not in I_e.
  std::vector<std::uint64_t> strict_at;
  bool strictness_ok = true;

  bool passed() const { return !violation && strictness_ok; }
};

/// Closure of I_k under products with 1^{(x)(m+1)}, m <= D, via the closed form
/// reduced mod p. The weight must live in the prime field F_p.
CharPClosureReport char_p_closure_check(const CharPIdealSpec& spec, std::uint64_t max_degree, const Scalar& lambda);

// ---------------------------------------------------------------------------
// Coefficient-sum system lambda g_1 = 1, g_{r-2} + lambda g_{r-1} = 0 (3 <= r <= n+1), g_n = 0.

struct GSumSystem {
  std::size_t n = 1;
  Scalar lambda = Scalar::zero(RingId::rational());
};

struct GSumResult {
  bool inconsistent = false;
  /// Values forced by back-substitution, g_n first down to g_1.
  std::vector<std::pair<std::size_t, Scalar>> forced;
  /// lambda * g_1 under the forced values; consistency needs it to equal 1.
  Scalar lambda_g1 = Scalar::zero(RingId::rational());
  /// Only when consistent.
  std::vector<Scalar> solution;
};

/// Requires characteristic zero (NonQAlgebra otherwise).
GSumResult gsum_solve(const GSumSystem& sys);

struct SigmaChainReport {
  std::size_t n = 0;
  std::string weight;
  std::size_t max_tensor_degree = 0;
  MembershipCertificate excluded;  // 1(x)x^{n+1} against <1(x)x^i : i <= n>
  MembershipCertificate included;  // 1(x)x^{n+1} against <1(x)x^i : i <= n+1>
  GSumResult gsum;
  std::vector<ShuffleElement> generators;
  ShuffleElement target;

  bool passed() const { return !excluded.is_member() && included.is_member() && gsum.inconsistent; }
};

/// Single variable x over a characteristic-zero field; lambda in that field.
SigmaChainReport sigma_chain_check(std::size_t n, const Scalar& lambda, std::size_t max_tensor_degree);

struct LemmaIdealReport {
  std::vector<Monomial> module_basis;
  std::string weight;
  bool is_ideal = false;
  std::size_t max_tensor_degree = 0;
  std::uint64_t max_degree = 0;
  std::size_t span_rank = 0;
  std::size_t ideal_rank = 0;
  bool saturation_lower_bound = false;
  /// A word of S missing from the ideal slice, or a leading word of the ideal outside span(S).
  std::optional<TensorWord> difference;
  std::optional<std::string> difference_text;

  bool passed() const { return !difference && span_rank == ideal_rank; }
};

/// span(S), S = words with a factor at position >= 1 lying in M, against the Baxter
/// ideal generated by {1 (x) m}, within tensor degree <= L and total degree <= D.
/// Requires lambda = 0 or M closed under multiplication by x up to degree D
/// (PropertyViolation otherwise).
LemmaIdealReport lemma_ideal_check(const std::vector<Monomial>& module_basis, const Scalar& lambda, bool is_ideal,
                                   std::size_t max_tensor_degree, std::uint64_t max_degree);

struct ModuleChainReport {
  std::size_t n_max = 0;
  std::size_t max_tensor_degree = 0;
  std::uint64_t max_degree = 0;
  std::vector<std::size_t> ranks;                // dim of I_n in the slice, n = 1..n_max
  std::vector<std::size_t> projection_ranks;     // dim of p(I_n) in the slice
  std::vector<bool> ascending;                   // I_n inside I_{n+1}, n = 1..n_max-1
  std::vector<bool> strict;                      // 1(x)x^{n+1} in p(I_{n+1}) \ p(I_n)
  std::vector<bool> projection_matches_module;   // p(I_n) == span{x^a (x) x^k : 1 <= k <= n}

  bool passed() const;
};

/// Weight zero. I_n is the Baxter ideal generated by {1 (x) x^k : 1 <= k <= n}; p is
/// the projection onto A (x) A. Requires D >= n_max.
ModuleChainReport module_chain_check(std::size_t n_max, std::size_t max_tensor_degree, std::uint64_t max_degree,
                                     const Scalar& lambda);

struct BaxterReductionReport {
  std::uint64_t seed = 0;
  std::size_t constructions = 0;
  std::size_t reduced_to_zero = 0;
  std::size_t exact_traces = 0;
  std::size_t in_saturated_span = 0;
  /// Index of the first construction that failed any check, with its text.
  std::optional<std::size_t> first_failure;
  std::optional<std::string> failure_text;

  bool passed() const { return !first_failure; }
};

/// Builds f = sum c_i 1^{(x)(a_i+1)} P^{j_i}(g_i) over Q with X = {} for random
/// generators and weights, then reduces f by the generators followed by the
/// leading-term basis of their saturated Baxter ideal slice. Deterministic in seed.
BaxterReductionReport baxter_reduction_check(std::uint64_t seed, std::size_t constructions);

Certificate certify(const BaxterReductionReport& r);
Certificate certify(const CharPClosureReport& r);
Certificate certify(const SigmaChainReport& r);
Certificate certify(const LemmaIdealReport& r);
Certificate certify(const ModuleChainReport& r);
Certificate certify(const AnnihilationReport& r);
Certificate certify(const ChainStrictnessReport& r);

}  // namespace baxter

#endif
