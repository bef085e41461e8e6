#ifndef BAXTER_IDEALS_HPP
#define BAXTER_IDEALS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "baxter/linalg.hpp"
#include "baxter/shuffle.hpp"

namespace baxter {

/// All words of total degree d and tensor degree <= L, ascending canonical order.
struct GradedSliceBasis {
  CtxPtr ctx;
  std::uint64_t degree = 0;
  std::size_t max_tensor_degree = 0;
  std::vector<TensorWord> words;
};

GradedSliceBasis graded_slice(const CtxPtr& ctx, std::uint64_t degree, std::size_t max_tensor_degree);

/// All words with tensor degree <= L and total degree <= D, ascending canonical order.
std::vector<TensorWord> slice_words(const CtxPtr& ctx, std::size_t max_tensor_degree, std::uint64_t max_degree);

/// Monomials of total degree `degree` in `num_vars` variables, grlex ascending.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint64_t degree);

struct MembershipCertificate {
  enum class Verdict { Member, NonMember };

  Verdict verdict = Verdict::NonMember;
  /// Member: target == sum generators[i] * multiplier.
  std::vector<std::pair<std::size_t, ShuffleElement>> combination;
  /// Dimensions of span{g_i w} and of span{g_i w, target} over the slice.
  std::size_t rank_plain = 0;
  std::size_t rank_augmented = 0;
  std::uint64_t grade = 0;
  std::size_t max_tensor_degree = 0;

  bool is_member() const { return verdict == Verdict::Member; }
};

/// Decides whether `target` lies in the ring ideal generated by `generators`
/// using multipliers drawn from words of the complementary grade and tensor
/// degree <= L. Member certificates are re-multiplied before returning.
MembershipCertificate homogeneous_membership(const ShuffleElement& target, const std::vector<ShuffleElement>& generators,
                                             std::size_t max_tensor_degree);

/// Re-multiplies a Member certificate; NonMember certificates verify trivially.
bool verify_membership(const ShuffleElement& target, const std::vector<ShuffleElement>& generators,
                       const MembershipCertificate& cert);

struct ReductionStep {
  std::size_t generator = 0;
  ShuffleElement cofactor;  // ring multiplier, or the scalar in front of P^{p_shift}(g)
  std::size_t p_shift = 0;
  ShuffleElement subtracted;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  ShuffleElement remainder;

  /// f == sum of subtracted + remainder.
  bool reconstructs(const ShuffleElement& f) const;
};

/// Leading-coefficient cancellation over RationalQ with X = {}: the leading term
/// b 1^{(x)(n+1)} is cancelled by C(n,m)^{-1} (b / lc g) g 1^{(x)(n-m+1)}, using the
/// lowest-index generator of degree m <= n. Throws NonQAlgebra off RationalQ.
ReductionTrace reduce_by_generators(const ShuffleElement& f, const std::vector<ShuffleElement>& gens);

/// Cancellation by scalar multiples of P^{n-m}(g), X = {}. A generator applies
/// when its degree is <= n and its leading coefficient divides that of f.
ReductionTrace baxter_reduce(const ShuffleElement& f, const std::vector<ShuffleElement>& gens);

enum class IdealKind { Ring, Baxter };

struct SaturatedSlice {
  EchelonBasis basis;
  std::size_t max_tensor_degree = 0;
  std::uint64_t max_degree = 0;
  /// Set when some closure step left the slice and was dropped.
  bool lower_bound = false;
};

/// Spanning set of the (Baxter) ideal generated by gens, intersected with the slice
/// of tensor degree <= L and total degree <= D, closed under products with words and
/// (for IdealKind::Baxter) under P within those bounds.
SaturatedSlice ideal_saturate(const CtxPtr& ctx, const std::vector<ShuffleElement>& gens, std::size_t max_tensor_degree,
                              std::uint64_t max_degree, IdealKind kind);

inline SaturatedSlice baxter_ideal_saturate(const CtxPtr& ctx, const std::vector<ShuffleElement>& gens,
                                            std::size_t max_tensor_degree, std::uint64_t max_degree) {
  return ideal_saturate(ctx, gens, max_tensor_degree, max_degree, IdealKind::Baxter);
}

/// Over a field each leading-coefficient ideal is {0} or the whole ring.
enum class LeadingIdeal { Zero, Whole };

struct LeadingIdealChain {
  std::vector<LeadingIdeal> sigma;  // sigma[j] for j = 0..j_max
  bool ascending = true;
  bool lower_bound = false;
};

/// Sigma_j for X = {}: Whole iff the saturated slice of tensor degree <= j_max holds
/// an element of leading degree exactly j.
LeadingIdealChain leading_ideal_chain(const CtxPtr& ctx, const std::vector<ShuffleElement>& gens, std::size_t j_max,
                                      IdealKind kind = IdealKind::Ring);

/// The ideal elements of each leading degree j <= L found by saturation (X = {}),
/// normalised to leading coefficient one. Reducing by these succeeds on every
/// ideal element of degree <= L that the saturation reaches.
std::vector<ShuffleElement> leading_term_basis(const CtxPtr& ctx, const std::vector<ShuffleElement>& gens,
                                               std::size_t max_tensor_degree, IdealKind kind);

}  // namespace baxter

#endif
