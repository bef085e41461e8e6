#ifndef BAXTER_LINALG_HPP
#define BAXTER_LINALG_HPP

#include <map>
#include <vector>

#include "baxter/coeff.hpp"
#include "baxter/shuffle.hpp"

namespace baxter {

/// Rank of a dense matrix over an integral domain (fraction-free elimination).
std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows);

/// Linear combination of inserted vectors, keyed by the tag given at insertion.
using Combination = std::map<std::size_t, Scalar>;

/// Row-echelon basis of a subspace of a shuffle algebra over a field. Vectors are
/// elements; each pivot is keyed by its leading word and normalised to leading
/// coefficient one, so a vector lies in the span iff leading-term reduction
/// sends it to zero.
class EchelonBasis {
 public:
  struct Pivot {
    ShuffleElement vector;
    Combination combo;  // vector == sum combo[t] * input_t (only when tracking)
  };

  struct Reduction {
    ShuffleElement remainder;
    Combination combo;  // v == remainder + sum combo[t] * input_t
  };

  /// Throws NonFieldRing unless ctx's ring is a field.
  explicit EchelonBasis(CtxPtr ctx, bool track = false);

  /// Returns true iff v enlarged the span.
  bool insert(const ShuffleElement& v, std::size_t tag = 0);
  ShuffleElement reduce(ShuffleElement v) const;
  Reduction reduce_tracked(ShuffleElement v) const;
  bool contains(const ShuffleElement& v) const { return reduce(v).is_zero(); }

  std::size_t rank() const { return pivots_.size(); }
  const std::map<TensorWord, Pivot>& pivots() const { return pivots_; }
  std::vector<ShuffleElement> basis() const;
  const CtxPtr& ctx() const { return ctx_; }

 private:
  CtxPtr ctx_;
  bool track_;
  std::map<TensorWord, Pivot> pivots_;
};

/// True iff the spans of the two bases coincide.
bool same_span(const EchelonBasis& a, const EchelonBasis& b);
/// True iff every basis vector of `sub` lies in the span of `super`.
bool span_contains(const EchelonBasis& super, const EchelonBasis& sub);

}  // namespace baxter

#endif
