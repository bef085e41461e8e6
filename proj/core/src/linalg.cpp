#include "baxter/linalg.hpp"

namespace baxter {

std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar p = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Scalar a = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] = p * rows[r][c] - a * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

namespace {

void add_scaled(Combination& into, const Combination& from, const Scalar& c) {
  for (const auto& [tag, v] : from) {
    auto [it, inserted] = into.try_emplace(tag, v * c);
    if (!inserted) {
      it->second += v * c;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

}  // namespace

EchelonBasis::EchelonBasis(CtxPtr ctx, bool track) : ctx_(std::move(ctx)), track_(track) {
  if (!ctx_->ring().is_field())
    throw Error(ErrorCode::NonFieldRing, "linear algebra needs field coefficients, got " + ctx_->ring().name());
}

ShuffleElement EchelonBasis::reduce(ShuffleElement v) const {
  while (!v.is_zero()) {
    auto it = pivots_.find(v.leading_word());
    if (it == pivots_.end()) break;
    v.add_scaled(it->second.vector, -v.leading_coefficient());
  }
  return v;
}

EchelonBasis::Reduction EchelonBasis::reduce_tracked(ShuffleElement v) const {
  Reduction r{std::move(v), {}};
  while (!r.remainder.is_zero()) {
    auto it = pivots_.find(r.remainder.leading_word());
    if (it == pivots_.end()) break;
    const Scalar c = r.remainder.leading_coefficient();
    r.remainder.add_scaled(it->second.vector, -c);
    add_scaled(r.combo, it->second.combo, c);
  }
  return r;
}

bool EchelonBasis::insert(const ShuffleElement& v, std::size_t tag) {
  Reduction r = track_ ? reduce_tracked(v) : Reduction{reduce(v), {}};
  if (r.remainder.is_zero()) return false;
  // remainder = v - sum combo * inputs
  Combination combo;
  if (track_) {
    combo.emplace(tag, Scalar::one(ctx_->ring()));
    add_scaled(combo, r.combo, -Scalar::one(ctx_->ring()));
  }
  const Scalar inv = r.remainder.leading_coefficient().inverse();
  r.remainder *= inv;
  for (auto& [t, c] : combo) c *= inv;
  const TensorWord lead = r.remainder.leading_word();
  pivots_.emplace(lead, Pivot{std::move(r.remainder), std::move(combo)});
  return true;
}

std::vector<ShuffleElement> EchelonBasis::basis() const {
  std::vector<ShuffleElement> out;
  out.reserve(pivots_.size());
  for (const auto& [w, p] : pivots_) out.push_back(p.vector);
  return out;
}

bool span_contains(const EchelonBasis& super, const EchelonBasis& sub) {
  for (const auto& [w, p] : sub.pivots())
    if (!super.contains(p.vector)) return false;
  return true;
}

bool same_span(const EchelonBasis& a, const EchelonBasis& b) {
  return a.rank() == b.rank() && span_contains(a, b);
}

}  // namespace baxter
