#include <algorithm>
#include <numeric>
#include <set>

#include "baxter/shuffle.hpp"

namespace baxter {

// ---------------------------------------------------------------------------
// Monomial / TensorWord

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(index + 1, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Monomial r;
  r.exps_.resize(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = a.exponent(i) + b.exponent(i);
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t len = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

TensorWord::TensorWord(std::vector<Monomial> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::ShapeMismatch, "a tensor word needs at least one factor");
}

TensorWord TensorWord::unit_power(std::size_t count) {
  if (count == 0) throw Error(ErrorCode::ShapeMismatch, "1^{(x)0} is not a word");
  return TensorWord(std::vector<Monomial>(count));
}

std::uint64_t TensorWord::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.degree();
  return d;
}

TensorWord TensorWord::with_unit_prefix() const {
  std::vector<Monomial> f;
  f.reserve(factors_.size() + 1);
  f.emplace_back();
  f.insert(f.end(), factors_.begin(), factors_.end());
  return TensorWord(std::move(f));
}

std::strong_ordering operator<=>(const TensorWord& a, const TensorWord& b) {
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    if (auto c = a.factors_[i] <=> b.factors_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// AlgebraCtx

AlgebraCtx::AlgebraCtx(RingId ring, std::vector<std::string> variables, Scalar weight)
    : ring_(ring), vars_(std::move(variables)), weight_(std::move(weight)) {
  if (weight_.ring() != ring_)
    throw Error(ErrorCode::RingMismatch, "weight lives in " + weight_.ring().name() + ", ctx ring is " + ring_.name());
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
    if (!seen.insert(v).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable \"" + v + "\"");
  }
}

std::optional<std::size_t> AlgebraCtx::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool operator==(const AlgebraCtx& a, const AlgebraCtx& b) {
  return a.ring_ == b.ring_ && a.vars_ == b.vars_ && a.weight_ == b.weight_;
}

// ---------------------------------------------------------------------------
// ShuffleElement

ShuffleElement::ShuffleElement(CtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw Error(ErrorCode::InvalidArgument, "null algebra context");
}

ShuffleElement ShuffleElement::word(CtxPtr ctx, TensorWord w) {
  const RingId ring = ctx->ring();
  return term(std::move(ctx), std::move(w), Scalar::one(ring));
}

ShuffleElement ShuffleElement::term(CtxPtr ctx, TensorWord w, Scalar coeff) {
  ShuffleElement e(std::move(ctx));
  e.add_term(w, coeff);
  return e;
}

ShuffleElement ShuffleElement::scalar(CtxPtr ctx, Scalar c) { return term(std::move(ctx), TensorWord(), std::move(c)); }

ShuffleElement ShuffleElement::one(CtxPtr ctx) { return word(std::move(ctx), TensorWord()); }

Scalar ShuffleElement::coefficient(const TensorWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(ring()) : it->second;
}

const TensorWord& ShuffleElement::leading_word() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroElement, "zero element has no leading word");
  return terms_.rbegin()->first;
}

const Scalar& ShuffleElement::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroElement, "zero element has no leading coefficient");
  return terms_.rbegin()->second;
}

std::size_t ShuffleElement::max_tensor_degree() const { return leading_word().tensor_degree(); }

void ShuffleElement::add_term(const TensorWord& w, const Scalar& coeff) {
  if (coeff.ring() != ring())
    throw Error(ErrorCode::RingMismatch, "coefficient in " + coeff.ring().name() + ", element in " + ring().name());
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ShuffleElement::check_ctx(const ShuffleElement& other) const {
  if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_))
    throw Error(ErrorCode::CtxMismatch, "elements belong to different algebras");
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& other) {
  check_ctx(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& other) {
  check_ctx(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

void ShuffleElement::add_scaled(const ShuffleElement& other, const Scalar& c) {
  check_ctx(other);
  if (c.is_zero()) return;
  for (const auto& [w, v] : other.terms_) add_term(w, v * c);
}

ShuffleElement ShuffleElement::operator-() const {
  ShuffleElement r(ctx_);
  for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, -c);
  return r;
}

ShuffleElement& ShuffleElement::operator*=(const Scalar& c) {
  if (c.ring() != ring()) throw Error(ErrorCode::RingMismatch, "scalar in " + c.ring().name());
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const ShuffleElement& a, const ShuffleElement& b) {
  return (a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Products

namespace {

void check_same_algebra(const ShuffleElement& a, const ShuffleElement& b) {
  if (a.ctx_ptr() != b.ctx_ptr() && !(a.ctx() == b.ctx()))
    throw Error(ErrorCode::CtxMismatch, "product of elements from different algebras");
}

// A word of tensor degree 0 acts on the first factor of the other word.
TensorWord scale_head(const Monomial& head, const TensorWord& w) {
  std::vector<Monomial> f(w.factors().begin(), w.factors().end());
  f[0] = head * f[0];
  return TensorWord(std::move(f));
}

std::vector<Scalar> weight_powers(const AlgebraCtx& ctx, std::size_t max_power) {
  std::vector<Scalar> pw;
  pw.reserve(max_power + 1);
  pw.push_back(Scalar::one(ctx.ring()));
  for (std::size_t i = 1; i <= max_power; ++i) pw.push_back(pw.back() * ctx.weight());
  return pw;
}

// Adds coeff * (x <> y) for single words of positive tensor degree.
void multiply_words(const TensorWord& x, const TensorWord& y, const Scalar& coeff,
                    const std::vector<Scalar>& lambda_pow, ShuffleElement& out) {
  const std::size_t m = x.tensor_degree();
  const std::size_t n = y.tensor_degree();
  const auto shuffles = cached_mixable_shuffles(m, n);
  const std::size_t max_merges = std::min(m, n);
  const bool weight_zero = lambda_pow.size() < 2 || lambda_pow[1].is_zero();

  std::map<TensorWord, std::vector<std::uint64_t>> counts;
  const Monomial head = x[0] * y[0];
  std::vector<Monomial> buffer;
  for (const auto& s : *shuffles) {
    if (weight_zero && !s.merges.empty()) continue;
    MixedFactors mixed = apply_mixable_shuffle(x.tail(), y.tail(), s);
    buffer.clear();
    buffer.reserve(mixed.factors.size() + 1);
    buffer.push_back(head);
    for (auto& f : mixed.factors) buffer.push_back(std::move(f));
    auto& slot = counts[TensorWord(buffer)];
    if (slot.empty()) slot.assign(max_merges + 1, 0);
    ++slot[mixed.merge_count];
  }
  const RingId ring = out.ring();
  for (const auto& [w, per_merge] : counts) {
    Scalar c = Scalar::zero(ring);
    for (std::size_t t = 0; t < per_merge.size(); ++t) {
      if (per_merge[t] == 0) continue;
      c += Scalar::from_integer(ring, static_cast<unsigned long>(per_merge[t])) * lambda_pow[t];
    }
    out.add_term(w, c * coeff);
  }
}

}  // namespace

ShuffleElement product(const ShuffleElement& a, const ShuffleElement& b) {
  check_same_algebra(a, b);
  ShuffleElement out(a.ctx_ptr());
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t max_merges = std::min(a.max_tensor_degree(), b.max_tensor_degree());
  const auto lambda_pow = weight_powers(a.ctx(), std::max<std::size_t>(max_merges, 1));
  for (const auto& [wx, cx] : a.terms()) {
    for (const auto& [wy, cy] : b.terms()) {
      const Scalar c = cx * cy;
      if (wx.tensor_degree() == 0) {
        out.add_term(scale_head(wx[0], wy), c);
      } else if (wy.tensor_degree() == 0) {
        out.add_term(scale_head(wy[0], wx), c);
      } else {
        multiply_words(wx, wy, c, lambda_pow, out);
      }
    }
  }
  return out;
}

namespace {

using Sequence = std::vector<Monomial>;
using SequenceSum = std::map<Sequence, Scalar>;

// Quasi-shuffle of the suffixes u[i:] and v[j:], memoised over (i, j).
class QuasiShuffle {
 public:
  QuasiShuffle(std::span<const Monomial> u, std::span<const Monomial> v, const Scalar& lambda)
      : u_(u), v_(v), lambda_(lambda), memo_((u.size() + 1) * (v.size() + 1)) {}

  const SequenceSum& at(std::size_t i, std::size_t j) {
    auto& slot = memo_[i * (v_.size() + 1) + j];
    if (slot) return *slot;
    SequenceSum sum;
    const Scalar one = Scalar::one(lambda_.ring());
    if (i == u_.size()) {
      sum.emplace(Sequence(v_.begin() + j, v_.end()), one);
    } else if (j == v_.size()) {
      sum.emplace(Sequence(u_.begin() + i, u_.end()), one);
    } else {
      prepend_into(sum, u_[i], at(i + 1, j), one);
      prepend_into(sum, v_[j], at(i, j + 1), one);
      if (!lambda_.is_zero()) prepend_into(sum, u_[i] * v_[j], at(i + 1, j + 1), lambda_);
    }
    slot = std::make_unique<SequenceSum>(std::move(sum));
    return *slot;
  }

 private:
  static void prepend_into(SequenceSum& out, const Monomial& head, const SequenceSum& src, const Scalar& scale) {
    for (const auto& [seq, c] : src) {
      Sequence s;
      s.reserve(seq.size() + 1);
      s.push_back(head);
      s.insert(s.end(), seq.begin(), seq.end());
      const Scalar add = c * scale;
      auto [it, inserted] = out.try_emplace(std::move(s), add);
      if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }

  std::span<const Monomial> u_;
  std::span<const Monomial> v_;
  Scalar lambda_;
  std::vector<std::unique_ptr<SequenceSum>> memo_;
};

}  // namespace

ShuffleElement product_oracle(const ShuffleElement& a, const ShuffleElement& b) {
  check_same_algebra(a, b);
  ShuffleElement out(a.ctx_ptr());
  for (const auto& [wx, cx] : a.terms()) {
    for (const auto& [wy, cy] : b.terms()) {
      QuasiShuffle qs(wx.tail(), wy.tail(), a.ctx().weight());
      const Monomial head = wx[0] * wy[0];
      const Scalar c = cx * cy;
      for (const auto& [seq, k] : qs.at(0, 0)) {
        Sequence f;
        f.reserve(seq.size() + 1);
        f.push_back(head);
        f.insert(f.end(), seq.begin(), seq.end());
        out.add_term(TensorWord(std::move(f)), k * c);
      }
    }
  }
  return out;
}

ShuffleElement baxter_P(const ShuffleElement& a) {
  ShuffleElement out(a.ctx_ptr());
  for (const auto& [w, c] : a.terms()) out.add_term(w.with_unit_prefix(), c);
  return out;
}

ShuffleElement baxter_P_power(const ShuffleElement& a, std::size_t times) {
  ShuffleElement out = a;
  for (std::size_t i = 0; i < times; ++i) out = baxter_P(out);
  return out;
}

bool verify_baxter_identity(const ShuffleElement& a, const ShuffleElement& b) {
  check_same_algebra(a, b);
  const ShuffleElement pa = baxter_P(a);
  const ShuffleElement pb = baxter_P(b);
  ShuffleElement lhs = product(pa, pb);
  lhs -= baxter_P(product(a, pb));
  lhs -= baxter_P(product(b, pa));
  lhs -= baxter_P(product(a, b)) * a.ctx().weight();
  return lhs.is_zero();
}

ShuffleElement homogeneous_component(const ShuffleElement& a, std::uint64_t degree) {
  ShuffleElement out(a.ctx_ptr());
  for (const auto& [w, c] : a.terms())
    if (w.total_degree() == degree) out.add_term(w, c);
  return out;
}

bool is_homogeneous(const ShuffleElement& a) {
  if (a.is_zero()) return true;
  const std::uint64_t d = a.terms().begin()->first.total_degree();
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [d](const auto& t) { return t.first.total_degree() == d; });
}

std::size_t filtration_degree(const ShuffleElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "filtration degree of zero");
  return a.terms().begin()->first.tensor_degree();
}

}  // namespace baxter
