#include "baxter/ideals.hpp"

#include <algorithm>
#include <deque>

namespace baxter {

namespace {

void compositions(std::uint64_t total, std::size_t parts, std::vector<std::uint64_t>& current,
                  std::vector<std::vector<std::uint64_t>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (std::uint64_t first = 0; first <= total; ++first) {
    current.push_back(first);
    compositions(total - first, parts - 1, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::uint64_t>> compositions(std::uint64_t total, std::size_t parts) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> current;
  compositions(total, parts, current, out);
  return out;
}

void append_words(const std::vector<std::vector<Monomial>>& choices, std::vector<Monomial>& current,
                  std::vector<TensorWord>& out) {
  if (current.size() == choices.size()) {
    out.emplace_back(current);
    return;
  }
  for (const auto& m : choices[current.size()]) {
    current.push_back(m);
    append_words(choices, current, out);
    current.pop_back();
  }
}

void require_field(const AlgebraCtx& ctx) {
  if (!ctx.ring().is_field())
    throw Error(ErrorCode::NonFieldRing, "ideal computations need field coefficients, got " + ctx.ring().name());
}

void require_no_variables(const AlgebraCtx& ctx, const char* op) {
  if (ctx.num_variables() != 0)
    throw Error(ErrorCode::UnsupportedContext, std::string(op) + " works in the algebra over C with X = {}");
}

std::uint64_t max_total_degree(const ShuffleElement& e) {
  std::uint64_t d = 0;
  for (const auto& [w, c] : e.terms()) d = std::max(d, w.total_degree());
  return d;
}

// Lowest-index generator applicable at leading degree n.
template <typename Applies>
std::optional<std::size_t> pick_generator(const std::vector<ShuffleElement>& gens, std::size_t n, Applies applies) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    if (gens[i].max_tensor_degree() <= n && applies(gens[i])) return i;
  }
  return std::nullopt;
}

void check_generators(const ShuffleElement& f, const std::vector<ShuffleElement>& gens) {
  for (const auto& g : gens)
    if (!(g.ctx() == f.ctx())) throw Error(ErrorCode::CtxMismatch, "generator lives in a different algebra");
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint64_t degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  for (const auto& c : compositions(degree, num_vars)) {
    std::vector<std::uint32_t> exps(c.begin(), c.end());
    out.emplace_back(std::move(exps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedSliceBasis graded_slice(const CtxPtr& ctx, std::uint64_t degree, std::size_t max_tensor_degree) {
  GradedSliceBasis slice{ctx, degree, max_tensor_degree, {}};
  const std::size_t v = ctx->num_variables();
  for (std::size_t t = 0; t <= max_tensor_degree; ++t) {
    for (const auto& split : compositions(degree, t + 1)) {
      std::vector<std::vector<Monomial>> choices;
      bool empty = false;
      for (std::uint64_t d : split) {
        choices.push_back(monomials_of_degree(v, d));
        empty = empty || choices.back().empty();
      }
      if (empty) continue;
      std::vector<Monomial> current;
      append_words(choices, current, slice.words);
    }
  }
  std::sort(slice.words.begin(), slice.words.end());
  return slice;
}

std::vector<TensorWord> slice_words(const CtxPtr& ctx, std::size_t max_tensor_degree, std::uint64_t max_degree) {
  std::vector<TensorWord> out;
  for (std::uint64_t d = 0; d <= max_degree; ++d) {
    auto slice = graded_slice(ctx, d, max_tensor_degree);
    out.insert(out.end(), slice.words.begin(), slice.words.end());
    if (ctx->num_variables() == 0) break;  // every word has degree 0
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Membership

MembershipCertificate homogeneous_membership(const ShuffleElement& target, const std::vector<ShuffleElement>& generators,
                                             std::size_t max_tensor_degree) {
  require_field(target.ctx());
  check_generators(target, generators);
  if (!is_homogeneous(target)) throw Error(ErrorCode::NotHomogeneous, "target is not homogeneous");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!is_homogeneous(generators[i]))
      throw Error(ErrorCode::NotHomogeneous, "generator " + std::to_string(i) + " is not homogeneous");

  MembershipCertificate cert;
  cert.max_tensor_degree = max_tensor_degree;
  if (target.is_zero()) {
    cert.verdict = MembershipCertificate::Verdict::Member;
    return cert;
  }
  const std::uint64_t grade = target.leading_word().total_degree();
  cert.grade = grade;

  const CtxPtr& ctx = target.ctx_ptr();
  EchelonBasis basis(ctx, /*track=*/true);
  std::vector<std::pair<std::size_t, TensorWord>> columns;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const ShuffleElement& g = generators[i];
    if (g.is_zero()) continue;
    const std::uint64_t dg = g.leading_word().total_degree();
    if (dg > grade) continue;
    for (const auto& w : graded_slice(ctx, grade - dg, max_tensor_degree).words) {
      basis.insert(product(g, ShuffleElement::word(ctx, w)), columns.size());
      columns.emplace_back(i, w);
    }
  }
  cert.rank_plain = basis.rank();

  auto reduction = basis.reduce_tracked(target);
  if (!reduction.remainder.is_zero()) {
    cert.verdict = MembershipCertificate::Verdict::NonMember;
    cert.rank_augmented = cert.rank_plain + 1;
    return cert;
  }
  cert.verdict = MembershipCertificate::Verdict::Member;
  cert.rank_augmented = cert.rank_plain;
  std::map<std::size_t, ShuffleElement> multipliers;
  for (const auto& [tag, c] : reduction.combo) {
    const auto& [gen, w] = columns[tag];
    multipliers.try_emplace(gen, ctx).first->second.add_term(w, c);
  }
  for (auto& [gen, m] : multipliers)
    if (!m.is_zero()) cert.combination.emplace_back(gen, std::move(m));
  if (!verify_membership(target, generators, cert))
    throw Error(ErrorCode::PropertyViolation, "membership certificate failed to re-multiply to the target");
  return cert;
}

bool verify_membership(const ShuffleElement& target, const std::vector<ShuffleElement>& generators,
                       const MembershipCertificate& cert) {
  if (!cert.is_member()) return true;
  ShuffleElement sum(target.ctx_ptr());
  for (const auto& [gen, m] : cert.combination) {
    if (gen >= generators.size()) return false;
    sum += product(generators[gen], m);
  }
  return sum == target;
}

// ---------------------------------------------------------------------------
// Reduction

bool ReductionTrace::reconstructs(const ShuffleElement& f) const {
  ShuffleElement sum = remainder;
  for (const auto& s : steps) sum += s.subtracted;
  return sum == f;
}

ReductionTrace reduce_by_generators(const ShuffleElement& f, const std::vector<ShuffleElement>& gens) {
  if (f.ring().kind() != RingKind::RationalQ)
    throw Error(ErrorCode::NonQAlgebra, "leading-coefficient reduction inverts binomials; needs Q, got " + f.ring().name());
  require_no_variables(f.ctx(), "reduce_by_generators");
  check_generators(f, gens);
  const CtxPtr& ctx = f.ctx_ptr();
  ReductionTrace trace{{}, f};
  while (!trace.remainder.is_zero()) {
    const std::size_t n = trace.remainder.max_tensor_degree();
    const auto pick = pick_generator(gens, n, [](const ShuffleElement&) { return true; });
    if (!pick) break;
    const ShuffleElement& g = gens[*pick];
    const std::size_t m = g.max_tensor_degree();
    const Scalar c = trace.remainder.leading_coefficient() / g.leading_coefficient() /
                     binomial(ctx->ring(), static_cast<long>(n), static_cast<long>(m));
    ShuffleElement cofactor = ShuffleElement::term(ctx, TensorWord::unit_power(n - m + 1), c);
    ShuffleElement subtracted = product(g, cofactor);
    trace.remainder -= subtracted;
    trace.steps.push_back({*pick, std::move(cofactor), 0, std::move(subtracted)});
  }
  return trace;
}

ReductionTrace baxter_reduce(const ShuffleElement& f, const std::vector<ShuffleElement>& gens) {
  require_no_variables(f.ctx(), "baxter_reduce");
  check_generators(f, gens);
  const CtxPtr& ctx = f.ctx_ptr();
  ReductionTrace trace{{}, f};
  while (!trace.remainder.is_zero()) {
    const std::size_t n = trace.remainder.max_tensor_degree();
    const Scalar& b = trace.remainder.leading_coefficient();
    const auto pick = pick_generator(gens, n, [&b](const ShuffleElement& g) {
      return b.exact_div(g.leading_coefficient()).has_value();
    });
    if (!pick) break;
    const ShuffleElement& g = gens[*pick];
    const std::size_t shift = n - g.max_tensor_degree();
    const Scalar c = *b.exact_div(g.leading_coefficient());
    ShuffleElement subtracted = baxter_P_power(g, shift) * c;
    trace.remainder -= subtracted;
    trace.steps.push_back({*pick, ShuffleElement::scalar(ctx, c), shift, std::move(subtracted)});
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Saturation

SaturatedSlice ideal_saturate(const CtxPtr& ctx, const std::vector<ShuffleElement>& gens, std::size_t max_tensor_degree,
                              std::uint64_t max_degree, IdealKind kind) {
  require_field(*ctx);
  SaturatedSlice out{EchelonBasis(ctx), max_tensor_degree, max_degree, false};
  std::vector<TensorWord> multipliers = slice_words(ctx, max_tensor_degree, max_degree);
  const std::size_t dimension = multipliers.size();
  std::erase(multipliers, TensorWord());

  // Closure steps act on the reduced pivot r rather than the raw vector: the
  // canonical order puts tensor degree first, so the span elements of tensor
  // degree <= t are exactly the combinations of pivots whose lead has degree <= t.
  std::deque<ShuffleElement> queue;
  auto fits = [&](const ShuffleElement& e) {
    return e.max_tensor_degree() <= max_tensor_degree && max_total_degree(e) <= max_degree;
  };
  for (const auto& g : gens) {
    if (!(g.ctx() == *ctx)) throw Error(ErrorCode::CtxMismatch, "generator lives in a different algebra");
    if (g.is_zero()) continue;
    if (fits(g)) {
      queue.push_back(g);
    } else {
      out.lower_bound = true;
    }
  }

  while (!queue.empty() && out.basis.rank() < dimension) {
    ShuffleElement r = out.basis.reduce(std::move(queue.front()));
    queue.pop_front();
    if (r.is_zero()) continue;
    out.basis.insert(r);
    const std::size_t t = r.max_tensor_degree();
    const std::uint64_t d = max_total_degree(r);
    if (kind == IdealKind::Baxter) {
      if (t + 1 <= max_tensor_degree) {
        queue.push_back(baxter_P(r));
      } else {
        out.lower_bound = true;
      }
    }
    for (const auto& w : multipliers) {
      if (w.tensor_degree() + t <= max_tensor_degree && w.total_degree() + d <= max_degree) {
        queue.push_back(product(ShuffleElement::word(ctx, w), r));
      } else {
        out.lower_bound = true;
      }
    }
  }
  return out;
}

LeadingIdealChain leading_ideal_chain(const CtxPtr& ctx, const std::vector<ShuffleElement>& gens, std::size_t j_max,
                                      IdealKind kind) {
  require_no_variables(*ctx, "leading_ideal_chain");
  const SaturatedSlice slice = ideal_saturate(ctx, gens, j_max, 0, kind);
  LeadingIdealChain chain;
  chain.lower_bound = slice.lower_bound;
  for (std::size_t j = 0; j <= j_max; ++j) {
    const bool whole = slice.basis.pivots().contains(TensorWord::unit_power(j + 1));
    chain.sigma.push_back(whole ? LeadingIdeal::Whole : LeadingIdeal::Zero);
    if (j > 0 && chain.sigma[j - 1] == LeadingIdeal::Whole && !whole) chain.ascending = false;
  }
  return chain;
}

std::vector<ShuffleElement> leading_term_basis(const CtxPtr& ctx, const std::vector<ShuffleElement>& gens,
                                               std::size_t max_tensor_degree, IdealKind kind) {
  require_no_variables(*ctx, "leading_term_basis");
  const SaturatedSlice slice = ideal_saturate(ctx, gens, max_tensor_degree, 0, kind);
  return slice.basis.basis();
}

}  // namespace baxter
