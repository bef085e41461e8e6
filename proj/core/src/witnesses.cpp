#include "baxter/witnesses.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "baxter/text.hpp"

namespace baxter {

Json Certificate::to_json() const {
  Json j;
  j["claim"] = claim;
  j["bounds"] = bounds;
  j["verdict"] = passed ? "pass" : "fail";
  j["evidence"] = evidence;
  return j;
}

// ---------------------------------------------------------------------------
// Characteristic p

CharPIdealSpec::CharPIdealSpec(std::uint64_t p, std::uint64_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "ideal index k must be at least 1");
}

bool CharPIdealSpec::contains_index(std::uint64_t n) const {
  // p^k | n iff n has at least k factors of p; n = 0 is divisible by everything.
  if (n == 0) return false;
  std::uint64_t valuation = 0;
  while (n % p_ == 0 && valuation < k_) {
    n /= p_;
    ++valuation;
  }
  return valuation < k_;
}

bool char_p_ideal_member(const TensorWord& w, const CharPIdealSpec& spec) {
  for (const auto& f : w.factors())
    if (!f.is_one()) throw Error(ErrorCode::ShapeMismatch, "char-p ideals contain only words 1^{(x)(n+1)}");
  return spec.contains_index(w.tensor_degree());
}

CharPClosureReport char_p_closure_check(const CharPIdealSpec& spec, std::uint64_t max_degree, const Scalar& lambda) {
  if (lambda.ring() != RingId::prime_field(spec.p()))
    throw Error(ErrorCode::RingMismatch, "weight must lie in F_" + std::to_string(spec.p()));
  CharPClosureReport r;
  r.p = spec.p();
  r.k = spec.k();
  r.max_degree = max_degree;
  r.weight = lambda.to_string();
  for (std::uint64_t m = 0; m <= max_degree && !r.violation; ++m) {
    for (std::uint64_t n = 0; n <= max_degree && !r.violation; ++n) {
      if (!spec.contains_index(n)) continue;
      ++r.products_checked;
      for (const auto& [t, c] : unit_power_product(m, n, lambda)) {
        if (!spec.contains_index(t)) {
          r.violation = std::make_tuple(m, n, m + n - t);
          break;
        }
      }
    }
  }
  std::uint64_t pe = spec.p();
  for (std::uint64_t e = 1; pe <= max_degree; ++e, pe *= spec.p()) {
    const bool in_next = CharPIdealSpec(spec.p(), e + 1).contains_index(pe);
    const bool in_this = CharPIdealSpec(spec.p(), e).contains_index(pe);
    if (in_next && !in_this) {
      r.strict_at.push_back(e);
    } else {
      r.strictness_ok = false;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Coefficient sums

GSumResult gsum_solve(const GSumSystem& sys) {
  const RingId ring = sys.lambda.ring();
  if (ring.characteristic() != 0)
    throw Error(ErrorCode::NonQAlgebra, "the coefficient-sum argument needs characteristic zero");
  if (sys.n == 0) throw Error(ErrorCode::InvalidArgument, "system size n must be positive");
  GSumResult out;
  out.lambda_g1 = Scalar::zero(ring);
  std::vector<Scalar> g(sys.n + 1, Scalar::zero(ring));  // 1-based
  out.forced.emplace_back(sys.n, g[sys.n]);
  for (std::size_t r = sys.n + 1; r >= 3; --r) {
    g[r - 2] = -(sys.lambda * g[r - 1]);
    out.forced.emplace_back(r - 2, g[r - 2]);
  }
  out.lambda_g1 = sys.lambda * g[1];
  out.inconsistent = !out.lambda_g1.is_one();
  if (!out.inconsistent) out.solution.assign(g.begin() + 1, g.end());
  return out;
}

SigmaChainReport sigma_chain_check(std::size_t n, const Scalar& lambda, std::size_t max_tensor_degree) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "chain index n must be positive");
  const RingId ring = lambda.ring();
  if (!ring.is_field() || ring.characteristic() != 0)
    throw Error(ErrorCode::NonQAlgebra, "the chain witness runs over a field of characteristic zero");
  auto ctx = AlgebraCtx::make(ring, {"x"}, lambda);
  auto word = [&](std::uint32_t e) {
    return ShuffleElement::word(ctx, TensorWord({Monomial(), Monomial::variable(0, e)}));
  };
  std::vector<ShuffleElement> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(word(static_cast<std::uint32_t>(i)));
  ShuffleElement target = word(static_cast<std::uint32_t>(n + 1));
  std::vector<ShuffleElement> gens_next = gens;
  gens_next.push_back(target);

  SigmaChainReport r{n,
                     lambda.to_string(),
                     max_tensor_degree,
                     homogeneous_membership(target, gens, max_tensor_degree),
                     homogeneous_membership(target, gens_next, max_tensor_degree),
                     gsum_solve(GSumSystem{n, lambda}),
                     gens,
                     target};
  return r;
}

// ---------------------------------------------------------------------------
// Span of S against the Baxter ideal of P(M)

LemmaIdealReport lemma_ideal_check(const std::vector<Monomial>& module_basis, const Scalar& lambda, bool is_ideal,
                                   std::size_t max_tensor_degree, std::uint64_t max_degree) {
  for (const auto& m : module_basis)
    if (m.support_size() > 1) throw Error(ErrorCode::InvalidArgument, "module basis must be monomials in x alone");
  if (!lambda.is_zero() && !is_ideal)
    throw Error(ErrorCode::PropertyViolation, "nonzero weight needs M to be an ideal of C[x]");
  const std::set<Monomial> in_module(module_basis.begin(), module_basis.end());
  if (is_ideal) {
    for (const auto& m : module_basis) {
      if (m.degree() + 1 > max_degree) continue;
      if (!in_module.contains(m * Monomial::variable(0)))
        throw Error(ErrorCode::PropertyViolation, "M is not closed under multiplication by x below degree " +
                                                      std::to_string(max_degree));
    }
  }

  auto ctx = AlgebraCtx::make(lambda.ring(), {"x"}, lambda);
  LemmaIdealReport r;
  r.module_basis = module_basis;
  r.weight = lambda.to_string();
  r.is_ideal = is_ideal;
  r.max_tensor_degree = max_tensor_degree;
  r.max_degree = max_degree;

  EchelonBasis span_s(ctx);
  for (const auto& w : slice_words(ctx, max_tensor_degree, max_degree)) {
    const auto tail = w.tail();
    if (std::any_of(tail.begin(), tail.end(), [&](const Monomial& f) { return in_module.contains(f); }))
      span_s.insert(ShuffleElement::word(ctx, w));
  }

  std::vector<ShuffleElement> gens;
  for (const auto& m : module_basis)
    if (m.degree() <= max_degree) gens.push_back(ShuffleElement::word(ctx, TensorWord({Monomial(), m})));
  const SaturatedSlice ideal = baxter_ideal_saturate(ctx, gens, max_tensor_degree, max_degree);

  r.span_rank = span_s.rank();
  r.ideal_rank = ideal.basis.rank();
  r.saturation_lower_bound = ideal.lower_bound;
  for (const auto& [w, p] : span_s.pivots()) {
    if (!ideal.basis.contains(p.vector)) {
      r.difference = w;
      break;
    }
  }
  if (!r.difference) {
    for (const auto& [w, p] : ideal.basis.pivots()) {
      if (!span_s.contains(p.vector)) {
        r.difference = w;
        break;
      }
    }
  }
  if (r.difference) r.difference_text = format_word(*ctx, *r.difference);
  return r;
}

// ---------------------------------------------------------------------------
// Weight-zero module chain through the A (x) A projection

bool ModuleChainReport::passed() const {
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return all(ascending) && all(strict) && all(projection_matches_module);
}

ModuleChainReport module_chain_check(std::size_t n_max, std::size_t max_tensor_degree, std::uint64_t max_degree,
                                     const Scalar& lambda) {
  if (!lambda.is_zero()) throw Error(ErrorCode::InvalidArgument, "the module chain witness runs at weight zero");
  if (n_max == 0) throw Error(ErrorCode::InvalidArgument, "n_max must be positive");
  if (max_degree < n_max || max_tensor_degree < 1) throw Error(ErrorCode::BoundsTooSmall, "module chain needs D >= n_max and L >= 1");
  auto ctx = AlgebraCtx::make(lambda.ring(), {"x"}, lambda);
  auto x_pow = [](std::uint64_t e) { return Monomial::variable(0, static_cast<std::uint32_t>(e)); };

  ModuleChainReport r;
  r.n_max = n_max;
  r.max_tensor_degree = max_tensor_degree;
  r.max_degree = max_degree;

  std::vector<SaturatedSlice> ideals;
  std::vector<EchelonBasis> projections;
  std::vector<ShuffleElement> gens;
  for (std::size_t n = 1; n <= n_max; ++n) {
    gens.push_back(ShuffleElement::word(ctx, TensorWord({Monomial(), x_pow(n)})));
    ideals.push_back(baxter_ideal_saturate(ctx, gens, max_tensor_degree, max_degree));
    EchelonBasis proj(ctx);
    for (const auto& [w, p] : ideals.back().basis.pivots()) {
      ShuffleElement image(ctx);
      for (const auto& [tw, c] : p.vector.terms())
        if (tw.tensor_degree() == 1) image.add_term(tw, c);
      proj.insert(image);
    }
    EchelonBasis module(ctx);
    for (std::uint64_t k = 1; k <= n; ++k)
      for (std::uint64_t a = 0; a + k <= max_degree; ++a)
        module.insert(ShuffleElement::word(ctx, TensorWord({x_pow(a), x_pow(k)})));
    r.ranks.push_back(ideals.back().basis.rank());
    r.projection_ranks.push_back(proj.rank());
    r.projection_matches_module.push_back(same_span(proj, module));
    projections.push_back(std::move(proj));
  }
  for (std::size_t n = 1; n < n_max; ++n) {
    r.ascending.push_back(span_contains(ideals[n].basis, ideals[n - 1].basis));
    const auto witness = ShuffleElement::word(ctx, TensorWord({Monomial(), x_pow(n + 1)}));
    // The second factor x^{n+1} is outside span{x, ..., x^n} by degree.
    r.strict.push_back(projections[n].contains(witness) && !projections[n - 1].contains(witness));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Randomised Baxter reduction

BaxterReductionReport baxter_reduction_check(std::uint64_t seed, std::size_t constructions) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::vector<mpq_class> weights = {0, 1, 2, -1, mpq_class(1, 2)};
  const RingId ring = RingId::rational();

  BaxterReductionReport r;
  r.seed = seed;
  r.constructions = constructions;
  for (std::size_t run = 0; run < constructions; ++run) {
    const Scalar lambda = Scalar::from_rational(ring, weights[pick(0, static_cast<int>(weights.size()) - 1)]);
    auto ctx = AlgebraCtx::make(ring, {}, lambda);
    auto random_element = [&](int max_degree) {
      ShuffleElement e(ctx);
      while (e.is_zero()) {
        const int terms = pick(1, 3);
        for (int t = 0; t < terms; ++t) {
          const int c = pick(-3, 3);
          e.add_term(TensorWord::unit_power(pick(0, max_degree) + 1), Scalar::from_integer(ring, c));
        }
      }
      return e;
    };
    std::vector<ShuffleElement> gens;
    const int num_gens = pick(1, 3);
    for (int i = 0; i < num_gens; ++i) gens.push_back(random_element(2));

    ShuffleElement f(ctx);
    std::size_t reach = 0;
    const int summands = pick(1, 3);
    for (int s = 0; s < summands; ++s) {
      const auto& g = gens[pick(0, num_gens - 1)];
      const std::size_t a = pick(0, 2);
      const std::size_t j = pick(0, 2);
      const Scalar c = Scalar::from_integer(ring, pick(1, 4)) * Scalar::from_integer(ring, pick(0, 1) ? 1 : -1);
      f.add_scaled(product(ShuffleElement::word(ctx, TensorWord::unit_power(a + 1)), baxter_P_power(g, j)), c);
      reach = std::max(reach, a + j + g.max_tensor_degree());
    }

    std::vector<ShuffleElement> reducers = gens;
    for (auto& b : leading_term_basis(ctx, gens, reach, IdealKind::Baxter)) reducers.push_back(std::move(b));
    const ReductionTrace trace = baxter_reduce(f, reducers);
    const bool zero = trace.remainder.is_zero();
    const bool exact = trace.reconstructs(f);
    const bool in_span = baxter_ideal_saturate(ctx, gens, reach, 0).basis.contains(f);
    r.reduced_to_zero += zero;
    r.exact_traces += exact;
    r.in_saturated_span += in_span;
    if (!(zero && exact && in_span) && !r.first_failure) {
      r.first_failure = run;
      r.failure_text = "f = " + format_element(f) + ", remainder = " + format_element(trace.remainder);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Certificates

Certificate certify(const BaxterReductionReport& r) {
  Certificate c;
  c.claim = "randomised elements of finitely generated Baxter ideals reduce to zero with exact traces";
  c.bounds = {{"seed", r.seed}, {"constructions", r.constructions}};
  c.passed = r.passed();
  c.evidence["reduced_to_zero"] = r.reduced_to_zero;
  c.evidence["exact_traces"] = r.exact_traces;
  c.evidence["in_saturated_span"] = r.in_saturated_span;
  c.evidence["first_failure"] = r.failure_text ? Json(*r.failure_text) : Json(nullptr);
  return c;
}

Certificate certify(const CharPClosureReport& r) {
  Certificate c;
  c.claim = "I_" + std::to_string(r.k) + " = span{1^(n+1) : " + std::to_string(r.p) + "^" + std::to_string(r.k) +
            " does not divide n} is closed under products and I_e < I_(e+1) strictly";
  c.bounds = {{"p", r.p}, {"k", r.k}, {"D", r.max_degree}, {"weight", r.weight}};
  c.passed = r.passed();
  c.evidence["products_checked"] = r.products_checked;
  if (r.violation) {
    const auto& [m, n, i] = *r.violation;
    c.evidence["violation"] = {{"m", m}, {"n", n}, {"i", i}};
  } else {
    c.evidence["violation"] = nullptr;
  }
  c.evidence["strict_at"] = r.strict_at;
  return c;
}

Certificate certify(const SigmaChainReport& r) {
  Certificate c;
  c.claim = "1(x)x^" + std::to_string(r.n + 1) + " lies outside the ideal generated by 1(x)x^i, i <= " +
            std::to_string(r.n) + ", and the coefficient-sum system is inconsistent";
  c.bounds = {{"n", r.n}, {"weight", r.weight}, {"L", r.max_tensor_degree}};
  c.passed = r.passed();
  c.evidence["target"] = element_to_json(r.target);
  c.evidence["excluded"] = membership_to_json(r.excluded, r.generators);
  std::vector<ShuffleElement> next = r.generators;
  next.push_back(r.target);
  c.evidence["included"] = membership_to_json(r.included, next);
  Json forced = Json::array();
  for (const auto& [i, v] : r.gsum.forced) forced.push_back({{"g", i}, {"value", v.to_string()}});
  c.evidence["gsum"] = {{"verdict", r.gsum.inconsistent ? "Inconsistent" : "Solution"},
                        {"forced", forced},
                        {"lambda_g1", r.gsum.lambda_g1.to_string()}};
  return c;
}

Certificate certify(const LemmaIdealReport& r) {
  Certificate c;
  c.claim = "span of words with a tail factor in M equals the Baxter ideal generated by P(M)";
  Json module = Json::array();
  for (const auto& m : r.module_basis) module.push_back(m.exponent(0));
  c.bounds = {{"L", r.max_tensor_degree}, {"D", r.max_degree}, {"weight", r.weight}};
  c.passed = r.passed();
  c.evidence["module_exponents"] = module;
  c.evidence["is_ideal"] = r.is_ideal;
  c.evidence["span_rank"] = r.span_rank;
  c.evidence["ideal_rank"] = r.ideal_rank;
  c.evidence["saturation_lower_bound"] = r.saturation_lower_bound;
  c.evidence["difference"] = r.difference_text ? Json(*r.difference_text) : Json(nullptr);
  return c;
}

Certificate certify(const ModuleChainReport& r) {
  Certificate c;
  c.claim = "Baxter ideals generated by 1(x)x^k, k <= n, form a strictly ascending chain at weight zero";
  c.bounds = {{"n_max", r.n_max}, {"L", r.max_tensor_degree}, {"D", r.max_degree}};
  c.passed = r.passed();
  c.evidence["ranks"] = r.ranks;
  c.evidence["projection_ranks"] = r.projection_ranks;
  c.evidence["ascending"] = r.ascending;
  c.evidence["strict"] = r.strict;
  c.evidence["projection_matches_module"] = r.projection_matches_module;
  return c;
}

Certificate certify(const AnnihilationReport& r) {
  Certificate c;
  c.claim = "d^(" + std::to_string(r.k) + ") annihilates 1^(" + std::to_string(r.k + 1) + ") modulo Fil^(N+1)";
  c.bounds = {{"k", r.k}, {"N", r.precision}, {"weight", r.weight.to_string()}};
  c.passed = r.passed();
  c.evidence["c"] = r.c.to_string();
  c.evidence["kills_unit_word"] = r.kills_unit_word;
  c.evidence["phi_vanishes_above"] = r.phi_vanishes_above;
  c.evidence["phi_constant_below"] = r.phi_constant_below;
  c.evidence["witness_nonzero"] = r.witness_nonzero;
  if (r.violation) {
    c.evidence["violation"] = {{"check", r.violation->first}, {"index", r.violation->second}};
  } else {
    c.evidence["violation"] = nullptr;
  }
  return c;
}

Certificate certify(const ChainStrictnessReport& r) {
  Certificate c;
  c.claim = "I_n Fil^n = 0 and I_(n+1) Fil^n != 0 for the annihilator ideals";
  c.bounds = {{"n_max", r.n_max}, {"N", r.precision}, {"weight", r.weight.to_string()}};
  c.passed = r.passed();
  c.evidence["lower_ideal_kills"] = r.lower_ideal_kills;
  c.evidence["next_ideal_survives"] = r.next_ideal_survives;
  return c;
}

}  // namespace baxter
