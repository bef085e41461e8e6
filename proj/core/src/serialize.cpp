#include "baxter/serialize.hpp"

namespace baxter {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("malformed ") + what + " JSON: " + ex.what());
  }
}

Json word_to_json(const AlgebraCtx& ctx, const TensorWord& w) {
  Json factors = Json::array();
  for (const auto& m : w.factors()) {
    Json exps = Json::array();
    for (std::size_t v = 0; v < ctx.num_variables(); ++v) exps.push_back(m.exponent(v));
    factors.push_back(std::move(exps));
  }
  return factors;
}

TensorWord word_from_json(const AlgebraCtx& ctx, const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "a word is a nonempty array of exponent vectors");
  std::vector<Monomial> factors;
  for (const auto& f : j) {
    if (!f.is_array() || f.size() != ctx.num_variables())
      throw Error(ErrorCode::ParseError, "exponent vector length must equal the number of variables");
    std::vector<std::uint32_t> exps;
    for (const auto& e : f) exps.push_back(e.get<std::uint32_t>());
    factors.emplace_back(std::move(exps));
  }
  return TensorWord(std::move(factors));
}

std::vector<Scalar> scalars_from_json(RingId ring, const Json& j) {
  std::vector<Scalar> out;
  for (const auto& c : j) out.push_back(Scalar::parse(ring, c.get<std::string>()));
  return out;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

}  // namespace

Json element_to_json(const ShuffleElement& e) {
  Json j;
  j["ring"] = e.ring().name();
  j["vars"] = e.ctx().variables();
  j["weight"] = e.ctx().weight().to_string();
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json t;
    t["coeff"] = c.to_string();
    t["word"] = word_to_json(e.ctx(), w);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

ShuffleElement element_from_json(const Json& j) {
  return guarded("element", [&] {
    const RingId ring = RingId::parse(j.at("ring").get<std::string>());
    auto ctx = AlgebraCtx::make(ring, j.at("vars").get<std::vector<std::string>>(),
                                Scalar::parse(ring, j.at("weight").get<std::string>()));
    return element_from_json(ctx, j);
  });
}

ShuffleElement element_from_json(const CtxPtr& ctx, const Json& j) {
  return guarded("element", [&] {
    if (j.contains("ring") && RingId::parse(j.at("ring").get<std::string>()) != ctx->ring())
      throw Error(ErrorCode::CtxMismatch, "element ring differs from the algebra's");
    if (j.contains("vars") && j.at("vars").get<std::vector<std::string>>() != ctx->variables())
      throw Error(ErrorCode::CtxMismatch, "element variables differ from the algebra's");
    if (j.contains("weight") && Scalar::parse(ctx->ring(), j.at("weight").get<std::string>()) != ctx->weight())
      throw Error(ErrorCode::CtxMismatch, "element weight differs from the algebra's");
    ShuffleElement e(ctx);
    for (const auto& t : j.at("terms"))
      e.add_term(word_from_json(*ctx, t.at("word")), Scalar::parse(ctx->ring(), t.at("coeff").get<std::string>()));
    return e;
  });
}

Json series_to_json(const TruncatedBaxterSeries& s) {
  Json j;
  j["ring"] = s.ring().name();
  j["weight"] = s.weight().to_string();
  j["precision"] = s.precision();
  j["coeffs"] = scalars_to_json(s.coeffs());
  return j;
}

TruncatedBaxterSeries series_from_json(const Json& j) {
  return guarded("series", [&] {
    const RingId ring = RingId::parse(j.at("ring").get<std::string>());
    auto coeffs = scalars_from_json(ring, j.at("coeffs"));
    if (coeffs.size() != j.at("precision").get<std::size_t>() + 1)
      throw Error(ErrorCode::ParseError, "series needs precision + 1 coefficients");
    return TruncatedBaxterSeries(Scalar::parse(ring, j.at("weight").get<std::string>()), std::move(coeffs));
  });
}

Json sequence_to_json(const SequenceElement& s) {
  Json j;
  j["ring"] = s.ring().name();
  j["length"] = s.length();
  j["comps"] = scalars_to_json(s.comps());
  return j;
}

SequenceElement sequence_from_json(const Json& j) {
  return guarded("sequence", [&] {
    const RingId ring = RingId::parse(j.at("ring").get<std::string>());
    auto comps = scalars_from_json(ring, j.at("comps"));
    if (comps.size() != j.at("length").get<std::size_t>())
      throw Error(ErrorCode::ParseError, "sequence length does not match its components");
    return SequenceElement(ring, std::move(comps));
  });
}

Json membership_to_json(const MembershipCertificate& cert, const std::vector<ShuffleElement>& generators) {
  Json j;
  j["verdict"] = cert.is_member() ? "Member" : "NonMember";
  j["grade"] = cert.grade;
  j["max_tensor_degree"] = cert.max_tensor_degree;
  if (cert.is_member()) {
    Json combo = Json::array();
    for (const auto& [gen, m] : cert.combination) {
      Json entry;
      entry["generator"] = gen;
      entry["generator_element"] = element_to_json(generators.at(gen));
      entry["multiplier"] = element_to_json(m);
      combo.push_back(std::move(entry));
    }
    j["combination"] = std::move(combo);
  } else {
    j["rank_plain"] = cert.rank_plain;
    j["rank_augmented"] = cert.rank_augmented;
  }
  return j;
}

Json trace_to_json(const ReductionTrace& trace) {
  Json j;
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json step;
    step["generator"] = s.generator;
    step["cofactor"] = element_to_json(s.cofactor);
    step["p_shift"] = s.p_shift;
    step["subtracted"] = element_to_json(s.subtracted);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["remainder"] = element_to_json(trace.remainder);
  return j;
}

}  // namespace baxter
