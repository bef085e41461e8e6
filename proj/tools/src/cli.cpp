#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include "baxter/baxter.hpp"
#include "suites.hpp"

namespace baxter::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string ring;
  std::string vars;
  std::string weight = "1";
  std::size_t precision = 10;
  bool json = false;
  std::string bounds = "small";
};

CtxPtr make_ctx(const Globals& g) {
  RingId ring = g.ring.empty() ? RingId::rational() : RingId::parse(g.ring);
  Scalar weight = Scalar::zero(ring);
  if (g.weight == "x") {
    if (!g.ring.empty() && ring.kind() != RingKind::LaurentQ)
      throw UsageError("--weight x selects the laurent ring; it conflicts with --ring " + g.ring);
    ring = RingId::laurent();
    weight = Scalar::indeterminate();
  } else {
    weight = Scalar::parse(ring, g.weight);
  }
  return AlgebraCtx::make(ring, parse_variable_list(g.vars), weight);
}

std::vector<ShuffleElement> parse_list(const CtxPtr& ctx, const std::string& text) {
  std::vector<ShuffleElement> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string item = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_element(ctx, item));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::string join(const std::vector<Scalar>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].to_string();
  }
  return out;
}

std::string read_input(const std::string& text) {
  if (text != "-") return text;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// --- subcommands -----------------------------------------------------------

int cmd_product(const Globals& g, const std::vector<std::string>& inputs, bool oracle, std::ostream& out) {
  auto ctx = make_ctx(g);
  if (inputs.size() < 2) throw UsageError("product needs at least two elements");
  ShuffleElement acc = parse_element(ctx, inputs.front());
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    const ShuffleElement next = parse_element(ctx, inputs[i]);
    acc = oracle ? product_oracle(acc, next) : product(acc, next);
  }
  if (g.json) {
    emit(out, element_to_json(acc));
  } else {
    out << format_element(acc) << '\n';
  }
  return kExitOk;
}

int cmd_baxter(const Globals& g, const std::string& input, std::size_t power, const std::string& check,
               std::ostream& out) {
  auto ctx = make_ctx(g);
  const ShuffleElement a = parse_element(ctx, input);
  if (!check.empty()) {
    const ShuffleElement b = parse_element(ctx, check);
    const bool holds = verify_baxter_identity(a, b);
    if (g.json) {
      Json j;
      j["a"] = element_to_json(a);
      j["b"] = element_to_json(b);
      j["identity_holds"] = holds;
      emit(out, j);
    } else {
      out << (holds ? "Baxter identity holds" : "Baxter identity FAILS") << '\n';
    }
    return holds ? kExitOk : kExitPropertyViolation;
  }
  const ShuffleElement r = baxter_P_power(a, power);
  if (g.json) {
    emit(out, element_to_json(r));
  } else {
    out << format_element(r) << '\n';
  }
  return kExitOk;
}

int cmd_phi(const Globals& g, const std::string& input, bool rank, std::ostream& out) {
  auto ctx = make_ctx(g);
  if (ctx->num_variables() != 0) throw UsageError("phi works over X = {}; drop --vars");
  if (rank) {
    const std::size_t r = phi_rank(ctx->weight(), g.precision);
    if (g.json) {
      Json j;
      j["precision"] = g.precision;
      j["rank"] = r;
      emit(out, j);
    } else {
      out << "rank " << r << " of " << g.precision + 1 << '\n';
    }
    return kExitOk;
  }
  if (input.empty()) throw UsageError("phi needs a series (element of tensor powers of 1) or --rank");
  const auto s = series_from_element(parse_element(ctx, input), g.precision);
  const SequenceElement image = phi(s);
  if (g.json) {
    emit(out, sequence_to_json(image));
  } else {
    for (std::size_t n = 1; n <= image.length(); ++n) out << n << '\t' << image.at(n).to_string() << '\n';
  }
  return kExitOk;
}

struct AnnihilatorArgs {
  std::size_t k = 1;
  std::string lambda = "1";
  std::string c = "1";
  bool check = false;
  bool symbolic = false;
  std::string series;
};

int cmd_annihilator(const Globals& g, const AnnihilatorArgs& a, std::ostream& out) {
  const RingId q = RingId::rational();
  if (!a.series.empty() && !a.check) throw UsageError("--series is only meaningful with --check");
  const TruncatedBaxterSeries d = [&] {
    if (!a.series.empty()) return series_from_element(parse_element(make_ctx(g), a.series), g.precision);
    if (a.symbolic) return annihilator_b(a.k, g.precision);
    return specialize_b(a.k, Scalar::parse(q, a.lambda), Scalar::parse(q, a.c), g.precision);
  }();
  if (!a.check) {
    if (g.json) {
      emit(out, series_to_json(d));
    } else {
      out << join(d.coeffs()) << '\n';
    }
    return kExitOk;
  }
  const Certificate cert = certify(check_annihilation(d, a.k));
  if (g.json) {
    emit(out, cert.to_json());
  } else {
    out << (cert.passed ? "pass" : "FAIL") << "  " << cert.claim << "  " << cert.evidence.dump() << '\n';
  }
  return cert.passed ? kExitOk : kExitPropertyViolation;
}

int cmd_reduce(const Globals& g, const std::string& mode, const std::string& gens_text, const std::string& input,
               std::ostream& out) {
  auto ctx = make_ctx(g);
  const auto gens = parse_list(ctx, gens_text);
  const ShuffleElement f = parse_element(ctx, input);
  const ReductionTrace trace = mode == "ring" ? reduce_by_generators(f, gens) : baxter_reduce(f, gens);
  if (g.json) {
    emit(out, trace_to_json(trace));
    return kExitOk;
  }
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out << "step " << i + 1 << ": generator " << s.generator << ", cofactor " << format_element(s.cofactor);
    if (mode != "ring") out << ", P^" << s.p_shift;
    out << ", subtract " << format_element(s.subtracted) << '\n';
  }
  out << "remainder: " << format_element(trace.remainder) << '\n';
  return kExitOk;
}

int cmd_member(const Globals& g, const std::string& gens_text, std::size_t length, const std::string& input,
               std::ostream& out) {
  auto ctx = make_ctx(g);
  const auto gens = parse_list(ctx, gens_text);
  const ShuffleElement target = parse_element(ctx, input);
  const MembershipCertificate cert = homogeneous_membership(target, gens, length);
  if (g.json) {
    emit(out, membership_to_json(cert, gens));
    return kExitOk;
  }
  if (cert.is_member()) {
    out << "Member:";
    bool first = true;
    for (const auto& [gen, m] : cert.combination) {
      out << (first ? " " : " + ") << "(" << format_element(gens[gen]) << ") * (" << format_element(m) << ")";
      first = false;
    }
    if (cert.combination.empty()) out << " 0";
    out << '\n';
  } else {
    out << "NonMember: rank " << cert.rank_plain << " -> " << cert.rank_augmented << " at grade " << cert.grade
        << ", tensor degree <= " << cert.max_tensor_degree << '\n';
  }
  return kExitOk;
}

int cmd_witness(const Globals& g, const std::string& suite, std::ostream& out) {
  const auto certs = run_suite(suite, g.bounds);
  const bool ok = std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.passed; });
  if (g.json) {
    Json arr = Json::array();
    for (const auto& c : certs) arr.push_back(c.to_json());
    emit(out, arr);
  } else {
    for (const auto& c : certs) out << (c.passed ? "pass" : "FAIL") << "  " << c.claim << "  " << c.bounds.dump() << '\n';
    out << certs.size() << " certificates, " << (ok ? "all passed" : "some FAILED") << '\n';
  }
  return ok ? kExitOk : kExitPropertyViolation;
}

int cmd_fmt(const Globals& g, const std::string& input, bool from_json, std::ostream& out) {
  const std::string text = read_input(input);
  ShuffleElement e = [&] {
    if (!from_json) return parse_element(make_ctx(g), text);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& ex) {
      throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + ex.what());
    }
    return element_from_json(j);
  }();
  if (g.json) {
    emit(out, element_to_json(e));
  } else {
    out << format_element(e) << '\n';
  }
  return kExitOk;
}

int exit_code(const Error& e) { return e.code() == ErrorCode::PropertyViolation ? kExitPropertyViolation : kExitUsage; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free Baxter algebras: mixed shuffle products, completions and ideal witnesses", "baxter"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--ring", g.ring, "Coefficient ring: Q, laurent, fp:<p> or Z (default Q)");
  app.add_option("--vars", g.vars, "Comma-separated variable names (default none)");
  app.add_option("--weight", g.weight, "Weight lambda: a scalar of the ring, or x for the laurent ring")
      ->default_str("1");
  app.add_option("--precision", g.precision, "Truncation precision N for series")->default_str("10");
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--bounds", g.bounds, "Witness bound preset")->check(CLI::IsMember({"small", "medium"}))->default_str("small");

  std::vector<std::string> product_inputs;
  bool oracle = false;
  auto* product_cmd = app.add_subcommand("product", "Multiply elements with the mixed shuffle product");
  product_cmd->add_flag("--oracle", oracle, "Use the recursive quasi-shuffle product");
  product_cmd->add_option("elements", product_inputs, "Elements to multiply, left to right")->required();

  std::string baxter_input;
  std::size_t power = 1;
  std::string check_with;
  auto* baxter_cmd = app.add_subcommand("baxter", "Apply the Baxter operator P");
  baxter_cmd->add_option("element", baxter_input)->required();
  baxter_cmd->add_option("--power", power, "Apply P this many times")->default_str("1");
  baxter_cmd->add_option("--check", check_with, "Verify the Baxter identity on (element, this)");

  std::string phi_input;
  bool phi_rank_only = false;
  auto* phi_cmd = app.add_subcommand("phi", "Tabulate phi of a truncated series over X = {}");
  phi_cmd->add_option("series", phi_input, "Series as an element, e.g. \"1 - 1⊗1\"");
  phi_cmd->add_flag("--rank", phi_rank_only, "Print the rank of phi on series of precision N");

  AnnihilatorArgs ann;
  auto* ann_cmd = app.add_subcommand("annihilator", "Annihilator series d = c b(lambda) of 1^(k+1)");
  ann_cmd->add_option("--k", ann.k, "Index k >= 1")->required();
  ann_cmd->add_option("--lambda", ann.lambda, "Rational weight substituted for x")->default_str("1");
  ann_cmd->add_option("--c", ann.c, "Rational scale")->default_str("1");
  ann_cmd->add_flag("--check", ann.check, "Check annihilation and the phi profile");
  ann_cmd->add_flag("--symbolic", ann.symbolic, "Print b over the laurent ring with weight x");
  ann_cmd->add_option("--series", ann.series, "Check this series (over --ring/--weight) instead of the computed one");

  std::string reduce_mode = "baxter";
  std::string reduce_gens;
  std::string reduce_input;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an element over X = {} by generators");
  reduce_cmd->add_option("--mode", reduce_mode, "ring or baxter")->check(CLI::IsMember({"ring", "baxter"}))
      ->default_str("baxter");
  reduce_cmd->add_option("--gens", reduce_gens, "Generators separated by ';'")->required();
  reduce_cmd->add_option("element", reduce_input)->required();

  std::string member_gens;
  std::size_t member_length = 3;
  std::string member_input;
  auto* member_cmd = app.add_subcommand("member", "Homogeneous ideal membership at a grade slice");
  member_cmd->add_option("--gens", member_gens, "Generators separated by ';'")->required();
  member_cmd->add_option("--length", member_length, "Largest multiplier tensor degree L")->default_str("3");
  member_cmd->add_option("element", member_input)->required();

  std::string suite = "all";
  auto* witness_cmd = app.add_subcommand("witness", "Run witness suites and print certificates");
  witness_cmd->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()))->default_str("all");

  std::string fmt_input;
  bool from_json = false;
  auto* fmt_cmd = app.add_subcommand("fmt", "Normalise an element (text or JSON)");
  fmt_cmd->add_flag("--from-json", from_json, "Input is an element JSON document");
  fmt_cmd->add_option("input", fmt_input, "Element text, JSON, or - for stdin")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (product_cmd->parsed()) return cmd_product(g, product_inputs, oracle, out);
    if (baxter_cmd->parsed()) return cmd_baxter(g, baxter_input, power, check_with, out);
    if (phi_cmd->parsed()) return cmd_phi(g, phi_input, phi_rank_only, out);
    if (ann_cmd->parsed()) return cmd_annihilator(g, ann, out);
    if (reduce_cmd->parsed()) return cmd_reduce(g, reduce_mode, reduce_gens, reduce_input, out);
    if (member_cmd->parsed()) return cmd_member(g, member_gens, member_length, member_input, out);
    if (witness_cmd->parsed()) return cmd_witness(g, suite, out);
    if (fmt_cmd->parsed()) return cmd_fmt(g, fmt_input, from_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace baxter::cli
