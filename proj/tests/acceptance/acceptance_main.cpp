// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"

namespace baxter {
namespace {

const RingId Q = RingId::rational();

Scalar q(long num, long den = 1) { return Scalar::from_rational(Q, mpq_class(num, den)); }

/// Throws with a description on the first failure.
void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::vector<TensorWord> words_over(const std::vector<Monomial>& alphabet, std::size_t max_tensor_degree) {
  std::vector<TensorWord> out;
  std::vector<std::vector<Monomial>> frontier{{}};
  for (std::size_t len = 1; len <= max_tensor_degree + 1; ++len) {
    std::vector<std::vector<Monomial>> next;
    for (const auto& f : frontier)
      for (const auto& m : alphabet) {
        auto g = f;
        g.push_back(m);
        out.emplace_back(g);
        next.push_back(std::move(g));
      }
    frontier = std::move(next);
  }
  return out;
}

std::string baxter_identity() {
  oracle::Random rnd(1001);
  struct Config {
    RingId ring;
    Scalar lambda;
  };
  const RingId f5 = RingId::prime_field(5);
  const std::vector<Config> configs{
      {Q, q(0)}, {Q, q(1)}, {Q, q(-2)}, {RingId::laurent(), Scalar::indeterminate()}, {f5, Scalar::from_integer(f5, 3)}};
  std::size_t pairs = 0;
  for (const auto& c : configs) {
    const auto ctx = AlgebraCtx::make(c.ring, {"x", "y"}, c.lambda);
    for (int i = 0; i < 200; ++i) {
      const auto a = rnd.element(ctx, 3, 3), b = rnd.element(ctx, 3, 3);
      require(verify_baxter_identity(a, b), "identity fails over " + c.ring.name() + " for " + format_element(a));
      ++pairs;
    }
  }
  return std::to_string(pairs) + " pairs over 5 configurations";
}

std::string oracle_equivalence() {
  const std::vector<Monomial> alphabet{Monomial(), Monomial::variable(0), Monomial::variable(1)};
  std::size_t checked = 0;
  for (long l : {0L, 1L}) {
    const auto ctx = AlgebraCtx::make(Q, {"x", "y"}, q(l));
    const auto words = words_over(alphabet, 6);
    for (const auto& u : words)
      for (const auto& v : words) {
        if (u.tensor_degree() + v.tensor_degree() > 6) continue;
        const auto a = ShuffleElement::word(ctx, u), b = ShuffleElement::word(ctx, v);
        require(product(a, b) == product_oracle(a, b), "mismatch on " + format_element(a) + " * " + format_element(b));
        ++checked;
      }
  }
  return std::to_string(checked) + " word pairs, m+n <= 6, lambda in {0,1}";
}

std::string closed_form() {
  const Scalar lambda = Scalar::indeterminate();
  const auto ctx = AlgebraCtx::make(RingId::laurent(), {}, lambda);
  const auto rows = oracle::pascal(16);
  for (std::size_t m = 0; m <= 8; ++m)
    for (std::size_t n = 0; n <= 8; ++n) {
      ShuffleElement expected(ctx);
      // independent evaluation of sum_k C(m+n-k, n) C(n, k) lambda^k 1^{(x)(m+n+1-k)}
      for (std::size_t k = 0; k <= std::min(m, n); ++k) {
        const Scalar c = Scalar::from_integer(ctx->ring(), rows[m + n - k][n] * rows[n][k]) * lambda.pow(k);
        expected.add_term(TensorWord::unit_power(m + n + 1 - k), c);
      }
      const auto got = product(ShuffleElement::word(ctx, TensorWord::unit_power(m + 1)),
                               ShuffleElement::word(ctx, TensorWord::unit_power(n + 1)));
      require(got == expected, "closed form differs at " + std::to_string(m) + "," + std::to_string(n));
      ShuffleElement via_map(ctx);
      for (const auto& [deg, c] : unit_power_product(m, n, lambda)) via_map.add_term(TensorWord::unit_power(deg + 1), c);
      require(via_map == expected, "unit_power_product differs at " + std::to_string(m) + "," + std::to_string(n));
    }
  return "m,n <= 8 with symbolic weight";
}

std::string counting() {
  const auto rows = oracle::pascal(6);
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t n = 0; m + n <= 6; ++n) {
      const auto [plain, mixable] = oracle::count_shuffles_brute(m, n);
      require(plain == rows[m + n][n].get_ui(), "|S| differs from the binomial");
      require(enumerate_mixable_shuffles(m, n).size() == mixable, "|S-bar| differs from brute force");
    }
  return "m+n <= 6";
}

std::string phi_checks() {
  oracle::Random rnd(1005);
  const Scalar lambda = q(3, 2);
  for (int i = 0; i < 100; ++i) {
    std::vector<Scalar> sa, sb;
    for (int j = 0; j <= 20; ++j) {
      sa.push_back(rnd.scalar(Q));
      sb.push_back(rnd.scalar(Q));
    }
    const TruncatedBaxterSeries a(lambda, sa), b(lambda, sb);
    require(phi(series_product(a, b)) == phi(a) * phi(b), "phi is not multiplicative on pair " + std::to_string(i));
  }
  for (std::size_t n = 0; n <= 12; ++n) require(phi_rank(lambda, n) == n + 1, "phi rank deficient at N=" + std::to_string(n));
  return "100 pairs at N=20, rank N+1 for N <= 12";
}

std::string annihilators() {
  std::size_t reports = 0;
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto b = annihilator_b(k, 40);
    for (std::size_t n = 0; n <= 40; ++n)
      require(is_polynomial(b[n] * Scalar::from_laurent(Laurent::monomial(1, std::int64_t(n)))),
              "x^n b_n not polynomial at k=" + std::to_string(k));
    for (const Scalar& lambda : {q(1), q(2), q(1, 2)}) {
      const auto report = check_annihilation(specialize_b(k, lambda, q(1), 40), k);
      require(report.passed(), "annihilation fails at k=" + std::to_string(k) + " lambda=" + lambda.to_string());
      ++reports;
    }
  }
  for (const Scalar& lambda : {q(1), q(2), q(1, 2)})
    require(check_chain_strictness(4, lambda, q(1), 40).passed(), "chain not strict at lambda=" + lambda.to_string());
  return std::to_string(reports) + " annihilation reports at N=40, chain n <= 4";
}

std::string sigma_chain() {
  for (std::size_t n = 1; n <= 4; ++n)
    for (long l : {0L, 1L, 2L}) {
      const auto r = sigma_chain_check(n, q(l), n + 2);
      require(!r.excluded.is_member(), "1(x)x^" + std::to_string(n + 1) + " reported a member");
      require(r.gsum.inconsistent, "g-sum system solvable at n=" + std::to_string(n));
      require(r.included.is_member(), "target missing from the larger ideal");
    }
  return "n <= 4, lambda in {0,1,2}, L = n+2";
}

std::string charp() {
  for (std::uint64_t p : {2u, 3u})
    for (std::uint64_t k : {1u, 2u})
      for (std::uint64_t l = 0; l < p; ++l) {
        const auto r = char_p_closure_check(CharPIdealSpec(p, k), 20, Scalar::from_integer(RingId::prime_field(p), long(l)));
        require(r.passed(), "closure fails at p=" + std::to_string(p) + " k=" + std::to_string(k));
      }
  return "(p,k) in {2,3}x{1,2}, D=20, every lambda in F_p";
}

std::string reduction() {
  const auto r = baxter_reduction_check(20240917, 50);
  require(r.passed(), r.failure_text.value_or("reduction failed"));
  require(r.reduced_to_zero == 50 && r.exact_traces == 50, "not every construction reduced exactly");
  return "50 constructions reduced to 0 with exact traces";
}

std::string lemma_ideal() {
  std::size_t runs = 0;
  for (std::size_t L = 1; L <= 4; ++L)
    for (std::uint64_t D = 1; D <= 4; ++D) {
      require(lemma_ideal_check({Monomial::variable(0)}, q(0), false, L, D).passed(), "weight-zero branch fails");
      std::vector<Monomial> ideal;
      for (std::uint32_t e = 1; e <= D; ++e) ideal.push_back(Monomial::variable(0, e));
      const auto r = lemma_ideal_check(ideal, q(1), true, L, D);
      require(r.passed(), "ideal branch fails: " + r.difference_text.value_or("rank mismatch"));
      runs += 2;
    }
  return std::to_string(runs) + " slices, L,D <= 4";
}

std::string module_chain() {
  const auto r = module_chain_check(4, 3, 4, q(0));
  require(r.passed(), "module chain not certified");
  std::string ranks;
  for (std::size_t v : r.projection_ranks) ranks += (ranks.empty() ? "" : "<") + std::to_string(v);
  return "projection ranks " + ranks;
}

std::string cli_contract() {
  auto call = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  oracle::Random rnd(1012);
  const auto ctx = AlgebraCtx::make(Q, {"x", "y"}, q(1, 2));
  for (int i = 0; i < 100; ++i) {
    const std::string text = format_element(rnd.element(ctx, 3, 4));
    const auto first = call({"fmt", "--vars", "x,y", "--weight", "1/2", "--json", "--", text});
    require(first.first == cli::kExitOk, "fmt rejected " + text);
    const auto second = call({"fmt", "--from-json", "--json", first.second});
    require(second == first, "JSON round trip not idempotent for " + text);
  }
  const std::vector<std::string> det{"witness", "--suite", "all", "--bounds", "small", "--json"};
  const auto a = call(det), b = call(det);
  require(a.first == cli::kExitOk && a == b, "witness output not deterministic");
  require(call({"product", "--vars", "x,y", "--weight", "1", "1⊗x", "1⊗y"}).first == cli::kExitOk, "product exit");
  require(call({"annihilator", "--k", "1", "--precision", "4", "--check", "--series", "1 + 1⊗1"}).first ==
              cli::kExitPropertyViolation,
          "property violation exit");
  require(call({"product", "--bogus"}).first == cli::kExitUsage, "usage exit");
  return "100 round trips, repeat runs identical, exit codes 0/1/2";
}

}  // namespace
}  // namespace baxter

int main() {
  using Check = std::pair<const char*, std::function<std::string()>>;
  const std::vector<Check> checks{
      {"baxter identity", baxter::baxter_identity},     {"product vs oracle", baxter::oracle_equivalence},
      {"unit-power closed form", baxter::closed_form}, {"shuffle counts", baxter::counting},
      {"phi homomorphism", baxter::phi_checks},         {"annihilators", baxter::annihilators},
      {"sigma chain", baxter::sigma_chain},                   {"char-p ideals", baxter::charp},
      {"baxter reduction", baxter::reduction},               {"lemma ideal", baxter::lemma_ideal},
      {"module chain", baxter::module_chain},           {"cli contract", baxter::cli_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = checks[i].second();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-24s %6.2fs  %s\n", ok ? "PASS" : "FAIL", i + 1, checks[i].first, secs, detail.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", int(checks.size()) - failures, checks.size());
  return failures == 0 ? 0 : 1;
}
