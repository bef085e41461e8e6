#include "suites.hpp"

#include <functional>
#include <map>

namespace baxter::cli {

namespace {

struct Preset {
  bool all_charp_weights;
  std::size_t sigma_n;
  std::size_t annihilator_k;
  std::size_t annihilator_precision;
  std::size_t chain_n;
  std::size_t lemma_bound;
  std::size_t module_n;
  std::size_t module_length;
  std::uint64_t module_degree;
  std::size_t reductions;
};

constexpr Preset kSmall{false, 3, 3, 20, 2, 3, 3, 2, 3, 20};
constexpr Preset kMedium{true, 4, 5, 40, 4, 4, 4, 3, 4, 50};
constexpr std::uint64_t kReductionSeed = 20240917;

Scalar rational(long num, long den = 1) { return Scalar::from_rational(RingId::rational(), mpq_class(num, den)); }

void charp(const Preset& b, std::vector<Certificate>& out) {
  for (std::uint64_t p : {2, 3}) {
    const RingId fp = RingId::prime_field(p);
    for (std::uint64_t k : {1, 2}) {
      const std::uint64_t weights = b.all_charp_weights ? p : 1;
      for (std::uint64_t w = 0; w < weights; ++w) {
        const Scalar lambda = Scalar::from_integer(fp, static_cast<long>(b.all_charp_weights ? w : 1));
        out.push_back(certify(char_p_closure_check(CharPIdealSpec(p, k), 20, lambda)));
      }
    }
  }
}

void sigma_chain(const Preset& b, std::vector<Certificate>& out) {
  for (std::size_t n = 1; n <= b.sigma_n; ++n)
    for (long lambda : {0, 1, 2}) out.push_back(certify(sigma_chain_check(n, rational(lambda), n + 2)));
}

void annihilator(const Preset& b, std::vector<Certificate>& out) {
  const std::vector<Scalar> weights = {rational(1), rational(2), rational(1, 2)};
  const Scalar c = rational(1);
  for (const auto& lambda : weights) {
    for (std::size_t k = 1; k <= b.annihilator_k; ++k) {
      const auto d = specialize_b(k, lambda, c, b.annihilator_precision);
      out.push_back(certify(check_annihilation(d, k)));
    }
    out.push_back(certify(check_chain_strictness(b.chain_n, lambda, c, b.annihilator_precision)));
  }
}

void lemma_ideal(const Preset& b, std::vector<Certificate>& out) {
  const std::size_t L = b.lemma_bound;
  const std::uint64_t D = b.lemma_bound;
  out.push_back(certify(lemma_ideal_check({Monomial::variable(0)}, rational(0), false, L, D)));
  std::vector<Monomial> ideal;
  for (std::uint32_t e = 1; e <= D; ++e) ideal.push_back(Monomial::variable(0, e));
  out.push_back(certify(lemma_ideal_check(ideal, rational(1), true, L, D)));
}

void module_chain(const Preset& b, std::vector<Certificate>& out) {
  out.push_back(certify(module_chain_check(b.module_n, b.module_length, b.module_degree, rational(0))));
}

void reduction(const Preset& b, std::vector<Certificate>& out) {
  out.push_back(certify(baxter_reduction_check(kReductionSeed, b.reductions)));
}

using SuiteFn = std::function<void(const Preset&, std::vector<Certificate>&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"charp", charp},   {"sigma-chain", sigma_chain},       {"annihilator", annihilator},
      {"lemma-ideal", lemma_ideal}, {"module-chain", module_chain}, {"reduction", reduction}};
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<Certificate> run_suite(const std::string& suite, const std::string& bounds) {
  if (bounds != "small" && bounds != "medium")
    throw Error(ErrorCode::InvalidArgument, "bounds must be small or medium, got " + bounds);
  const Preset& preset = bounds == "small" ? kSmall : kMedium;
  std::vector<Certificate> out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite == "all" || suite == name) {
      fn(preset, out);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "unknown witness suite " + suite);
  return out;
}

}  // namespace baxter::cli
