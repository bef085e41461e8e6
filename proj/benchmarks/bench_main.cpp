#include <benchmark/benchmark.h>

#include "baxter/baxter.hpp"

namespace {

using namespace baxter;

const RingId Q = RingId::rational();

ShuffleElement word_of_length(const CtxPtr& ctx, std::size_t tensor_degree) {
  std::vector<Monomial> f{Monomial()};
  for (std::size_t i = 0; i < tensor_degree; ++i) f.push_back(Monomial::variable(i % ctx->num_variables()));
  return ShuffleElement::word(ctx, TensorWord(std::move(f)));
}

void BM_Product(benchmark::State& state) {
  const auto ctx = AlgebraCtx::make(Q, {"x", "y"}, Scalar::one(Q));
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = word_of_length(ctx, n), b = word_of_length(ctx, n);
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b));
}
BENCHMARK(BM_Product)->DenseRange(1, 6);

void BM_ProductOracle(benchmark::State& state) {
  const auto ctx = AlgebraCtx::make(Q, {"x", "y"}, Scalar::one(Q));
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = word_of_length(ctx, n), b = word_of_length(ctx, n);
  for (auto _ : state) benchmark::DoNotOptimize(product_oracle(a, b));
}
BENCHMARK(BM_ProductOracle)->DenseRange(1, 6);

void BM_SeriesProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = specialize_b(3, Scalar::from_rational(Q, mpq_class(1, 2)), Scalar::one(Q), n);
  for (auto _ : state) benchmark::DoNotOptimize(series_product(d, d));
}
BENCHMARK(BM_SeriesProduct)->RangeMultiplier(2)->Range(8, 64);

void BM_Membership(benchmark::State& state) {
  const auto ctx = AlgebraCtx::make(Q, {"x"}, Scalar::one(Q));
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<ShuffleElement> gens;
  for (std::size_t i = 1; i <= n; ++i)
    gens.push_back(ShuffleElement::word(ctx, TensorWord({Monomial(), Monomial::variable(0, std::uint32_t(i))})));
  const auto target = ShuffleElement::word(ctx, TensorWord({Monomial(), Monomial::variable(0, std::uint32_t(n + 1))}));
  for (auto _ : state) benchmark::DoNotOptimize(homogeneous_membership(target, gens, n + 2));
}
BENCHMARK(BM_Membership)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
