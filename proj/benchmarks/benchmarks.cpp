/**
 * @file benchmarks.cpp
 * @brief Microbenchmarks for the hot paths: the two-value DP, grid brute
 *        force, the interval DP and buyer best responses.  Not part of the
 *        test suite; run the binary directly.
 */
#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "ordered_pricing/fedex.hpp"
#include "ordered_pricing/model.hpp"
#include "ordered_pricing/oracle.hpp"
#include "ordered_pricing/ptas.hpp"

namespace {

using namespace ordered_pricing;

Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }

/// Deterministic two-valued instance with `type_count` types over n items.
PricingInstance two_value_instance(std::size_t n, std::size_t type_count) {
  PricingInstance instance;
  instance.n = n;
  instance.kind = ValuationKind::unit_demand_ordered;
  instance.mode = NumericMode::exact;
  for (std::size_t t = 0; t < type_count; ++t) {
    std::size_t threshold = (3 * t + 1) % n;
    long low = (t % 3 == 0) ? 0 : static_cast<long>(1 + t % 4);
    long high = low + 1 + static_cast<long>((5 * t) % 9);
    BuyerType type;
    type.values.assign(n, q(low));
    for (std::size_t i = threshold; i < n; ++i) type.values[i] = q(high);
    type.probability = q(1, static_cast<long>(type_count));
    instance.types.push_back(std::move(type));
  }
  return instance;
}

/// Deterministic additive instance with independent small marginals.
PricingInstance additive_instance(std::size_t n, std::size_t type_count) {
  PricingInstance instance;
  instance.n = n;
  instance.kind = ValuationKind::additive;
  instance.mode = NumericMode::exact;
  for (std::size_t t = 0; t < type_count; ++t) {
    BuyerType type;
    type.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      type.values.push_back(q(static_cast<long>((7 * t + 3 * i) % 6)));
    }
    type.probability = q(1, static_cast<long>(type_count));
    instance.types.push_back(std::move(type));
  }
  return instance;
}

void BM_FedexDp(benchmark::State& state) {
  PricingInstance instance =
      two_value_instance(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) {
    FedexSolution solution = fedex_dp(instance);
    benchmark::DoNotOptimize(solution.revenue);
  }
}
BENCHMARK(BM_FedexDp)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_BruteForce(benchmark::State& state) {
  PricingInstance instance =
      two_value_instance(static_cast<std::size_t>(state.range(0)), 4);
  PriceGrid grid;
  for (long v = 0; v <= 10; ++v) grid.prices.push_back(q(v));
  for (auto _ : state) {
    BruteForceResult result = brute_force_optimal_pricing(instance, grid);
    benchmark::DoNotOptimize(result.revenue);
  }
}
BENCHMARK(BM_BruteForce)->Arg(2)->Arg(3)->Arg(4);

void BM_IntervalDp(benchmark::State& state) {
  PricingInstance additive =
      additive_instance(static_cast<std::size_t>(state.range(0)), 3);
  PriceGrid grid;
  grid.prices = {q(1), q(2), q(4), q(8)};
  GapParams gap{1, 2, q(2)};
  for (auto _ : state) {
    IntervalDpResult result = interval_dp(additive, grid, gap);
    benchmark::DoNotOptimize(result.revenue);
  }
}
BENCHMARK(BM_IntervalDp)->Arg(3)->Arg(5)->Arg(7);

void BM_BestResponsePricing(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  PricingInstance instance = two_value_instance(n, 8);
  ItemPricing pricing;
  for (std::size_t i = 0; i < n; ++i) pricing.prices.push_back(q(static_cast<long>(i % 7)));
  for (auto _ : state) {
    Scalar total = q(0);
    for (const BuyerType& type : instance.types) {
      total += best_response_item_pricing(type, pricing).payment;
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_BestResponsePricing)->Arg(8)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
