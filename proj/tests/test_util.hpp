/**
 * @file test_util.hpp
 * @brief Shared builders, random generators and reference implementations
 *        used by both the unit tests and the acceptance suite.
 *
 * Everything here is deterministic: random draws always come from an
 * explicitly seeded mt19937_64 owned by the caller.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ordered_pricing/buymany.hpp"
#include "ordered_pricing/interval_pricing.hpp"
#include "ordered_pricing/model.hpp"
#include "ordered_pricing/oracle.hpp"
#include "ordered_pricing/types.hpp"

namespace test_util {

using ordered_pricing::BuyerType;
using ordered_pricing::GapParams;
using ordered_pricing::IntervalPrefixPricing;
using ordered_pricing::ItemPricing;
using ordered_pricing::Lottery;
using ordered_pricing::LotteryMenu;
using ordered_pricing::NumericMode;
using ordered_pricing::PriceGrid;
using ordered_pricing::PricingInstance;
using ordered_pricing::Scalar;
using ordered_pricing::ValuationKind;

inline Scalar Q(long num, long den = 1) { return Scalar::rational(num, den); }

inline BuyerType type_of(std::vector<Scalar> values, Scalar prob) {
  return BuyerType{std::move(values), std::move(prob)};
}

inline PricingInstance instance_of(std::vector<BuyerType> types,
                                   ValuationKind kind = ValuationKind::unit_demand_ordered,
                                   NumericMode mode = NumericMode::exact) {
  PricingInstance instance;
  instance.n = types.empty() ? 0 : types.front().values.size();
  instance.kind = kind;
  instance.mode = mode;
  instance.types = std::move(types);
  return instance;
}

inline ItemPricing prices_of(std::vector<Scalar> prices) { return ItemPricing{std::move(prices)}; }

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random positive probabilities summing to exactly 1.
inline std::vector<Scalar> random_probabilities(std::mt19937_64& rng, std::size_t count) {
  std::vector<long> weights(count);
  long total = 0;
  for (auto& w : weights) {
    w = static_cast<long>(pick(rng, 1, 9));
    total += w;
  }
  std::vector<Scalar> probs;
  probs.reserve(count);
  for (long w : weights) probs.push_back(Q(w, total));
  return probs;
}

/// Random ordered unit-demand instance with integer values in {0} union
/// [1, max_value]; every type's top value is at least 1.
inline PricingInstance random_ordered_instance(std::mt19937_64& rng, std::size_t max_n,
                                               std::size_t max_types, long max_value) {
  std::size_t n = pick(rng, 1, max_n);
  std::size_t m = pick(rng, 1, max_types);
  std::vector<Scalar> probs = random_probabilities(rng, m);
  std::vector<BuyerType> types;
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<Scalar> values(n);
    long v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v == 0 && pick(rng, 0, 2) == 0 && i + 1 < n) {
        values[i] = Q(0);
      } else {
        v = std::max<long>(std::max<long>(v, 1),
                           v + static_cast<long>(pick(rng, 0, 3)));
        v = std::min(v, max_value);
        values[i] = Q(v);
      }
    }
    if (values.back().is_zero()) values.back() = Q(1 + static_cast<long>(pick(rng, 0, max_value - 1)));
    types.push_back(type_of(std::move(values), probs[t]));
  }
  return instance_of(std::move(types));
}

/// Random two-valued ordered instance: each type is `low` before a threshold
/// index and `high` from it on.
inline PricingInstance random_two_value_instance(std::mt19937_64& rng, std::size_t max_n,
                                                 std::size_t max_types, long max_value) {
  std::size_t n = pick(rng, 1, max_n);
  std::size_t m = pick(rng, 1, max_types);
  std::vector<Scalar> probs = random_probabilities(rng, m);
  std::vector<BuyerType> types;
  for (std::size_t t = 0; t < m; ++t) {
    long high = static_cast<long>(pick(rng, 1, static_cast<std::size_t>(max_value)));
    long low = 0;
    if (pick(rng, 0, 1) == 1) low = static_cast<long>(pick(rng, 1, static_cast<std::size_t>(high)));
    std::size_t threshold = low == high ? 0 : pick(rng, 0, n - 1);
    std::vector<Scalar> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = Q(i < threshold ? low : high);
    types.push_back(type_of(std::move(values), probs[t]));
  }
  return instance_of(std::move(types));
}

/// Random instance where every type either values all items equally or is
/// worth one high value from a threshold item on (and nothing before it).
inline PricingInstance random_fedex_instance(std::mt19937_64& rng, std::size_t max_n,
                                             std::size_t max_types, long max_value) {
  std::size_t n = pick(rng, 1, max_n);
  std::size_t m = pick(rng, 1, max_types);
  std::vector<Scalar> probs = random_probabilities(rng, m);
  std::vector<BuyerType> types;
  for (std::size_t t = 0; t < m; ++t) {
    long high = static_cast<long>(pick(rng, 1, static_cast<std::size_t>(max_value)));
    std::size_t threshold = pick(rng, 0, 1) == 0 ? 0 : pick(rng, 0, n - 1);
    std::vector<Scalar> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = Q(i < threshold ? 0 : high);
    types.push_back(type_of(std::move(values), probs[t]));
  }
  return instance_of(std::move(types));
}

/// Random additive-proxy instance with small integer marginals.
inline PricingInstance random_additive_instance(std::mt19937_64& rng, std::size_t max_n,
                                                std::size_t max_types, long max_value) {
  std::size_t n = pick(rng, 1, max_n);
  std::size_t m = pick(rng, 1, max_types);
  std::vector<Scalar> probs = random_probabilities(rng, m);
  std::vector<BuyerType> types;
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<Scalar> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = Q(static_cast<long>(pick(rng, 0, static_cast<std::size_t>(max_value))));
    }
    types.push_back(type_of(std::move(values), probs[t]));
  }
  return instance_of(std::move(types), ValuationKind::additive);
}

/// Random sorted grid of distinct positive integer prices.
inline PriceGrid random_grid(std::mt19937_64& rng, std::size_t max_size, long max_value) {
  std::size_t size = pick(rng, 1, max_size);
  std::vector<long> raw;
  while (raw.size() < size) {
    long v = static_cast<long>(pick(rng, 1, static_cast<std::size_t>(max_value)));
    if (std::find(raw.begin(), raw.end(), v) == raw.end()) raw.push_back(v);
  }
  std::sort(raw.begin(), raw.end());
  PriceGrid grid;
  for (long v : raw) grid.prices.push_back(Q(v));
  return grid;
}

/// Random lottery menu over n items; allocations are exact rationals summing
/// to 1, prices are small positive rationals.
inline LotteryMenu random_menu(std::mt19937_64& rng, std::size_t n, std::size_t max_options,
                               long max_price) {
  LotteryMenu menu;
  std::size_t count = pick(rng, 1, max_options);
  for (std::size_t o = 0; o < count; ++o) {
    std::vector<long> weights(n, 0);
    long total = 0;
    std::size_t support = pick(rng, 1, n);
    for (std::size_t s = 0; s < support; ++s) {
      std::size_t i = pick(rng, 0, n - 1);
      long w = static_cast<long>(pick(rng, 1, 5));
      weights[i] += w;
      total += w;
    }
    Lottery lottery;
    lottery.allocation.resize(n);
    for (std::size_t i = 0; i < n; ++i) lottery.allocation[i] = Q(weights[i], total);
    lottery.price = Q(static_cast<long>(pick(rng, 0, static_cast<std::size_t>(max_price) * 4)), 4);
    menu.options.push_back(std::move(lottery));
  }
  return menu;
}

/// Random deterministic menu (each option allocates one item with certainty).
inline LotteryMenu random_deterministic_menu(std::mt19937_64& rng, std::size_t n,
                                             long max_price) {
  std::vector<Scalar> prices(n);
  long p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    p += static_cast<long>(pick(rng, 0, static_cast<std::size_t>(max_price)));
    prices[i] = Q(p);
  }
  return ordered_pricing::deterministic_menu(ItemPricing{prices}, NumericMode::exact);
}

/// Random dominance order of width at most `k`: items are split into k
/// chains ordered by a global priority, plus a few extra priority-respecting
/// cross edges (which keep the relation acyclic and cannot raise the width).
inline ordered_pricing::DominanceOrder random_bounded_width_order(std::mt19937_64& rng,
                                                                  std::size_t n,
                                                                  std::size_t k) {
  std::vector<std::size_t> priority(n);
  for (std::size_t i = 0; i < n; ++i) priority[i] = i;
  std::shuffle(priority.begin(), priority.end(), rng);

  std::vector<std::vector<std::size_t>> chains(k);
  for (std::size_t rank = 0; rank < n; ++rank) {
    chains[pick(rng, 0, k - 1)].push_back(priority[rank]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> precedes;
  for (const auto& chain : chains) {
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
      precedes.emplace_back(chain[s], chain[s + 1]);
    }
  }
  std::size_t extras = pick(rng, 0, n);
  std::vector<std::size_t> rank_of(n);
  for (std::size_t rank = 0; rank < n; ++rank) rank_of[priority[rank]] = rank;
  for (std::size_t e = 0; e < extras; ++e) {
    std::size_t i = pick(rng, 0, n - 1);
    std::size_t j = pick(rng, 0, n - 1);
    if (rank_of[i] < rank_of[j]) precedes.emplace_back(i, j);
  }
  return ordered_pricing::DominanceOrder(n, precedes);
}

/// Reference optimum for the interval DP: enumerates every interval
/// partition of the n items and every monotone assignment of grid prices
/// satisfying the (gamma, delta) gap, evaluating each candidate through the
/// additive per-interval best response.  Returns the best revenue found, or
/// nothing when no assignment satisfies the gap.
inline std::optional<Scalar> exhaustive_interval_optimum(const PricingInstance& additive,
                                                         const PriceGrid& grid,
                                                         const GapParams& gap) {
  const std::size_t n = additive.n;
  const std::size_t width = grid.prices.size();
  const Scalar cross = ordered_pricing::pow_int(gap.base, gap.gamma);
  const Scalar within = ordered_pricing::pow_int(gap.base, gap.delta);
  std::optional<Scalar> best;

  // Each bit pattern over n-1 positions marks interval boundaries.
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    std::vector<std::size_t> boundaries{0};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask & (1ull << i)) boundaries.push_back(i + 1);
    }
    boundaries.push_back(n);

    // Monotone grid assignment per item, checked against the gap.
    std::vector<std::size_t> assign(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; ok && i + 1 < n; ++i) {
        if (assign[i + 1] < assign[i]) ok = false;
      }
      if (ok) {
        for (std::size_t b = 1; ok && b + 1 < boundaries.size(); ++b) {
          std::size_t prev_top = boundaries[b] - 1;
          std::size_t next_bottom = boundaries[b];
          if (ordered_pricing::compare(grid.prices[assign[next_bottom]],
                                       cross * grid.prices[assign[prev_top]]) < 0) {
            ok = false;
          }
        }
        for (std::size_t b = 0; ok && b + 1 < boundaries.size(); ++b) {
          std::size_t lo = boundaries[b], hi = boundaries[b + 1] - 1;
          if (ordered_pricing::compare(grid.prices[assign[hi]],
                                       within * grid.prices[assign[lo]]) > 0) {
            ok = false;
          }
        }
      }
      if (ok) {
        std::vector<Scalar> option_prices(n);
        for (std::size_t i = 0; i < n; ++i) option_prices[i] = grid.prices[assign[i]];
        IntervalPrefixPricing ipp(boundaries, option_prices, gap);
        Scalar revenue = ordered_pricing::revenue_interval_prefix(additive, ipp);
        if (!best || ordered_pricing::compare(revenue, *best) > 0) best = revenue;
      }
      // Next assignment in mixed radix; stop after the last one wraps.
      std::size_t pos = n;
      bool wrapped = false;
      while (true) {
        if (pos == 0) {
          wrapped = true;
          break;
        }
        --pos;
        if (++assign[pos] < width) break;
        assign[pos] = 0;
      }
      if (wrapped) break;
    }
  }
  return best;
}

}  // namespace test_util
