#include "ordered_pricing/fedex.hpp"

#include <algorithm>

namespace ordered_pricing {

namespace {

void sort_unique(std::vector<Scalar>& prices) {
  std::sort(prices.begin(), prices.end(), scalar_sort_less);
  prices.erase(std::unique(prices.begin(), prices.end(),
                           [](const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }),
               prices.end());
}

Scalar item1_value(const TwoValueType& type) {
  return type.threshold == 0 ? type.high : type.low;
}

}  // namespace

std::vector<TwoValueType> detect_two_value(const PricingInstance& instance) {
  if (instance.kind != ValuationKind::unit_demand_ordered) {
    throw ValidationError("/kind", "expected a unit_demand_ordered instance");
  }
  std::vector<TwoValueType> out;
  out.reserve(instance.types.size());
  for (std::size_t t = 0; t < instance.types.size(); ++t) {
    const BuyerType& type = instance.types[t];
    TwoValueType tv;
    tv.probability = type.probability;
    tv.low = type.values.front();
    tv.high = type.values.back();
    if (compare(tv.low, tv.high) == 0) {
      tv.threshold = 0;
      tv.low = tv.high;
    } else {
      std::size_t threshold = 0;
      for (std::size_t i = 0; i < type.values.size(); ++i) {
        int against_low = compare(type.values[i], tv.low);
        if (against_low == 0) {
          threshold = i + 1;
          continue;
        }
        if (compare(type.values[i], tv.high) != 0) {
          throw ValidationError("/types/" + std::to_string(t) + "/values/" + std::to_string(i),
                                "type takes more than two distinct values");
        }
      }
      tv.threshold = threshold;
    }
    out.push_back(std::move(tv));
  }
  return out;
}

FedexPriceSets fedex_price_sets(const std::vector<TwoValueType>& types, NumericMode mode) {
  // low_set must contain every value any type places on any item: the
  // price-raising argument that moves p1 onto the set needs the whole
  // equal-price block around item 1 to keep its buyers, including buyers
  // sitting at their high value exactly.
  FedexPriceSets sets;
  sets.low_set.push_back(zero_in(mode));
  for (const TwoValueType& type : types) {
    sets.low_set.push_back(type.low);
    sets.low_set.push_back(type.high);
  }
  sort_unique(sets.low_set);

  sets.star_set = sets.low_set;
  for (const TwoValueType& type : types) {
    Scalar shift = type.high - type.low;
    for (const Scalar& y : sets.low_set) sets.star_set.push_back(shift + y);
  }
  sort_unique(sets.star_set);
  return sets;
}

Scalar buyer_payment_G(const TwoValueType& type, const Scalar& y, const Scalar& z) {
  Scalar v1 = item1_value(type);
  Scalar high_gain = type.high - z;
  Scalar low_gain = v1 - y;
  if (compare(high_gain, low_gain) >= 0 && compare(type.high, z) >= 0) return z;
  if (compare(low_gain, high_gain) > 0 && compare(v1, y) >= 0) return y;
  return zero_in(y.is_real() ? NumericMode::floating : NumericMode::exact);
}

FedexDpTable fedex_dp_table(const PricingInstance& instance, const Scalar& y) {
  std::vector<TwoValueType> types = detect_two_value(instance);
  FedexPriceSets sets = fedex_price_sets(types, instance.mode);

  FedexDpTable table;
  table.y = y;
  table.star = sets.star_set;
  std::size_t width = table.star.size();
  table.value.assign(instance.n, std::vector<std::optional<Scalar>>(width));
  table.parent.assign(instance.n, std::vector<std::size_t>(width, width));

  std::vector<std::vector<std::size_t>> types_at(instance.n);
  for (std::size_t t = 0; t < types.size(); ++t) types_at[types[t].threshold].push_back(t);

  auto contribution = [&](std::size_t item, const Scalar& z) {
    Scalar sum = zero_in(instance.mode);
    for (std::size_t t : types_at[item]) {
      sum += types[t].probability * buyer_payment_G(types[t], y, z);
    }
    return sum;
  };

  for (std::size_t zi = 0; zi < width; ++zi) {
    if (compare(table.star[zi], y) == 0) {
      table.value[0][zi] = contribution(0, table.star[zi]);
    }
  }
  for (std::size_t item = 1; item < instance.n; ++item) {
    std::optional<Scalar> running;
    std::size_t running_arg = width;
    for (std::size_t zi = 0; zi < width; ++zi) {
      if (compare(table.star[zi], y) < 0) continue;
      if (table.value[item - 1][zi].has_value() &&
          (!running.has_value() || compare(*table.value[item - 1][zi], *running) > 0)) {
        running = table.value[item - 1][zi];
        running_arg = zi;
      }
      if (!running.has_value()) continue;
      table.value[item][zi] = *running + contribution(item, table.star[zi]);
      table.parent[item][zi] = running_arg;
    }
  }
  return table;
}

FedexSolution fedex_dp(const PricingInstance& instance) {
  std::vector<TwoValueType> types = detect_two_value(instance);
  FedexSolution solution;
  solution.sets = fedex_price_sets(types, instance.mode);

  std::vector<std::vector<std::size_t>> types_at(instance.n);
  for (std::size_t t = 0; t < types.size(); ++t) types_at[types[t].threshold].push_back(t);

  bool have_best = false;
  Scalar best_revenue = zero_in(instance.mode);
  FedexDpTable best_table;
  std::size_t best_top = 0;

  for (const Scalar& y : solution.sets.low_set) {
    FedexDpTable table = fedex_dp_table(instance, y);
    for (std::size_t zi = 0; zi < table.star.size(); ++zi) {
      const std::optional<Scalar>& cell = table.value[instance.n - 1][zi];
      if (!cell.has_value()) continue;
      if (!have_best || compare(*cell, best_revenue) > 0) {
        have_best = true;
        best_revenue = *cell;
        best_table = table;
        best_top = zi;
      }
    }
  }
  if (!have_best) throw ValidationError("/types", "dynamic program found no feasible pricing");

  solution.revenue = best_revenue;
  std::vector<std::size_t> path(instance.n);
  path[instance.n - 1] = best_top;
  for (std::size_t item = instance.n - 1; item > 0; --item) {
    path[item - 1] = best_table.parent[item][path[item]];
  }

  // Items without a threshold take the price of the next threshold item on
  // the path (the top price when none follows); thresholds keep their own.
  solution.pricing.prices.assign(instance.n, best_table.star[best_top]);
  std::size_t carry = best_top;
  for (std::size_t item = instance.n; item-- > 0;) {
    if (!types_at[item].empty() || item == 0) carry = path[item];
    solution.pricing.prices[item] = best_table.star[carry];
  }
  return solution;
}

}  // namespace ordered_pricing
