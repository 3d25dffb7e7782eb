#include "ordered_pricing/buymany.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ordered_pricing/fedex.hpp"
#include "ordered_pricing/model.hpp"

namespace ordered_pricing {

namespace {

NumericMode mode_of_scalars(const std::vector<Scalar>& values) {
  for (const Scalar& v : values) {
    if (v.is_real()) return NumericMode::floating;
  }
  return NumericMode::exact;
}

void require_dimension(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw ValidationError(std::string("/") + what,
                          "expected " + std::to_string(want) + " entries, got " +
                              std::to_string(got));
  }
}

}  // namespace

Scalar default_scale_floor() { return Scalar::rational(697, 20000); }

Scalar default_beta() { return Scalar::rational(4667, 25000); }

DominanceOrder::DominanceOrder(std::size_t n,
                               const std::vector<std::pair<std::size_t, std::size_t>>& precedes)
    : n_(n), le_(n, std::vector<bool>(n, false)) {
  for (std::size_t i = 0; i < n; ++i) le_[i][i] = true;
  for (const auto& [i, j] : precedes) {
    if (i >= n || j >= n) throw ValidationError("/order", "item index out of range");
    le_[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le_[k][j]) le_[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (le_[i][j] && le_[j][i]) {
        throw ValidationError("/order", "relation has a cycle through items " +
                                            std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }

  // Largest antichain = n minus a maximum matching of the strict relation
  // viewed as a bipartite graph (Dilworth via a minimum chain cover).
  std::vector<long> match_right(n, -1);
  std::vector<bool> seen;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !le_[i][j] || seen[j]) continue;
      seen[j] = true;
      if (match_right[j] < 0 || self(self, static_cast<std::size_t>(match_right[j]))) {
        match_right[j] = static_cast<long>(i);
        return true;
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, false);
    if (augment(augment, i)) ++matched;
  }
  width_ = n - matched;
}

DominanceOrder DominanceOrder::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
  return DominanceOrder(n, pairs);
}

std::vector<std::size_t> DominanceOrder::dominators(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (le_[i][j]) out.push_back(j);
  }
  return out;
}

ItemPricing derive_item_pricing(const LotteryMenu& menu, std::size_t n) {
  ItemPricing out;
  out.prices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.prices.push_back(cheapest_sure_upgrade(menu, i));
    if (i > 0 && compare(out.prices[i], out.prices[i - 1]) < 0) {
      throw ValidationError("/derived/" + std::to_string(i),
                            "derived prices must be non-decreasing");
    }
  }
  return out;
}

ItemPricing derive_item_pricing_width_k(const LotteryMenu& menu, const DominanceOrder& order) {
  std::size_t n = order.n();
  ItemPricing out;
  out.prices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Scalar> best;
    for (const Lottery& option : menu.options) {
      require_dimension(option.allocation.size(), n, "/menu/alloc");
      Scalar hit = zero_in(mode_of_scalars(option.allocation));
      for (std::size_t j = 0; j < n; ++j) {
        if (order.precedes(i, j)) hit += option.allocation[j];
      }
      if (hit.sign() <= 0) continue;
      Scalar cost = option.price / hit;
      if (!best.has_value() || compare(cost, *best) < 0) best = std::move(cost);
    }
    out.prices.push_back(best.value_or(Scalar::infinity()));
  }
  return out;
}

ScaledSearchResult scaled_pricing_search(const PricingInstance& instance, const ItemPricing& q,
                                         const Scalar& lo, const Scalar& hi,
                                         std::size_t grid_size) {
  if (lo.sign() <= 0 || lo.is_infinite() || hi.is_infinite() || compare(lo, hi) > 0) {
    throw ValidationError("/range", "need 0 < lo <= hi, both finite");
  }
  if (grid_size < 2) throw ValidationError("/grid_size", "need at least two grid points");

  double log_span = std::log(hi.to_double()) - std::log(lo.to_double());
  std::vector<Scalar> grid;
  grid.reserve(grid_size);
  for (std::size_t t = 0; t < grid_size; ++t) {
    if (t == 0) {
      grid.push_back(lo);
    } else if (t + 1 == grid_size) {
      grid.push_back(hi);
    } else {
      double a = lo.to_double() *
                 std::exp(log_span * static_cast<double>(t) / static_cast<double>(grid_size - 1));
      Scalar alpha = instance.mode == NumericMode::exact ? Scalar::from_double_exact(a)
                                                         : Scalar::real(a);
      if (compare(alpha, lo) < 0) alpha = lo;
      if (compare(alpha, hi) > 0) alpha = hi;
      grid.push_back(std::move(alpha));
    }
  }

  ScaledSearchResult result;
  result.grid_size = grid_size;
  double integral = 0.0;
  bool have = false;
  for (std::size_t t = 0; t < grid_size; ++t) {
    Scalar revenue = revenue_item_pricing(instance, scale_pricing(q, grid[t]));
    double r = revenue.to_double();
    integral += (t == 0 || t + 1 == grid_size) ? r / 2 : r;
    if (!have || compare(revenue, result.revenue) > 0) {
      have = true;
      result.alpha = grid[t];
      result.revenue = std::move(revenue);
    }
  }
  result.expected_estimate =
      log_span > 0 ? integral / static_cast<double>(grid_size - 1) : result.revenue.to_double();
  if (log_span <= 0) {
    result.alpha = lo;
    result.revenue = revenue_item_pricing(instance, scale_pricing(q, lo));
  }
  return result;
}

UtilityDifferenceReport utility_difference_check(const BuyerType& type, const LotteryMenu& menu,
                                                 const ItemPricing& q, const Scalar& scale,
                                                 const Scalar& beta) {
  UtilityDifferenceReport report;
  report.u_scaled = best_response_item_pricing(type, scale_pricing(q, scale)).utility;
  report.u_plain = best_response_item_pricing(type, q).utility;
  report.menu_payment = best_response_menu(type, menu).payment;
  report.scaled_menu_payment = best_response_menu(type, scale_menu(menu, beta)).payment;
  report.lhs = report.u_scaled - report.u_plain;
  report.rhs =
      (Scalar(1) - beta) * report.menu_payment - (scale / beta) * report.scaled_menu_payment;
  report.holds = compare(report.lhs, report.rhs) >= 0;
  return report;
}

Scalar adaptive_menu_revenue(const PricingInstance& instance, const LotteryMenu& menu) {
  if (instance.kind != ValuationKind::unit_demand_ordered) {
    throw ValidationError("/kind", "expected a unit_demand_ordered instance");
  }
  Scalar revenue = zero_in(instance.mode);
  for (const BuyerType& type : instance.types) {
    revenue += type.probability * adaptive_utility_unit_demand(type, menu).expected_payment;
  }
  return revenue;
}

FlattenReport fedex_flatten_check(const PricingInstance& instance, const LotteryMenu& menu) {
  std::vector<TwoValueType> shapes = detect_two_value(instance);
  for (std::size_t t = 0; t < shapes.size(); ++t) {
    if (shapes[t].threshold > 0 && shapes[t].low.sign() != 0) {
      throw ValidationError("/types/" + std::to_string(t),
                            "expected value 0 below each type's threshold item");
    }
  }
  FlattenReport report;
  report.menu_revenue = adaptive_menu_revenue(instance, menu);
  report.derived = derive_item_pricing(menu, instance.n);
  report.pricing_revenue = revenue_item_pricing(instance, report.derived);
  report.equal = compare(report.menu_revenue, report.pricing_revenue) == 0;
  return report;
}

RepeatCheckResult repeat_strategy_buy_many_check(const LotteryMenu& menu, std::size_t n) {
  // tails[a][t] = probability option a draws an item of index >= t.
  std::vector<std::vector<Scalar>> tails;
  tails.reserve(menu.options.size());
  for (const Lottery& option : menu.options) {
    require_dimension(option.allocation.size(), n, "/menu/alloc");
    NumericMode mode = mode_of_scalars(option.allocation);
    std::vector<Scalar> tail(n + 1, zero_in(mode));
    for (std::size_t t = n; t-- > 0;) tail[t] = tail[t + 1] + option.allocation[t];
    tails.push_back(std::move(tail));
  }

  RepeatCheckResult result;
  result.passes = true;
  for (std::size_t a = 0; a < menu.options.size(); ++a) {
    if (menu.options[a].price.is_infinite()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (tails[a][i].sign() <= 0) continue;
      Scalar cost = menu.options[a].price / tails[a][i];
      bool matched = false;
      for (std::size_t b = 0; b < menu.options.size() && !matched; ++b) {
        if (compare(menu.options[b].price, cost) > 0) continue;
        bool dominates = true;
        for (std::size_t t = 0; t < n && dominates; ++t) {
          // Conditioned on reaching the threshold, the repeat strategy draws
          // index >= t with probability tails[a][max(t,i)] / tails[a][i].
          Scalar repeat_tail = tails[a][std::max(t, i)] / tails[a][i];
          if (compare(tails[b][t], repeat_tail) < 0) dominates = false;
        }
        matched = dominates;
      }
      if (!matched) {
        result.passes = false;
        result.violation = {a, i};
        return result;
      }
    }
  }
  return result;
}

GapExample gap_example_fixture() {
  GapExample out;
  out.instance.n = 2;
  out.instance.kind = ValuationKind::unit_demand_ordered;
  out.instance.mode = NumericMode::exact;
  Scalar third = Scalar::rational(1, 3);
  out.instance.types = {
      BuyerType{{Scalar(0), Scalar(5)}, third},
      BuyerType{{Scalar(1), Scalar(3)}, third},
      BuyerType{{Scalar(1), Scalar(2)}, third},
  };
  out.menu.options = {
      Lottery{{Scalar(0), Scalar(1)}, Scalar(5)},
      Lottery{{Scalar::rational(2, 3), Scalar::rational(1, 3)}, Scalar::rational(5, 3)},
      Lottery{{Scalar(1), Scalar(0)}, Scalar(1)},
  };
  out.pricing.prices = {Scalar(1), Scalar(3)};
  return out;
}

}  // namespace ordered_pricing
