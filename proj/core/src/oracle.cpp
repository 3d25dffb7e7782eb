#include "ordered_pricing/oracle.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "ordered_pricing/model.hpp"

namespace ordered_pricing {

namespace {

void require_ordered(const PricingInstance& instance) {
  if (instance.kind != ValuationKind::unit_demand_ordered) {
    throw ValidationError("/kind", "expected a unit_demand_ordered instance");
  }
}

NumericMode mode_of(const BuyerType& type) {
  for (const Scalar& v : type.values) {
    if (v.is_real()) return NumericMode::floating;
  }
  return type.probability.is_real() ? NumericMode::floating : NumericMode::exact;
}

/// Smallest integer r with base^r >= x.
long ceil_log(const Scalar& x, const Scalar& base) {
  long r = floor_log(x, base);
  return compare(pow_int(base, r), x) == 0 ? r : r + 1;
}

struct TypeScan {
  Scalar utility;
  Scalar payment;
};

/// Depth-first enumeration of non-decreasing pricings over grid ∪ {inf} in
/// lexicographic order, carrying each type's running best response.
class BruteForceScan {
 public:
  BruteForceScan(const PricingInstance& instance, const PriceGrid& grid)
      : instance_(instance), grid_(grid) {
    for (const BuyerType& type : instance.types) {
      Scalar zero = zero_in(instance.mode);
      start_.push_back({zero, zero});
    }
    stack_.assign(instance.n, {});
    prefix_.assign(instance.n, 0);
    best_.revenue = zero_in(instance.mode);
    best_.pricing.prices.assign(instance.n, Scalar::infinity());
    descend(0, 0, start_);
  }

  BruteForceResult take() && {
    return std::move(best_);
  }

 private:
  void finish(const std::vector<TypeScan>& states) {
    ++best_.candidates;
    Scalar revenue = zero_in(instance_.mode);
    for (std::size_t t = 0; t < states.size(); ++t) {
      revenue += instance_.types[t].probability * states[t].payment;
    }
    // Lexicographic enumeration plus strict improvement keeps the
    // lexicographically smallest maximizer.
    if (!have_best_ || compare(revenue, best_.revenue) > 0) {
      have_best_ = true;
      best_.revenue = revenue;
      for (std::size_t i = 0; i < instance_.n; ++i) {
        best_.pricing.prices[i] = i < depth_ ? grid_.prices[prefix_[i]] : Scalar::infinity();
      }
    }
  }

  void descend(std::size_t item, std::size_t min_index, const std::vector<TypeScan>& states) {
    if (item == instance_.n) {
      finish(states);
      return;
    }
    for (std::size_t g = min_index; g < grid_.prices.size(); ++g) {
      const Scalar& price = grid_.prices[g];
      std::vector<TypeScan>& next = stack_[item];
      next = states;
      for (std::size_t t = 0; t < next.size(); ++t) {
        Scalar utility = instance_.types[t].values[item] - price;
        int du = compare(utility, next[t].utility);
        if (du < 0 || (du == 0 && compare(price, next[t].payment) < 0)) continue;
        next[t].utility = std::move(utility);
        next[t].payment = price;
      }
      prefix_[item] = g;
      depth_ = item + 1;
      descend(item + 1, g, next);
    }
    // Once one item is withheld, monotonicity withholds the rest; the states
    // seen so far already describe that whole candidate.
    depth_ = item;
    finish(states);
  }

  const PricingInstance& instance_;
  const PriceGrid& grid_;
  std::vector<TypeScan> start_;
  std::vector<std::vector<TypeScan>> stack_;
  std::vector<std::size_t> prefix_;
  std::size_t depth_ = 0;
  bool have_best_ = false;
  BruteForceResult best_;
};

}  // namespace

PriceGrid support_size_grid(const std::vector<Scalar>& values, const Scalar& eps) {
  bool real_values = false;
  for (const Scalar& v : values) real_values = real_values || v.is_real();
  Scalar e = real_values && eps.is_rational() ? Scalar::real(eps.to_double()) : eps;
  if (e.sign() <= 0 || compare(e, constant_in(real_values ? NumericMode::floating
                                                          : NumericMode::exact, 1)) >= 0) {
    throw ValidationError("/eps", "eps must lie in (0, 1)");
  }
  Scalar eps2 = e * e;
  Scalar base = constant_in(real_values ? NumericMode::floating : NumericMode::exact, 1) + eps2;

  std::vector<Scalar> points = values;
  points.push_back(zero_in(real_values ? NumericMode::floating : NumericMode::exact));

  std::set<long> exponents;
  for (const Scalar& y : points) {
    for (const Scalar& yp : points) {
      if (y.is_infinite() || yp.is_infinite()) continue;
      Scalar d = y - yp;
      if (d.sign() <= 0) continue;
      // base^r in [d*eps^2/(1+eps^2), d*(1+eps^2)]
      long lo = ceil_log(d * eps2 / base, base);
      long hi = floor_log(d * base, base);
      for (long r = lo; r <= hi; ++r) exponents.insert(r);
    }
  }

  PriceGrid grid;
  for (long r : exponents) grid.prices.push_back(pow_int(base, r));
  return grid;
}

unsigned long long brute_force_candidate_count(std::size_t n, std::size_t grid_size) {
  // C(n + g, n) monotone candidates over g finite prices plus infinity.
  unsigned long long result = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    unsigned long long factor = grid_size + k;
    if (result > ULLONG_MAX / factor) return ULLONG_MAX;
    result = result * factor / k;
  }
  return result;
}

BruteForceResult brute_force_optimal_pricing(const PricingInstance& instance,
                                             const PriceGrid& grid,
                                             unsigned long long budget) {
  require_ordered(instance);
  unsigned long long count = brute_force_candidate_count(instance.n, grid.prices.size());
  if (count > budget) {
    throw BudgetExceeded("brute force would enumerate " + std::to_string(count) +
                         " candidate pricings (budget " + std::to_string(budget) + ")");
  }
  return BruteForceScan(instance, grid).take();
}

bool verify_no_better_pricing(const PricingInstance& instance, const PriceGrid& grid,
                              const Scalar& claimed) {
  require_ordered(instance);
  std::size_t g = grid.prices.size();
  std::vector<std::size_t> idx(instance.n, 0);  // index g means infinity
  while (true) {
    ItemPricing pricing;
    for (std::size_t i = 0; i < instance.n; ++i) {
      pricing.prices.push_back(idx[i] < g ? grid.prices[idx[i]] : Scalar::infinity());
    }
    if (compare(revenue_item_pricing(instance, pricing), claimed) > 0) return false;

    std::size_t i = instance.n;
    while (i-- > 0) {
      if (idx[i] < g) {
        ++idx[i];
        for (std::size_t j = i + 1; j < instance.n; ++j) idx[j] = idx[i];
        break;
      }
      if (i == 0) return true;
    }
  }
}

AdaptiveOutcome adaptive_utility_unit_demand(const BuyerType& type, const LotteryMenu& menu) {
  NumericMode mode = mode_of(type);
  AdaptiveOutcome best;
  best.kind = AdaptiveOutcome::Kind::none;
  best.utility = zero_in(mode);
  best.expected_payment = zero_in(mode);

  auto offer = [&](AdaptiveOutcome candidate) {
    int du = compare(candidate.utility, best.utility);
    if (du < 0) return;
    if (du == 0 && compare(candidate.expected_payment, best.expected_payment) < 0) return;
    best = std::move(candidate);
  };

  for (std::size_t o = 0; o < menu.options.size(); ++o) {
    const Lottery& lot = menu.options[o];
    if (lot.price.is_infinite()) continue;
    if (lot.allocation.size() != type.values.size()) {
      throw ValidationError("/options/" + std::to_string(o) + "/alloc",
                            "allocation length does not match the type");
    }

    Scalar value = zero_in(mode);
    for (std::size_t i = 0; i < lot.allocation.size(); ++i) {
      if (!lot.allocation[i].is_zero()) value += lot.allocation[i] * type.values[i];
    }
    AdaptiveOutcome one_shot;
    one_shot.kind = AdaptiveOutcome::Kind::one_shot;
    one_shot.option = o;
    one_shot.utility = value - lot.price;
    one_shot.expected_payment = lot.price;
    offer(std::move(one_shot));

    // Suffix sums give the stopping probability and conditional value of
    // "repeat until the drawn index reaches i".
    Scalar tail_prob = zero_in(mode);
    Scalar tail_value = zero_in(mode);
    std::vector<std::pair<Scalar, Scalar>> tails(lot.allocation.size());
    for (std::size_t i = lot.allocation.size(); i-- > 0;) {
      tail_prob += lot.allocation[i];
      tail_value += lot.allocation[i] * type.values[i];
      tails[i] = {tail_prob, tail_value};
    }
    for (std::size_t i = 0; i < lot.allocation.size(); ++i) {
      if (tails[i].first.sign() <= 0) continue;
      AdaptiveOutcome repeat;
      repeat.kind = AdaptiveOutcome::Kind::repeat_until;
      repeat.option = o;
      repeat.threshold = i;
      repeat.expected_payment = lot.price / tails[i].first;
      repeat.utility = (tails[i].second - lot.price) / tails[i].first;
      offer(std::move(repeat));
    }
  }
  return best;
}

Scalar cheapest_sure_upgrade(const LotteryMenu& menu, std::size_t item) {
  Scalar best = Scalar::infinity();
  for (const Lottery& lot : menu.options) {
    if (lot.price.is_infinite()) continue;
    if (item >= lot.allocation.size()) {
      throw ValidationError("/options", "item index exceeds the allocation length");
    }
    Scalar reach = zero_in(lot.price.is_real() ? NumericMode::floating : NumericMode::exact);
    for (std::size_t j = item; j < lot.allocation.size(); ++j) reach += lot.allocation[j];
    if (reach.sign() <= 0) continue;
    Scalar cost = lot.price / reach;
    if (compare(cost, best) < 0) best = cost;
  }
  return best;
}

}  // namespace ordered_pricing
