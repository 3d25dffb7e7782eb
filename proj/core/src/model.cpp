#include "ordered_pricing/model.hpp"

#include <string>

namespace ordered_pricing {

namespace {

NumericMode mode_of(const BuyerType& type) {
  for (const Scalar& v : type.values) {
    if (v.is_real()) return NumericMode::floating;
  }
  return type.probability.is_real() ? NumericMode::floating : NumericMode::exact;
}

/// Seller-favorable running best: utility first, then payment, then the
/// highest option index.  The initial state is the walk-away outcome.
struct ChoiceScan {
  explicit ChoiceScan(NumericMode mode) {
    best.option = std::nullopt;
    best.utility = zero_in(mode);
    best.payment = zero_in(mode);
  }

  void offer(std::size_t index, const Scalar& utility, const Scalar& price) {
    int du = compare(utility, best.utility);
    if (du < 0) return;
    if (du == 0 && compare(price, best.payment) < 0) return;
    // Full ties fall through: offers arrive in index order, so the latest
    // equally good offer is the highest-index one.
    best.option = index;
    best.utility = utility;
    best.payment = price;
  }

  BestResponse best;
};

void require_dimension(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw ValidationError(std::string("/") + what,
                          "expected " + std::to_string(want) + " entries, got " +
                              std::to_string(got));
  }
}

}  // namespace

BestResponse best_response_item_pricing(const BuyerType& type, const ItemPricing& pricing) {
  require_dimension(pricing.prices.size(), type.values.size(), "prices");
  ChoiceScan scan(mode_of(type));
  for (std::size_t i = 0; i < pricing.prices.size(); ++i) {
    const Scalar& p = pricing.prices[i];
    if (p.is_infinite()) continue;
    scan.offer(i, type.values[i] - p, p);
  }
  return scan.best;
}

Scalar revenue_item_pricing(const PricingInstance& instance, const ItemPricing& pricing) {
  require_dimension(pricing.prices.size(), instance.n, "prices");
  Scalar total = zero_in(instance.mode);
  for (const BuyerType& type : instance.types) {
    total += type.probability * best_response_item_pricing(type, pricing).payment;
  }
  return total;
}

BestResponse best_response_menu(const BuyerType& type, const LotteryMenu& menu) {
  ChoiceScan scan(mode_of(type));
  for (std::size_t o = 0; o < menu.options.size(); ++o) {
    const Lottery& lot = menu.options[o];
    require_dimension(lot.allocation.size(), type.values.size(), "alloc");
    if (lot.price.is_infinite()) continue;
    Scalar value = zero_in(mode_of(type));
    for (std::size_t i = 0; i < lot.allocation.size(); ++i) {
      if (!lot.allocation[i].is_zero()) value += lot.allocation[i] * type.values[i];
    }
    scan.offer(o, value - lot.price, lot.price);
  }
  return scan.best;
}

Scalar revenue_menu(const PricingInstance& instance, const LotteryMenu& menu) {
  Scalar total = zero_in(instance.mode);
  for (const BuyerType& type : instance.types) {
    total += type.probability * best_response_menu(type, menu).payment;
  }
  return total;
}

BuyerType additive_proxy(const BuyerType& type) {
  BuyerType proxy;
  proxy.probability = type.probability;
  proxy.values.reserve(type.values.size());
  Scalar prev = zero_in(mode_of(type));
  for (std::size_t i = 0; i < type.values.size(); ++i) {
    const Scalar& v = type.values[i];
    if (compare(v, prev) < 0) {
      throw ValidationError("/values/" + std::to_string(i),
                            "ordered values must be non-decreasing");
    }
    proxy.values.push_back(v - prev);
    prev = v;
  }
  return proxy;
}

PricingInstance additive_proxy_instance(const PricingInstance& instance) {
  PricingInstance proxy;
  proxy.n = instance.n;
  proxy.kind = ValuationKind::additive;
  proxy.mode = instance.mode;
  proxy.types.reserve(instance.types.size());
  for (const BuyerType& type : instance.types) proxy.types.push_back(additive_proxy(type));
  return proxy;
}

std::vector<BestResponse> best_response_interval_prefix(const BuyerType& type,
                                                        const IntervalPrefixPricing& ipp) {
  require_dimension(type.values.size(), ipp.item_count(), "values");
  NumericMode mode = mode_of(type);
  std::vector<BestResponse> out;
  out.reserve(ipp.interval_count());
  for (std::size_t ell = 0; ell < ipp.interval_count(); ++ell) {
    ChoiceScan scan(mode);
    Scalar prefix = zero_in(mode);
    for (std::size_t i = ipp.interval_begin(ell); i < ipp.interval_end(ell); ++i) {
      prefix += type.values[i];
      scan.offer(i, prefix - ipp.option_prices()[i], ipp.option_prices()[i]);
    }
    out.push_back(scan.best);
  }
  return out;
}

Scalar revenue_interval_prefix(const PricingInstance& instance,
                               const IntervalPrefixPricing& ipp) {
  Scalar total = zero_in(instance.mode);
  for (const BuyerType& type : instance.types) {
    Scalar paid = zero_in(instance.mode);
    for (const BestResponse& r : best_response_interval_prefix(type, ipp)) {
      paid += r.payment;
    }
    total += type.probability * paid;
  }
  return total;
}

ItemPricing canonicalize_pricing(const ItemPricing& pricing) {
  ItemPricing out = pricing;
  for (std::size_t i = out.prices.size(); i-- > 1;) {
    const Scalar& later = out.prices[i];
    Scalar& here = out.prices[i - 1];
    if (here.is_infinite() || (later.is_finite() && compare(later, here) < 0)) {
      here = later;
    }
  }
  return out;
}

ItemPricing scale_pricing(const ItemPricing& pricing, const Scalar& alpha) {
  ItemPricing out;
  out.prices.reserve(pricing.prices.size());
  for (const Scalar& p : pricing.prices) {
    out.prices.push_back(p.is_infinite() ? p : p * alpha);
  }
  return out;
}

LotteryMenu scale_menu(const LotteryMenu& menu, const Scalar& alpha) {
  LotteryMenu out = menu;
  for (Lottery& lot : out.options) {
    if (lot.price.is_finite()) lot.price = lot.price * alpha;
  }
  return out;
}

ItemPricing uniform_pricing(std::size_t n, const Scalar& price) {
  return ItemPricing{std::vector<Scalar>(n, price)};
}

LotteryMenu deterministic_menu(const ItemPricing& pricing, NumericMode mode) {
  LotteryMenu menu;
  for (std::size_t i = 0; i < pricing.prices.size(); ++i) {
    if (pricing.prices[i].is_infinite()) continue;
    Lottery lot;
    lot.allocation.assign(pricing.prices.size(), zero_in(mode));
    lot.allocation[i] = constant_in(mode, 1);
    lot.price = pricing.prices[i];
    menu.options.push_back(std::move(lot));
  }
  return menu;
}

}  // namespace ordered_pricing
