/**
 * @file model.hpp
 * @brief Buyer best responses and seller revenue for item pricings, lottery
 *        menus and interval prefix pricings.
 *
 * Ties are broken in the seller's favour everywhere: the buyer maximizes
 * utility, then payment, then the option index; walking away has price 0,
 * value 0 and the lowest priority of all.  A purchase happens whenever the
 * best utility is nonnegative.
 */
#pragma once

#include <vector>

#include "ordered_pricing/interval_pricing.hpp"
#include "ordered_pricing/types.hpp"

namespace ordered_pricing {

/// The buyer's choice among single items priced by `pricing`.  Items with an
/// infinite price are never affordable.
BestResponse best_response_item_pricing(const BuyerType& type, const ItemPricing& pricing);

/// Expected payment collected from the instance under an item pricing.
Scalar revenue_item_pricing(const PricingInstance& instance, const ItemPricing& pricing);

/// The buyer's choice among menu options; a unit-demand type values a lottery
/// at its expected item value (allocations are over single items).
BestResponse best_response_menu(const BuyerType& type, const LotteryMenu& menu);

/// Expected payment collected from the instance under a menu.
Scalar revenue_menu(const PricingInstance& instance, const LotteryMenu& menu);

/// Additive proxy of an ordered type: per-item marginals v[i] - v[i-1].
BuyerType additive_proxy(const BuyerType& type);

/// Proxy conversion of a whole instance (kind becomes additive).
PricingInstance additive_proxy_instance(const PricingInstance& instance);

/// Per-interval choices of an additive type facing an interval prefix
/// pricing: in each interval the buyer picks the best priced prefix of that
/// interval (or abstains), independently across intervals.
std::vector<BestResponse> best_response_interval_prefix(const BuyerType& type,
                                                        const IntervalPrefixPricing& ipp);

/// Expected total payment across all intervals.
Scalar revenue_interval_prefix(const PricingInstance& instance,
                               const IntervalPrefixPricing& ipp);

/// Non-decreasing canonical form p[i] <- min_{j >= i} p[j]; best-response
/// payments of ordered types are unchanged by this rewrite.
ItemPricing canonicalize_pricing(const ItemPricing& pricing);

/// Every price multiplied by alpha (infinite prices stay infinite).
ItemPricing scale_pricing(const ItemPricing& pricing, const Scalar& alpha);

/// Every option price multiplied by alpha (allocations unchanged).
LotteryMenu scale_menu(const LotteryMenu& menu, const Scalar& alpha);

/// All n items at one common price.
ItemPricing uniform_pricing(std::size_t n, const Scalar& price);

/// The menu with one deterministic option per finitely priced item.
LotteryMenu deterministic_menu(const ItemPricing& pricing, NumericMode mode);

}  // namespace ordered_pricing
