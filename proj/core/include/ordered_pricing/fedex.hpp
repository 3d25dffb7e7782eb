/**
 * @file fedex.hpp
 * @brief Exact optimal item pricing for two-valued ordered instances.
 *
 * A two-valued type values items below a threshold index at one low value
 * and items from the threshold on at one high value.  For such instances an
 * optimal monotone pricing uses only finitely many candidate prices: the
 * observed values (plus 0) for item 1 and their shifts by (high - low) for
 * later items.  A layered dynamic program over those sets finds the optimum
 * exactly.
 */
#pragma once

#include <optional>
#include <vector>

#include "ordered_pricing/types.hpp"

namespace ordered_pricing {

/// A buyer type in two-valued form.
struct TwoValueType {
  std::size_t threshold = 0;  ///< 0-based first item with the high value
  Scalar low;                 ///< value of items before the threshold
  Scalar high;                ///< value of items at or after the threshold
  Scalar probability;
};

/// Classifies every type of an ordered instance; throws ValidationError if a
/// type takes more than two distinct values.  A constant type reports
/// threshold 0 with low == high.
std::vector<TwoValueType> detect_two_value(const PricingInstance& instance);

/// Candidate price sets: `low_set` for item 1 (every value any type places
/// on any item, plus 0), `star_set` for the other items (low_set shifted by
/// each type's high - low, plus low_set itself).  Sorted and deduplicated.
struct FedexPriceSets {
  std::vector<Scalar> low_set;
  std::vector<Scalar> star_set;
};
FedexPriceSets fedex_price_sets(const std::vector<TwoValueType>& types, NumericMode mode);

/// Payment of a two-valued type when item 1 costs y and its threshold item
/// costs z >= y: z when taking the threshold item is affordable and at least
/// as good as item 1, otherwise y when item 1 is strictly better and
/// affordable, otherwise nothing.
Scalar buyer_payment_G(const TwoValueType& type, const Scalar& y, const Scalar& z);

/// One DP table for a fixed item-1 price y.  Layer i (0-based item) holds the
/// best revenue from types with threshold <= i when item i is priced z;
/// unreachable cells are empty.  parent[i][zi] is the smallest maximizing
/// price index of layer i-1.
struct FedexDpTable {
  Scalar y;
  std::vector<Scalar> star;
  std::vector<std::vector<std::optional<Scalar>>> value;
  std::vector<std::vector<std::size_t>> parent;
};
FedexDpTable fedex_dp_table(const PricingInstance& instance, const Scalar& y);

struct FedexSolution {
  ItemPricing pricing;
  Scalar revenue;
  FedexPriceSets sets;
};

/// Exact optimum over all item pricings of a two-valued instance, with a
/// monotone witness whose first price lies in `low_set` and whose other
/// prices lie in `star_set`.  Ties prefer the smallest item-1 price, then the
/// smallest top price, then the smallest price at every backward step; items
/// carrying no type threshold take the price of the next threshold item on
/// the path.
FedexSolution fedex_dp(const PricingInstance& instance);

}  // namespace ordered_pricing
