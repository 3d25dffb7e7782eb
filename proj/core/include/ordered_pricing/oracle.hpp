/**
 * @file oracle.hpp
 * @brief Ground-truth reference computations: grid construction, exhaustive
 *        optimal item pricing, and adaptive buyer utilities against menus.
 *
 * Everything here favours auditability over speed and is meant to certify
 * the faster solvers at desk scale.
 */
#pragma once

#include <vector>

#include "ordered_pricing/types.hpp"

namespace ordered_pricing {

/// A sorted set of distinct finite candidate prices.
struct PriceGrid {
  std::vector<Scalar> prices;
};

/// All powers z of (1+eps^2) for which some difference d = y - y' of points
/// y, y' in V ∪ {0} satisfies z/(1+eps^2) <= d <= z*(1+eps^2)/eps^2.  Every
/// monotone power pricing has an optimal representative inside this grid.
/// Requires 0 < eps < 1 with 1/eps an even positive integer.
PriceGrid support_size_grid(const std::vector<Scalar>& values, const Scalar& eps);

struct BruteForceResult {
  ItemPricing pricing;
  Scalar revenue;
  unsigned long long candidates = 0;
};

/// Exhaustive optimum over all non-decreasing pricings with entries from
/// grid ∪ {inf}; ties resolve to the lexicographically smallest pricing.
/// Throws BudgetExceeded if the candidate count C(n+g, n) exceeds the budget.
BruteForceResult brute_force_optimal_pricing(const PricingInstance& instance,
                                             const PriceGrid& grid,
                                             unsigned long long budget = 10000000);

/// Number of candidates the brute force would enumerate (saturates at
/// ULLONG_MAX on overflow).
unsigned long long brute_force_candidate_count(std::size_t n, std::size_t grid_size);

/// Second, independent optimality scan: re-enumerates every candidate with
/// the plain revenue routine and reports whether none beats `claimed`.
bool verify_no_better_pricing(const PricingInstance& instance, const PriceGrid& grid,
                              const Scalar& claimed);

/// An adaptive buyer strategy against a menu, restricted to the family
/// {walk away} ∪ {buy one option once} ∪ {repeat one option until the drawn
/// item index reaches a threshold}.
struct AdaptiveOutcome {
  enum class Kind { none, one_shot, repeat_until };
  Kind kind = Kind::none;
  std::size_t option = 0;     ///< menu option used (when kind != none)
  std::size_t threshold = 0;  ///< 0-based item index (when kind == repeat_until)
  Scalar utility;
  Scalar expected_payment;
};

/// Best strategy in the family above, ties seller-favorable (max utility,
/// then max expected payment, then latest in enumeration order).
AdaptiveOutcome adaptive_utility_unit_demand(const BuyerType& type, const LotteryMenu& menu);

/// Cheapest expected cost of repeating a single option until the drawn item
/// index is at least `item` (0-based); infinity if no option ever draws one.
Scalar cheapest_sure_upgrade(const LotteryMenu& menu, std::size_t item);

}  // namespace ordered_pricing
