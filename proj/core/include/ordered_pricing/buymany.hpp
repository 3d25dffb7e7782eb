/**
 * @file buymany.hpp
 * @brief Constructions relating lottery menus to item pricings: the derived
 *        pricing, scaled-pricing search, the utility-difference inequality,
 *        menu flattening on two-value instances, and the width-k
 *        generalization over a dominance order.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ordered_pricing/oracle.hpp"
#include "ordered_pricing/types.hpp"

namespace ordered_pricing {

/// Default lower endpoint 0.03485 of the scaling range, as an exact rational.
Scalar default_scale_floor();

/// Default menu-scaling factor 0.18668, as an exact rational.
Scalar default_beta();

/// A partial order over items given by generating (i precedes j) pairs; the
/// reflexive-transitive closure is computed and antisymmetry is enforced.
/// The width is the size of the largest antichain.
class DominanceOrder {
 public:
  DominanceOrder(std::size_t n,
                 const std::vector<std::pair<std::size_t, std::size_t>>& precedes);

  /// The index order 0 <= 1 <= ... <= n-1 (width 1).
  static DominanceOrder chain(std::size_t n);

  std::size_t n() const { return n_; }

  /// Whether i precedes-or-equals j in the closure.
  bool precedes(std::size_t i, std::size_t j) const { return le_[i][j]; }

  /// S_i: the items j with j >= i in the order (including i itself).
  std::vector<std::size_t> dominators(std::size_t i) const;

  /// Size of the largest antichain.
  std::size_t width() const { return width_; }

 private:
  std::size_t n_;
  std::vector<std::vector<bool>> le_;
  std::size_t width_ = 0;
};

/// Derived item pricing: q_i is the cheapest expected cost at which repeat
/// purchases of a single lottery obtain an item of index >= i with
/// probability 1.  The result is checked to be non-decreasing.
ItemPricing derive_item_pricing(const LotteryMenu& menu, std::size_t n);

/// Width-k generalization: q_i = min over lotteries of price / Pr[the drawn
/// item lies in S_i], infinity when no lottery ever hits S_i.  On a chain
/// order this coincides with derive_item_pricing.
ItemPricing derive_item_pricing_width_k(const LotteryMenu& menu, const DominanceOrder& order);

struct ScaledSearchResult {
  Scalar alpha;              ///< best scale on the grid (ties: smallest)
  Scalar revenue;            ///< revenue of alpha * q
  double expected_estimate;  ///< trapezoid estimate of the log-uniform mean
  std::size_t grid_size = 0;
};

/// Derandomized search over scalings alpha * q for alpha on a geometric grid
/// of `grid_size` points spanning [lo, hi] (endpoints exact, interior points
/// snapped from doubles).  Also reports the numerical estimate of the
/// expected revenue when alpha is drawn with density 1/(alpha ln(hi/lo)).
ScaledSearchResult scaled_pricing_search(const PricingInstance& instance, const ItemPricing& q,
                                         const Scalar& lo, const Scalar& hi,
                                         std::size_t grid_size = 64);

struct UtilityDifferenceReport {
  Scalar u_scaled;       ///< item-pricing utility under scale * q
  Scalar u_plain;        ///< item-pricing utility under q
  Scalar menu_payment;   ///< buy-one payment under the menu
  Scalar scaled_menu_payment;  ///< buy-one payment under the beta-scaled menu
  Scalar lhs;            ///< u_scaled - u_plain
  Scalar rhs;            ///< (1-beta) * menu_payment - (scale/beta) * scaled_menu_payment
  bool holds = false;    ///< lhs >= rhs
};

/// Evaluates both sides of the utility-difference inequality
/// u_{scale*q}(v) - u_q(v) >= (1-beta) rev_menu(v) - (scale/beta) rev_{beta*menu}(v)
/// exactly for one type.
UtilityDifferenceReport utility_difference_check(const BuyerType& type, const LotteryMenu& menu,
                                                 const ItemPricing& q,
                                                 const Scalar& scale = default_scale_floor(),
                                                 const Scalar& beta = default_beta());

/// Expected payment when every type plays its best strategy from the
/// adaptive family (one-shot or single-lottery repeat with a threshold).
Scalar adaptive_menu_revenue(const PricingInstance& instance, const LotteryMenu& menu);

struct FlattenReport {
  Scalar menu_revenue;     ///< adaptive revenue of the menu
  Scalar pricing_revenue;  ///< revenue of the derived item pricing
  bool equal = false;
  ItemPricing derived;
};

/// On instances where every type has a single threshold item (low value 0
/// below it, one high value from there on), replacing a menu by its derived
/// item pricing preserves the adaptive revenue exactly.
FlattenReport fedex_flatten_check(const PricingInstance& instance, const LotteryMenu& menu);

struct RepeatCheckResult {
  bool passes = false;
  /// (option, threshold) of a repeat strategy no single purchase matches.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Sufficient buy-many test over the repeat-strategy family: every repeat of
/// a lottery until an item of index >= t must be matched by some single
/// option that is at most as expensive and stochastically allocates at least
/// as high.  Passing implies no repeat strategy strictly beats every single
/// purchase, for any non-decreasing value vector.
RepeatCheckResult repeat_strategy_buy_many_check(const LotteryMenu& menu, std::size_t n);

struct GapExample {
  PricingInstance instance;
  LotteryMenu menu;
  ItemPricing pricing;
};

/// Canonical two-item fixture whose optimal menu revenue 23/9 strictly
/// exceeds the optimal item-pricing revenue 7/3.
GapExample gap_example_fixture();

}  // namespace ordered_pricing
