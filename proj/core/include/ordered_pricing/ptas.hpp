/**
 * @file ptas.hpp
 * @brief Near-optimal item pricing via rounding, price-set restriction,
 *        sparse-class raising and an interval dynamic program.
 *
 * The accuracy parameter eps must have an even positive integer reciprocal.
 * Prices are rounded to powers of base = 1 + eps^2, restricted to a small
 * grid, split into intervals whose prices are far apart across intervals and
 * close together inside one, and the optimal interval prefix pricing over
 * the grid is found by dynamic programming on additive proxies.  Converting
 * the result back to an item pricing costs one more scaling factor.
 */
#pragma once

#include <optional>
#include <vector>

#include "ordered_pricing/interval_pricing.hpp"
#include "ordered_pricing/oracle.hpp"
#include "ordered_pricing/types.hpp"

namespace ordered_pricing {

/// Derived constants for one accuracy level.
class EpsParams {
 public:
  /// Requires eps in (0,1) rational with 1/eps an even positive integer.
  explicit EpsParams(const Scalar& eps);

  const Scalar& eps() const { return eps_; }
  long inv_eps() const { return inv_eps_; }
  Scalar eps2() const { return eps_ * eps_; }

  /// base = 1 + eps^2; every power grid uses this base.
  const Scalar& base() const { return base_; }

  /// Cross-interval separation exponent: ceil((1/eps^2) * ln(1/eps^2)).
  long gamma() const { return gamma_; }

  /// Within-interval spread exponent and class period:
  /// ceil((1/eps^3) * ln(1/eps^2)).
  long delta() const { return delta_; }

  /// Number of exponent classes (1/eps).
  long class_count() const { return inv_eps_; }

  /// Gap certificate with this accuracy's gamma, delta and base.
  GapParams gap() const { return GapParams{gamma_, delta_, base_}; }

  /// Rounding scale base^(-1/eps) applied after rounding down to powers.
  Scalar rounding_scale() const;

  /// Output scale (1+4 eps^2)^(-1/(2 eps)) applied when converting an
  /// interval prefix pricing back to an item pricing.
  Scalar output_scale() const;

 private:
  Scalar eps_;
  Scalar base_;
  long inv_eps_ = 0;
  long gamma_ = 0;
  long delta_ = 0;
};

/// Scale factor (1+eps_pt)^(-1/sqrt(eps_pt)) that turns a pointwise
/// (1+eps_pt)-undercut q of a pricing p into alpha*q with revenue at least
/// (1 - 3*sqrt(eps_pt)) times p's.  Requires 1/sqrt(eps_pt) to be a positive
/// integer so the factor is exact.
Scalar nisan_scale(const Scalar& eps_pt);

/// Rounds every positive price down to a power of base and multiplies the
/// whole vector by base^(-1/eps); zeros stay zero.  Prices must be finite.
ItemPricing round_to_powers(const ItemPricing& pricing, const EpsParams& params);

/// Clamp-and-scale restriction: prices at most eps^2 become 0, the rest are
/// multiplied by (1-eps).  Returns the restricted pricing and the grid
/// {(1-eps)*base^r : base^r in (eps^2, range]} of surviving price levels.
struct RestrictedPricing {
  ItemPricing pricing;
  PriceGrid grid;
};
RestrictedPricing restrict_price_set(const ItemPricing& pricing, const EpsParams& params,
                                     const Scalar& range);

/// The grid half of restrict_price_set, independent of any pricing.
PriceGrid range_price_grid(const EpsParams& params, const Scalar& range);

/// Exponent classes: prices (1-eps)*base^r are grouped by the residue of r
/// modulo delta into class_count bands of width gamma (the last band absorbs
/// the remainder).  Returns the class index of least revenue contribution
/// under the given pricing (ties to the smallest), together with the set of
/// distinct pricing entries in that class.
struct SparseClass {
  long cls = 0;
  PriceGrid members;
  std::vector<Scalar> contributions;  ///< revenue attributed to each class
};
SparseClass select_sparse_class(const PricingInstance& instance, const ItemPricing& pricing,
                                const EpsParams& params);

/// Raises every price of class `cls` to the next non-member price at a later
/// item (or the next non-member power when none follows), groups items into
/// intervals by exponent bands, and applies the output scale.  The returned
/// pricing carries the (gamma, delta, base) certificate by construction.
IntervalPrefixPricing build_interval_prefix(const ItemPricing& pricing, long cls,
                                            const EpsParams& params);

struct IntervalDpResult {
  IntervalPrefixPricing pricing;
  Scalar revenue;
  unsigned long long enumerated = 0;  ///< within-interval assignments tried
};

/// Optimal interval prefix pricing for an additive instance with prices from
/// `grid`, subject to the gap certificate: a new interval starts at least
/// base^gamma above the previous interval's top and spans at most base^delta
/// from bottom to top.  Ties prefer the smallest top price, then smaller
/// split points, enumerated lexicographically.  Throws BudgetExceeded when
/// the within-interval enumeration exceeds `budget` assignments.
IntervalDpResult interval_dp(const PricingInstance& additive, const PriceGrid& grid,
                             const GapParams& gap, unsigned long long budget = 10000000);

/// Converts an interval prefix pricing into an item pricing by applying the
/// output scale to every option price.
ItemPricing ipp_to_item_pricing(const IntervalPrefixPricing& ipp, const EpsParams& params);

/// Which grid feeds the interval dynamic program.
enum class GridSource { support_size, price_range };

struct PtasOptions {
  GridSource grid_source = GridSource::support_size;
  std::optional<long> gamma_override;
  std::optional<long> delta_override;
  unsigned long long budget = 10000000;
};

struct PtasDiagnostics {
  std::size_t grid_size = 0;
  Scalar dp_revenue_on_proxy;
  Scalar pipeline_revenue;
  Scalar uniform_price;
  Scalar uniform_revenue;
  bool pipeline_chosen = true;
  unsigned long long enumerated = 0;
};

struct PtasResult {
  ItemPricing pricing;
  Scalar revenue;
  std::optional<IntervalPrefixPricing> interval_pricing;  ///< pipeline witness
  PtasDiagnostics diagnostics;
};

/// End-to-end solver: additive proxies, grid construction, interval DP,
/// conversion back, then the better of the pipeline output and the best
/// single uniform price over observed values (pipeline wins ties).
PtasResult ptas_solve(const PricingInstance& instance, const Scalar& eps,
                      const PtasOptions& options = {});

}  // namespace ordered_pricing
