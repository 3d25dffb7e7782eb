/**
 * @file interval_pricing.hpp
 * @brief Interval prefix pricings with a checked price-gap certificate.
 *
 * An interval prefix pricing partitions the items 1..n into consecutive
 * intervals and, inside every interval, sells each prefix of the interval at
 * one price.  Well-formedness is a certificate on the prices: across
 * intervals prices grow by at least base^gamma, inside an interval they
 * spread by at most base^delta.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "ordered_pricing/scalar.hpp"

namespace ordered_pricing {

/// Gap certificate parameters shared by the interval machinery.
struct GapParams {
  long gamma = 0;
  long delta = 0;
  Scalar base = Scalar(2);
};

class IntervalPrefixPricing {
 public:
  /// boundaries = 0 = b_0 < b_1 < ... < b_k = n; option_prices[i] is the
  /// price of the prefix of item i's interval that ends at item i (0-based).
  /// Throws ValidationError unless the gap certificate holds:
  ///   cross:  i in an earlier interval than j  =>  q_j >= base^gamma * q_i
  ///   within: i < j in the same interval       =>  q_j <= base^delta * q_i
  IntervalPrefixPricing(std::vector<std::size_t> boundaries,
                        std::vector<Scalar> option_prices, GapParams gap);

  std::size_t item_count() const { return option_prices_.size(); }
  std::size_t interval_count() const { return boundaries_.size() - 1; }

  /// Half-open item range [begin, end) of interval ell (0-based items).
  std::size_t interval_begin(std::size_t ell) const { return boundaries_[ell]; }
  std::size_t interval_end(std::size_t ell) const { return boundaries_[ell + 1]; }

  const std::vector<std::size_t>& boundaries() const { return boundaries_; }
  const std::vector<Scalar>& option_prices() const { return option_prices_; }
  const GapParams& gap() const { return gap_; }

 private:
  std::vector<std::size_t> boundaries_;
  std::vector<Scalar> option_prices_;
  GapParams gap_;
};

}  // namespace ordered_pricing
