#include "ordered_pricing/interval_pricing.hpp"

#include "ordered_pricing/types.hpp"

namespace ordered_pricing {

IntervalPrefixPricing::IntervalPrefixPricing(std::vector<std::size_t> boundaries,
                                             std::vector<Scalar> option_prices,
                                             GapParams gap)
    : boundaries_(std::move(boundaries)),
      option_prices_(std::move(option_prices)),
      gap_(std::move(gap)) {
  std::size_t n = option_prices_.size();
  if (n == 0) throw ValidationError("/option_prices", "at least one item is required");
  if (boundaries_.size() < 2 || boundaries_.front() != 0 || boundaries_.back() != n) {
    throw ValidationError("/boundaries", "boundaries must run from 0 to the item count");
  }
  for (std::size_t b = 0; b + 1 < boundaries_.size(); ++b) {
    if (boundaries_[b] >= boundaries_[b + 1]) {
      throw ValidationError("/boundaries/" + std::to_string(b + 1),
                            "boundaries must be strictly increasing");
    }
  }
  if (compare(gap_.base, Scalar(1)) <= 0 || !gap_.base.is_finite()) {
    throw ValidationError("/gap/base", "gap base must exceed 1");
  }
  if (gap_.gamma < 0 || gap_.delta < 0) {
    throw ValidationError("/gap", "gap exponents must be nonnegative");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (option_prices_[i].is_infinite() || option_prices_[i].sign() < 0) {
      throw ValidationError("/option_prices/" + std::to_string(i),
                            "option prices must be finite and nonnegative");
    }
  }

  bool real_prices = false;
  for (const Scalar& q : option_prices_) real_prices = real_prices || q.is_real();
  Scalar base = real_prices && gap_.base.is_rational() ? Scalar::real(gap_.base.to_double())
                                                       : gap_.base;
  Scalar cross = pow_int(base, gap_.gamma);
  Scalar within = pow_int(base, gap_.delta);
  for (std::size_t ell = 0; ell + 1 < boundaries_.size(); ++ell) {
    for (std::size_t i = boundaries_[ell]; i < boundaries_[ell + 1]; ++i) {
      for (std::size_t j = i + 1; j < boundaries_[ell + 1]; ++j) {
        if (compare(option_prices_[j], within * option_prices_[i]) > 0) {
          throw ValidationError("/option_prices/" + std::to_string(j),
                                "within-interval price spread exceeds base^delta");
        }
      }
      for (std::size_t j = boundaries_[ell + 1]; j < n; ++j) {
        if (compare(option_prices_[j], cross * option_prices_[i]) < 0) {
          throw ValidationError("/option_prices/" + std::to_string(j),
                                "cross-interval price gap is below base^gamma");
        }
      }
    }
  }
}

}  // namespace ordered_pricing
