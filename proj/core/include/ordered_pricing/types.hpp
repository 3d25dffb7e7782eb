/**
 * @file types.hpp
 * @brief Buyer types, pricing instances, item pricings, lottery menus and
 *        best-response records.
 *
 * The buyer model is a single Bayesian buyer over n totally ordered items:
 * within every type the value of item i is non-decreasing in i, and a
 * unit-demand buyer values a set at its best item.  Additive instances hold
 * per-item marginal values instead and are used by the interval machinery.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordered_pricing/scalar.hpp"

namespace ordered_pricing {

/// How a type values a set of items.
enum class ValuationKind { unit_demand_ordered, additive };

/// One buyer type: a value per item plus the probability of drawing it.
struct BuyerType {
  std::vector<Scalar> values;
  Scalar probability;
};

/// A distribution over buyer types on n common items.
struct PricingInstance {
  std::size_t n = 0;
  ValuationKind kind = ValuationKind::unit_demand_ordered;
  NumericMode mode = NumericMode::exact;
  std::vector<BuyerType> types;

  /// Largest value appearing in any type (the instance's value range R).
  Scalar value_range() const;
};

/// One price per item; an infinite price withholds the item.
struct ItemPricing {
  std::vector<Scalar> prices;
};

/// A lottery over single items (sufficient for unit-demand buyers) sold at a
/// fixed price.
struct Lottery {
  std::vector<Scalar> allocation;
  Scalar price;
};

/// A menu of lotteries; the buyer picks one option or abstains.
struct LotteryMenu {
  std::vector<Lottery> options;
};

/// Outcome of a buyer's choice: the option bought (none = walk away), the
/// utility achieved and the payment made.  Walking away is modelled as a
/// zeroth option with price 0 and value 0 that loses every tie.
struct BestResponse {
  std::optional<std::size_t> option;
  Scalar utility;
  Scalar payment;
};

/// A single validation finding, addressed JSON-pointer style.
struct Violation {
  std::string path;
  std::string message;
};

/// Structural and numeric checks: probabilities sum to one, per-type value
/// vectors have length n and are non-decreasing (ordered kind), values are
/// nonnegative and finite, every nonzero value of an ordered type lies in
/// [1, R] with the top value at least 1, and every scalar matches the
/// instance's numeric mode.  Returns all findings (empty = valid).
std::vector<Violation> validate_instance(const PricingInstance& instance);

/// Same checks for a menu against an item count.
std::vector<Violation> validate_menu(const LotteryMenu& menu, std::size_t n);

/// Throws ValidationError if validate_instance reports anything.
void require_valid(const PricingInstance& instance);

/// Throws ValidationError if validate_menu reports anything.
void require_valid(const LotteryMenu& menu, std::size_t n);

/// Error carrying validation findings (CLI exit code 2).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  ValidationError(std::string path, std::string message);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string render(const std::vector<Violation>& violations);
  std::vector<Violation> violations_;
};

/// Error raised when an enumeration exceeds its budget (CLI exit code 3).
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Mode-correct zero (rational 0 in exact mode, real 0 in floating mode).
Scalar zero_in(NumericMode mode);

/// Mode-correct integer constant.
Scalar constant_in(NumericMode mode, long v);

}  // namespace ordered_pricing
