/**
 * @file json_io.hpp
 * @brief JSON serialization of instances, pricings, menus and grids.
 *
 * Scalars follow one convention everywhere: integers are JSON numbers,
 * non-integer rationals are "num/den" strings, infinity is "inf", and
 * floating-mode scalars are JSON numbers.  Parsing accepts either form in
 * either mode; JSON numbers convert to their exact binary value in exact
 * mode.  Emission is deterministic (keys sorted, no environment input), so
 * document digests are stable.
 */
#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "ordered_pricing/interval_pricing.hpp"
#include "ordered_pricing/types.hpp"

namespace ordered_pricing {

using Json = nlohmann::json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, NumericMode mode, const std::string& path);

Json instance_to_json(const PricingInstance& instance);

/// Structural parse; semantic checks are validate_instance's job.  If the
/// document carries an "instance" key (a report or fixture), it is unwrapped.
PricingInstance instance_from_json(const Json& j);

Json pricing_to_json(const ItemPricing& pricing);

/// Accepts {"prices": [...]} or a bare array.  Unwraps a "pricing" key.
ItemPricing pricing_from_json(const Json& j, NumericMode mode);

Json menu_to_json(const LotteryMenu& menu);

/// Accepts {"options": [...]}.  Unwraps a "menu" key.
LotteryMenu menu_from_json(const Json& j, NumericMode mode);

Json interval_pricing_to_json(const IntervalPrefixPricing& ipp);

/// 16-hex-digit FNV-1a digest of the document's canonical serialization.
std::string json_digest(const Json& j);

std::string to_string(ValuationKind kind);
std::string to_string(NumericMode mode);

}  // namespace ordered_pricing
