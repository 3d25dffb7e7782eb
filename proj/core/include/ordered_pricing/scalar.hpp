/**
 * @file scalar.hpp
 * @brief Numeric scalar used throughout the library: an exact rational, an
 *        IEEE double, or a distinguished positive infinity.
 *
 * Every price, value, probability, utility and revenue in the library is a
 * Scalar.  An instance is either exact (rational arithmetic, equality is
 * literal) or floating (double arithmetic, comparisons use a relative
 * tolerance); the two kinds must not be mixed inside one computation.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordered_pricing {

/// Numeric interpretation of an instance and everything derived from it.
enum class NumericMode { exact, floating };

/// Relative tolerance used by floating-mode comparisons.
inline constexpr double kFloatRelTolerance = 1e-9;

class Scalar {
 public:
  enum class Kind { rational, real, infinite };

  /// Zero in exact mode.
  Scalar() : kind_(Kind::rational), rat_(0) {}

  /// Exact integer.
  Scalar(long v) : kind_(Kind::rational), rat_(static_cast<signed long>(v)) {}
  Scalar(int v) : Scalar(static_cast<long>(v)) {}

  /// Exact rational; canonicalizes and rejects a zero denominator.
  static Scalar rational(mpq_class v);
  static Scalar rational(long num, long den);

  /// Floating-mode scalar holding exactly this double.
  static Scalar real(double v);

  /// The exact rational whose value is exactly the given double.
  static Scalar from_double_exact(double v);

  /// Positive infinity (mode-agnostic; an unpurchasable price).
  static Scalar infinity();

  /// Parses "num/den", a plain integer string, or "inf" (exact mode).
  static Scalar parse_exact(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::infinite; }
  bool is_finite() const { return kind_ != Kind::infinite; }
  bool is_rational() const { return kind_ == Kind::rational; }
  bool is_real() const { return kind_ == Kind::real; }
  bool is_zero() const;
  bool is_integer() const;

  const mpq_class& rat() const;
  double to_double() const;

  int sign() const;

  Scalar operator-() const;
  Scalar abs() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  /// "7/3", "5" or "inf".  Exact-mode canonical form; reals render as
  /// shortest round-trip decimals.
  std::string to_exact_string() const;

  /// Decimal rendering with the given number of significant digits
  /// (%g-style placement of the decimal point).
  std::string to_decimal_string(int significant_digits = 12) const;

 private:
  Kind kind_;
  mpq_class rat_;
  double real_ = 0.0;
};

/// Three-way comparison: -1, 0, +1.  Exact scalars compare exactly; reals
/// compare with relative tolerance kFloatRelTolerance; infinity exceeds every
/// finite scalar.  Mixing rational and real operands throws.
int compare(const Scalar& a, const Scalar& b);

inline bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
inline bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != 0; }
inline bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
inline bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
inline bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
inline bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

/// base^exp by repeated squaring; exp may be negative (base must be nonzero).
Scalar pow_int(const Scalar& base, long exp);

/// Largest integer r with base^r <= x.  Requires x > 0 and base > 1.
long floor_log(const Scalar& x, const Scalar& base);

/// Smallest integer >= x.
Scalar ceil_scalar(const Scalar& x);

/// Strict total order used for deterministic sorting (infinity last; no
/// tolerance, reals compare bitwise via <).
bool scalar_sort_less(const Scalar& a, const Scalar& b);

}  // namespace ordered_pricing
