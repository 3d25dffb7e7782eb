#include "ordered_pricing/ptas.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>

#include "ordered_pricing/model.hpp"

namespace ordered_pricing {

namespace {

Scalar in_mode(const Scalar& s, NumericMode mode) {
  if (mode == NumericMode::floating && s.is_rational()) return Scalar::real(s.to_double());
  return s;
}

NumericMode pricing_mode(const ItemPricing& pricing) {
  for (const Scalar& p : pricing.prices) {
    if (p.is_real()) return NumericMode::floating;
  }
  return NumericMode::exact;
}

/// ceil(mult * ln(arg)) with all roundings upward, so the result never
/// undershoots the exact value.
long ceil_mult_log(unsigned long mult, unsigned long arg) {
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_ui(t, arg, MPFR_RNDU);
  mpfr_log(t, t, MPFR_RNDU);
  mpfr_mul_ui(t, t, mult, MPFR_RNDU);
  mpfr_ceil(t, t);
  long out = mpfr_get_si(t, MPFR_RNDU);
  mpfr_clear(t);
  return out;
}

long floordiv(long a, long b) {
  long q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

EpsParams::EpsParams(const Scalar& eps) : eps_(eps) {
  if (!eps.is_rational() || eps.sign() <= 0 || compare(eps, Scalar(1)) >= 0) {
    throw ValidationError("/eps", "eps must be a rational in (0, 1)");
  }
  const mpq_class& q = eps.rat();
  mpz_class rem, inv;
  mpz_fdiv_qr(inv.get_mpz_t(), rem.get_mpz_t(), q.get_den().get_mpz_t(), q.get_num().get_mpz_t());
  if (rem != 0 || !inv.fits_slong_p() || inv.get_si() % 2 != 0) {
    throw ValidationError("/eps", "1/eps must be an even positive integer");
  }
  inv_eps_ = inv.get_si();
  base_ = Scalar(1) + eps_ * eps_;

  unsigned long k2 = static_cast<unsigned long>(inv_eps_) * static_cast<unsigned long>(inv_eps_);
  gamma_ = ceil_mult_log(k2, k2);
  delta_ = ceil_mult_log(k2 * static_cast<unsigned long>(inv_eps_), k2);
}

Scalar EpsParams::rounding_scale() const {
  return pow_int(base_, -inv_eps_);
}

Scalar EpsParams::output_scale() const {
  Scalar big_base = Scalar(1) + Scalar(4) * eps2();
  return pow_int(big_base, -(inv_eps_ / 2));
}

Scalar nisan_scale(const Scalar& eps_pt) {
  if (!eps_pt.is_rational() || eps_pt.sign() <= 0) {
    throw ValidationError("/eps_pt", "the pointwise accuracy must be a positive rational");
  }
  const mpq_class& q = eps_pt.rat();
  mpz_class num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), q.get_den().get_mpz_t());
  if (num_root * num_root != q.get_num() || den_root * den_root != q.get_den()) {
    throw ValidationError("/eps_pt", "sqrt(eps_pt) must be rational");
  }
  mpq_class inv_root(den_root, num_root);
  inv_root.canonicalize();
  if (inv_root.get_den() != 1 || !inv_root.get_num().fits_slong_p()) {
    throw ValidationError("/eps_pt", "1/sqrt(eps_pt) must be a positive integer");
  }
  return pow_int(Scalar(1) + eps_pt, -inv_root.get_num().get_si());
}

ItemPricing round_to_powers(const ItemPricing& pricing, const EpsParams& params) {
  NumericMode mode = pricing_mode(pricing);
  Scalar base = in_mode(params.base(), mode);
  ItemPricing out;
  out.prices.reserve(pricing.prices.size());
  for (std::size_t i = 0; i < pricing.prices.size(); ++i) {
    const Scalar& p = pricing.prices[i];
    if (p.is_infinite()) {
      throw ValidationError("/prices/" + std::to_string(i), "prices must be finite here");
    }
    if (p.sign() <= 0) {
      out.prices.push_back(zero_in(mode));
      continue;
    }
    long r = floor_log(p, base);
    out.prices.push_back(pow_int(base, r - params.inv_eps()));
  }
  return out;
}

PriceGrid range_price_grid(const EpsParams& params, const Scalar& range) {
  NumericMode mode = range.is_real() ? NumericMode::floating : NumericMode::exact;
  Scalar base = in_mode(params.base(), mode);
  Scalar eps2 = in_mode(params.eps2(), mode);
  Scalar survive = in_mode(Scalar(1) - params.eps(), mode);
  PriceGrid grid;
  if (compare(range, eps2) <= 0) return grid;
  long lo = floor_log(eps2, base) + 1;  // smallest power strictly above eps^2
  long hi = floor_log(range, base);
  for (long r = lo; r <= hi; ++r) grid.prices.push_back(survive * pow_int(base, r));
  return grid;
}

RestrictedPricing restrict_price_set(const ItemPricing& pricing, const EpsParams& params,
                                     const Scalar& range) {
  NumericMode mode = pricing_mode(pricing);
  Scalar eps2 = in_mode(params.eps2(), mode);
  Scalar survive = in_mode(Scalar(1) - params.eps(), mode);
  RestrictedPricing out;
  out.grid = range_price_grid(params, range);
  out.pricing.prices.reserve(pricing.prices.size());
  for (const Scalar& p : pricing.prices) {
    if (p.is_infinite()) {
      out.pricing.prices.push_back(p);
      continue;
    }
    if (compare(p, eps2) <= 0) {
      out.pricing.prices.push_back(zero_in(mode));
    } else {
      out.pricing.prices.push_back(survive * p);
    }
  }
  return out;
}

namespace {

/// Exponent r of a restricted price (1-eps)*base^r; zeros report no class.
struct PriceExponent {
  bool zero = true;
  long r = 0;
};

PriceExponent restricted_exponent(const Scalar& price, const EpsParams& params,
                                  NumericMode mode, const std::string& path) {
  PriceExponent out;
  if (price.sign() <= 0) return out;
  Scalar survive = in_mode(Scalar(1) - params.eps(), mode);
  Scalar base = in_mode(params.base(), mode);
  Scalar power = price / survive;
  long r = floor_log(power, base);
  if (compare(pow_int(base, r), power) != 0) {
    throw ValidationError(path, "price is not (1-eps) times a power of 1+eps^2");
  }
  out.zero = false;
  out.r = r;
  return out;
}

long class_of_exponent(long r, const EpsParams& params) {
  long period = params.delta();
  long residue = ((r % period) + period) % period;
  return std::min(residue / params.gamma(), params.class_count() - 1);
}

}  // namespace

SparseClass select_sparse_class(const PricingInstance& instance, const ItemPricing& pricing,
                                const EpsParams& params) {
  if (pricing.prices.size() != instance.n) {
    throw ValidationError("/prices", "pricing length does not match the instance");
  }
  std::vector<PriceExponent> exponents;
  exponents.reserve(instance.n);
  for (std::size_t i = 0; i < instance.n; ++i) {
    exponents.push_back(restricted_exponent(pricing.prices[i], params, instance.mode,
                                            "/prices/" + std::to_string(i)));
  }

  std::vector<Scalar> contributions(params.class_count(), zero_in(instance.mode));
  for (const BuyerType& type : instance.types) {
    BestResponse r = best_response_item_pricing(type, pricing);
    if (!r.option.has_value()) continue;
    const PriceExponent& e = exponents[*r.option];
    if (e.zero) continue;
    contributions[class_of_exponent(e.r, params)] += type.probability * r.payment;
  }

  SparseClass out;
  out.contributions = contributions;
  out.cls = 0;
  for (long c = 1; c < params.class_count(); ++c) {
    if (compare(contributions[c], contributions[out.cls]) < 0) out.cls = c;
  }
  for (std::size_t i = 0; i < instance.n; ++i) {
    if (!exponents[i].zero && class_of_exponent(exponents[i].r, params) == out.cls) {
      out.members.prices.push_back(pricing.prices[i]);
    }
  }
  std::sort(out.members.prices.begin(), out.members.prices.end(), scalar_sort_less);
  out.members.prices.erase(
      std::unique(out.members.prices.begin(), out.members.prices.end(),
                  [](const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }),
      out.members.prices.end());
  return out;
}

IntervalPrefixPricing build_interval_prefix(const ItemPricing& pricing, long cls,
                                            const EpsParams& params) {
  NumericMode mode = pricing_mode(pricing);
  std::size_t n = pricing.prices.size();
  Scalar base = in_mode(params.base(), mode);
  Scalar survive = in_mode(Scalar(1) - params.eps(), mode);

  std::vector<PriceExponent> exponents;
  exponents.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    exponents.push_back(restricted_exponent(pricing.prices[i], params, mode,
                                            "/prices/" + std::to_string(i)));
  }

  // Raise class members: first to a later non-member price, else to the next
  // non-member power at or above their own.
  std::vector<PriceExponent> raised = exponents;
  for (std::size_t i = 0; i < n; ++i) {
    if (raised[i].zero || class_of_exponent(raised[i].r, params) != cls) continue;
    bool found = false;
    for (std::size_t j = i + 1; j < n && !found; ++j) {
      if (!exponents[j].zero && class_of_exponent(exponents[j].r, params) != cls) {
        raised[i].r = exponents[j].r;
        found = true;
      }
    }
    if (!found) {
      long r = raised[i].r + 1;
      while (class_of_exponent(r, params) == cls) ++r;
      raised[i].r = r;
    }
  }

  // Intervals group exponents between consecutive class-`cls` bands; zero
  // prices form their own leading interval.
  std::vector<long> interval_index(n, 0);
  long gamma = params.gamma();
  long period = params.delta();
  bool saw_zero = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (raised[i].zero) {
      saw_zero = true;
      continue;
    }
    long idx = floordiv(raised[i].r - (cls + 1) * gamma, period);
    interval_index[i] = saw_zero ? idx + 1 : idx;  // shift past the zero block
    if (i > 0 && !raised[i - 1].zero && interval_index[i] < interval_index[i - 1]) {
      throw ValidationError("/prices/" + std::to_string(i),
                            "pricing must be non-decreasing");
    }
  }

  std::vector<std::size_t> boundaries{0};
  for (std::size_t i = 1; i < n; ++i) {
    bool prev_zero = raised[i - 1].zero, cur_zero = raised[i].zero;
    if (prev_zero != cur_zero ||
        (!cur_zero && interval_index[i] != interval_index[i - 1])) {
      boundaries.push_back(i);
    }
  }
  boundaries.push_back(n);

  Scalar out_scale = in_mode(params.output_scale(), mode);
  std::vector<Scalar> option_prices;
  option_prices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    option_prices.push_back(raised[i].zero ? zero_in(mode)
                                           : out_scale * survive * pow_int(base, raised[i].r));
  }
  return IntervalPrefixPricing(std::move(boundaries), std::move(option_prices), params.gap());
}

namespace {

struct IntervalChoice {
  std::size_t start = 0;       // first item of the last interval
  std::size_t prev_top = 0;    // grid index of the previous interval's top
  std::size_t bottom = 0;      // grid index of q[start]
  std::vector<std::size_t> interior;
};

class IntervalDp {
 public:
  IntervalDp(const PricingInstance& instance, const PriceGrid& grid, const GapParams& gap,
             unsigned long long budget)
      : instance_(instance), grid_(grid), budget_(budget) {
    if (instance.kind != ValuationKind::additive) {
      throw ValidationError("/kind", "expected an additive instance");
    }
    if (grid.prices.empty()) throw ValidationError("/grid", "price grid must not be empty");
    for (const Scalar& p : grid.prices) {
      if (p.sign() <= 0 || p.is_infinite()) {
        throw ValidationError("/grid", "grid prices must be positive and finite");
      }
    }
    Scalar base = in_mode(gap.base, instance.mode);
    cross_ = pow_int(base, gap.gamma);
    within_ = pow_int(base, gap.delta);
    gap_ = gap;

    prefix_.resize(instance.types.size());
    for (std::size_t t = 0; t < instance.types.size(); ++t) {
      prefix_[t].push_back(zero_in(instance.mode));
      for (const Scalar& v : instance.types[t].values) {
        prefix_[t].push_back(prefix_[t].back() + v);
      }
    }
    run();
  }

  IntervalDpResult take(const GapParams& gap) && {
    std::size_t top = best_top_;
    std::vector<std::size_t> rev_bounds{instance_.n};
    std::vector<Scalar> prices(instance_.n, zero_in(instance_.mode));
    std::size_t end = instance_.n;
    std::size_t z = top;
    while (end > 0) {
      const IntervalChoice& choice = *state_[end][z].choice;
      prices[choice.start] = grid_.prices[choice.bottom];
      for (std::size_t k = 0; k < choice.interior.size(); ++k) {
        prices[choice.start + 1 + k] = grid_.prices[choice.interior[k]];
      }
      prices[end - 1] = grid_.prices[z];
      rev_bounds.push_back(choice.start);
      end = choice.start;
      z = choice.prev_top;
    }
    std::vector<std::size_t> boundaries(rev_bounds.rbegin(), rev_bounds.rend());
    IntervalDpResult result{
        IntervalPrefixPricing(std::move(boundaries), std::move(prices), gap),
        state_[instance_.n][best_top_].value.value(), enumerated_};
    return result;
  }

 private:
  struct Cell {
    std::optional<Scalar> value;
    std::optional<IntervalChoice> choice;
  };

  /// Revenue of one interval [start, end) under a fixed assignment in
  /// assign_[start..end): each type buys its favourite nonnegative-utility
  /// prefix, ties to the dearest then latest option.
  Scalar interval_revenue(std::size_t start, std::size_t end) {
    Scalar revenue = zero_in(instance_.mode);
    for (std::size_t t = 0; t < instance_.types.size(); ++t) {
      Scalar best_utility = zero_in(instance_.mode);
      Scalar best_payment = zero_in(instance_.mode);
      for (std::size_t i = start; i < end; ++i) {
        const Scalar& price = grid_.prices[assign_[i]];
        Scalar utility = prefix_[t][i + 1] - prefix_[t][start] - price;
        int du = compare(utility, best_utility);
        if (du < 0 || (du == 0 && compare(price, best_payment) < 0)) continue;
        best_utility = std::move(utility);
        best_payment = price;
      }
      revenue += instance_.types[t].probability * best_payment;
    }
    return revenue;
  }

  /// Enumerates monotone interior assignments of (start, end) with the
  /// bottom and top pinned, offering each completed interval to `accept`.
  template <typename Accept>
  void enumerate_interior(std::size_t start, std::size_t end, std::size_t item,
                          std::size_t min_index, std::size_t top, Accept&& accept) {
    if (item + 1 >= end) {
      if (++enumerated_ > budget_) {
        throw BudgetExceeded("interval enumeration exceeded " + std::to_string(budget_) +
                             " assignments");
      }
      accept();
      return;
    }
    for (std::size_t g = min_index; g <= top; ++g) {
      assign_[item] = g;
      enumerate_interior(start, end, item + 1, g, top, accept);
    }
  }

  /// Tries every interval {start+1,…,end} whose first price is grid[bottom],
  /// chaining onto a completed prefix worth `base_value` whose last interval
  /// topped out at grid index `w` (`w == |grid|` marks the empty prefix).
  void extend(std::size_t end, std::size_t start, std::size_t w, const Scalar& base_value,
              std::size_t bottom) {
    std::size_t width = grid_.prices.size();
    for (std::size_t top = bottom; top < width; ++top) {
      if (compare(grid_.prices[top], within_ * grid_.prices[bottom]) > 0) break;
      if (end - start == 1 && top != bottom) break;
      assign_[start] = bottom;
      assign_[end - 1] = top;
      enumerate_interior(start, end, start + 1, bottom, top, [&] {
        Scalar total = base_value + interval_revenue(start, end);
        Cell& cell = state_[end][top];
        if (cell.value.has_value() && compare(total, *cell.value) <= 0) return;
        cell.value = total;
        IntervalChoice choice;
        choice.start = start;
        choice.prev_top = w == width ? 0 : w;
        choice.bottom = bottom;
        choice.interior.assign(assign_.begin() + start + 1,
                               assign_.begin() + (end - 1 > start ? end - 1 : start + 1));
        cell.choice = std::move(choice);
      });
    }
  }

  void run() {
    std::size_t n = instance_.n;
    std::size_t width = grid_.prices.size();
    state_.assign(n + 1, std::vector<Cell>(width));

    // Candidates for each cell are generated in lexicographic order of
    // (previous boundary, previous top price, interval bottom price); the
    // strictly-better install below therefore resolves value ties toward the
    // smallest such triple, and toward the lexicographically smallest interior
    // assignment within a triple.
    for (std::size_t end = 1; end <= n; ++end) {
      for (std::size_t start = 0; start < end; ++start) {
        if (start == 0) {
          for (std::size_t bottom = 0; bottom < width; ++bottom) {
            extend(end, start, width, zero_in(instance_.mode), bottom);
          }
          continue;
        }
        for (std::size_t w = 0; w < width; ++w) {
          if (!state_[start][w].value.has_value()) continue;
          for (std::size_t bottom = 0; bottom < width; ++bottom) {
            // The new interval must open a factor base^gamma above the
            // previous interval's top price.
            if (compare(grid_.prices[bottom], cross_ * grid_.prices[w]) < 0) continue;
            extend(end, start, w, *state_[start][w].value, bottom);
          }
        }
      }
    }

    bool have = false;
    for (std::size_t z = 0; z < width; ++z) {
      if (!state_[n][z].value.has_value()) continue;
      if (!have || compare(*state_[n][z].value, *state_[n][best_top_].value) > 0) {
        have = true;
        best_top_ = z;
      }
    }
    if (!have) throw ValidationError("/grid", "no feasible interval pricing exists");
  }

  const PricingInstance& instance_;
  const PriceGrid& grid_;
  unsigned long long budget_;
  unsigned long long enumerated_ = 0;
  Scalar cross_, within_;
  GapParams gap_;
  std::vector<std::vector<Scalar>> prefix_;
  std::vector<std::vector<Cell>> state_;
  std::vector<std::size_t> assign_ = std::vector<std::size_t>(1024, 0);
  std::size_t best_top_ = 0;

 public:
  std::size_t item_count() const { return instance_.n; }
};

}  // namespace

IntervalDpResult interval_dp(const PricingInstance& additive, const PriceGrid& grid,
                             const GapParams& gap, unsigned long long budget) {
  if (additive.n > 1000) throw ValidationError("/n", "instance too large for the interval DP");
  IntervalDp dp(additive, grid, gap, budget);
  return std::move(dp).take(gap);
}

ItemPricing ipp_to_item_pricing(const IntervalPrefixPricing& ipp, const EpsParams& params) {
  NumericMode mode = NumericMode::exact;
  for (const Scalar& q : ipp.option_prices()) {
    if (q.is_real()) mode = NumericMode::floating;
  }
  Scalar scale = in_mode(params.output_scale(), mode);
  ItemPricing out;
  out.prices.reserve(ipp.item_count());
  for (const Scalar& q : ipp.option_prices()) out.prices.push_back(q * scale);
  return out;
}

PtasResult ptas_solve(const PricingInstance& instance, const Scalar& eps,
                      const PtasOptions& options) {
  require_valid(instance);
  if (instance.kind != ValuationKind::unit_demand_ordered) {
    throw ValidationError("/kind", "expected a unit_demand_ordered instance");
  }
  EpsParams params(eps);
  GapParams gap = params.gap();
  if (options.gamma_override.has_value()) gap.gamma = *options.gamma_override;
  if (options.delta_override.has_value()) gap.delta = *options.delta_override;

  std::vector<Scalar> observed;
  for (const BuyerType& type : instance.types) {
    for (const Scalar& v : type.values) {
      if (v.sign() > 0) observed.push_back(v);
    }
  }
  std::sort(observed.begin(), observed.end(), scalar_sort_less);
  observed.erase(std::unique(observed.begin(), observed.end(),
                             [](const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }),
                 observed.end());

  PriceGrid source = options.grid_source == GridSource::support_size
                         ? support_size_grid(observed, eps)
                         : range_price_grid(params, instance.value_range());
  Scalar out_scale = in_mode(params.output_scale(), instance.mode);
  PriceGrid dp_grid;
  for (const Scalar& p : source.prices) dp_grid.prices.push_back(out_scale * p);

  PricingInstance proxies = additive_proxy_instance(instance);
  IntervalDpResult dp = interval_dp(proxies, dp_grid, gap, options.budget);
  ItemPricing pipeline = ipp_to_item_pricing(dp.pricing, params);
  Scalar pipeline_revenue = revenue_item_pricing(instance, pipeline);

  Scalar uniform_best_price = zero_in(instance.mode);
  Scalar uniform_best_revenue = zero_in(instance.mode);
  for (const Scalar& w : observed) {
    Scalar revenue = revenue_item_pricing(instance, uniform_pricing(instance.n, w));
    if (compare(revenue, uniform_best_revenue) > 0) {
      uniform_best_revenue = revenue;
      uniform_best_price = w;
    }
  }

  PtasResult result;
  result.diagnostics.grid_size = dp_grid.prices.size();
  result.diagnostics.dp_revenue_on_proxy = dp.revenue;
  result.diagnostics.pipeline_revenue = pipeline_revenue;
  result.diagnostics.uniform_price = uniform_best_price;
  result.diagnostics.uniform_revenue = uniform_best_revenue;
  result.diagnostics.enumerated = dp.enumerated;
  result.interval_pricing = dp.pricing;
  if (compare(pipeline_revenue, uniform_best_revenue) >= 0) {
    result.diagnostics.pipeline_chosen = true;
    result.pricing = std::move(pipeline);
    result.revenue = pipeline_revenue;
  } else {
    result.diagnostics.pipeline_chosen = false;
    result.pricing = uniform_pricing(instance.n, uniform_best_price);
    result.revenue = uniform_best_revenue;
  }
  return result;
}

}  // namespace ordered_pricing
