#include "ordered_pricing/types.hpp"

#include <sstream>

namespace ordered_pricing {

namespace {

bool mode_matches(const Scalar& s, NumericMode mode) {
  if (s.is_infinite()) return true;
  return mode == NumericMode::exact ? s.is_rational() : s.is_real();
}

std::string type_path(std::size_t t) {
  return "/types/" + std::to_string(t);
}

}  // namespace

Scalar PricingInstance::value_range() const {
  Scalar best = zero_in(mode);
  for (const BuyerType& type : types) {
    for (const Scalar& v : type.values) {
      if (v.is_finite() && compare(v, best) > 0) best = v;
    }
  }
  return best;
}

std::vector<Violation> validate_instance(const PricingInstance& instance) {
  std::vector<Violation> out;
  if (instance.n == 0) {
    out.push_back({"/n", "item count must be positive"});
    return out;
  }
  if (instance.types.empty()) {
    out.push_back({"/types", "at least one buyer type is required"});
    return out;
  }

  bool scalars_coherent = true;
  for (std::size_t t = 0; t < instance.types.size(); ++t) {
    const BuyerType& type = instance.types[t];
    if (!mode_matches(type.probability, instance.mode) || type.probability.is_infinite()) {
      out.push_back({type_path(t) + "/prob", "probability does not match the instance mode"});
      scalars_coherent = false;
    }
    for (std::size_t i = 0; i < type.values.size(); ++i) {
      const Scalar& v = type.values[i];
      if (v.is_infinite() || !mode_matches(v, instance.mode)) {
        out.push_back({type_path(t) + "/values/" + std::to_string(i),
                       "values must be finite scalars in the instance mode"});
        scalars_coherent = false;
      }
    }
  }
  if (!scalars_coherent) return out;

  Scalar prob_sum = zero_in(instance.mode);
  for (std::size_t t = 0; t < instance.types.size(); ++t) {
    const BuyerType& type = instance.types[t];
    if (type.values.size() != instance.n) {
      out.push_back({type_path(t) + "/values",
                     "expected " + std::to_string(instance.n) + " values, got " +
                         std::to_string(type.values.size())});
      continue;
    }
    if (type.probability.sign() < 0) {
      out.push_back({type_path(t) + "/prob", "probability must be nonnegative"});
    }
    prob_sum += type.probability;
    for (std::size_t i = 0; i < instance.n; ++i) {
      if (type.values[i].sign() < 0) {
        out.push_back({type_path(t) + "/values/" + std::to_string(i),
                       "values must be nonnegative"});
      }
      if (instance.kind == ValuationKind::unit_demand_ordered && i + 1 < instance.n &&
          compare(type.values[i], type.values[i + 1]) > 0) {
        out.push_back({type_path(t) + "/values/" + std::to_string(i + 1),
                       "ordered types must have non-decreasing values"});
      }
    }
  }
  if (compare(prob_sum, constant_in(instance.mode, 1)) != 0) {
    out.push_back({"/types", "type probabilities must sum to 1 (got " +
                                 prob_sum.to_exact_string() + ")"});
  }

  if (instance.kind == ValuationKind::unit_demand_ordered && out.empty()) {
    Scalar range = instance.value_range();
    Scalar one = constant_in(instance.mode, 1);
    for (std::size_t t = 0; t < instance.types.size(); ++t) {
      const BuyerType& type = instance.types[t];
      if (compare(type.values.back(), one) < 0) {
        out.push_back({type_path(t) + "/values",
                       "an ordered type's top value must be at least 1"});
      }
      for (std::size_t i = 0; i < instance.n; ++i) {
        const Scalar& v = type.values[i];
        if (!v.is_zero() && (compare(v, one) < 0 || compare(v, range) > 0)) {
          out.push_back({type_path(t) + "/values/" + std::to_string(i),
                         "nonzero values must lie in [1, R]"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate_menu(const LotteryMenu& menu, std::size_t n) {
  std::vector<Violation> out;
  for (std::size_t o = 0; o < menu.options.size(); ++o) {
    const Lottery& lot = menu.options[o];
    std::string path = "/options/" + std::to_string(o);
    if (lot.allocation.size() != n) {
      out.push_back({path + "/alloc", "expected " + std::to_string(n) + " entries"});
      continue;
    }
    if (lot.price.is_finite() && lot.price.sign() < 0) {
      out.push_back({path + "/price", "price must be nonnegative"});
    }
    Scalar sum;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& x = lot.allocation[i];
      if (x.is_infinite() || x.sign() < 0) {
        out.push_back({path + "/alloc/" + std::to_string(i),
                       "allocation entries must be finite and nonnegative"});
        first = true;
        break;
      }
      sum = first ? x : sum + x;
      first = false;
    }
    if (!first && lot.allocation.size() == n) {
      Scalar one = sum.is_real() ? Scalar::real(1.0) : Scalar(1);
      if (compare(sum, one) != 0) {
        out.push_back({path + "/alloc", "allocation must sum to 1 (got " +
                                            sum.to_exact_string() + ")"});
      }
    }
  }
  return out;
}

void require_valid(const PricingInstance& instance) {
  std::vector<Violation> violations = validate_instance(instance);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

void require_valid(const LotteryMenu& menu, std::size_t n) {
  std::vector<Violation> violations = validate_menu(menu, n);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

std::string ValidationError::render(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid input:";
  for (const Violation& v : violations) os << ' ' << v.path << ": " << v.message << ';';
  return os.str();
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(render(violations)), violations_(std::move(violations)) {}

ValidationError::ValidationError(std::string path, std::string message)
    : ValidationError(std::vector<Violation>{{std::move(path), std::move(message)}}) {}

Scalar zero_in(NumericMode mode) {
  return mode == NumericMode::exact ? Scalar(0) : Scalar::real(0.0);
}

Scalar constant_in(NumericMode mode, long v) {
  return mode == NumericMode::exact ? Scalar(v) : Scalar::real(static_cast<double>(v));
}

}  // namespace ordered_pricing
