#include "ordered_pricing/json_io.hpp"

#include <cstdint>
#include <cstdio>

namespace ordered_pricing {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& message) {
  throw ValidationError(path, message);
}

const Json& expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  return j;
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

const Json& field(const Json& j, const char* name, const std::string& path) {
  expect_object(j, path);
  auto it = j.find(name);
  if (it == j.end()) bad(path + "/" + name, "missing field");
  return *it;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_infinite()) return Json("inf");
  if (s.is_real()) return Json(s.to_double());
  if (s.is_integer()) {
    const mpq_class& q = s.rat();
    if (q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  }
  return Json(s.to_exact_string());
}

Scalar scalar_from_json(const Json& j, NumericMode mode, const std::string& path) {
  try {
    if (j.is_string()) {
      Scalar s = Scalar::parse_exact(j.get<std::string>());
      if (mode == NumericMode::floating && s.is_rational()) {
        return Scalar::real(s.to_double());
      }
      return s;
    }
    if (j.is_number_integer()) {
      long v = j.get<long>();
      return mode == NumericMode::exact ? Scalar(v) : Scalar::real(static_cast<double>(v));
    }
    if (j.is_number()) {
      double v = j.get<double>();
      return mode == NumericMode::exact ? Scalar::from_double_exact(v) : Scalar::real(v);
    }
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  } catch (const std::domain_error& e) {
    bad(path, e.what());
  }
  bad(path, "expected a number, \"num/den\" or \"inf\"");
}

Json instance_to_json(const PricingInstance& instance) {
  Json types = Json::array();
  for (const BuyerType& type : instance.types) {
    Json values = Json::array();
    for (const Scalar& v : type.values) values.push_back(scalar_to_json(v));
    types.push_back({{"prob", scalar_to_json(type.probability)}, {"values", values}});
  }
  return {{"n", instance.n},
          {"kind", to_string(instance.kind)},
          {"mode", to_string(instance.mode)},
          {"types", types}};
}

PricingInstance instance_from_json(const Json& doc) {
  const Json& j = doc.is_object() && doc.contains("instance") ? doc.at("instance") : doc;
  expect_object(j, "");

  PricingInstance instance;
  const Json& n = field(j, "n", "");
  if (!n.is_number_integer() || n.get<std::int64_t>() <= 0) bad("/n", "expected a positive integer");
  instance.n = n.get<std::size_t>();

  const Json& kind = field(j, "kind", "");
  if (kind == "unit_demand_ordered") {
    instance.kind = ValuationKind::unit_demand_ordered;
  } else if (kind == "additive") {
    instance.kind = ValuationKind::additive;
  } else {
    bad("/kind", "expected \"unit_demand_ordered\" or \"additive\"");
  }

  const Json& mode = field(j, "mode", "");
  if (mode == "exact") {
    instance.mode = NumericMode::exact;
  } else if (mode == "float") {
    instance.mode = NumericMode::floating;
  } else {
    bad("/mode", "expected \"exact\" or \"float\"");
  }

  const Json& types = expect_array(field(j, "types", ""), "/types");
  for (std::size_t t = 0; t < types.size(); ++t) {
    std::string path = "/types/" + std::to_string(t);
    BuyerType type;
    type.probability = scalar_from_json(field(types[t], "prob", path), instance.mode, path + "/prob");
    if (type.probability.is_infinite()) bad(path + "/prob", "probability must be finite");
    const Json& values = expect_array(field(types[t], "values", path), path + "/values");
    for (std::size_t i = 0; i < values.size(); ++i) {
      Scalar v = scalar_from_json(values[i], instance.mode, path + "/values/" + std::to_string(i));
      if (v.is_infinite()) bad(path + "/values/" + std::to_string(i), "values must be finite");
      type.values.push_back(std::move(v));
    }
    instance.types.push_back(std::move(type));
  }
  return instance;
}

Json pricing_to_json(const ItemPricing& pricing) {
  Json prices = Json::array();
  for (const Scalar& p : pricing.prices) prices.push_back(scalar_to_json(p));
  return {{"prices", prices}};
}

ItemPricing pricing_from_json(const Json& doc, NumericMode mode) {
  const Json* j = &doc;
  if (doc.is_object() && doc.contains("pricing")) j = &doc.at("pricing");
  if (j->is_object()) j = &field(*j, "prices", "");
  expect_array(*j, "/prices");
  ItemPricing pricing;
  for (std::size_t i = 0; i < j->size(); ++i) {
    pricing.prices.push_back(scalar_from_json((*j)[i], mode, "/prices/" + std::to_string(i)));
  }
  return pricing;
}

Json menu_to_json(const LotteryMenu& menu) {
  Json options = Json::array();
  for (const Lottery& lot : menu.options) {
    Json alloc = Json::array();
    for (const Scalar& x : lot.allocation) alloc.push_back(scalar_to_json(x));
    options.push_back({{"alloc", alloc}, {"price", scalar_to_json(lot.price)}});
  }
  return {{"options", options}};
}

LotteryMenu menu_from_json(const Json& doc, NumericMode mode) {
  const Json& root = doc.is_object() && doc.contains("menu") ? doc.at("menu") : doc;
  const Json& options = expect_array(field(root, "options", ""), "/options");
  LotteryMenu menu;
  for (std::size_t o = 0; o < options.size(); ++o) {
    std::string path = "/options/" + std::to_string(o);
    Lottery lot;
    const Json& alloc = expect_array(field(options[o], "alloc", path), path + "/alloc");
    for (std::size_t i = 0; i < alloc.size(); ++i) {
      lot.allocation.push_back(scalar_from_json(alloc[i], mode, path + "/alloc/" + std::to_string(i)));
    }
    lot.price = scalar_from_json(field(options[o], "price", path), mode, path + "/price");
    menu.options.push_back(std::move(lot));
  }
  return menu;
}

Json interval_pricing_to_json(const IntervalPrefixPricing& ipp) {
  Json boundaries = Json::array();
  for (std::size_t b : ipp.boundaries()) boundaries.push_back(b);
  Json prices = Json::array();
  for (const Scalar& q : ipp.option_prices()) prices.push_back(scalar_to_json(q));
  return {{"boundaries", boundaries},
          {"option_prices", prices},
          {"gap",
           {{"gamma", ipp.gap().gamma},
            {"delta", ipp.gap().delta},
            {"base", scalar_to_json(ipp.gap().base)}}}};
}

std::string json_digest(const Json& j) {
  std::string dump = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_string(ValuationKind kind) {
  return kind == ValuationKind::unit_demand_ordered ? "unit_demand_ordered" : "additive";
}

std::string to_string(NumericMode mode) {
  return mode == NumericMode::exact ? "exact" : "float";
}

}  // namespace ordered_pricing
