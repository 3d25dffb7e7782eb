#include "cli_app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ordered_pricing/buymany.hpp"
#include "ordered_pricing/fedex.hpp"
#include "ordered_pricing/hardness.hpp"
#include "ordered_pricing/json_io.hpp"
#include "ordered_pricing/model.hpp"
#include "ordered_pricing/oracle.hpp"
#include "ordered_pricing/ptas.hpp"

namespace ordered_pricing::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw ValidationError("/" + path, "cannot open file");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ValidationError("/" + what, "malformed JSON");
  return doc;
}

Json read_json_source(const std::string& path, std::istream& in, const std::string& what) {
  return parse_json(slurp(path, in), what);
}

/// Inline pricing syntax "(p1,p2,...)" with exact scalar entries, or a JSON
/// file path.
ItemPricing load_pricing(const std::string& arg, NumericMode mode, std::istream& in) {
  if (!arg.empty() && arg.front() == '(') {
    if (arg.back() != ')') throw ValidationError("/pricing", "expected closing parenthesis");
    ItemPricing pricing;
    std::string body = arg.substr(1, arg.size() - 2);
    std::istringstream stream(body);
    std::string token;
    while (std::getline(stream, token, ',')) {
      token.erase(0, token.find_first_not_of(" \t"));
      token.erase(token.find_last_not_of(" \t") + 1);
      Scalar value = Scalar::parse_exact(token);
      if (mode == NumericMode::floating && value.is_rational()) {
        value = Scalar::real(value.to_double());
      }
      pricing.prices.push_back(std::move(value));
    }
    if (pricing.prices.empty()) throw ValidationError("/pricing", "no prices given");
    return pricing;
  }
  return pricing_from_json(read_json_source(arg, in, "pricing"), mode);
}

Scalar parse_scalar_arg(const std::string& text, const char* what) {
  try {
    return Scalar::parse_exact(text);
  } catch (const std::exception&) {
    throw ValidationError(std::string("/") + what, "expected an exact scalar like 1/2");
  }
}

Json revenue_json(const Scalar& revenue) {
  return Json{{"exact", revenue.to_exact_string()}, {"decimal", revenue.to_decimal_string(12)}};
}

Json scalar_report(const Scalar& s) {
  if (s.is_real()) return scalar_to_json(s);
  return Json{{"exact", s.to_exact_string()}, {"decimal", s.to_decimal_string(12)}};
}

Json grid_json(const PriceGrid& grid) {
  Json out = Json::array();
  for (const Scalar& p : grid.prices) out.push_back(scalar_to_json(p));
  return out;
}

void emit(std::ostream& out, const Json& report, bool pretty) {
  out << (pretty ? report.dump(2) : report.dump()) << "\n";
}

long resolve_threads(long flag_value) {
  if (const char* env = std::getenv("ORDERED_PRICING_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed > 0) return parsed;
  }
  return flag_value > 0 ? flag_value : 1;
}

std::vector<Scalar> observed_values(const PricingInstance& instance) {
  std::vector<Scalar> values;
  for (const BuyerType& type : instance.types) {
    for (const Scalar& v : type.values) {
      if (v.sign() > 0 && !v.is_infinite()) values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end(), scalar_sort_less);
  values.erase(std::unique(values.begin(), values.end(),
                           [](const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }),
               values.end());
  return values;
}

struct CommonOptions {
  bool pretty = false;
  long threads = 1;
};

int cmd_evaluate(const std::string& instance_arg, const std::string& pricing_arg,
                 const std::string& menu_arg, const CommonOptions& common, std::istream& in,
                 std::ostream& out) {
  Json doc = read_json_source(instance_arg, in, "instance");
  PricingInstance instance = instance_from_json(doc);
  require_valid(instance);

  Json report;
  report["command"] = "evaluate";
  report["digest"] = json_digest(instance_to_json(instance));
  report["warnings"] = Json::array();

  Scalar revenue;
  if (!pricing_arg.empty()) {
    ItemPricing pricing = load_pricing(pricing_arg, instance.mode, in);
    revenue = revenue_item_pricing(instance, pricing);
    report["witness"] = Json{{"pricing", pricing_to_json(pricing)}};
  } else if (!menu_arg.empty()) {
    LotteryMenu menu = menu_from_json(read_json_source(menu_arg, in, "menu"), instance.mode);
    require_valid(menu, instance.n);
    revenue = revenue_menu(instance, menu);
    report["witness"] = Json{{"menu", menu_to_json(menu)}};
  } else if (doc.is_object() && doc.contains("menu")) {
    LotteryMenu menu = menu_from_json(doc, instance.mode);
    require_valid(menu, instance.n);
    revenue = revenue_menu(instance, menu);
    report["witness"] = Json{{"menu", menu_to_json(menu)}};
  } else if (doc.is_object() && doc.contains("pricing")) {
    ItemPricing pricing = pricing_from_json(doc, instance.mode);
    revenue = revenue_item_pricing(instance, pricing);
    report["witness"] = Json{{"pricing", pricing_to_json(pricing)}};
  } else {
    throw ValidationError("/", "nothing to evaluate: pass --pricing or --menu");
  }

  report["revenue"] = revenue_json(revenue);
  report["diagnostics"] = Json{{"n", instance.n},
                               {"types", instance.types.size()},
                               {"kind", to_string(instance.kind)},
                               {"mode", to_string(instance.mode)},
                               {"threads", resolve_threads(common.threads)}};
  emit(out, report, common.pretty);
  return 0;
}

int cmd_solve_brute(const std::string& instance_arg, const std::string& grid_arg,
                    const std::string& eps_arg, unsigned long long budget,
                    const CommonOptions& common, std::istream& in, std::ostream& out) {
  PricingInstance instance = instance_from_json(read_json_source(instance_arg, in, "instance"));
  require_valid(instance);

  PriceGrid grid;
  if (grid_arg.empty() || grid_arg == "auto") {
    // The automatic grid certifies against both the multiplicative support
    // grid and every observed value itself (plus a free-item price of 0), so
    // exact optima whose prices sit on buyer values are reachable.
    std::vector<Scalar> observed = observed_values(instance);
    grid = support_size_grid(observed, parse_scalar_arg(eps_arg, "eps"));
    grid.prices.push_back(zero_in(instance.mode));
    grid.prices.insert(grid.prices.end(), observed.begin(), observed.end());
    std::sort(grid.prices.begin(), grid.prices.end(), scalar_sort_less);
    grid.prices.erase(std::unique(grid.prices.begin(), grid.prices.end(),
                                  [](const Scalar& a, const Scalar& b) {
                                    return compare(a, b) == 0;
                                  }),
                      grid.prices.end());
  } else {
    Json doc = read_json_source(grid_arg, in, "grid");
    if (doc.is_object() && doc.contains("prices")) doc = doc["prices"];
    if (!doc.is_array()) throw ValidationError("/grid", "expected an array of prices");
    for (std::size_t k = 0; k < doc.size(); ++k) {
      grid.prices.push_back(
          scalar_from_json(doc[k], instance.mode, "/grid/" + std::to_string(k)));
    }
    std::sort(grid.prices.begin(), grid.prices.end(), scalar_sort_less);
  }

  BruteForceResult result = brute_force_optimal_pricing(instance, grid, budget);

  Json report;
  report["command"] = "solve brute";
  report["digest"] = json_digest(instance_to_json(instance));
  report["witness"] = Json{{"pricing", pricing_to_json(result.pricing)}};
  report["revenue"] = revenue_json(result.revenue);
  report["diagnostics"] = Json{{"candidates", result.candidates},
                               {"grid_size", grid.prices.size()},
                               {"grid", grid_json(grid)},
                               {"threads", resolve_threads(common.threads)}};
  report["warnings"] = Json::array();
  emit(out, report, common.pretty);
  return 0;
}

int cmd_solve_fedex(const std::string& instance_arg, const CommonOptions& common,
                    std::istream& in, std::ostream& out) {
  PricingInstance instance = instance_from_json(read_json_source(instance_arg, in, "instance"));
  require_valid(instance);
  FedexSolution solution = fedex_dp(instance);

  Json low = Json::array(), star = Json::array();
  for (const Scalar& s : solution.sets.low_set) low.push_back(scalar_to_json(s));
  for (const Scalar& s : solution.sets.star_set) star.push_back(scalar_to_json(s));

  Json report;
  report["command"] = "solve fedex";
  report["digest"] = json_digest(instance_to_json(instance));
  report["witness"] = Json{{"pricing", pricing_to_json(solution.pricing)}};
  report["revenue"] = revenue_json(solution.revenue);
  report["diagnostics"] = Json{{"low_set", low},
                               {"star_set", star},
                               {"threads", resolve_threads(common.threads)}};
  report["warnings"] = Json::array();
  emit(out, report, common.pretty);
  return 0;
}

int cmd_solve_ptas(const std::string& instance_arg, const std::string& eps_arg,
                   std::optional<long> gamma, std::optional<long> delta,
                   const std::string& grid_source, unsigned long long budget,
                   const CommonOptions& common, std::istream& in, std::ostream& out) {
  PricingInstance instance = instance_from_json(read_json_source(instance_arg, in, "instance"));
  require_valid(instance);

  PtasOptions options;
  options.gamma_override = gamma;
  options.delta_override = delta;
  options.budget = budget;
  if (grid_source == "support") {
    options.grid_source = GridSource::support_size;
  } else if (grid_source == "range") {
    options.grid_source = GridSource::price_range;
  } else {
    throw ValidationError("/grid", "expected 'support' or 'range'");
  }

  PtasResult result = ptas_solve(instance, parse_scalar_arg(eps_arg, "eps"), options);

  Json report;
  report["command"] = "solve ptas";
  report["digest"] = json_digest(instance_to_json(instance));
  Json witness{{"pricing", pricing_to_json(result.pricing)}};
  if (result.interval_pricing.has_value()) {
    witness["interval_pricing"] = interval_pricing_to_json(*result.interval_pricing);
  }
  report["witness"] = witness;
  report["revenue"] = revenue_json(result.revenue);
  report["diagnostics"] =
      Json{{"grid_size", result.diagnostics.grid_size},
           {"dp_revenue_on_proxy", scalar_report(result.diagnostics.dp_revenue_on_proxy)},
           {"pipeline_revenue", scalar_report(result.diagnostics.pipeline_revenue)},
           {"uniform_price", scalar_to_json(result.diagnostics.uniform_price)},
           {"uniform_revenue", scalar_report(result.diagnostics.uniform_revenue)},
           {"pipeline_chosen", result.diagnostics.pipeline_chosen},
           {"enumerated", result.diagnostics.enumerated},
           {"budget", budget},
           {"threads", resolve_threads(common.threads)}};
  report["warnings"] = Json::array();
  emit(out, report, common.pretty);
  return 0;
}

DominanceOrder order_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("precedes")) {
    throw ValidationError("/order", "expected {\"n\": int, \"precedes\": [[i,j],...]}");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const Json& edge : doc["precedes"]) {
    if (!edge.is_array() || edge.size() != 2) {
      throw ValidationError("/order/precedes", "expected pairs [i,j]");
    }
    pairs.push_back({edge[0].get<std::size_t>(), edge[1].get<std::size_t>()});
  }
  return DominanceOrder(doc["n"].get<std::size_t>(), pairs);
}

int cmd_derive_pricing(const std::string& menu_arg, const std::string& order_arg,
                       std::size_t items, const CommonOptions& common, std::istream& in,
                       std::ostream& out) {
  LotteryMenu menu = menu_from_json(read_json_source(menu_arg, in, "menu"), NumericMode::exact);

  Json report;
  report["command"] = "derive-pricing";
  report["digest"] = json_digest(menu_to_json(menu));
  report["warnings"] = Json::array();

  ItemPricing derived;
  if (!order_arg.empty()) {
    DominanceOrder order = order_from_json(read_json_source(order_arg, in, "order"));
    require_valid(menu, order.n());
    derived = derive_item_pricing_width_k(menu, order);
    report["diagnostics"] = Json{{"n", order.n()},
                                 {"width", order.width()},
                                 {"threads", resolve_threads(common.threads)}};
  } else {
    std::size_t n = items;
    if (n == 0 && !menu.options.empty()) n = menu.options.front().allocation.size();
    if (n == 0) throw ValidationError("/menu", "empty menu: pass --items to set the size");
    require_valid(menu, n);
    derived = derive_item_pricing(menu, n);
    report["diagnostics"] = Json{{"n", n}, {"threads", resolve_threads(common.threads)}};
  }
  report["witness"] = Json{{"pricing", pricing_to_json(derived)}};
  emit(out, report, common.pretty);
  return 0;
}

int cmd_check_gap(const std::string& instance_arg, const std::string& menu_arg,
                  const std::string& ell_arg, const std::string& beta_arg,
                  std::size_t grid_size, const CommonOptions& common, std::istream& in,
                  std::ostream& out) {
  Json doc = read_json_source(instance_arg, in, "instance");
  PricingInstance instance = instance_from_json(doc);
  require_valid(instance);
  LotteryMenu menu = menu_arg.empty()
                         ? menu_from_json(doc, instance.mode)
                         : menu_from_json(read_json_source(menu_arg, in, "menu"), instance.mode);
  require_valid(menu, instance.n);

  Scalar ell = ell_arg.empty() ? default_scale_floor() : parse_scalar_arg(ell_arg, "ell");
  Scalar beta = beta_arg.empty() ? default_beta() : parse_scalar_arg(beta_arg, "beta");

  Scalar menu_revenue = revenue_menu(instance, menu);
  Scalar adaptive_revenue = adaptive_menu_revenue(instance, menu);
  ItemPricing derived = derive_item_pricing(menu, instance.n);
  Scalar derived_revenue = revenue_item_pricing(instance, derived);

  ScaledSearchResult search =
      scaled_pricing_search(instance, derived, ell, Scalar(1), grid_size);
  Scalar best_pricing_revenue = compare(search.revenue, derived_revenue) > 0
                                    ? search.revenue
                                    : derived_revenue;

  Json checks = Json::array();
  bool all_hold = true;
  for (const BuyerType& type : instance.types) {
    UtilityDifferenceReport r = utility_difference_check(type, menu, derived, ell, beta);
    all_hold = all_hold && r.holds;
    checks.push_back(Json{{"u_scaled", scalar_to_json(r.u_scaled)},
                          {"u_plain", scalar_to_json(r.u_plain)},
                          {"menu_payment", scalar_to_json(r.menu_payment)},
                          {"scaled_menu_payment", scalar_to_json(r.scaled_menu_payment)},
                          {"lhs", scalar_to_json(r.lhs)},
                          {"rhs", scalar_to_json(r.rhs)},
                          {"holds", r.holds}});
  }

  RepeatCheckResult repeat = repeat_strategy_buy_many_check(menu, instance.n);

  Json report;
  report["command"] = "check-gap";
  report["digest"] = json_digest(instance_to_json(instance));
  report["witness"] = Json{{"pricing", pricing_to_json(derived)}, {"menu", menu_to_json(menu)}};
  report["revenue"] = revenue_json(menu_revenue);
  Json diagnostics{{"adaptive_menu_revenue", scalar_report(adaptive_revenue)},
                   {"derived_pricing_revenue", scalar_report(derived_revenue)},
                   {"scaled_alpha", scalar_to_json(search.alpha)},
                   {"scaled_revenue", scalar_report(search.revenue)},
                   {"scaled_expected_estimate", search.expected_estimate},
                   {"grid_size", search.grid_size},
                   {"utility_difference", checks},
                   {"utility_difference_all_hold", all_hold},
                   {"buy_many_repeat_check", repeat.passes},
                   {"threads", resolve_threads(common.threads)}};
  if (best_pricing_revenue.sign() > 0) {
    Scalar ratio = menu_revenue / best_pricing_revenue;
    diagnostics["gap_ratio"] = scalar_report(ratio);
  }
  report["diagnostics"] = diagnostics;
  Json warnings = Json::array();
  if (!repeat.passes) {
    warnings.push_back(
        "menu fails the repeat-strategy buy-many check; inequality guarantees are "
        "scoped to menus passing it");
  }
  report["warnings"] = warnings;
  emit(out, report, common.pretty);
  return 0;
}

Json gadget_report_json(const GadgetReport& report) {
  Json edges = Json::array();
  for (const EdgeGadget& gadget : report.edges) {
    Json matrix = Json::array();
    for (const auto& row : gadget.matrix) {
      Json cells = Json::array();
      for (const Scalar& cell : row) cells.push_back(scalar_to_json(cell));
      matrix.push_back(cells);
    }
    auto vec4 = [](const std::array<Scalar, 4>& v) {
      Json out = Json::array();
      for (const Scalar& s : v) out.push_back(scalar_to_json(s));
      return out;
    };
    edges.push_back(Json{{"i", gadget.i},
                         {"j", gadget.j},
                         {"x", scalar_to_json(gadget.x)},
                         {"y", scalar_to_json(gadget.y)},
                         {"matrix", matrix},
                         {"a", vec4(gadget.a)},
                         {"b", vec4(gadget.b)},
                         {"z", vec4(gadget.z)},
                         {"r_ij", scalar_to_json(gadget.r_ij)}});
  }
  return Json{{"n", report.n},
              {"q1", scalar_to_json(report.q1)},
              {"q2_prime", scalar_to_json(report.q2_prime)},
              {"r1", scalar_to_json(report.r1)},
              {"r2", scalar_to_json(report.r2)},
              {"p3_mass", scalar_to_json(report.p3_mass)},
              {"p4_mass", scalar_to_json(report.p4_mass)},
              {"filler_mass", scalar_to_json(report.filler_mass)},
              {"p4_within_budget", report.p4_within_budget},
              {"rest_within_budget", report.rest_within_budget},
              {"n_large_enough", report.n_large_enough},
              {"edges", edges}};
}

int cmd_gen_hardness(const std::string& graph_arg, std::size_t padding,
                     const CommonOptions& common, std::istream& in, std::ostream& out) {
  std::istringstream text(slurp(graph_arg, in));
  Graph graph = parse_graph(text);
  HardnessInstance hardness =
      reduce_maxcut(graph, padding > 0 ? std::optional<std::size_t>(padding) : std::nullopt);

  Json report;
  report["command"] = "gen hardness";
  report["instance"] = instance_to_json(hardness.instance);
  report["digest"] = json_digest(report["instance"]);
  report["gadget_report"] = gadget_report_json(hardness.report);
  Json warnings = Json::array();
  if (!hardness.report.n_large_enough) {
    warnings.push_back("probability budgets need n > 180; identities still hold exactly");
  }
  report["warnings"] = warnings;
  emit(out, report, common.pretty);
  return 0;
}

int cmd_fixture_gap_example(const CommonOptions& common, std::ostream& out) {
  GapExample fixture = gap_example_fixture();
  Json report;
  report["command"] = "fixture gap-example";
  report["instance"] = instance_to_json(fixture.instance);
  report["digest"] = json_digest(report["instance"]);
  report["menu"] = menu_to_json(fixture.menu);
  report["pricing"] = pricing_to_json(fixture.pricing);
  report["warnings"] = Json::array();
  emit(out, report, common.pretty);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact and near-optimal item pricing for ordered-item unit-demand buyers"};
  app.require_subcommand(1);
  // Let --pretty/--threads be written after the subcommand as well as before.
  app.fallthrough();

  CommonOptions common;
  app.add_flag("--pretty", common.pretty, "indent the JSON report");
  app.add_option("--threads", common.threads,
                 "worker threads (ORDERED_PRICING_THREADS overrides)");

  std::string instance_arg = "-";
  std::string pricing_arg, menu_arg, grid_arg, order_arg;
  std::string eps_arg = "1/2";
  std::string ell_arg, beta_arg, grid_source = "support", graph_arg = "-";
  std::size_t grid_size = 64, items = 0, padding = 0;
  unsigned long long budget = 10000000;
  std::optional<long> gamma_override, delta_override;
  long gamma_flag = -1, delta_flag = -1;

  CLI::App* evaluate = app.add_subcommand("evaluate", "revenue of a pricing or menu");
  evaluate->add_option("--instance", instance_arg, "instance JSON file or - for stdin");
  evaluate->add_option("--pricing", pricing_arg, "pricing JSON file or inline (p1,p2,...)");
  evaluate->add_option("--menu", menu_arg, "menu JSON file");

  CLI::App* solve = app.add_subcommand("solve", "optimal and near-optimal solvers");
  solve->require_subcommand(1);
  CLI::App* brute = solve->add_subcommand("brute", "exhaustive grid search");
  brute->add_option("--instance", instance_arg, "instance JSON file or - for stdin");
  brute->add_option("--grid", grid_arg, "price grid file, or 'auto'");
  brute->add_option("--eps", eps_arg, "accuracy for the auto grid (exact rational)");
  brute->add_option("--budget", budget, "max enumerated candidates");

  CLI::App* fedex = solve->add_subcommand("fedex", "exact solver for two-value types");
  fedex->add_option("--instance", instance_arg, "instance JSON file or - for stdin");

  CLI::App* ptas = solve->add_subcommand("ptas", "approximation pipeline");
  ptas->add_option("--instance", instance_arg, "instance JSON file or - for stdin");
  ptas->add_option("--eps", eps_arg, "accuracy (exact rational, 1/eps even)");
  ptas->add_option("--gamma", gamma_flag, "override the cross-interval exponent");
  ptas->add_option("--delta", delta_flag, "override the within-interval exponent");
  ptas->add_option("--grid", grid_source, "'support' (default) or 'range'");
  ptas->add_option("--budget", budget, "max within-interval assignments");

  CLI::App* derive = app.add_subcommand("derive-pricing", "item pricing derived from a menu");
  derive->add_option("--menu", menu_arg, "menu JSON file or - for stdin")->required();
  derive->add_option("--order", order_arg, "dominance order JSON file (width-k derivation)");
  derive->add_option("--items", items, "item count when the menu is empty");

  CLI::App* gap = app.add_subcommand("check-gap", "menu vs derived-pricing revenue report");
  gap->add_option("--instance", instance_arg, "instance JSON file or - for stdin");
  gap->add_option("--menu", menu_arg, "menu JSON file (default: embedded in the instance doc)");
  gap->add_option("--ell", ell_arg, "scale floor (default 697/20000)");
  gap->add_option("--beta", beta_arg, "menu scale (default 4667/25000)");
  gap->add_option("--grid-size", grid_size, "scaling grid points");

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  CLI::App* hardness = gen->add_subcommand("hardness", "Max-Cut reduction instance");
  hardness->add_option("--graph", graph_arg, "graph file ('n m' then edge lines) or -");
  hardness->add_option("--padding", padding, "pad the item count to this n");

  CLI::App* fixture = app.add_subcommand("fixture", "built-in example documents");
  fixture->require_subcommand(1);
  CLI::App* gap_example = fixture->add_subcommand("gap-example", "menu vs pricing gap fixture");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (gamma_flag >= 0) gamma_override = gamma_flag;
  if (delta_flag >= 0) delta_override = delta_flag;

  try {
    if (evaluate->parsed()) {
      return cmd_evaluate(instance_arg, pricing_arg, menu_arg, common, in, out);
    }
    if (brute->parsed()) {
      return cmd_solve_brute(instance_arg, grid_arg, eps_arg, budget, common, in, out);
    }
    if (fedex->parsed()) return cmd_solve_fedex(instance_arg, common, in, out);
    if (ptas->parsed()) {
      return cmd_solve_ptas(instance_arg, eps_arg, gamma_override, delta_override, grid_source,
                            budget, common, in, out);
    }
    if (derive->parsed()) {
      return cmd_derive_pricing(menu_arg, order_arg, items, common, in, out);
    }
    if (gap->parsed()) {
      return cmd_check_gap(instance_arg, menu_arg, ell_arg, beta_arg, grid_size, common, in,
                           out);
    }
    if (hardness->parsed()) return cmd_gen_hardness(graph_arg, padding, common, in, out);
    if (gap_example->parsed()) return cmd_fixture_gap_example(common, out);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ordered_pricing::cli
