/**
 * @file acceptance.cpp
 * @brief Go/no-go acceptance suite: eight independent criteria covering the
 *        worked example, the FedEx DP, the interval DP, the approximation
 *        pipeline, the buy-many inequalities, menu flattening, the Max-Cut
 *        reduction identities and the width-k derivation.  Prints exactly one
 *        [PASS]/[FAIL] line per criterion (plus informational [info] lines)
 *        and exits nonzero if any criterion fails.
 *
 * All comparisons are exact rational comparisons unless stated otherwise;
 * wall-clock limits are enforced where a criterion carries one.
 */
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ordered_pricing/buymany.hpp"
#include "ordered_pricing/fedex.hpp"
#include "ordered_pricing/hardness.hpp"
#include "ordered_pricing/model.hpp"
#include "ordered_pricing/oracle.hpp"
#include "ordered_pricing/ptas.hpp"

#include "test_util.hpp"

using namespace ordered_pricing;
using test_util::pick;
using test_util::prices_of;
using test_util::Q;
using test_util::type_of;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

bool scalar_eq(const Scalar& a, const Scalar& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return compare(a, b) == 0;
}

bool grid_contains(const std::vector<Scalar>& values, const Scalar& s) {
  for (const Scalar& v : values) {
    if (scalar_eq(v, s)) return true;
  }
  return false;
}

/// Non-decreasing random integer values over n items with top value >= 1.
std::vector<Scalar> random_ordered_values(std::mt19937_64& rng, std::size_t n, long max_value) {
  std::vector<Scalar> values(n);
  long running = 0;
  bool started = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!started && pick(rng, 0, 2) == 0 && i + 1 < n) {
      values[i] = Q(0);
      continue;
    }
    if (!started) {
      running = static_cast<long>(pick(rng, 1, static_cast<std::size_t>(max_value)));
      started = true;
    } else {
      running += static_cast<long>(pick(rng, 0, 3));
    }
    values[i] = Q(running);
  }
  if (!started) values[n - 1] = Q(1);
  return values;
}

/// Positive finite values observed anywhere in the instance, sorted, unique.
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

/// The certification grid used for brute-force references: the multiplicative
/// support grid united with every observed value and a free price of 0.
PriceGrid certification_grid(const PricingInstance& instance, const Scalar& eps) {
  std::vector<Scalar> observed = observed_values(instance);
  PriceGrid grid = support_size_grid(observed, eps);
  grid.prices.push_back(zero_in(instance.mode));
  grid.prices.insert(grid.prices.end(), observed.begin(), observed.end());
  std::sort(grid.prices.begin(), grid.prices.end(), scalar_sort_less);
  grid.prices.erase(std::unique(grid.prices.begin(), grid.prices.end(),
                                [](const Scalar& a, const Scalar& b) {
                                  return compare(a, b) == 0;
                                }),
                    grid.prices.end());
  return grid;
}

/// Runs one criterion, enforcing an optional wall-clock limit, and prints its
/// verdict line.  Returns true when the criterion passed.
bool run_criterion(const std::string& name, long limit_ms,
                   const std::function<void(Criterion&)>& body) {
  Criterion criterion;
  auto start = std::chrono::steady_clock::now();
  try {
    body(criterion);
  } catch (const std::exception& e) {
    criterion.expect(false, std::string("unexpected exception: ") + e.what());
  }
  auto stop = std::chrono::steady_clock::now();
  long elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  if (limit_ms >= 0 && elapsed >= limit_ms) {
    criterion.expect(false, "wall-clock limit of " + std::to_string(limit_ms) +
                                " ms exceeded (" + std::to_string(elapsed) + " ms)");
  }
  if (criterion.ok) {
    std::printf("[PASS] %s (%ld ms)\n", name.c_str(), elapsed);
  } else {
    std::printf("[FAIL] %s: %s (%ld ms)\n", name.c_str(), criterion.detail.c_str(), elapsed);
  }
  std::fflush(stdout);
  return criterion.ok;
}

// --------------------------------------------------------------------------
// C1: the worked two-item example evaluates exactly.
void criterion1(Criterion& c) {
  GapExample fixture = gap_example_fixture();
  c.expect(fixture.pricing.prices.size() == 2 && scalar_eq(fixture.pricing.prices[0], Q(1)) &&
               scalar_eq(fixture.pricing.prices[1], Q(3)),
           "fixture pricing is not (1, 3)");
  Scalar pricing_revenue = revenue_item_pricing(fixture.instance, fixture.pricing);
  c.expect(scalar_eq(pricing_revenue, Q(7, 3)),
           "pricing revenue " + pricing_revenue.to_exact_string() + " != 7/3");
  Scalar menu_revenue = revenue_menu(fixture.instance, fixture.menu);
  c.expect(scalar_eq(menu_revenue, Q(23, 9)),
           "menu revenue " + menu_revenue.to_exact_string() + " != 23/9");
}

// --------------------------------------------------------------------------
// C2: the FedEx DP equals the brute force over its own candidate price sets
// on 200 random two-valued instances, and its witness lives on those sets.
void criterion2(Criterion& c) {
  std::mt19937_64 rng(91002);
  for (int round = 0; round < 200 && c.ok; ++round) {
    PricingInstance instance = test_util::random_two_value_instance(rng, 6, 5, 12);
    FedexSolution solution = fedex_dp(instance);

    PriceGrid grid;
    grid.prices = solution.sets.low_set;
    grid.prices.insert(grid.prices.end(), solution.sets.star_set.begin(),
                       solution.sets.star_set.end());
    std::sort(grid.prices.begin(), grid.prices.end(), scalar_sort_less);
    grid.prices.erase(std::unique(grid.prices.begin(), grid.prices.end(),
                                  [](const Scalar& a, const Scalar& b) {
                                    return compare(a, b) == 0;
                                  }),
                      grid.prices.end());

    BruteForceResult brute = brute_force_optimal_pricing(instance, grid);
    c.expect(scalar_eq(solution.revenue, brute.revenue),
             "round " + std::to_string(round) + ": DP revenue " +
                 solution.revenue.to_exact_string() + " != brute " +
                 brute.revenue.to_exact_string());

    c.expect(solution.pricing.prices.size() == instance.n,
             "round " + std::to_string(round) + ": witness has the wrong length");
    if (!solution.pricing.prices.empty()) {
      c.expect(grid_contains(solution.sets.low_set, solution.pricing.prices.front()),
               "round " + std::to_string(round) + ": first witness price not in the low set");
    }
    for (const Scalar& p : solution.pricing.prices) {
      c.expect(grid_contains(solution.sets.star_set, p),
               "round " + std::to_string(round) + ": witness price " + p.to_exact_string() +
                   " not in the star set");
    }
  }
}

// --------------------------------------------------------------------------
// C3: the interval DP equals exhaustive enumeration over gap-respecting
// interval prefix pricings on 100 random additive instances.
void criterion3(Criterion& c) {
  std::mt19937_64 rng(91003);
  GapParams gap{1, 2, Q(2)};
  for (int round = 0; round < 100 && c.ok; ++round) {
    PricingInstance additive = test_util::random_additive_instance(rng, 6, 3, 6);
    PriceGrid grid = test_util::random_grid(rng, 4, 9);
    std::optional<Scalar> reference = test_util::exhaustive_interval_optimum(additive, grid, gap);
    if (!reference.has_value()) {
      bool threw = false;
      try {
        interval_dp(additive, grid, gap);
      } catch (const ValidationError&) {
        threw = true;
      }
      c.expect(threw, "round " + std::to_string(round) +
                          ": DP found a pricing where the enumeration found none");
      continue;
    }
    IntervalDpResult dp = interval_dp(additive, grid, gap);
    c.expect(scalar_eq(dp.revenue, *reference),
             "round " + std::to_string(round) + ": DP revenue " + dp.revenue.to_exact_string() +
                 " != enumerated optimum " + reference->to_exact_string());
    Scalar witness = revenue_interval_prefix(additive, dp.pricing);
    c.expect(scalar_eq(witness, dp.revenue),
             "round " + std::to_string(round) + ": witness revenue disagrees with the DP value");
  }
}

// --------------------------------------------------------------------------
// C4: approximation pipeline properties.  (a) the scaled-pricing payment
// inequality on pointwise-close pricing pairs; (b) the pipeline never falls
// below the best uniform price; (c) measured ratios against a certified grid
// optimum, reported informationally.
void criterion4(Criterion& c) {
  // (a) payment(alpha q) >= (1 - 3 sqrt(eps')) payment(p) whenever
  //     q <= p <= (1 + eps') q entrywise.
  struct Setting {
    Scalar eps_prime;
    long denom;
    Scalar bound;  // 1 - 3 sqrt(eps'), exact by choice of eps'
  };
  const Setting settings[] = {{Q(1, 4), 20, Q(-1, 2)}, {Q(1, 16), 68, Q(1, 4)}};
  std::mt19937_64 rng(91004);
  for (const Setting& setting : settings) {
    Scalar alpha = nisan_scale(setting.eps_prime);
    Scalar one_plus = Q(1) + setting.eps_prime;
    for (int round = 0; round < 250 && c.ok; ++round) {
      std::size_t n = pick(rng, 1, 6);
      std::vector<Scalar> p(n), q(n);
      long running = static_cast<long>(pick(rng, 1, 8));
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = Q(running);
        long t = static_cast<long>(pick(rng, 0, 4));
        q[i] = Q(running) * Q(setting.denom - t, setting.denom);
        running += static_cast<long>(pick(rng, 0, 6));
      }
      for (std::size_t i = 0; i < n; ++i) {
        c.expect(compare(q[i], p[i]) <= 0 && compare(p[i], one_plus * q[i]) <= 0,
                 "generated pair is not pointwise close");
      }
      ItemPricing scaled = scale_pricing(prices_of(q), alpha);
      ItemPricing original = prices_of(p);
      for (int s = 0; s < 3; ++s) {
        BuyerType type = type_of(random_ordered_values(rng, n, 40), Q(1));
        Scalar lhs = best_response_item_pricing(type, scaled).payment;
        Scalar rhs = best_response_item_pricing(type, original).payment;
        c.expect(compare(lhs, setting.bound * rhs) >= 0,
                 "scaled payment " + lhs.to_exact_string() + " below " +
                     setting.bound.to_exact_string() + " * " + rhs.to_exact_string());
      }
    }
  }

  // (b) pipeline revenue >= the best single uniform price, on the fixture
  //     and on 60 random instances.
  std::mt19937_64 rng_b(91014);
  std::vector<PricingInstance> instances;
  instances.push_back(gap_example_fixture().instance);
  for (int round = 0; round < 60; ++round) {
    instances.push_back(test_util::random_ordered_instance(rng_b, 5, 3, 9));
  }
  for (std::size_t t = 0; t < instances.size() && c.ok; ++t) {
    const PricingInstance& instance = instances[t];
    PtasResult result = ptas_solve(instance, Q(1, 2), PtasOptions{});
    Scalar best_uniform = Q(0);
    for (const Scalar& v : observed_values(instance)) {
      Scalar revenue = revenue_item_pricing(instance, uniform_pricing(instance.n, v));
      if (compare(revenue, best_uniform) > 0) best_uniform = revenue;
    }
    c.expect(compare(result.revenue, best_uniform) >= 0,
             "instance " + std::to_string(t) + ": pipeline revenue " +
                 result.revenue.to_exact_string() + " below best uniform " +
                 best_uniform.to_exact_string());
    c.expect(scalar_eq(result.diagnostics.uniform_revenue, best_uniform),
             "instance " + std::to_string(t) + ": reported uniform revenue disagrees");
    Scalar witness = revenue_item_pricing(instance, result.pricing);
    c.expect(scalar_eq(witness, result.revenue),
             "instance " + std::to_string(t) + ": witness revenue disagrees");
  }

  // (c) measured end-to-end ratios against the certified grid optimum, with
  //     the desk gap overrides; informational, no threshold.
  std::mt19937_64 rng_c(91024);
  PtasOptions desk;
  desk.gamma_override = 1;
  desk.delta_override = 2;
  std::optional<Scalar> min_ratio;
  for (int t = 0; t < 10; ++t) {
    PricingInstance instance = test_util::random_ordered_instance(rng_c, 5, 3, 9);
    PtasResult result = ptas_solve(instance, Q(1, 2), desk);
    BruteForceResult brute =
        brute_force_optimal_pricing(instance, certification_grid(instance, Q(1, 2)));
    if (brute.revenue.sign() <= 0) continue;
    Scalar ratio = result.revenue / brute.revenue;
    if (!min_ratio.has_value() || compare(ratio, *min_ratio) < 0) min_ratio = ratio;
    std::printf("[info] C4c instance %d: n=%zu pipeline=%s grid-optimum=%s ratio=%s\n", t,
                instance.n, result.revenue.to_exact_string().c_str(),
                brute.revenue.to_exact_string().c_str(),
                ratio.to_decimal_string(6).c_str());
  }
  if (min_ratio.has_value()) {
    std::printf("[info] C4c minimum measured ratio: %s\n",
                min_ratio->to_decimal_string(6).c_str());
  }
  std::fflush(stdout);
}

// --------------------------------------------------------------------------
// C5: the utility-difference inequality at the reference scale parameters on
// the fixture types and on 100 random menus passing the repeat-strategy
// check, plus the derived-price support property for every tested lottery.
void criterion5(Criterion& c) {
  const Scalar ell = Q(697, 20000);     // 0.03485
  const Scalar beta = Q(4667, 25000);   // 0.18668
  c.expect(scalar_eq(default_scale_floor(), ell), "default scale floor is not 697/20000");
  c.expect(scalar_eq(default_beta(), beta), "default beta is not 4667/25000");

  auto support_property = [&c](const LotteryMenu& menu, const ItemPricing& derived,
                               const std::string& where) {
    for (std::size_t o = 0; o < menu.options.size(); ++o) {
      const Lottery& option = menu.options[o];
      if (option.price.is_infinite()) continue;
      for (std::size_t j = 0; j < option.allocation.size(); ++j) {
        if (option.allocation[j].sign() > 0) {
          c.expect(compare(derived.prices[j], option.price) <= 0,
                   where + ": derived price of the lowest support item of option " +
                       std::to_string(o) + " exceeds the option price");
          break;
        }
      }
    }
  };

  GapExample fixture = gap_example_fixture();
  ItemPricing fixture_derived = derive_item_pricing(fixture.menu, fixture.instance.n);
  for (std::size_t t = 0; t < fixture.instance.types.size(); ++t) {
    const BuyerType& type = fixture.instance.types[t];
    UtilityDifferenceReport report =
        utility_difference_check(type, fixture.menu, fixture_derived, ell, beta);
    c.expect(report.holds, "fixture type " + std::to_string(t) +
                               ": utility difference inequality fails");

    // Buy-one best responses keep their support items' values above the
    // achieved utility.
    BestResponse response = best_response_menu(type, fixture.menu);
    if (response.option.has_value()) {
      const Lottery& chosen = fixture.menu.options[*response.option];
      for (std::size_t j = 0; j < chosen.allocation.size(); ++j) {
        if (chosen.allocation[j].sign() > 0) {
          c.expect(compare(type.values[j], response.utility) >= 0,
                   "fixture type " + std::to_string(t) +
                       ": a support item is valued below the achieved utility");
        }
      }
    }
  }
  support_property(fixture.menu, fixture_derived, "fixture menu");

  std::mt19937_64 rng(91005);
  int menus_tested = 0;
  for (int attempt = 0; attempt < 2000 && menus_tested < 100 && c.ok; ++attempt) {
    std::size_t n = pick(rng, 1, 4);
    LotteryMenu menu = attempt % 2 == 0 ? test_util::random_menu(rng, n, 4, 9)
                                        : test_util::random_deterministic_menu(rng, n, 6);
    if (!repeat_strategy_buy_many_check(menu, n).passes) continue;
    ++menus_tested;
    ItemPricing derived = derive_item_pricing(menu, n);
    std::size_t type_count = pick(rng, 1, 3);
    for (std::size_t t = 0; t < type_count; ++t) {
      BuyerType type = type_of(random_ordered_values(rng, n, 9), Q(1));
      UtilityDifferenceReport report = utility_difference_check(type, menu, derived, ell, beta);
      c.expect(report.holds, "random menu " + std::to_string(menus_tested) +
                                 ": utility difference inequality fails");
    }
    support_property(menu, derived, "random menu " + std::to_string(menus_tested));
  }
  c.expect(menus_tested >= 100, "only " + std::to_string(menus_tested) +
                                    " menus passed the repeat-strategy check");
}

// --------------------------------------------------------------------------
// C6: on threshold (FedEx-style) instances, the adaptive menu revenue equals
// the derived item pricing's revenue exactly.
void criterion6(Criterion& c) {
  std::mt19937_64 rng(91006);
  for (int round = 0; round < 100 && c.ok; ++round) {
    PricingInstance instance = test_util::random_fedex_instance(rng, 5, 4, 9);
    LotteryMenu menu = test_util::random_menu(rng, instance.n, 4, 9);
    FlattenReport report = fedex_flatten_check(instance, menu);
    c.expect(report.equal && scalar_eq(report.menu_revenue, report.pricing_revenue),
             "round " + std::to_string(round) + ": adaptive revenue " +
                 report.menu_revenue.to_exact_string() + " != derived pricing revenue " +
                 report.pricing_revenue.to_exact_string());
  }
}

// --------------------------------------------------------------------------
// C7: Max-Cut reduction identities on random graphs, plus the closed-form
// revenue of random cut pricings.
void criterion7(Criterion& c) {
  std::mt19937_64 rng(91007);

  std::vector<Graph> graphs;
  graphs.push_back(Graph{2, {{1, 2}}});
  graphs.push_back(Graph{3, {{1, 2}, {1, 3}, {2, 3}}});
  for (int g = 0; g < 6; ++g) {
    Graph graph;
    graph.n_vertices = pick(rng, 2, 10);
    std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
    for (std::size_t i = 1; i <= graph.n_vertices; ++i) {
      for (std::size_t j = i + 1; j <= graph.n_vertices; ++j) all_pairs.push_back({i, j});
    }
    std::shuffle(all_pairs.begin(), all_pairs.end(), rng);
    std::size_t count = pick(rng, 1, std::min<std::size_t>(20, all_pairs.size()));
    graph.edges.assign(all_pairs.begin(), all_pairs.begin() + count);
    graphs.push_back(std::move(graph));
  }

  for (std::size_t g = 0; g < graphs.size() && c.ok; ++g) {
    const Graph& graph = graphs[g];
    HardnessInstance hardness = reduce_maxcut(graph);
    Scalar inv_n10 = Q(1) / pow_int(Scalar(static_cast<long>(hardness.report.n)), 10);

    for (const EdgeGadget& gadget : hardness.report.edges) {
      Scalar x = Q(3 * static_cast<long>(gadget.i) - 2);
      Scalar y = Q(3 * static_cast<long>(gadget.j) - 2);
      c.expect(scalar_eq(gadget.x, x) && scalar_eq(gadget.y, y),
               "graph " + std::to_string(g) + ": gadget price levels are not 3i-2, 3j-2");

      const Scalar symbolic[4][4] = {
          {y, y, y, x},
          {Q(0), y + Q(1), y + Q(1), x + Q(1)},
          {x, x, y + Q(1), x},
          {y, y, y, y},
      };
      for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 4; ++col) {
          c.expect(scalar_eq(gadget.matrix[r][col], symbolic[r][col]),
                   "graph " + std::to_string(g) + ": outcome matrix entry (" +
                       std::to_string(r) + "," + std::to_string(col) +
                       ") differs from the symbolic form");
        }
      }

      Scalar y3 = y * y * y;
      const Scalar target[4] = {Q(2) * y3 * inv_n10, Q(2) * y3 * inv_n10,
                                (Q(2) * y3 + Q(1)) * inv_n10, (Q(2) * y3 + Q(1)) * inv_n10};
      for (int r = 0; r < 4; ++r) {
        c.expect(gadget.z[r].sign() >= 0,
                 "graph " + std::to_string(g) + ": gadget probability z[" + std::to_string(r) +
                     "] is negative");
        Scalar row_sum = Q(0);
        for (int col = 0; col < 4; ++col) row_sum += gadget.matrix[r][col] * gadget.z[col];
        c.expect(scalar_eq(row_sum, target[r]),
                 "graph " + std::to_string(g) + ": A z identity fails in row " +
                     std::to_string(r));
      }
      c.expect(scalar_eq(gadget.r_ij, Q(2) * y3 * inv_n10),
               "graph " + std::to_string(g) + ": r_ij is not 2 n^-10 y^3");
    }

    for (int round = 0; round < 20 && c.ok; ++round) {
      std::vector<std::size_t> cut;
      for (std::size_t v = 1; v <= graph.n_vertices; ++v) {
        if (pick(rng, 0, 1) == 1) cut.push_back(v);
      }
      CutRevenueReport report = revenue_of_cut_check(graph, cut);
      c.expect(report.equal, "graph " + std::to_string(g) + ", cut round " +
                                 std::to_string(round) +
                                 ": engine and closed-form revenues differ");
      std::size_t crossing = 0;
      for (const auto& edge : graph.edges) {
        bool first = std::find(cut.begin(), cut.end(), edge.first) != cut.end();
        bool second = std::find(cut.begin(), cut.end(), edge.second) != cut.end();
        if (first != second) ++crossing;
      }
      c.expect(report.crossing == crossing,
               "graph " + std::to_string(g) + ": reported crossing count is wrong");
    }
  }
}

// --------------------------------------------------------------------------
// C8: the width-k derivation agrees with the chain derivation on total
// orders, and every lottery of a random bounded-width menu has a support item
// priced within width^2 times the lottery price.
void criterion8(Criterion& c) {
  std::mt19937_64 rng(91008);

  for (int round = 0; round < 100 && c.ok; ++round) {
    std::size_t n = pick(rng, 1, 5);
    LotteryMenu menu = test_util::random_menu(rng, n, 4, 9);
    ItemPricing direct = derive_item_pricing(menu, n);
    ItemPricing chained = derive_item_pricing_width_k(menu, DominanceOrder::chain(n));
    c.expect(direct.prices.size() == chained.prices.size(),
             "round " + std::to_string(round) + ": derivation lengths differ");
    for (std::size_t i = 0; i < n; ++i) {
      c.expect(scalar_eq(direct.prices[i], chained.prices[i]),
               "round " + std::to_string(round) + ": chain derivation differs at item " +
                   std::to_string(i));
    }
  }

  for (std::size_t k = 2; k <= 3 && c.ok; ++k) {
    for (int round = 0; round < 30 && c.ok; ++round) {
      std::size_t n = pick(rng, 2, 6);
      DominanceOrder order = test_util::random_bounded_width_order(rng, n, k);
      LotteryMenu menu = test_util::random_menu(rng, n, 3, 9);
      ItemPricing derived = derive_item_pricing_width_k(menu, order);
      Scalar squared_width = Q(static_cast<long>(order.width() * order.width()));
      for (std::size_t o = 0; o < menu.options.size(); ++o) {
        const Lottery& option = menu.options[o];
        if (option.price.is_infinite()) continue;
        bool found = false;
        bool has_support = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
          if (option.allocation[j].sign() <= 0) continue;
          has_support = true;
          found = compare(derived.prices[j], squared_width * option.price) <= 0;
        }
        c.expect(!has_support || found,
                 "width " + std::to_string(k) + ", round " + std::to_string(round) +
                     ": option " + std::to_string(o) +
                     " has no support item within width^2 of its price");
      }
    }
  }
}

}  // namespace

int main() {
  bool all_ok = true;
  all_ok &= run_criterion("C1 worked example: pricing (1,3) yields 7/3 and the menu 23/9", 1000,
                          criterion1);
  all_ok &= run_criterion(
      "C2 FedEx DP matches the candidate-set brute force on 200 two-value instances", 120000,
      criterion2);
  all_ok &= run_criterion(
      "C3 interval DP matches exhaustive interval enumeration on 100 additive instances", 120000,
      criterion3);
  all_ok &= run_criterion(
      "C4 pipeline: scaled-payment inequality, uniform-price floor, measured ratios", -1,
      criterion4);
  all_ok &= run_criterion(
      "C5 utility-difference inequality and support property on 100 buy-many menus", 120000,
      criterion5);
  all_ok &= run_criterion(
      "C6 adaptive menu revenue flattens exactly on 100 threshold instances", -1, criterion6);
  all_ok &= run_criterion(
      "C7 Max-Cut gadget identities and cut revenues on random graphs", 120000, criterion7);
  all_ok &= run_criterion(
      "C8 width-k derivation: chain agreement and width^2-bounded supports", -1, criterion8);
  return all_ok ? 0 : 1;
}
