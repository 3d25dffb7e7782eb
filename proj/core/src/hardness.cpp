#include "ordered_pricing/hardness.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "ordered_pricing/model.hpp"

namespace ordered_pricing {

namespace {

/// Exact 4x4 linear solve by Gaussian elimination with partial pivoting.
std::array<Scalar, 4> solve4(OutcomeMatrix m, std::array<Scalar, 4> rhs) {
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && m[pivot][col].sign() == 0) ++pivot;
    if (pivot == 4) throw ValidationError("/matrix", "outcome matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < 4; ++row) {
      if (row == col || m[row][col].sign() == 0) continue;
      Scalar factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < 4; ++k) m[row][k] = m[row][k] - factor * m[col][k];
      rhs[row] = rhs[row] - factor * rhs[col];
    }
  }
  std::array<Scalar, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = rhs[i] / m[i][i];
  return out;
}

std::array<Scalar, 4> multiply(const OutcomeMatrix& m, const std::array<Scalar, 4>& v) {
  std::array<Scalar, 4> out{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) out[r] = out[r] + m[r][c] * v[c];
  }
  return out;
}

/// Two-step value vector over n+1 items (1-based semantics): 0 before item
/// i, `mid` from i through j-1, `high` from j through n+1.
std::vector<Scalar> two_step_values(std::size_t i, std::size_t j, std::size_t n,
                                    const Scalar& mid, const Scalar& high) {
  std::vector<Scalar> values(n + 1, Scalar(0));
  for (std::size_t a = i; a < j; ++a) values[a - 1] = mid;
  for (std::size_t a = j; a <= n + 1; ++a) values[a - 1] = high;
  return values;
}

}  // namespace

void require_valid_graph(const Graph& graph) {
  if (graph.n_vertices == 0) throw ValidationError("/n_vertices", "graph must have vertices");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    auto [i, j] = graph.edges[e];
    std::string path = "/edges/" + std::to_string(e);
    if (i == j) throw ValidationError(path, "self-loops are not allowed");
    if (i > j) throw ValidationError(path, "edges must be stored with i < j");
    if (i < 1 || j > graph.n_vertices) throw ValidationError(path, "vertex out of range");
    if (!seen.insert({i, j}).second) throw ValidationError(path, "duplicate edge");
  }
}

Graph parse_graph(std::istream& in) {
  Graph graph;
  std::size_t m = 0;
  if (!(in >> graph.n_vertices >> m)) {
    throw ValidationError("/graph", "expected a header line \"n m\"");
  }
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t i = 0, j = 0;
    if (!(in >> i >> j)) {
      throw ValidationError("/edges/" + std::to_string(e), "expected an edge line \"i j\"");
    }
    if (i > j) std::swap(i, j);
    graph.edges.push_back({i, j});
  }
  require_valid_graph(graph);
  return graph;
}

OutcomeMatrix outcome_matrix(std::size_t i, std::size_t j) {
  if (i < 1 || i >= j) throw ValidationError("/edge", "need 1 <= i < j");
  std::size_t n = j;  // enough items for both steps
  Scalar x(static_cast<long>(3 * i - 2));
  Scalar y(static_cast<long>(3 * j - 2));
  std::array<std::pair<Scalar, Scalar>, 4> corners = {{
      {x, y},
      {x + Scalar(1), y + Scalar(1)},
      {x, y + Scalar(1)},
      {x + Scalar(1), y},
  }};

  OutcomeMatrix out;
  for (std::size_t row = 0; row < 4; ++row) {
    ItemPricing pricing;
    for (std::size_t a = 1; a <= n + 1; ++a) {
      pricing.prices.push_back(Scalar(static_cast<long>(3 * a - 2)));
    }
    pricing.prices[i - 1] = corners[row].first;
    pricing.prices[j - 1] = corners[row].second;
    for (std::size_t col = 0; col < 4; ++col) {
      BuyerType buyer{two_step_values(i, j, n, corners[col].first, corners[col].second),
                      Scalar(1)};
      out[row][col] = best_response_item_pricing(buyer, pricing).payment;
    }
  }
  return out;
}

EdgeGadget edge_gadget(std::size_t i, std::size_t j, std::size_t n) {
  if (i < 1 || i >= j || j > n) throw ValidationError("/edge", "need 1 <= i < j <= n");
  EdgeGadget gadget;
  gadget.i = i;
  gadget.j = j;
  gadget.x = Scalar(static_cast<long>(3 * i - 2));
  gadget.y = Scalar(static_cast<long>(3 * j - 2));
  gadget.matrix = outcome_matrix(i, j);
  gadget.a = solve4(gadget.matrix, {Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
  gadget.b = solve4(gadget.matrix, {Scalar(0), Scalar(0), Scalar(1), Scalar(1)});

  Scalar scale = pow_int(Scalar(static_cast<long>(n)), -10);
  Scalar two_y3 = Scalar(2) * pow_int(gadget.y, 3);
  gadget.r_ij = scale * two_y3;
  for (std::size_t k = 0; k < 4; ++k) {
    gadget.z[k] = scale * (two_y3 * gadget.a[k] + gadget.b[k]);
    if (gadget.z[k].sign() < 0) {
      throw ValidationError("/z/" + std::to_string(k), "gadget probability is negative");
    }
  }
  std::array<Scalar, 4> image = multiply(gadget.matrix, gadget.z);
  for (std::size_t r = 0; r < 4; ++r) {
    Scalar expected = r < 2 ? gadget.r_ij : gadget.r_ij + scale;
    if (compare(image[r], expected) != 0) {
      throw ValidationError("/z", "gadget revenue identity failed");
    }
  }

  std::array<std::pair<Scalar, Scalar>, 4> corners = {{
      {gadget.x, gadget.y},
      {gadget.x + Scalar(1), gadget.y + Scalar(1)},
      {gadget.x, gadget.y + Scalar(1)},
      {gadget.x + Scalar(1), gadget.y},
  }};
  for (std::size_t k = 0; k < 4; ++k) {
    if (gadget.z[k].sign() == 0) continue;  // zero-probability types are dropped
    gadget.types.push_back(
        BuyerType{two_step_values(i, j, n, corners[k].first, corners[k].second), gadget.z[k]});
  }
  return gadget;
}

HardnessInstance reduce_maxcut(const Graph& graph, std::optional<std::size_t> padded_n) {
  require_valid_graph(graph);
  std::size_t n = padded_n.value_or(graph.n_vertices);
  if (n < graph.n_vertices) {
    throw ValidationError("/padded_n", "padding below the vertex count");
  }

  HardnessInstance out;
  GadgetReport& report = out.report;
  report.n = n;
  report.q1 = Scalar::rational(9, 10);
  report.q2_prime = Scalar::rational(1, 40 * static_cast<long>(n) * static_cast<long>(n));
  Scalar six_n(static_cast<long>(6 * n));
  report.r1 = report.q1 * six_n;

  PricingInstance& instance = out.instance;
  instance.n = n + 1;
  instance.kind = ValuationKind::unit_demand_ordered;
  instance.mode = NumericMode::exact;

  // Anchor type: only item n+1 has value, pinning its price to 6n.
  std::vector<Scalar> anchor(n + 1, Scalar(0));
  anchor[n] = six_n;
  instance.types.push_back(BuyerType{anchor, report.q1});

  // Per-item triples forcing p_i into {3i-1, 3i-2}.
  report.r2 = Scalar(0);
  report.p3_mass = Scalar(0);
  for (std::size_t i = 1; i <= n; ++i) {
    Scalar high(static_cast<long>(3 * i - 1));
    Scalar low(static_cast<long>(3 * i - 2));
    std::vector<Scalar> v(n + 1, Scalar(0)), vp(n + 1, Scalar(0)), vpp(n + 1, Scalar(0));
    for (std::size_t a = i; a <= n + 1; ++a) {
      v[a - 1] = high;
      vp[a - 1] = low;
      vpp[a - 1] = low;
    }
    vpp[n] = six_n;
    Scalar vp_prob = report.q2_prime / low;
    instance.types.push_back(BuyerType{v, report.q2_prime});
    instance.types.push_back(BuyerType{vp, vp_prob});
    instance.types.push_back(BuyerType{vpp, report.q2_prime});
    report.p3_mass += report.q2_prime + vp_prob + report.q2_prime;
    report.r2 += (high + six_n) * report.q2_prime;
  }

  // Edge gadgets.
  report.p4_mass = Scalar(0);
  for (const auto& [i, j] : graph.edges) {
    EdgeGadget gadget = edge_gadget(i, j, n);
    for (const BuyerType& type : gadget.types) {
      instance.types.push_back(type);
      report.p4_mass += type.probability;
    }
    report.edges.push_back(std::move(gadget));
  }

  // Filler type: worth less than any price, it absorbs the leftover mass.
  report.filler_mass = Scalar(1) - report.q1 - report.p3_mass - report.p4_mass;
  if (report.filler_mass.sign() < 0) {
    throw ValidationError("/types", "gadget probabilities exceed the available mass");
  }
  if (report.filler_mass.sign() > 0) {
    std::vector<Scalar> filler(n + 1, Scalar(0));
    filler[n] = Scalar(1);
    instance.types.push_back(BuyerType{filler, report.filler_mass});
  }

  Scalar n3 = pow_int(Scalar(static_cast<long>(n)), 3);
  report.p4_within_budget = compare(report.p4_mass, Scalar(1) / (Scalar(240) * n3)) < 0;
  report.rest_within_budget =
      compare(report.p3_mass + report.p4_mass,
              Scalar::rational(3, 20 * static_cast<long>(n))) < 0;
  report.n_large_enough = n > 180;
  return out;
}

ItemPricing cut_to_pricing(const Graph& graph, const std::vector<std::size_t>& cut,
                           std::optional<std::size_t> padded_n) {
  require_valid_graph(graph);
  std::size_t n = padded_n.value_or(graph.n_vertices);
  if (n < graph.n_vertices) {
    throw ValidationError("/padded_n", "padding below the vertex count");
  }
  std::set<std::size_t> in_cut;
  for (std::size_t v : cut) {
    if (v < 1 || v > graph.n_vertices) throw ValidationError("/cut", "vertex out of range");
    in_cut.insert(v);
  }
  ItemPricing pricing;
  for (std::size_t i = 1; i <= n; ++i) {
    pricing.prices.push_back(
        Scalar(static_cast<long>(in_cut.count(i) ? 3 * i - 1 : 3 * i - 2)));
  }
  pricing.prices.push_back(Scalar(static_cast<long>(6 * n)));
  return pricing;
}

CutRevenueReport revenue_of_cut_check(const Graph& graph, const std::vector<std::size_t>& cut,
                                      std::optional<std::size_t> padded_n) {
  HardnessInstance hardness = reduce_maxcut(graph, padded_n);
  ItemPricing pricing = cut_to_pricing(graph, cut, padded_n);

  CutRevenueReport report;
  report.engine_revenue = revenue_item_pricing(hardness.instance, pricing);

  std::set<std::size_t> in_cut(cut.begin(), cut.end());
  Scalar formula = hardness.report.r1 + hardness.report.r2;
  for (const EdgeGadget& gadget : hardness.report.edges) {
    formula += gadget.r_ij;
    if (in_cut.count(gadget.i) != in_cut.count(gadget.j)) ++report.crossing;
  }
  Scalar bonus = pow_int(Scalar(static_cast<long>(hardness.report.n)), -10) *
                 Scalar(static_cast<long>(report.crossing));
  report.formula_revenue = formula + bonus;
  report.equal = compare(report.engine_revenue, report.formula_revenue) == 0;
  return report;
}

}  // namespace ordered_pricing
