/**
 * @file hardness.hpp
 * @brief Max-Cut reduction: generates ordered-item pricing instances whose
 *        optimal revenue encodes the maximum cut of a graph, with every
 *        gadget identity verified exactly.
 */
#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <vector>

#include "ordered_pricing/types.hpp"

namespace ordered_pricing {

/// Undirected simple graph; vertices are 1-based, edges stored with i < j.
struct Graph {
  std::size_t n_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Throws ValidationError on self-loops, duplicate edges, or range errors.
void require_valid_graph(const Graph& graph);

/// Reads "n m" followed by m lines "i j" (1-based vertex ids).
Graph parse_graph(std::istream& in);

using OutcomeMatrix = std::array<std::array<Scalar, 4>, 4>;

/// Payment matrix of the four two-step buyer types against the four pricings
/// that differ only at items i and j (1-based, i < j): rows are the pricings
/// (x,y), (x+1,y+1), (x,y+1), (x+1,y) at (i,j) with x=3i-2, y=3j-2 and every
/// other item a priced 3a-2; columns are the buyers valued (x,y), (x+1,y+1),
/// (x,y+1), (x+1,y) at (i,j).  Entries come from the best-response engine.
OutcomeMatrix outcome_matrix(std::size_t i, std::size_t j);

/// The per-edge probability gadget: solving A a = (1,1,1,1) and
/// A b = (0,0,1,1) exactly, the type probabilities z = n^-10 (2 y^3 a + b)
/// make the four types contribute r_ij when p_i = p_j mod 3 and
/// r_ij + n^-10 otherwise.
struct EdgeGadget {
  std::size_t i = 0, j = 0;  ///< 1-based endpoints, i < j
  Scalar x, y;
  OutcomeMatrix matrix;
  std::array<Scalar, 4> a, b, z;
  Scalar r_ij;                   ///< 2 n^-10 y^3
  std::vector<BuyerType> types;  ///< four types over n+1 items, probabilities z
};

/// Builds and verifies one edge gadget (exact arithmetic; checks z >= 0 and
/// the A z identity).  Requires i < j <= n.
EdgeGadget edge_gadget(std::size_t i, std::size_t j, std::size_t n);

struct GadgetReport {
  std::size_t n = 0;  ///< item count minus one (>= graph vertices)
  Scalar q1;          ///< anchor type probability, 9/10
  Scalar q2_prime;    ///< per-item triple probability scale, 1/(40 n^2)
  Scalar r1;          ///< anchor revenue 6n q1
  Scalar r2;          ///< triple revenue sum_i ((3i-1) + 6n) q2'
  Scalar p3_mass;     ///< total probability of the per-item triples
  Scalar p4_mass;     ///< total probability of the edge gadgets
  Scalar filler_mass; ///< leftover probability on the throwaway type
  bool p4_within_budget = false;   ///< p4_mass < 1/(240 n^3)
  bool rest_within_budget = false; ///< p3_mass + p4_mass < 3/(20 n)
  bool n_large_enough = false;     ///< n > 180, needed for the budgets
  std::vector<EdgeGadget> edges;
};

struct HardnessInstance {
  PricingInstance instance;
  GadgetReport report;
};

/// Emits the n+1-item instance encoding Max-Cut on `graph`: one anchor type
/// wanting only item n+1, three price-pinning types per item, four gadget
/// types per edge, and a filler type absorbing the leftover probability.
/// `padded_n` >= n_vertices enlarges n (the budgets need n > 180); budget
/// violations are reported, not fatal.  Exact mode only.
HardnessInstance reduce_maxcut(const Graph& graph,
                               std::optional<std::size_t> padded_n = std::nullopt);

/// The pricing induced by a cut: p_i = 3i-1 for vertices in the cut, 3i-2
/// otherwise (padding items also 3i-2), and p_{n+1} = 6n.
ItemPricing cut_to_pricing(const Graph& graph, const std::vector<std::size_t>& cut,
                           std::optional<std::size_t> padded_n = std::nullopt);

struct CutRevenueReport {
  Scalar engine_revenue;
  Scalar formula_revenue;  ///< r1 + r2 + sum_edges r_ij + crossing * n^-10
  std::size_t crossing = 0;
  bool equal = false;
};

/// Verifies, exactly, that the engine revenue of the cut-induced pricing
/// matches the closed-form revenue with one n^-10 bonus per crossing edge.
CutRevenueReport revenue_of_cut_check(const Graph& graph, const std::vector<std::size_t>& cut,
                                      std::optional<std::size_t> padded_n = std::nullopt);

}  // namespace ordered_pricing
