#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/hales.hpp"
#include "widthlab/hypergraph.hpp"

namespace widthlab {

constexpr std::size_t kTreewidthCap = 25;
constexpr std::size_t kPathwidthCap = 25;
constexpr std::size_t kBandwidthCap = 12;
constexpr std::size_t kBoundaryCap = 20;
constexpr std::size_t kSeparatorCap = 18;
constexpr std::size_t kTransversalEdgeCap = 64;
constexpr std::size_t kCrossIntersectingCap = 21;

struct EliminationResult {
  std::size_t width = 0;
  /// Elimination order (tw) or layout order (pw), first vertex first.
  std::vector<Vertex> order;
};

/// Subset DP over eliminated sets: TW(S) = min_v max(TW(S-v), |Q(S-v, v)|).
EliminationResult exact_treewidth(const Graph& g, std::size_t cap = kTreewidthCap);

/// Vertex separation number by subset DP.
EliminationResult exact_pathwidth(const Graph& g, std::size_t cap = kPathwidthCap);

struct BandwidthResult {
  std::size_t bandwidth = 0;
  Ordering ordering;
};

/// Branch and bound over layouts, smallest feasible width first.
BandwidthResult exact_bandwidth(const Graph& g, std::size_t cap = kBandwidthCap);

/// Bandwidth of g under a given ordering.
std::size_t ordering_bandwidth(const Graph& g, const Ordering& ordering);

/// Phi(S): vertices outside S with a neighbour in S.
std::size_t phi(const Graph& g, std::span<const Vertex> set);
std::size_t phi_mask(std::span<const std::uint64_t> neighbor_masks, std::uint64_t set);

std::size_t b_v(std::size_t l, const Graph& g, std::size_t cap = kBoundaryCap);
/// b_v(l, g) for l = 0..|V| in one pass over all subsets.
std::vector<std::size_t> b_v_profile(const Graph& g, std::size_t cap = kBoundaryCap);

struct Separator {
  std::vector<Vertex> separator;
  std::vector<Vertex> part_a;
  std::vector<Vertex> part_b;
};

/// Smallest X with |X| <= size_cap such that V - X splits into A, B with no
/// A-B edge and |A|, |B| <= 2|V - X|/3.
std::optional<Separator> min_balanced_separator(const Graph& g, std::size_t size_cap,
                                                std::size_t cap = kSeparatorCap);

/// Max |A| + |C| over non-empty cross-intersecting families of k-subsets of [n].
std::size_t max_cross_intersecting_sum(int n, int k, std::size_t cap = kCrossIntersectingCap);

struct Matching {
  std::vector<Edge> pairs;
  bool perfect = false;
};

/// Maximum matching by augmenting paths. Throws PreconditionError if g is
/// not bipartite.
Matching bipartite_perfect_matching(const Graph& g);

/// Minimum hitting set size.
std::size_t exact_transversal(const Hypergraph& h, std::size_t edge_cap = kTransversalEdgeCap);

}  // namespace widthlab
