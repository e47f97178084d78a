#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

/// Bijection vertex -> rank in 1..|V|.
class Ordering {
 public:
  Ordering() = default;

  /// `sequence[i]` is the vertex receiving rank i+1. Throws PreconditionError
  /// unless the sequence is a permutation of 0..size-1.
  static Ordering from_sequence(std::vector<Vertex> sequence);
  static Ordering identity(std::size_t size);

  std::size_t size() const { return sequence_.size(); }
  std::size_t rank(Vertex v) const { return rank_[v]; }
  Vertex at_rank(std::size_t rank) const { return sequence_[rank - 1]; }
  const std::vector<Vertex>& sequence() const { return sequence_; }
  Ordering reversed() const;

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> rank_;
};

/// Rows of A_k^(n) as bitmasks (coordinate i <-> bit i-1).
struct SliceOrder {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> rows;
};

constexpr int kMaxSliceDimension = 40;
constexpr std::size_t kMaxSliceRows = std::size_t{1} << 26;
constexpr int kMaxHalesDimension = 24;

/// A_n = all ones, A_0 = all zeros, otherwise A_{k-1}^{(n-1)} with a trailing 1
/// stacked over A_k^{(n-1)} with a trailing 0.
SliceOrder slice_order(int n, int k);

/// Rows of S^(n): slice orders for k = 0..n stacked.
std::vector<std::uint64_t> hales_sequence(int n);

/// eta^(n) over the binary vectors, vertex id = bitmask code.
Ordering hales_order(int n);

struct HalesReport {
  bool ok = true;
  /// First prefix length where condition 1 or 2 fails.
  std::optional<std::size_t> first_violation;
  /// Which condition failed first (1 or 2), 0 when ok.
  int failed_condition = 0;
  /// Phi(S_l) for l = 1..|V| (outer vertex boundary of each prefix).
  std::vector<std::size_t> prefix_boundary;
  /// b_v(l, G) for l = 1..|V|.
  std::vector<std::size_t> optimal_boundary;
  std::size_t max_prefix_boundary() const;
};

constexpr std::size_t kDefaultHalesLimit = 16;

/// Exhaustive Hales-numbering check. Condition 1: every prefix S_l attains
/// b_v(l, G). Condition 2: the interior of S_l (vertices with no neighbour
/// outside S_l) is exactly the set of ranks 1..l - (inner boundary size).
/// Throws SizeError when |V| > limit.
HalesReport verify_hales_property(const Graph& g, const Ordering& ordering,
                                  std::size_t limit = kDefaultHalesLimit);

}  // namespace widthlab
