#pragma once

#include <cstddef>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

/// Hyperedges are sorted, duplicate-free and non-empty.
struct Hypergraph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<Vertex>> edges;

  /// Throws PreconditionError on an empty edge or an out-of-range vertex.
  void validate() const;
  std::size_t edge_count() const { return edges.size(); }
  /// Number of edges containing v.
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
};

}  // namespace widthlab
