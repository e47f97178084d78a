#include "widthlab/hypergraph.hpp"

#include <algorithm>

#include "widthlab/error.hpp"

namespace widthlab {

void Hypergraph::validate() const {
  for (const auto& e : edges) {
    if (e.empty()) throw PreconditionError("hypergraph has an empty edge");
    if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end())
      throw PreconditionError("hyperedge not sorted or has repeated vertices");
    if (e.back() >= vertex_count) throw PreconditionError("hyperedge vertex out of range");
  }
}

std::size_t Hypergraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto& e : edges)
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  return d;
}

std::size_t Hypergraph::max_degree() const {
  std::vector<std::size_t> deg(vertex_count, 0);
  for (const auto& e : edges)
    for (Vertex v : e) ++deg[v];
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

}  // namespace widthlab
