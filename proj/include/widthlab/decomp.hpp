#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

using Bag = std::vector<Vertex>;  // sorted, duplicate-free

/// Tree (or path) decomposition. Bags are indexed 0..size-1; tree_edges
/// connect bag indices.
struct Decomposition {
  std::vector<Bag> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  /// Path decomposition: consecutive bags joined. Bags are normalised.
  static Decomposition path(std::vector<Bag> bags);
  /// max bag size - 1 (0 for no bags).
  std::size_t width() const;
  std::size_t max_bag_size() const;
  bool is_path() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct DecompositionReport {
  bool ok = false;
  std::optional<std::size_t> width;
  std::vector<Vertex> missing_vertices;
  std::vector<Edge> uncovered_edges;
  std::vector<Vertex> disconnected_vertices;
};

/// Checks coverage, edge coverage and connected traces, listing every
/// violation. Throws StructuralError if the shape is not a tree or a bag
/// names a vertex outside the graph.
DecompositionReport validate_decomposition(const Graph& g, const Decomposition& d);

enum class PetersenMode { verbatim, repaired };

/// Path decomposition of G_{n,k} over gen_petersen vertex ids.
Decomposition petersen_pd(int n, int k, PetersenMode mode);

/// Star decomposition: centre V - I, one leaf (V - I) + {v} per v in I.
Decomposition independent_set_td(const Graph& g, std::span<const Vertex> independent);

/// Lifts a valid path decomposition of H(t,2,n) (gen_hamming ids) to
/// H(t,q,n) by taking preimages under the coordinatewise map f(d) = 0 iff
/// d < ceil(q/2).
Decomposition lift_pd(const Decomposition& pd, int t, int n, int q);

/// Bag i = {order[i]} plus earlier vertices with a neighbour at or after i.
/// Width equals the vertex separation number of the order.
Decomposition pd_from_ordering(const Graph& g, std::span<const Vertex> order);

/// Tree decomposition read off the fill-in of an elimination order.
Decomposition td_from_elimination(const Graph& g, std::span<const Vertex> order);

struct ChordalCertificate {
  Graph graph;
  std::vector<Vertex> peo;
  std::size_t omega = 0;
};

/// Eliminates along `order`, joining the later neighbours of each vertex.
ChordalCertificate fillin_chordal(const Graph& g, std::span<const Vertex> order);

/// 1 + max number of later neighbours along a perfect elimination order.
std::size_t clique_number_from_peo(const Graph& g, std::span<const Vertex> peo);

struct ChordalityResult {
  bool chordal = false;
  std::vector<Vertex> peo;            // when chordal
  std::vector<Vertex> witness_cycle;  // chordless cycle, length >= 4, otherwise
};

/// Maximum cardinality search plus a zero-fill check.
ChordalityResult is_chordal(const Graph& g);

/// BK(n,k) with the edges of H (a chordal supergraph of J(n,k), vertex ids
/// as in gen_johnson) added on the left part.
Graph bk_prime(int n, int k, const ChordalCertificate& h);

// ---- PACE .td ----

void write_td(std::ostream& out, const Decomposition& d, std::size_t vertex_count);

struct TdFile {
  Decomposition decomposition;
  std::size_t vertex_count = 0;
};

/// Parses `s td <bags> <max bag size> <n>`, `b i v...` and edge lines.
TdFile read_td(std::istream& in);

struct CheckedTd {
  Decomposition decomposition;
  DecompositionReport report;
};

/// read_td followed by validate_decomposition against g.
CheckedTd read_td_checked(std::istream& in, const Graph& g);

}  // namespace widthlab
