#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace widthlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// q-ary n-vector. `code` = sum_i d_i q^(i-1) with digits d_i in 0..q-1 and
/// coordinate 1 least significant, so for q = 2 the code is the bitmask.
struct VectorLabel {
  std::uint64_t code = 0;
  int q = 2;
  int n = 0;

  int digit(int coordinate) const;  // 1-based coordinate
  std::vector<int> digits() const;
  friend bool operator==(const VectorLabel&, const VectorLabel&) = default;
};

/// Subset of [ground]; element i present iff bit (i-1) is set.
struct SubsetLabel {
  std::uint64_t mask = 0;
  int ground = 0;

  std::vector<int> elements() const;
  int size() const;
  friend bool operator==(const SubsetLabel&, const SubsetLabel&) = default;
};

/// v_i (outer cycle) or u_i (inner circulant), index 1-based.
struct PetersenLabel {
  bool inner = false;
  int index = 1;
  friend bool operator==(const PetersenLabel&, const PetersenLabel&) = default;
};

using Label = std::variant<std::monostate, VectorLabel, SubsetLabel, PetersenLabel>;

std::string label_to_string(const Label& label);

enum class Family { hamming, johnson, bipartite_kneser, petersen };

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct FamilySpec {
  Family family = Family::hamming;
  int t = 1;
  int q = 2;
  int n = 1;
  int k = 0;

  /// Throws ParameterError when the tuple is outside the family's domain.
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Immutable simple undirected graph. Adjacency lists are sorted; graphs up
/// to kDenseLimit vertices also get a dense bitset row per vertex, built on
/// the first adjacency query.
class Graph {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  Graph() = default;

  /// Rejects self-loops, duplicate edges and out-of-range endpoints.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::vector<Label> labels = {},
                          std::optional<FamilySpec> family = std::nullopt);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  const Label& label(Vertex v) const { return labels_[v]; }
  const std::vector<Label>& labels() const { return labels_; }
  const std::optional<FamilySpec>& family() const { return family_; }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool is_regular() const;

  /// Subgraph induced on `vertices`, renumbered in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  /// Same vertex set with extra edges (duplicates of existing edges ignored).
  Graph with_added_edges(std::span<const Edge> extra) const;

  /// Neighborhood bitmask per vertex; requires vertex_count() <= 64.
  std::vector<std::uint64_t> neighbor_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  const std::vector<std::uint64_t>* dense_rows() const;

  std::vector<std::vector<Vertex>> adjacency_;
  mutable std::shared_ptr<const std::vector<std::uint64_t>> dense_;
  std::vector<Label> labels_;
  std::optional<FamilySpec> family_;
  std::size_t edge_count_ = 0;
};

// Family generators. Every generator validates its FamilySpec first.

/// H(t,q,n): vectors over [q] adjacent iff Hamming distance in [1,t].
/// q = 2 uses the Hales order of the binary vectors; q > 2 is lexicographic.
Graph gen_hamming(int t, int q, int n);
Graph gen_johnson(int n, int k);
/// BK(n,k): left part k-subsets (indices 0..C(n,k)-1), right part (n-k)-subsets.
Graph gen_bipartite_kneser(int n, int k);
/// G_{n,k}: vertices 0..n-1 are v_1..v_n, n..2n-1 are u_1..u_n.
Graph gen_petersen(int n, int k);
Graph generate(const FamilySpec& spec);

inline Vertex petersen_v(int n, int i) { return static_cast<Vertex>(((i - 1) % n + n) % n); }
inline Vertex petersen_u(int n, int i) { return static_cast<Vertex>(n + ((i - 1) % n + n) % n); }

// Small named graphs used by tests and oracle suites.
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);

int hamming_distance(const VectorLabel& a, const VectorLabel& b);

/// PACE 2017 `.gr`: `p tw <n> <m>`, one `u v` line per edge, 1-based.
/// Labels and family are carried in `c` comment lines.
void write_gr(std::ostream& out, const Graph& g);
Graph read_gr(std::istream& in);

}  // namespace widthlab
