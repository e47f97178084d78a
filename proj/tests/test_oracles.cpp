#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "widthlab/decomp.hpp"
#include "widthlab/error.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/hales.hpp"
#include "widthlab/hypergraph.hpp"
#include "widthlab/numeric.hpp"
#include "widthlab/oracles.hpp"

using namespace widthlab;

namespace {

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

}  // namespace

TEST_CASE("widths of paths, cycles, cliques and stars") {
  for (std::size_t n = 2; n <= 10; ++n) {
    CHECK(exact_treewidth(make_path(n)).width == 1);
    CHECK(exact_pathwidth(make_path(n)).width == 1);
    CHECK(exact_bandwidth(make_path(n)).bandwidth == 1);
    CHECK(exact_treewidth(make_complete(n)).width == n - 1);
    CHECK(exact_pathwidth(make_complete(n)).width == n - 1);
    CHECK(exact_bandwidth(make_complete(n)).bandwidth == n - 1);
  }
  for (std::size_t n = 4; n <= 10; ++n) {
    CHECK(exact_treewidth(make_cycle(n)).width == 2);
    CHECK(exact_pathwidth(make_cycle(n)).width == 2);
    CHECK(exact_bandwidth(make_cycle(n)).bandwidth == 2);
  }
  for (std::size_t m = 1; m <= 9; ++m) {
    CHECK(exact_treewidth(star(m)).width == 1);
    CHECK(exact_bandwidth(star(m)).bandwidth == (m + 1) / 2);
  }
}

TEST_CASE("Petersen graph treewidth") {
  const Graph p = gen_petersen(5, 2);
  CHECK(exact_treewidth(p).width == 4);
  CHECK(exact_pathwidth(p).width >= 4);
}

TEST_CASE("witness orders reproduce the widths") {
  for (const Graph& g : {gen_petersen(6, 1), gen_petersen(7, 2), gen_hamming(1, 2, 4), gen_johnson(5, 2)}) {
    const auto tw = exact_treewidth(g);
    CHECK(td_from_elimination(g, tw.order).width() == tw.width);
    const auto pw = exact_pathwidth(g);
    CHECK(pd_from_ordering(g, pw.order).width() == pw.width);
    CHECK(tw.width <= pw.width);
  }
  const Graph g = gen_petersen(6, 1);
  const auto bw = exact_bandwidth(g);
  CHECK(ordering_bandwidth(g, bw.ordering) == bw.bandwidth);
  CHECK(exact_pathwidth(g).width <= bw.bandwidth);
}

TEST_CASE("cube widths") {
  const Graph q3 = gen_hamming(1, 2, 3);
  CHECK(exact_treewidth(q3).width == 3);
  CHECK(exact_bandwidth(q3).bandwidth == 4);
  CHECK(ordering_bandwidth(q3, Ordering::identity(8)) == 4);
}

TEST_CASE("oracle caps raise SizeError") {
  CHECK_THROWS_AS(exact_treewidth(make_path(26)), SizeError);
  CHECK_THROWS_AS(exact_bandwidth(make_path(13)), SizeError);
  CHECK_THROWS_AS(b_v_profile(make_path(21)), SizeError);
  CHECK_THROWS_AS(exact_treewidth(make_path(8), 5), SizeError);
}

TEST_CASE("boundary profile of a cycle") {
  const auto p = b_v_profile(make_cycle(8));
  CHECK(p.front() == 0);
  for (std::size_t l = 1; l <= 6; ++l) CHECK(p[l] == 2);
  CHECK(p[7] == 1);
  CHECK(p[8] == 0);
  CHECK(b_v(3, make_cycle(8)) == 2);
  const std::vector<Vertex> s{0, 1, 2};
  CHECK(phi(make_cycle(8), s) == 2);
}

TEST_CASE("balanced separators") {
  const auto sep = min_balanced_separator(make_path(7), 3);
  REQUIRE(sep.has_value());
  CHECK(sep->separator.size() == 1);
  CHECK(sep->part_a.size() + sep->part_b.size() == 6);
  CHECK(sep->part_a.size() <= 4);
  CHECK(sep->part_b.size() <= 4);
  const auto cyc = min_balanced_separator(make_cycle(9), 4);
  REQUIRE(cyc.has_value());
  CHECK(cyc->separator.size() == 2);
  CHECK_FALSE(min_balanced_separator(make_complete(6), 5).has_value());
}

TEST_CASE("cross-intersecting families") {
  CHECK(max_cross_intersecting_sum(4, 2) == 6);
  CHECK(max_cross_intersecting_sum(5, 2) == 8);
  CHECK(max_cross_intersecting_sum(6, 2) == 10);
  CHECK(max_cross_intersecting_sum(7, 2) == 12);
  CHECK_THROWS_AS(max_cross_intersecting_sum(7, 3), SizeError);
}

TEST_CASE("bipartite matching") {
  const Matching m = bipartite_perfect_matching(gen_bipartite_kneser(5, 2));
  CHECK(m.perfect);
  CHECK(m.pairs.size() == 10);
  CHECK_FALSE(bipartite_perfect_matching(make_path(5)).perfect);
  CHECK(bipartite_perfect_matching(make_path(6)).perfect);
  CHECK_THROWS_AS(bipartite_perfect_matching(make_cycle(5)), PreconditionError);
}

TEST_CASE("transversal number") {
  Hypergraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(exact_transversal(triangle) == 2);
  Hypergraph disjoint{6, {{0, 1}, {2, 3}, {4, 5}}};
  CHECK(exact_transversal(disjoint) == 3);
  Hypergraph sunflower{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
  CHECK(exact_transversal(sunflower) == 1);
  std::vector<std::vector<Vertex>> lines;
  // Fano plane: every two lines meet, transversal number 3.
  lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  CHECK(exact_transversal(Hypergraph{7, lines}) == 3);
}

TEST_CASE("pathwidth of binary Hamming graphs") {
  CHECK(exact_pathwidth(gen_hamming(1, 2, 3)).width == 4);
  CHECK(exact_pathwidth(gen_hamming(2, 2, 4)).width == 12);
  CHECK(b_v(8, gen_hamming(1, 2, 4)) == 6);
  CHECK(exact_bandwidth(gen_hamming(2, 2, 3)).bandwidth == 6);
}
