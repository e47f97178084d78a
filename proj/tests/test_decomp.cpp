#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "widthlab/decomp.hpp"
#include "widthlab/error.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/numeric.hpp"
#include "widthlab/oracles.hpp"

using namespace widthlab;

TEST_CASE("single bag decomposition") {
  const Graph g = gen_petersen(5, 2);
  Bag all(10);
  for (Vertex v = 0; v < 10; ++v) all[v] = v;
  const auto r = validate_decomposition(g, Decomposition::path({all}));
  CHECK(r.ok);
  CHECK(r.width == 9);
}

TEST_CASE("validator lists every violation") {
  const Graph c4 = make_cycle(4);
  const auto r = validate_decomposition(c4, Decomposition::path({{0, 1}, {1, 2}, {2, 3}}));
  CHECK_FALSE(r.ok);
  CHECK(r.missing_vertices.empty());
  CHECK(r.uncovered_edges == std::vector<Edge>{{0, 3}});
  CHECK(r.disconnected_vertices.empty());

  const auto broken = validate_decomposition(c4, Decomposition::path({{0, 1}, {1, 2}, {0, 2}}));
  CHECK(broken.missing_vertices == std::vector<Vertex>{3});
  CHECK(broken.disconnected_vertices == std::vector<Vertex>{0});
  CHECK(broken.uncovered_edges.size() == 2);
  CHECK_FALSE(broken.width.has_value());
}

TEST_CASE("validator rejects malformed shapes") {
  const Graph c4 = make_cycle(4);
  Decomposition cyc;
  cyc.bags = {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}};
  cyc.tree_edges = {{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(validate_decomposition(c4, cyc), StructuralError);
  Decomposition forest;
  forest.bags = {{0, 1, 2}, {0, 2, 3}};
  CHECK_THROWS_AS(validate_decomposition(c4, forest), StructuralError);
  CHECK_THROWS_AS(validate_decomposition(c4, Decomposition::path({{0, 1, 2, 7}})), StructuralError);
}

TEST_CASE("petersen path decompositions") {
  const auto v51 = validate_decomposition(gen_petersen(5, 1), petersen_pd(5, 1, PetersenMode::verbatim));
  CHECK(v51.ok);
  CHECK(v51.width == 4);

  const auto v52 = validate_decomposition(gen_petersen(5, 2), petersen_pd(5, 2, PetersenMode::verbatim));
  CHECK_FALSE(v52.ok);
  CHECK(v52.uncovered_edges == std::vector<Edge>{{petersen_v(5, 3), petersen_u(5, 3)}});
  CHECK(v52.missing_vertices.empty());

  const auto r52 = validate_decomposition(gen_petersen(5, 2), petersen_pd(5, 2, PetersenMode::repaired));
  CHECK(r52.ok);
  CHECK(r52.width == 6);

  for (int k = 1; k <= 5; ++k)
    for (int n = 2 * k + 2; n <= 60; ++n) {
      const auto r = validate_decomposition(gen_petersen(n, k), petersen_pd(n, k, PetersenMode::repaired));
      CHECK(r.ok);
      CHECK(r.width == static_cast<std::size_t>(2 * k + 2));
    }
  CHECK_THROWS_AS(petersen_pd(6, 3, PetersenMode::repaired), ParameterError);
}

TEST_CASE("verbatim petersen gap is exactly the middle spokes") {
  for (int k = 2; k <= 3; ++k)
    for (int n = 2 * k + 2; n <= 40; ++n) {
      const auto r = validate_decomposition(gen_petersen(n, k), petersen_pd(n, k, PetersenMode::verbatim));
      std::vector<Edge> expected;
      for (int j = k + 1; j <= 2 * k - 1; ++j) expected.emplace_back(petersen_v(n, j), petersen_u(n, j));
      CHECK(r.uncovered_edges == expected);
    }
}

TEST_CASE("independent set tree decompositions") {
  const Graph c4 = make_cycle(4);
  const std::vector<Vertex> opposite{0, 2};
  const auto r = validate_decomposition(c4, independent_set_td(c4, opposite));
  CHECK(r.ok);
  CHECK(r.width == 2);

  const Graph bk = gen_bipartite_kneser(5, 2);
  std::vector<Vertex> left(10);
  for (Vertex v = 0; v < 10; ++v) left[v] = v;
  const auto b = validate_decomposition(bk, independent_set_td(bk, left));
  CHECK(b.ok);
  CHECK(b.width == 10);

  CHECK_THROWS_AS(independent_set_td(c4, std::vector<Vertex>{}), PreconditionError);
  CHECK_THROWS_AS(independent_set_td(c4, std::vector<Vertex>{0, 1}), PreconditionError);
}

TEST_CASE("lifting path decompositions to larger alphabets") {
  const auto one = lift_pd(Decomposition::path({{0, 1}}), 1, 1, 4);
  CHECK(one.bags.size() == 1);
  CHECK(one.width() == 3);

  const Graph h122 = gen_hamming(1, 2, 2);
  const auto pw = exact_pathwidth(h122);
  const Decomposition pd = pd_from_ordering(h122, pw.order);
  CHECK(pd.width() == 2);
  const auto lifted = lift_pd(pd, 1, 2, 4);
  const auto r = validate_decomposition(gen_hamming(1, 4, 2), lifted);
  CHECK(r.ok);
  CHECK(r.width == 11);

  for (int t = 1; t <= 2; ++t) {
    const Graph h = gen_hamming(t, 2, 3);
    const Decomposition base = pd_from_ordering(h, exact_pathwidth(h).order);
    for (int q = 3; q <= 4; ++q) {
      const auto lr = validate_decomposition(gen_hamming(t, q, 3), lift_pd(base, t, 3, q));
      CHECK(lr.ok);
      const std::size_t half = static_cast<std::size_t>((q + 1) / 2);
      CHECK(*lr.width + 1 <= (base.width() + 1) * half * half * half);
      if (q == 4) CHECK(*lr.width + 1 == (base.width() + 1) * 8);
    }
  }
  CHECK_THROWS_AS(lift_pd(Decomposition::path({{0}, {1}}), 1, 1, 4), PreconditionError);
}

TEST_CASE("fill-in chordal completions") {
  const Graph c4 = make_cycle(4);
  const std::vector<Vertex> order{0, 1, 2, 3};
  const auto cert = fillin_chordal(c4, order);
  CHECK(cert.graph.edge_count() == 5);
  CHECK(cert.omega == 3);
  CHECK(is_chordal(cert.graph).chordal);

  const Graph path = make_path(6);
  const auto tree = fillin_chordal(path, std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(tree.graph.edge_count() == 5);
  CHECK(tree.omega == 2);

  for (const Graph& g : {gen_johnson(5, 2), gen_petersen(5, 2), gen_petersen(7, 2), gen_hamming(1, 2, 4)}) {
    const auto tw = exact_treewidth(g);
    const auto c = fillin_chordal(g, tw.order);
    CHECK(c.omega - 1 == tw.width);
    CHECK(clique_number_from_peo(c.graph, c.peo) == c.omega);
  }
}

TEST_CASE("chordality test") {
  const auto c4 = is_chordal(make_cycle(4));
  CHECK_FALSE(c4.chordal);
  CHECK(c4.witness_cycle.size() == 4);

  const auto c7 = is_chordal(make_cycle(7));
  CHECK_FALSE(c7.chordal);
  CHECK(c7.witness_cycle.size() == 7);

  const Graph chord = make_cycle(4).with_added_edges(std::vector<Edge>{{0, 2}});
  CHECK(is_chordal(chord).chordal);
  CHECK(is_chordal(make_complete(5)).chordal);

  const auto pet = is_chordal(gen_petersen(5, 2));
  REQUIRE_FALSE(pet.chordal);
  const Graph p = gen_petersen(5, 2);
  const auto& w = pet.witness_cycle;
  REQUIRE(w.size() >= 4);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == w.size() - 1);
      CHECK(p.adjacent(w[i], w[j]) == consecutive);
    }
}

TEST_CASE("bk prime is chordal with bounded cliques") {
  const Graph j = gen_johnson(5, 2);
  const auto h = fillin_chordal(j, exact_treewidth(j).order);
  const Graph bk = bk_prime(5, 2, h);
  const auto c = is_chordal(bk);
  REQUIRE(c.chordal);
  const std::size_t omega = clique_number_from_peo(bk, c.peo);
  CHECK(omega <= std::max<std::size_t>(h.omega, 4));
  CHECK(exact_treewidth(gen_bipartite_kneser(5, 2)).width <= omega - 1);

  const auto bad = fillin_chordal(make_cycle(10), std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK_THROWS_AS(bk_prime(5, 2, bad), PreconditionError);
}
