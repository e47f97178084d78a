#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "widthlab/error.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/numeric.hpp"

using namespace widthlab;

TEST_CASE("hamming graphs") {
  const Graph q3 = gen_hamming(1, 2, 3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  CHECK(q3.is_regular());
  CHECK(q3.max_degree() == 3);

  const Graph h223 = gen_hamming(2, 2, 3);
  CHECK(h223.edge_count() == 24);
  CHECK(h223.min_degree() == 6);

  for (int t = 3; t <= 5; ++t) {
    const Graph k = gen_hamming(t, 2, 3);
    CHECK(k.edge_count() == 28);
  }
  const Graph k9 = gen_hamming(2, 3, 2);
  CHECK(k9.edge_count() == 36);

  const Graph rook = gen_hamming(1, 3, 2);
  CHECK(rook.vertex_count() == 9);
  CHECK(rook.is_regular());
  CHECK(rook.max_degree() == 4);
}

TEST_CASE("hamming edges are monotone in t and match the distance") {
  for (int q = 2; q <= 3; ++q)
    for (int t = 1; t <= 3; ++t) {
      const Graph a = gen_hamming(t, q, 4), b = gen_hamming(t + 1, q, 4);
      for (auto [u, v] : a.edges()) {
        const auto& lu = std::get<VectorLabel>(a.label(u));
        const auto& lv = std::get<VectorLabel>(a.label(v));
        const int d = hamming_distance(lu, lv);
        CHECK((d >= 1 && d <= t));
        // Same vertex ids across t.
        CHECK(b.adjacent(u, v));
      }
    }
}

TEST_CASE("hamming degree sum matches the ball size") {
  for (int t = 1; t <= 3; ++t) {
    const Graph g = gen_hamming(t, 3, 4);
    BigInt deg = 0;
    for (int i = 1; i <= t; ++i) deg += binom_ext(4, i) * (BigInt(1) << i);
    CHECK(BigInt(g.max_degree()) == deg);
    CHECK(g.is_regular());
  }
}

TEST_CASE("binary hamming vertices follow the Hales order") {
  const Graph g = gen_hamming(1, 2, 2);
  std::vector<std::uint64_t> codes;
  for (Vertex v = 0; v < 4; ++v) codes.push_back(std::get<VectorLabel>(g.label(v)).code);
  // (0,0), (0,1), (1,0), (1,1) with coordinate 1 as bit 0.
  CHECK(codes == std::vector<std::uint64_t>{0b00, 0b10, 0b01, 0b11});
}

TEST_CASE("johnson graphs") {
  const Graph j = gen_johnson(5, 2);
  CHECK(j.vertex_count() == 10);
  CHECK(j.is_regular());
  CHECK(j.max_degree() == 6);
  const Graph k6 = gen_johnson(6, 1);
  CHECK(k6.edge_count() == 15);
  CHECK_THROWS_AS(gen_johnson(3, 3), ParameterError);
}

TEST_CASE("johnson graph is the weight-k slice of H(2,2,n)") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      const Graph j = gen_johnson(n, k);
      const Graph h = gen_hamming(2, 2, n);
      std::vector<Vertex> slice;
      for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (std::popcount(std::get<VectorLabel>(h.label(v)).code) == k) slice.push_back(v);
      const Graph induced = h.induced(slice);
      REQUIRE(induced.vertex_count() == j.vertex_count());
      for (Vertex v = 0; v < j.vertex_count(); ++v)
        CHECK(std::get<SubsetLabel>(j.label(v)).mask == std::get<VectorLabel>(induced.label(v)).code);
      CHECK(induced.edges() == j.edges());
    }
}

TEST_CASE("bipartite kneser graphs") {
  const Graph d = gen_bipartite_kneser(5, 2);
  CHECK(d.vertex_count() == 20);
  CHECK(d.edge_count() == 30);
  CHECK(d.is_regular());
  CHECK(d.max_degree() == 3);
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = 0; v < 10; ++v) CHECK_FALSE(d.adjacent(u, v));
  for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 3}, {7, 2}, {9, 3}, {12, 2}}) {
    const Graph g = gen_bipartite_kneser(n, k);
    CHECK(BigInt(g.max_degree()) == binom_ext(n - k, k));
    CHECK(g.is_regular());
  }
  CHECK_THROWS_AS(gen_bipartite_kneser(4, 2), ParameterError);
}

TEST_CASE("generalized petersen graphs") {
  const Graph p = gen_petersen(5, 2);
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  const Graph prism = gen_petersen(4, 1);
  CHECK(prism.edge_count() == 12);
  for (int n = 3; n <= 30; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      const Graph g = gen_petersen(n, k);
      CHECK(g.edge_count() == static_cast<std::size_t>(3 * n));
      CHECK(g.is_regular());
    }
  CHECK(p.adjacent(petersen_v(5, 5), petersen_v(5, 1)));
  CHECK(p.adjacent(petersen_u(5, 4), petersen_u(5, 1)));
  CHECK_THROWS_AS(gen_petersen(6, 3), ParameterError);
  CHECK_THROWS_AS(gen_petersen(2, 1), ParameterError);
}

TEST_CASE("labels are distinct") {
  for (const Graph& g : {gen_hamming(2, 3, 3), gen_johnson(6, 3), gen_bipartite_kneser(7, 3), gen_petersen(7, 3)}) {
    std::set<std::string> seen;
    for (Vertex v = 0; v < g.vertex_count(); ++v) seen.insert(label_to_string(g.label(v)));
    CHECK(seen.size() == g.vertex_count());
  }
}

TEST_CASE("graph construction rejects bad edges") {
  std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, loop), ParameterError);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, dup), ParameterError);
  std::vector<Edge> far{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(2, far), ParameterError);
  CHECK_THROWS_AS(gen_hamming(0, 2, 3), ParameterError);
  CHECK_THROWS_AS(gen_hamming(1, 1, 3), ParameterError);
}

TEST_CASE("adjacency agrees between dense and sparse paths") {
  const Graph big = gen_petersen(2500, 7);  // 5000 vertices: sparse path
  const Graph small = gen_petersen(25, 7);
  for (Vertex v = 0; v < 50; ++v)
    for (Vertex w = 0; w < 50; ++w) {
      const bool expected = std::binary_search(small.neighbors(v).begin(), small.neighbors(v).end(), w);
      CHECK(small.adjacent(v, w) == expected);
    }
  CHECK(big.adjacent(petersen_v(2500, 1), petersen_u(2500, 1)));
  CHECK_FALSE(big.adjacent(petersen_v(2500, 1), petersen_u(2500, 2)));
}

TEST_CASE(".gr round trip keeps labels and family") {
  for (const Graph& g : {gen_petersen(5, 2), gen_hamming(2, 3, 2), gen_johnson(5, 2), gen_bipartite_kneser(5, 2)}) {
    std::stringstream ss;
    write_gr(ss, g);
    const Graph back = read_gr(ss);
    CHECK(back == g);
    CHECK(back.family() == g.family());
    std::stringstream again;
    write_gr(again, back);
    std::stringstream first;
    write_gr(first, g);
    CHECK(again.str() == first.str());
  }
}

TEST_CASE(".gr parse errors carry line numbers") {
  std::istringstream bad_header("p td 3 2\n1 2\n");
  try {
    read_gr(bad_header);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  std::istringstream bad_edge("p tw 3 2\n1 2\n1 9\n");
  try {
    read_gr(bad_edge);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream short_count("c plain\np tw 3 2\n1 2\n");
  CHECK_THROWS_AS(read_gr(short_count), ParseError);
}
