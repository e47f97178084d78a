#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "widthlab/error.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/hales.hpp"
#include "widthlab/numeric.hpp"
#include "widthlab/oracles.hpp"
#include "widthlab/widthcalc.hpp"

using namespace widthlab;

TEST_CASE("slice orders for n = 3") {
  CHECK(slice_order(3, 0).rows == std::vector<std::uint64_t>{0});
  CHECK(slice_order(3, 1).rows == std::vector<std::uint64_t>{4, 2, 1});
  CHECK(slice_order(3, 2).rows == std::vector<std::uint64_t>{6, 5, 3});
  CHECK(slice_order(3, 3).rows == std::vector<std::uint64_t>{7});
}

TEST_CASE("slice orders have the right size and weight") {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      const SliceOrder s = slice_order(n, k);
      CHECK(BigInt(s.rows.size()) == binom_ext(n, k));
      for (auto r : s.rows) CHECK(std::popcount(r) == k);
    }
  CHECK_THROWS(slice_order(3, 4));
}

TEST_CASE("hales sequence is a permutation") {
  for (int n = 1; n <= 10; ++n) {
    const auto seq = hales_sequence(n);
    REQUIRE(seq.size() == (std::size_t{1} << n));
    std::vector<bool> seen(seq.size());
    for (auto r : seq) {
      CHECK_FALSE(seen[r]);
      seen[r] = true;
    }
    const Ordering o = hales_order(n);
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(o.rank(static_cast<Vertex>(seq[i])) == i + 1);
  }
}

TEST_CASE("ordering bijection") {
  const Ordering o = Ordering::from_sequence({2, 0, 1});
  CHECK(o.rank(2) == 1);
  CHECK(o.at_rank(3) == 1);
  CHECK(o.reversed().sequence() == std::vector<Vertex>{1, 0, 2});
  CHECK_THROWS_AS(Ordering::from_sequence({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Ordering::from_sequence({0, 3}), PreconditionError);
}

TEST_CASE("Hales order is a Hales numbering of H(t,2,n)") {
  for (int n = 1; n <= 4; ++n)
    for (int t = 1; t <= n; ++t) {
      const Graph g = gen_hamming(t, 2, n);
      const HalesReport r = verify_hales_property(g, Ordering::identity(g.vertex_count()));
      CHECK(r.ok);
      CHECK(r.prefix_boundary == std::vector<std::size_t>(r.optimal_boundary.begin(), r.optimal_boundary.end()));
    }
}

TEST_CASE("largest prefix boundary is the closed-form bandwidth") {
  for (int n = 1; n <= 4; ++n)
    for (int t = 1; t <= 3; ++t) {
      const Graph g = gen_hamming(t, 2, n);
      const HalesReport r = verify_hales_property(g, Ordering::identity(g.vertex_count()));
      CHECK(BigInt(r.max_prefix_boundary()) == bw_closed(t, n));
    }
}

TEST_CASE("lexicographic order of Q3 is not a Hales numbering") {
  const Graph g = gen_hamming(1, 2, 3);
  std::vector<Vertex> lex(8);
  for (Vertex v = 0; v < 8; ++v) {
    for (Vertex w = 0; w < 8; ++w)
      if (std::get<VectorLabel>(g.label(w)).code == v) lex[v] = w;
  }
  const HalesReport r = verify_hales_property(g, Ordering::from_sequence(lex));
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_violation.has_value());
  CHECK(*r.first_violation == 4);
  CHECK(r.failed_condition == 1);
  CHECK(r.prefix_boundary[3] == 4);
  CHECK(r.optimal_boundary[3] == 3);
}

TEST_CASE("optimal boundary agrees with the oracle") {
  const Graph g = gen_hamming(1, 2, 4);
  const HalesReport r = verify_hales_property(g, Ordering::identity(16));
  const auto profile = b_v_profile(g);
  for (std::size_t l = 1; l <= 16; ++l) CHECK(r.optimal_boundary[l - 1] == profile[l]);
}

TEST_CASE("Hales check enforces its size limit") {
  const Graph g = gen_hamming(1, 2, 5);
  CHECK_THROWS_AS(verify_hales_property(g, Ordering::identity(32)), SizeError);
}
