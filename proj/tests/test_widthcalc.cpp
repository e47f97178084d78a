#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "widthlab/error.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/hales.hpp"
#include "widthlab/numeric.hpp"
#include "widthlab/oracles.hpp"
#include "widthlab/widthcalc.hpp"

using namespace widthlab;

namespace {

BigInt hypercube_bandwidth(int n) {
  BigInt s = 0;
  for (int k = 0; k < n; ++k) s += binom_ext(k, k / 2);
  return s;
}

}  // namespace

TEST_CASE("matrix bandwidth and radius of small matrices") {
  BooleanBlock m(3, 3);
  CHECK_THROWS_AS(matrix_bandwidth(m), UndefinedValueError);
  CHECK(manhattan_radius(m).is_neg_infinity());
  m.set(0, 2);
  m.set(2, 0);
  CHECK(matrix_bandwidth(m) == 2);
  CHECK(manhattan_radius(m).value() == 5);
  BooleanBlock rect(2, 3);
  CHECK_THROWS_AS(matrix_bandwidth(rect), PreconditionError);
}

TEST_CASE("radius values order -infinity first") {
  const RadiusValue ninf;
  const RadiusValue three(BigInt(3));
  CHECK(ninf < three);
  CHECK(max(ninf, three) == three);
  CHECK((ninf + BigInt(5)).is_neg_infinity());
  CHECK((three + BigInt(2)).value() == 5);
  CHECK_THROWS_AS(ninf.value(), UndefinedValueError);
  CHECK(ninf.to_string() == "-inf");
}

TEST_CASE("full matrix is the Hales-ordered adjacency matrix") {
  for (int n = 1; n <= 5; ++n)
    for (int t = 1; t <= n; ++t) {
      const BooleanBlock m = assemble_full(t, n);
      const Graph g = gen_hamming(t, 2, n);
      REQUIRE(m.rows() == g.vertex_count());
      CHECK(m.is_symmetric());
      CHECK(m.count_ones() == 2 * g.edge_count());
      CHECK(matrix_bandwidth(m) == ordering_bandwidth(g, Ordering::identity(g.vertex_count())));
    }
}

TEST_CASE("bw closed form matches the matrix, the recursion and Harper") {
  for (int n = 1; n <= 9; ++n)
    for (int t = 1; t <= n; ++t) {
      const BigInt closed = bw_closed(t, n);
      CHECK(closed == bw_recursion(t, n));
      if (n <= 8) CHECK(closed == BigInt(matrix_bandwidth(assemble_full(t, n))));
      if (t >= n) CHECK(closed == (BigInt(1) << n) - 1);
    }
  for (int n = 1; n <= 12; ++n) CHECK(bw_closed(1, n) == hypercube_bandwidth(n));
}

TEST_CASE("bw closed form is the exact bandwidth for n = 3") {
  for (int t = 1; t <= 3; ++t)
    CHECK(BigInt(exact_bandwidth(gen_hamming(t, 2, 3)).bandwidth) == bw_closed(t, 3));
}

TEST_CASE("recursive radius equals direct radius") {
  RadiusMemo memo;
  for (int n = 1; n <= 8; ++n)
    for (int t = 1; t <= n + 1; ++t)
      for (int k = 0; k <= n; ++k)
        for (int p = 0; k + p <= n; ++p)
          CHECK(radius_recursive(t, n, k, p, &memo) == manhattan_radius(assemble_block(t, n, k, k + p)));
}

TEST_CASE("closed radius equals recursive radius on valid tuples") {
  for (int n = 1; n <= 10; ++n)
    for (int t = 1; t <= n + 1; ++t)
      for (int s = 0; 2 * s <= t; ++s)
        for (int k = 0; k <= n; ++k) {
          if (!radius_tuple_valid(t, n, k, s)) continue;
          CHECK(radius_closed(t, n, k, s) == radius_recursive(t, n, k, t - 2 * s));
        }
}

TEST_CASE("closed radius special values") {
  const auto branches = radius_closed_branches(2, 5, 2, 1);
  CHECK(branches == std::vector<BigInt>{17, 17});
  CHECK(radius_closed_formula(2, 4, 0, 1) == 1);
  CHECK(radius_closed(2, 4, 0, 1).is_neg_infinity());
  CHECK(radius_closed(2, 4, 4, 1).is_neg_infinity());
  CHECK_FALSE(radius_tuple_valid(2, 4, 0, 2));
  CHECK_FALSE(radius_tuple_valid(2, 4, 4, 0));
}

TEST_CASE("johnson slice bandwidth") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(johnson_slice_bandwidth(n, k) == BigInt(matrix_bandwidth(assemble_block(2, n, k, k))));
  CHECK(johnson_slice_bandwidth(17, 8) == 13495);
  CHECK(binom_ext(17, 8) == 24310);
}

TEST_CASE("johnson slice ratios") {
  auto ratio = [](int k) {
    const BigInt b = johnson_slice_bandwidth(2 * k + 1, k);
    return static_cast<double>(b) / static_cast<double>(binom_ext(2 * k + 1, k));
  };
  CHECK(ratio(12) == doctest::Approx(0.5358642770609388).epsilon(1e-12));
  CHECK(ratio(16) == doctest::Approx(0.526638196910531).epsilon(1e-12));
}

TEST_CASE("Harper bound frozen values") {
  const HarperBound a = harper_lower_bound(1, 2, 4, 8);
  CHECK(a.value <= Rational(538957650712921LL, 100000000000000LL));
  CHECK(a.value >= Rational(5389575, 1000000));
  const HarperBound b = harper_lower_bound(2, 2, 4, 1);
  CHECK(b.value == Rational(9999999, 1000000));
  CHECK(harper_lower_bound(1, 2, 4, 16).value == 0);
  const HarperBound c = harper_lower_bound(2, 3, 3, 5);
  CHECK(c.value <= Rational(19853190916355025LL, 1000000000000000LL));
  CHECK(c.value >= Rational(19853189, 1000000));
}

TEST_CASE("Harper bound never exceeds the optimal boundary") {
  for (int t = 1; t <= 2; ++t) {
    const Graph g = gen_hamming(t, 2, 4);
    const auto profile = b_v_profile(g);
    for (int m = 1; m <= 16; ++m) CHECK(harper_lower_bound(t, 2, 4, m).value <= Rational(profile[m]));
  }
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(assemble_full(1, 15), SizeError);
  CHECK_THROWS_AS(assemble_block(2, 21, 10, 10), SizeError);
}
