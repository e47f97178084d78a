#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "widthlab/graph.hpp"
#include "widthlab/hypergraph.hpp"
#include "widthlab/numeric.hpp"

namespace widthlab {

struct Bramble {
  std::vector<std::vector<Vertex>> sets;  // each sorted

  /// The sets as hyperedges over vertex_count vertices.
  Hypergraph hypergraph(std::size_t vertex_count) const;
};

/// V_i = {v_i..v_{i+t}, u_{i+t}, u_{i+t+k}, ..., u_{i+t+tk}}, t = ceil(n/(2k+2)).
Bramble petersen_bramble(int n, int k);
int petersen_bramble_t(int n, int k);

struct BrambleReport {
  bool ok = false;
  std::optional<std::size_t> disconnected_set;
  std::optional<std::pair<std::size_t, std::size_t>> non_touching;
};

/// Connectivity of each set, then touching for all pairs (first failure in
/// lexicographic order is reported).
BrambleReport validate_bramble(const Graph& g, const Bramble& b);

/// m(H) / Delta(H).
Rational transversal_fraction_bound(const Hypergraph& h);

/// ceil(n/(t+1)) with t = ceil(n/(2k+2)); requires n >= 8(2k+2)^2.
std::int64_t petersen_order_lower_bound(int n, int k);

/// Integer adjacency spectrum as (eigenvalue, multiplicity), eigenvalues
/// strictly decreasing.
struct Spectrum {
  std::vector<std::pair<std::int64_t, BigInt>> pairs;

  void normalise();
  BigInt total_multiplicity() const;
  std::int64_t largest() const;
  /// Second largest eigenvalue counted with multiplicity.
  std::int64_t second_largest() const;
};

/// Spectrum of BK(2k+1,k): +-i with multiplicity C(n,k+1-i) - C(n,k-i).
Spectrum bk_spectrum(int k);

struct SpectrumReport {
  bool ok = false;
  std::optional<int> failing_power;
  bool annihilates = false;  // prod (A - lambda I) = 0 over distinct lambda
  std::vector<BigInt> traces;
  std::vector<BigInt> moments;
};

constexpr std::size_t kSpectrumVertexCap = 400;

/// trace(A^p) = sum m_i lambda_i^p for p = 0..p_max, exact.
SpectrumReport verify_spectrum_moments(const Graph& g, const Spectrum& s, int p_max);

/// floor((3|V|/4) mu / (Delta + 2 mu)) - 1, mu = d - lambda_2.
std::int64_t spectral_lower_bound(const Graph& g, const Spectrum& s);

/// floor((3/2) C(2k+1,k) / (k+3)) - 1.
BigInt bk_spectral_lb(int k);

std::size_t degree_lower_bound(const Graph& g);

}  // namespace widthlab
