#include "widthlab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "widthlab/error.hpp"

namespace widthlab {

Hypergraph Bramble::hypergraph(std::size_t vertex_count) const {
  Hypergraph h{vertex_count, sets};
  h.validate();
  return h;
}

int petersen_bramble_t(int n, int k) { return (n + 2 * k + 1) / (2 * k + 2); }

Bramble petersen_bramble(int n, int k) {
  if (!(k >= 1 && n >= 2 * k + 1)) throw ParameterError("petersen_bramble requires k >= 1 and n >= 2k+1");
  const int t = petersen_bramble_t(n, k);
  Bramble b;
  for (int i = 1; i <= n; ++i) {
    std::vector<Vertex> s;
    for (int j = 0; j <= t; ++j) s.push_back(petersen_v(n, i + j));
    for (int j = 0; j <= t; ++j) s.push_back(petersen_u(n, i + t + j * k));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    b.sets.push_back(std::move(s));
  }
  return b;
}

BrambleReport validate_bramble(const Graph& g, const Bramble& b) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = (n + 63) / 64;
  BrambleReport report;
  std::vector<std::vector<std::uint64_t>> members(b.sets.size(), std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<std::uint64_t>> closed(b.sets.size(), std::vector<std::uint64_t>(words, 0));
  auto put = [](std::vector<std::uint64_t>& row, Vertex v) { row[v / 64] |= std::uint64_t{1} << (v % 64); };
  auto has = [](const std::vector<std::uint64_t>& row, Vertex v) { return (row[v / 64] >> (v % 64)) & 1U; };

  for (std::size_t i = 0; i < b.sets.size(); ++i) {
    const auto& s = b.sets[i];
    for (Vertex v : s) {
      if (v >= n) throw PreconditionError("bramble set names a vertex outside the graph");
      put(members[i], v);
      put(closed[i], v);
      for (Vertex w : g.neighbors(v)) put(closed[i], w);
    }
    // Traversal inside the set.
    bool connected = !s.empty();
    if (connected) {
      std::vector<std::uint64_t> seen(words, 0);
      std::vector<Vertex> stack{s.front()};
      put(seen, s.front());
      std::size_t reached = 1;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
          if (has(members[i], w) && !has(seen, w)) {
            put(seen, w);
            ++reached;
            stack.push_back(w);
          }
      }
      connected = reached == s.size();
    }
    if (!connected && !report.disconnected_set) report.disconnected_set = i;
  }
  if (report.disconnected_set) return report;

  for (std::size_t i = 0; i < b.sets.size(); ++i)
    for (std::size_t j = i + 1; j < b.sets.size(); ++j) {
      bool touch = false;
      for (std::size_t w = 0; w < words && !touch; ++w) touch = (closed[i][w] & members[j][w]) != 0;
      if (!touch) {
        report.non_touching = std::pair{i, j};
        return report;
      }
    }
  report.ok = true;
  return report;
}

Rational transversal_fraction_bound(const Hypergraph& h) {
  if (h.edges.empty()) throw PreconditionError("transversal_fraction_bound of an empty hypergraph");
  h.validate();
  return Rational(BigInt(h.edge_count()), BigInt(h.max_degree()));
}

std::int64_t petersen_order_lower_bound(int n, int k) {
  if (!(k >= 1 && n >= 2 * k + 1)) throw ParameterError("petersen_order_lower_bound requires k >= 1 and n >= 2k+1");
  const std::int64_t width = 2 * k + 2;
  if (n < 8 * width * width)
    throw HypothesisError("petersen_order_lower_bound needs n >= 8(2k+2)^2 = " + std::to_string(8 * width * width));
  const std::int64_t t = (n + width - 1) / width;
  return (n + t) / (t + 1);
}

// ---- spectra ----

void Spectrum::normalise() {
  std::map<std::int64_t, BigInt, std::greater<>> merged;
  for (auto& [l, m] : pairs) merged[l] += m;
  pairs.clear();
  for (auto& [l, m] : merged)
    if (m != 0) pairs.emplace_back(l, m);
}

BigInt Spectrum::total_multiplicity() const {
  BigInt t = 0;
  for (const auto& [l, m] : pairs) t += m;
  return t;
}

std::int64_t Spectrum::largest() const {
  if (pairs.empty()) throw PreconditionError("empty spectrum");
  return pairs.front().first;
}

std::int64_t Spectrum::second_largest() const {
  if (pairs.empty() || (pairs.size() == 1 && pairs.front().second < 2))
    throw PreconditionError("spectrum has fewer than two eigenvalues");
  if (pairs.front().second >= 2) return pairs.front().first;
  return pairs[1].first;
}

Spectrum bk_spectrum(int k) {
  if (k < 1) throw ParameterError("bk_spectrum requires k >= 1");
  const int n = 2 * k + 1;
  Spectrum s;
  for (int i = 1; i <= k + 1; ++i) {
    const BigInt m = binom_ext(n, k + 1 - i) - binom_ext(n, k - i);
    s.pairs.emplace_back(i, m);
    s.pairs.emplace_back(-i, m);
  }
  s.normalise();
  return s;
}

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

// m * (A + shift I) with overflow detection.
Matrix times_adjacency(const Matrix& m, const Graph& g, std::int64_t shift) {
  const std::size_t n = g.vertex_count();
  Matrix out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      __int128 acc = static_cast<__int128>(m[i][j]) * shift;
      for (Vertex w : g.neighbors(static_cast<Vertex>(j))) acc += m[i][w];
      if (acc > INT64_MAX || acc < INT64_MIN) throw SizeError("spectrum check overflows 64-bit entries");
      out[i][j] = static_cast<std::int64_t>(acc);
    }
  return out;
}

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SpectrumReport verify_spectrum_moments(const Graph& g, const Spectrum& s, int p_max) {
  const std::size_t n = g.vertex_count();
  if (n > kSpectrumVertexCap) throw SizeError("verify_spectrum_moments: more than 400 vertices");
  if (p_max < 2) throw ParameterError("verify_spectrum_moments requires p_max >= 2");
  SpectrumReport report;
  Matrix power = identity(n);
  for (int p = 0; p <= p_max; ++p) {
    if (p > 0) power = times_adjacency(power, g, 0);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += power[i][i];
    BigInt moment = 0;
    for (const auto& [l, m] : s.pairs) moment += m * pow(BigInt(l), static_cast<unsigned>(p));
    report.traces.push_back(trace);
    report.moments.push_back(moment);
    if (trace != moment && !report.failing_power) report.failing_power = p;
  }
  Matrix product = identity(n);
  for (const auto& [l, m] : s.pairs) product = times_adjacency(product, g, -l);
  report.annihilates = std::all_of(product.begin(), product.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](std::int64_t x) { return x == 0; });
  });
  report.ok = !report.failing_power && report.annihilates;
  return report;
}

std::int64_t spectral_lower_bound(const Graph& g, const Spectrum& s) {
  if (!g.is_regular()) throw PreconditionError("spectral_lower_bound requires a regular graph");
  const auto d = static_cast<std::int64_t>(g.max_degree());
  if (s.largest() != d) throw PreconditionError("largest eigenvalue differs from the degree");
  const int p_max = std::max<int>(2, 2 * static_cast<int>(s.pairs.size()));
  if (!verify_spectrum_moments(g, s, p_max).ok) throw PreconditionError("spectrum failed verification");
  const std::int64_t mu = d - s.second_largest();
  const Rational value = Rational(BigInt(3) * BigInt(g.vertex_count()) * mu, BigInt(4) * (d + 2 * mu));
  return static_cast<std::int64_t>(floor_rational(value)) - 1;
}

BigInt bk_spectral_lb(int k) {
  if (k < 1) throw ParameterError("bk_spectral_lb requires k >= 1");
  return floor_rational(Rational(BigInt(3) * binom_ext(2 * k + 1, k), BigInt(2) * (k + 3))) - 1;
}

std::size_t degree_lower_bound(const Graph& g) { return g.min_degree(); }

}  // namespace widthlab
