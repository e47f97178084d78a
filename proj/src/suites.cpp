#include "widthlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "widthlab/bounds.hpp"
#include "widthlab/decomp.hpp"
#include "widthlab/error.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/hales.hpp"
#include "widthlab/numeric.hpp"
#include "widthlab/oracles.hpp"
#include "widthlab/widthcalc.hpp"

namespace widthlab {

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const SuiteRecord& r) { return !r.holds && !r.known; }));
}

std::size_t SuiteReport::known_flags() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const SuiteRecord& r) { return r.known; }));
}

namespace {

using Records = std::vector<SuiteRecord>;

template <typename T>
std::string str(const T& v) {
  if constexpr (std::is_same_v<T, std::string>) {
    return v;
  } else if constexpr (std::is_same_v<T, BigInt> || std::is_same_v<T, Rational>) {
    return to_string(v);
  } else if constexpr (std::is_same_v<T, RadiusValue>) {
    return v.to_string();
  } else {
    return std::to_string(v);
  }
}

template <typename A, typename B>
SuiteRecord equal_record(std::string instance, std::string check, const A& lhs, const B& rhs) {
  SuiteRecord r{std::move(instance), std::move(check), str(lhs), "=", str(rhs), false, false};
  if constexpr (std::is_same_v<A, B>) r.holds = lhs == rhs;
  else r.holds = r.lhs == r.rhs;
  return r;
}

template <typename A, typename B>
SuiteRecord le_record(std::string instance, std::string check, const A& lhs, const B& rhs) {
  return {std::move(instance), std::move(check), str(lhs), "<=", str(rhs), lhs <= rhs, false};
}

SuiteRecord bool_record(std::string instance, std::string check, bool value, std::string detail = "") {
  return {std::move(instance), std::move(check), detail.empty() ? (value ? "true" : "false") : detail, "=",
          value ? (detail.empty() ? "true" : detail) : "true", value, false};
}

// Runs job(i) for i in [0, count) on `workers` threads; output order is by i.
Records run_jobs(std::size_t count, int workers, const std::function<Records(std::size_t)>& job) {
  std::vector<Records> parts(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        parts[i] = job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(threads, count); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Records out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

std::string tuple_name(std::initializer_list<int> xs) {
  std::string s = "(";
  for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

std::string hamming_name(int t, int q, int n) { return "H" + tuple_name({t, q, n}); }

std::string petersen_edge_name(int n, Vertex a, Vertex b) {
  auto name = [n](Vertex v) {
    return (static_cast<int>(v) < n ? "v" : "u") + std::to_string(static_cast<int>(v) % n + 1);
  };
  return name(a) + name(b);
}

std::string edge_list(int n, const std::vector<Edge>& edges) {
  std::string s = "{";
  for (auto [a, b] : edges) s += (s.size() > 1 ? "," : "") + petersen_edge_name(n, a, b);
  return s + "}";
}

// ---- suites ----

Records suite_theorem1(const SuiteConfig& c) {
  const int t_max = c.t_max.value_or(3), n_max = c.n_max.value_or(4);
  const std::size_t cap = c.cap.value_or(kPathwidthCap);
  Records out;
  for (int t = 1; t <= t_max; ++t)
    for (int n = t + 1; n <= n_max; ++n) {
      const auto inst = hamming_name(t, 2, n);
      const BigInt closed = bw_closed(t, n);
      out.push_back(equal_record(inst, "bw_closed = matrix_bandwidth(M)", closed,
                                 BigInt(matrix_bandwidth(assemble_full(t, n)))));
      const Graph g = gen_hamming(t, 2, n);
      out.push_back(equal_record(inst, "bw_closed = exact_pathwidth", closed, BigInt(exact_pathwidth(g, cap).width)));
      if (n <= 3)
        out.push_back(equal_record(inst, "bw_closed = exact_bandwidth", closed,
                                   BigInt(exact_bandwidth(g, std::min(cap, kBandwidthCap)).bandwidth)));
    }
  return out;
}

Records suite_appendix_a(const SuiteConfig& c) {
  const int n_max = c.n_max.value_or(10);
  if (n_max > kBlockDimensionCap) throw SizeError("appendixA: n above block cap");
  struct Tuple {
    int t, n, k, s;
  };
  std::vector<Tuple> tuples;
  for (int n = 1; n <= n_max; ++n)
    for (int t = 1; t <= std::min(n + 1, c.t_max.value_or(n + 1)); ++t)
      for (int s = 0; 2 * s <= t; ++s)
        for (int k = 0; k + t - 2 * s <= n; ++k) tuples.push_back({t, n, k, s});
  return run_jobs(tuples.size(), c.workers, [&](std::size_t i) {
    const auto [t, n, k, s] = tuples[i];
    const int p = t - 2 * s;
    const auto inst = tuple_name({t, n, k, s});
    Records out;
    const auto branches = radius_closed_branches(t, n, k, s);
    if (branches.size() > 1)
      out.push_back(equal_record(inst, "closed-form branches agree at overlap", branches.front(), branches.back()));
    const RadiusValue closed = radius_closed(t, n, k, s);
    out.push_back(equal_record(inst, "radius_closed = radius_recursive", closed, radius_recursive(t, n, k, p)));
    out.push_back(equal_record(inst, "radius_closed = manhattan_radius(block)", closed,
                               manhattan_radius(assemble_block(t, n, k, k + p))));
    return out;
  });
}

Records suite_appendix_b(const SuiteConfig& c) {
  const int t_max = c.t_max.value_or(6), n_max = c.n_max.value_or(12);
  Records out;
  for (int t = 1; t <= t_max; ++t)
    for (int n = 1; n <= n_max; ++n)
      out.push_back(equal_record(tuple_name({t, n}), "bw_closed = bw_recursion", bw_closed(t, n), bw_recursion(t, n)));
  for (int n = 1; n <= 30; ++n) {
    BigInt sum = 0;
    for (int m = 0; m < n; ++m) sum += binom_ext(m, m / 2);
    out.push_back(equal_record(tuple_name({1, n}), "bw_closed(1,n) = sum C(m,floor(m/2))", bw_closed(1, n), sum));
  }
  for (int n = 2; n <= std::min(n_max, 10); ++n)
    for (int t = 1; t < n; ++t) {
      RadiusValue best;
      for (int k = 0; k + t <= n; ++k) best = max(best, rtilde(t, n, k, t));
      const int h = (n - t) / 2;
      out.push_back(equal_record(tuple_name({t, n}), "rtilde(M_{k,k+t}) maximal at k = floor((n-t)/2)",
                                 rtilde(t, n, h, t), best));
    }
  return out;
}

Records suite_hales(const SuiteConfig& c) {
  const int t_max = c.t_max.value_or(3), n_max = c.n_max.value_or(4);
  const std::size_t cap = c.cap.value_or(kPathwidthCap);
  Records out;
  for (int n = 1; n <= n_max; ++n)
    for (int t = 1; t <= t_max; ++t) {
      const auto inst = hamming_name(t, 2, n);
      const Graph g = gen_hamming(t, 2, n);
      std::vector<Vertex> id_of_code(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v) id_of_code[std::get<VectorLabel>(g.label(v)).code] = v;
      std::vector<Vertex> seq;
      for (auto code : hales_sequence(n)) seq.push_back(id_of_code[code]);
      const auto report = verify_hales_property(g, Ordering::from_sequence(seq));
      out.push_back(bool_record(inst, "hales order is a Hales numbering", report.ok,
                                report.ok ? "" : "violation at l=" + std::to_string(*report.first_violation)));
      const auto profile = b_v_profile(g);
      const std::size_t max_bv = *std::max_element(profile.begin() + 1, profile.end());
      const BigInt closed = bw_closed(t, n);
      out.push_back(equal_record(inst, "max_l b_v(l) = bw_closed", BigInt(max_bv), closed));
      out.push_back(equal_record(inst, "max prefix boundary = bw_closed", BigInt(report.max_prefix_boundary()), closed));
      const std::size_t pw = exact_pathwidth(g, cap).width;
      out.push_back({inst, "pw >= b_v(s) for all s", std::to_string(pw), ">=", std::to_string(max_bv), pw >= max_bv, false});
      if (n == 4)
        for (std::size_t m = 1; m <= g.vertex_count(); ++m) {
          const auto bound = harper_lower_bound(t, 2, n, BigInt(m));
          out.push_back(le_record(inst + " m=" + std::to_string(m), "harper_lower_bound <= b_v(m)", bound.value,
                                  Rational(BigInt(profile[m]))));
        }
    }
  // Negative control: reversed binary counting on H(1,2,3).
  const Graph q3 = gen_hamming(1, 2, 3);
  std::vector<Vertex> id_of_code(8);
  for (Vertex v = 0; v < 8; ++v) id_of_code[std::get<VectorLabel>(q3.label(v)).code] = v;
  std::vector<Vertex> seq;
  for (int x = 7; x >= 0; --x) seq.push_back(id_of_code[x]);
  const auto rev = verify_hales_property(q3, Ordering::from_sequence(seq));
  out.push_back(bool_record("H(1,2,3) reversed binary", "non-Hales order is rejected", !rev.ok,
                            rev.ok ? "" : "violation at l=" + std::to_string(*rev.first_violation)));
  return out;
}

Records suite_petersen(const SuiteConfig& c) {
  const int k_max = c.k_max.value_or(5), n_max = c.n_max.value_or(2000);
  std::vector<std::pair<int, int>> grid;
  for (int k = 1; k <= k_max; ++k)
    for (int n = 2 * k + 1; n <= n_max; ++n) grid.emplace_back(n, k);
  return run_jobs(grid.size(), c.workers, [&](std::size_t i) {
    const auto [n, k] = grid[i];
    const auto inst = "G" + tuple_name({n, k});
    const Graph g = gen_petersen(n, k);
    Records out;
    auto width_record = [&](PetersenMode mode, const char* label) {
      const auto rep = validate_decomposition(g, petersen_pd(n, k, mode));
      return SuiteRecord{inst, std::string(label) + " path decomposition valid with width 2k+2",
                         rep.ok ? std::to_string(*rep.width) : "invalid", "=", std::to_string(2 * k + 2),
                         rep.ok && *rep.width == static_cast<std::size_t>(2 * k + 2), false};
    };
    out.push_back(width_record(PetersenMode::repaired, "repaired"));
    if (k == 1) {
      out.push_back(width_record(PetersenMode::verbatim, "verbatim"));
    } else {
      const auto rep = validate_decomposition(g, petersen_pd(n, k, PetersenMode::verbatim));
      std::vector<Edge> expected;
      for (int j = k + 1; j <= 2 * k - 1; ++j) {
        Vertex a = petersen_v(n, j), b = petersen_u(n, j);
        expected.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(expected.begin(), expected.end());
      const bool match = rep.uncovered_edges == expected && rep.missing_vertices.empty() &&
                         rep.disconnected_vertices.empty();
      out.push_back({inst, "verbatim path decomposition leaves spokes v_j u_j (k+1 <= j <= 2k-1) uncovered",
                     edge_list(n, rep.uncovered_edges), "=", edge_list(n, expected), match, true});
    }
    return out;
  });
}

Records suite_bramble(const SuiteConfig& c) {
  const int k_max = c.k_max.value_or(4), n_max = c.n_max.value_or(500);
  std::vector<std::pair<int, int>> grid;
  for (int k = 1; k <= k_max; ++k)
    for (int n = 2 * k + 2; n <= n_max; ++n) grid.emplace_back(n, k);
  Records out = run_jobs(grid.size(), c.workers, [&](std::size_t i) {
    const auto [n, k] = grid[i];
    const auto inst = "G" + tuple_name({n, k});
    const Graph g = gen_petersen(n, k);
    const Bramble b = petersen_bramble(n, k);
    const int t = petersen_bramble_t(n, k);
    bool sizes = std::all_of(b.sets.begin(), b.sets.end(),
                             [&](const auto& s) { return s.size() == static_cast<std::size_t>(2 * t + 2); });
    const auto rep = validate_bramble(g, b);
    std::string detail = "ok";
    if (rep.disconnected_set) detail = "V_" + std::to_string(*rep.disconnected_set + 1) + " disconnected";
    else if (rep.non_touching)
      detail = "V_" + std::to_string(rep.non_touching->first + 1) + ", V_" +
               std::to_string(rep.non_touching->second + 1) + " do not touch";
    Records r;
    r.push_back({inst, "bramble sets have size 2t+2", sizes ? "true" : "false", "=", "true", sizes, false});
    r.push_back({inst, "bramble valid (connected, pairwise touching)", detail, "=", "ok", rep.ok, false});
    return r;
  });
  for (int k = 1; k <= k_max; ++k) {
    const int w = 2 * k + 2;
    bool all = true;
    std::string worst;
    for (int n = 8 * w * w; n <= 8 * w * w + 5000; ++n)
      if (petersen_order_lower_bound(n, k) < w) {
        all = false;
        worst = std::to_string(n);
        break;
      }
    out.push_back({"k=" + std::to_string(k), "order bound >= 2k+2 on n in [8(2k+2)^2, 8(2k+2)^2+5000]",
                   all ? "true" : "fails at n=" + worst, "=", "true", all, false});
  }
  out.push_back(equal_record("(288,1)", "petersen_order_lower_bound", petersen_order_lower_bound(288, 1), std::int64_t{4}));
  out.push_back(equal_record("(800,2)", "petersen_order_lower_bound", petersen_order_lower_bound(800, 2), std::int64_t{6}));
  bool rejected = false;
  try {
    petersen_order_lower_bound(5, 2);
  } catch (const HypothesisError&) {
    rejected = true;
  }
  out.push_back(bool_record("(5,2)", "order bound hypothesis rejected", rejected));

  const Graph g = gen_petersen(5, 2);
  const Bramble b = petersen_bramble(5, 2);
  const auto h = b.hypergraph(g.vertex_count());
  const std::size_t tau = exact_transversal(h);
  const std::size_t tw = exact_treewidth(g, c.cap.value_or(kTreewidthCap)).width;
  out.push_back(equal_record("G(5,2)", "exact_transversal(bramble) = 3", tau, std::size_t{3}));
  out.push_back(equal_record("G(5,2)", "exact_treewidth = 4", tw, std::size_t{4}));
  out.push_back({"G(5,2)", "tw >= order - 1", std::to_string(tw), ">=", std::to_string(tau - 1), tw + 1 >= tau, false});
  out.push_back(le_record("G(5,2)", "transversal_fraction_bound <= exact_transversal", transversal_fraction_bound(h),
                          Rational(BigInt(tau))));
  return out;
}

Records suite_kneser(const SuiteConfig& c) {
  const std::size_t cap = c.cap.value_or(kTreewidthCap);
  const int n = 5, k = 2;
  Records out;
  const Graph j = gen_johnson(n, k);
  const Graph bk = gen_bipartite_kneser(n, k);
  const auto tw_j = exact_treewidth(j, cap);
  const auto tw_bk = exact_treewidth(bk, cap);
  const auto h = fillin_chordal(j, tw_j.order);
  out.push_back(equal_record("J(5,2)", "omega(fill-in) - 1 = tw", h.omega - 1, tw_j.width));
  const Graph prime = bk_prime(n, k, h);
  const auto chordal = is_chordal(prime);
  out.push_back(bool_record("BK'(5,2)", "bk_prime output is chordal", chordal.chordal));
  if (chordal.chordal) {
    const std::size_t omega = clique_number_from_peo(prime, chordal.peo);
    out.push_back(le_record("BK'(5,2)", "omega <= max(omega(H), k+2)", omega,
                            std::max<std::size_t>(h.omega, static_cast<std::size_t>(k + 2))));
    out.push_back({"BK(5,2)", "omega(BK') - 1 >= tw(BK)", std::to_string(omega - 1), ">=",
                   std::to_string(tw_bk.width), omega - 1 >= tw_bk.width, false});
  }
  out.push_back(le_record("(5,2)", "tw(BK) <= tw(J)", tw_bk.width, tw_j.width));
  out.push_back(le_record("J(5,2)", "degree bound <= tw", degree_lower_bound(j), tw_j.width));
  out.push_back(equal_record("J(5,2)", "degree bound = 6", degree_lower_bound(j), std::size_t{6}));
  out.push_back(equal_record("k=2", "bk_spectral_lb = 2", bk_spectral_lb(2), BigInt(2)));
  out.push_back(le_record("BK(5,2)", "bk_spectral_lb <= tw", bk_spectral_lb(2), BigInt(tw_bk.width)));
  out.push_back(equal_record("(5,2)", "johnson_slice_bandwidth = 7", johnson_slice_bandwidth(n, k), BigInt(7)));
  out.push_back({"J(5,2)", "johnson_slice_bandwidth >= tw", to_string(johnson_slice_bandwidth(n, k)), ">=",
                 std::to_string(tw_j.width), johnson_slice_bandwidth(n, k) >= tw_j.width, false});
  return out;
}

Records suite_theorem3(const SuiteConfig&) {
  Records out;
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {12, 2}}) {
    const Graph g = gen_bipartite_kneser(n, k);
    const auto m = bipartite_perfect_matching(g);
    out.push_back(bool_record("BK" + tuple_name({n, k}), "perfect matching exists", m.perfect,
                              m.perfect ? "" : "size " + std::to_string(m.pairs.size())));
  }
  const Graph g = gen_bipartite_kneser(12, 2);
  std::vector<Vertex> left;
  for (Vertex v = 0; v < 66; ++v) left.push_back(v);
  const auto rep = validate_decomposition(g, independent_set_td(g, left));
  out.push_back({"BK(12,2)", "independent_set_td(left part) valid with width |V| - alpha = 66",
                 rep.ok ? std::to_string(*rep.width) : "invalid", "=", "66", rep.ok && *rep.width == 66, false});
  for (int n = 4; n <= 7; ++n)
    out.push_back(equal_record("(" + std::to_string(n) + ",2)", "max_cross_intersecting_sum = C(n,2)-C(n-2,2)+1",
                               BigInt(max_cross_intersecting_sum(n, 2)),
                               BigInt(binom_ext(n, 2) - binom_ext(n - 2, 2) + 1)));
  return out;
}

Records suite_spectrum(const SuiteConfig& c) {
  const int k_max = c.k_max.value_or(3);
  Records out;
  for (int k = 1; k <= k_max; ++k) {
    const auto inst = "BK" + tuple_name({2 * k + 1, k});
    const Graph g = gen_bipartite_kneser(2 * k + 1, k);
    const Spectrum s = bk_spectrum(k);
    const auto rep = verify_spectrum_moments(g, s, 2 * (k + 1));
    out.push_back(bool_record(inst, "trace moments match for p <= 2(k+1)", !rep.failing_power,
                              rep.failing_power ? "mismatch at p=" + std::to_string(*rep.failing_power) : ""));
    out.push_back(bool_record(inst, "product of (A - lambda I) vanishes", rep.annihilates));
    out.push_back(equal_record(inst, "bk_spectral_lb = spectral_lower_bound", bk_spectral_lb(k),
                               BigInt(spectral_lower_bound(g, s))));
  }
  for (int k = 1; k <= 20; ++k) {
    const Spectrum s = bk_spectrum(k);
    const BigInt vertices = s.total_multiplicity();
    out.push_back(equal_record("k=" + std::to_string(k), "multiplicities sum to 2C(2k+1,k)", vertices,
                               BigInt(2 * binom_ext(2 * k + 1, k))));
    const std::int64_t d = s.largest(), mu = d - s.second_largest();
    const BigInt composed = floor_rational(Rational(3 * vertices * mu, BigInt(4) * (d + 2 * mu))) - 1;
    out.push_back(equal_record("k=" + std::to_string(k), "bk_spectral_lb = spectral_lower_bound on the spectrum", bk_spectral_lb(k),
                               composed));
  }
  return out;
}

Records suite_limit(const SuiteConfig& c) {
  const int k_lo = 8, k_hi = c.k_max.value_or(16);
  Records out;
  const Rational half(1, 2), lo(2, 5), hi(3, 5);
  std::optional<Rational> previous;
  for (int k = k_lo; k <= k_hi; ++k) {
    const Rational ratio(johnson_slice_bandwidth(2 * k + 1, k), binom_ext(2 * k + 1, k));
    const auto inst = "k=" + std::to_string(k);
    out.push_back({inst, "ratio in [2/5, 3/5]", to_string(ratio), "in", "[2/5,3/5]", lo <= ratio && ratio <= hi, false});
    const Rational gap = abs(ratio - half);
    if (previous)
      out.push_back({inst, "|ratio - 1/2| non-increasing", to_string(gap), "<=", to_string(*previous), gap <= *previous, false});
    previous = gap;
  }
  return out;
}

struct CrossInstance {
  std::string name;
  Graph graph;
  std::optional<Spectrum> spectrum;
  std::optional<Bramble> bramble;
};

Spectrum make_spectrum(std::initializer_list<std::pair<std::int64_t, int>> pairs) {
  Spectrum s;
  for (auto [l, m] : pairs) s.pairs.emplace_back(l, BigInt(m));
  s.normalise();
  return s;
}

Spectrum hypercube_spectrum(int n) {
  Spectrum s;
  for (int i = 0; i <= n; ++i) s.pairs.emplace_back(n - 2 * i, binom_ext(n, i));
  s.normalise();
  return s;
}

std::vector<CrossInstance> cross_instances() {
  std::vector<CrossInstance> v;
  v.push_back({"P5", make_path(5), std::nullopt, std::nullopt});
  v.push_back({"C4", make_cycle(4), make_spectrum({{2, 1}, {0, 2}, {-2, 1}}), std::nullopt});
  v.push_back({"C5", make_cycle(5), std::nullopt, std::nullopt});
  v.push_back({"C6", make_cycle(6), make_spectrum({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}), std::nullopt});
  v.push_back({"K4", make_complete(4), make_spectrum({{3, 1}, {-1, 3}}), std::nullopt});
  v.push_back({"G(4,1)", gen_petersen(4, 1), hypercube_spectrum(3), std::nullopt});
  v.push_back({"G(5,1)", gen_petersen(5, 1), std::nullopt, petersen_bramble(5, 1)});
  v.push_back({"G(5,2)", gen_petersen(5, 2), make_spectrum({{3, 1}, {1, 5}, {-2, 4}}), petersen_bramble(5, 2)});
  v.push_back({"G(6,2)", gen_petersen(6, 2), std::nullopt, std::nullopt});
  v.push_back({"H(1,2,3)", gen_hamming(1, 2, 3), hypercube_spectrum(3), std::nullopt});
  v.push_back({"H(2,2,3)", gen_hamming(2, 2, 3), make_spectrum({{6, 1}, {0, 4}, {-2, 3}}), std::nullopt});
  v.push_back({"H(1,3,2)", gen_hamming(1, 3, 2), make_spectrum({{4, 1}, {1, 4}, {-2, 4}}), std::nullopt});
  v.push_back({"H(1,2,4)", gen_hamming(1, 2, 4), hypercube_spectrum(4), std::nullopt});
  v.push_back({"H(2,2,4)", gen_hamming(2, 2, 4), make_spectrum({{10, 1}, {2, 4}, {-2, 6}, {-2, 4}, {2, 1}}), std::nullopt});
  v.push_back({"H(3,2,4)", gen_hamming(3, 2, 4), std::nullopt, std::nullopt});
  v.push_back({"J(5,2)", gen_johnson(5, 2), make_spectrum({{6, 1}, {1, 4}, {-2, 5}}), std::nullopt});
  v.push_back({"J(6,2)", gen_johnson(6, 2), make_spectrum({{8, 1}, {2, 5}, {-2, 9}}), std::nullopt});
  v.push_back({"BK(5,2)", gen_bipartite_kneser(5, 2), bk_spectrum(2), std::nullopt});
  return v;
}

Records suite_cross(const SuiteConfig& c) {
  const std::size_t cap = c.cap.value_or(kTreewidthCap);
  const auto instances = cross_instances();
  return run_jobs(instances.size(), c.workers, [&](std::size_t i) {
    const auto& inst = instances[i];
    const Graph& g = inst.graph;
    Records out;
    const auto tw = exact_treewidth(g, cap);
    const auto pw = exact_pathwidth(g, cap);
    out.push_back(le_record(inst.name, "tw <= pw", tw.width, pw.width));
    std::optional<std::size_t> bw;
    if (g.vertex_count() <= kBandwidthCap) {
      bw = exact_bandwidth(g).bandwidth;
      out.push_back(le_record(inst.name, "pw <= bw", pw.width, *bw));
    }
    out.push_back(le_record(inst.name, "degree bound <= tw", degree_lower_bound(g), tw.width));
    out.push_back(equal_record(inst.name, "omega(fill-in of optimal order) - 1 = tw",
                               fillin_chordal(g, tw.order).omega - 1, tw.width));
    if (g.vertex_count() <= kSeparatorCap) {
      const auto sep = min_balanced_separator(g, tw.width + 1);
      out.push_back({inst.name, "balanced separator of size <= tw+1 exists",
                     sep ? std::to_string(sep->separator.size()) : "none", "<=", std::to_string(tw.width + 1),
                     sep.has_value(), false});
    }
    if (g.vertex_count() <= kBoundaryCap) {
      const auto profile = b_v_profile(g);
      const std::size_t max_bv = *std::max_element(profile.begin() + 1, profile.end());
      out.push_back({inst.name, "pw >= max_s b_v(s)", std::to_string(pw.width), ">=", std::to_string(max_bv),
                     pw.width >= max_bv, false});
      if (bw) out.push_back(le_record(inst.name, "max_l b_v(l) <= bw", max_bv, *bw));
    }
    if (inst.spectrum) {
      const auto lb = spectral_lower_bound(g, *inst.spectrum);
      out.push_back(le_record(inst.name, "spectral bound <= tw", lb, static_cast<std::int64_t>(tw.width)));
    }
    if (inst.bramble) {
      const auto rep = validate_bramble(g, *inst.bramble);
      out.push_back(bool_record(inst.name, "bramble valid", rep.ok));
      const auto h = inst.bramble->hypergraph(g.vertex_count());
      const std::size_t tau = exact_transversal(h);
      out.push_back(le_record(inst.name, "bramble bound (order - 1) <= tw", tau - 1, tw.width));
      out.push_back(le_record(inst.name, "transversal_fraction_bound <= exact_transversal",
                              transversal_fraction_bound(h), Rational(BigInt(tau))));
    }
    return out;
  });
}

using SuiteFn = Records (*)(const SuiteConfig&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"theorem1", suite_theorem1}, {"appendixA", suite_appendix_a}, {"appendixB", suite_appendix_b},
      {"hales", suite_hales},       {"petersen", suite_petersen},    {"bramble", suite_bramble},
      {"kneser", suite_kneser},     {"theorem3", suite_theorem3},    {"spectrum", suite_spectrum},
      {"limit", suite_limit},       {"cross", suite_cross},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1", "appendixA", "appendixB", "hales",    "petersen", "bramble",
                                              "kneser",   "theorem3",  "spectrum",  "limit",    "cross"};
  return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto& r = registry();
  auto it = r.find(config.name);
  if (it == r.end()) throw ParameterError("unknown suite '" + config.name + "'");
  for (auto v : {config.t_max, config.n_max, config.k_max})
    if (v && *v < 1) throw ParameterError("suite ranges must be positive");
  if (config.workers < 1) throw ParameterError("workers must be >= 1");
  return SuiteReport{config.name, it->second(config)};
}

nlohmann::json report_to_json(const SuiteReport& report, const std::string& generated_at) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records)
    records.push_back({{"instance", r.instance},
                       {"check", r.check},
                       {"lhs", r.lhs},
                       {"relation", r.relation},
                       {"rhs", r.rhs},
                       {"equal", r.holds},
                       {"known", r.known}});
  return {{"header",
           {{"suite", report.suite},
            {"generated_at", generated_at},
            {"records", report.records.size()},
            {"failures", report.failures()},
            {"known", report.known_flags()}}},
          {"records", std::move(records)}};
}

}  // namespace widthlab
