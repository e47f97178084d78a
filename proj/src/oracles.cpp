#include "widthlab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <limits>

#include "widthlab/error.hpp"
#include "widthlab/numeric.hpp"

namespace widthlab {

namespace {

void require_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap || g.vertex_count() > 63)
    throw SizeError(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                    " vertices exceeds cap " + std::to_string(std::min<std::size_t>(cap, 63)));
}

inline std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Vertices outside R + v reachable from v through R.
std::uint64_t q_set(const std::vector<std::uint64_t>& nb, std::uint64_t rest, unsigned v) {
  std::uint64_t comp = bit(v);
  std::uint64_t frontier = comp;
  std::uint64_t reach = 0;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
    reach |= next;
    frontier = next & rest & ~comp;
    comp |= frontier;
  }
  return reach & ~comp & ~rest;
}

}  // namespace

EliminationResult exact_treewidth(const Graph& g, std::size_t cap) {
  require_cap(g, cap, "exact_treewidth");
  const auto n = static_cast<unsigned>(g.vertex_count());
  if (n == 0) return {};
  const auto nb = g.neighbor_masks();
  const std::uint64_t full = (bit(n)) - 1;
  std::vector<std::uint8_t> tw(std::size_t{1} << n, 0);
  for (std::uint64_t s = 1; s <= full; ++s) {
    unsigned best = 255;
    for (std::uint64_t rem = s; rem; rem &= rem - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(rem));
      const std::uint64_t prev_set = s & ~bit(v);
      const unsigned prev = tw[prev_set];
      if (prev >= best) continue;
      const auto q = static_cast<unsigned>(std::popcount(q_set(nb, prev_set, v)));
      best = std::min(best, std::max(prev, q));
    }
    tw[s] = static_cast<std::uint8_t>(best);
  }

  EliminationResult result;
  result.width = tw[full];
  std::vector<Vertex> reversed;
  std::uint64_t s = full;
  while (s) {
    for (std::uint64_t rem = s; rem; rem &= rem - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(rem));
      const std::uint64_t prev_set = s & ~bit(v);
      const auto q = static_cast<unsigned>(std::popcount(q_set(nb, prev_set, v)));
      if (std::max<unsigned>(tw[prev_set], q) == tw[s]) {
        reversed.push_back(v);
        s = prev_set;
        break;
      }
    }
  }
  result.order.assign(reversed.rbegin(), reversed.rend());
  return result;
}

EliminationResult exact_pathwidth(const Graph& g, std::size_t cap) {
  require_cap(g, cap, "exact_pathwidth");
  const auto n = static_cast<unsigned>(g.vertex_count());
  if (n == 0) return {};
  const auto nb = g.neighbor_masks();
  const std::uint64_t full = bit(n) - 1;
  std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
  auto boundary = [&](std::uint64_t s) {
    unsigned c = 0;
    for (std::uint64_t rem = s; rem; rem &= rem - 1)
      if (nb[std::countr_zero(rem)] & ~s) ++c;
    return c;
  };
  for (std::uint64_t s = 1; s <= full; ++s) {
    unsigned best = 255;
    for (std::uint64_t rem = s; rem; rem &= rem - 1)
      best = std::min<unsigned>(best, f[s & ~(rem & -rem)]);
    f[s] = static_cast<std::uint8_t>(std::max(best, boundary(s)));
  }
  EliminationResult result;
  result.width = f[full];
  std::vector<Vertex> reversed;
  std::uint64_t s = full;
  while (s) {
    for (std::uint64_t rem = s; rem; rem &= rem - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(rem));
      if (f[s & ~bit(v)] <= result.width) {
        reversed.push_back(v);
        s &= ~bit(v);
        break;
      }
    }
  }
  result.order.assign(reversed.rbegin(), reversed.rend());
  return result;
}

std::size_t ordering_bandwidth(const Graph& g, const Ordering& ordering) {
  std::size_t bw = 0;
  for (auto [u, v] : g.edges()) {
    const auto a = ordering.rank(u), b = ordering.rank(v);
    bw = std::max(bw, a > b ? a - b : b - a);
  }
  return bw;
}

BandwidthResult exact_bandwidth(const Graph& g, std::size_t cap) {
  require_cap(g, cap, "exact_bandwidth");
  const auto n = static_cast<unsigned>(g.vertex_count());
  if (n == 0) return {0, Ordering{}};
  const auto nb = g.neighbor_masks();
  std::vector<unsigned> layout(n);
  std::vector<unsigned> position(n);

  std::function<bool(unsigned, std::uint64_t, unsigned)> place =
      [&](unsigned p, std::uint64_t placed, unsigned k) -> bool {
    if (p == n) return true;
    for (unsigned w = 0; w < n; ++w) {
      if (placed & bit(w)) continue;
      bool ok = true;
      for (std::uint64_t rem = nb[w] & placed; rem; rem &= rem - 1)
        if (p - position[std::countr_zero(rem)] > k) {
          ok = false;
          break;
        }
      if (!ok) continue;
      const std::uint64_t now = placed | bit(w);
      layout[p] = w;
      position[w] = p;
      // The vertex k positions back must have no neighbour left to place.
      if (p >= k && (nb[layout[p - k]] & ~now) != 0) continue;
      if (place(p + 1, now, k)) return true;
    }
    return false;
  };

  unsigned k = static_cast<unsigned>((g.max_degree() + 1) / 2);
  while (!place(0, 0, k)) ++k;
  std::vector<Vertex> seq(layout.begin(), layout.end());
  return {k, Ordering::from_sequence(seq)};
}

std::size_t phi_mask(std::span<const std::uint64_t> neighbor_masks, std::uint64_t set) {
  std::uint64_t out = 0;
  for (std::uint64_t rem = set; rem; rem &= rem - 1) out |= neighbor_masks[std::countr_zero(rem)];
  return static_cast<std::size_t>(std::popcount(out & ~set));
}

std::size_t phi(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.vertex_count(), 0), hit(g.vertex_count(), 0);
  for (Vertex v : set) in[v] = 1;
  std::size_t count = 0;
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v))
      if (!in[w] && !hit[w]) {
        hit[w] = 1;
        ++count;
      }
  return count;
}

std::vector<std::size_t> b_v_profile(const Graph& g, std::size_t cap) {
  require_cap(g, cap, "b_v");
  const auto n = static_cast<unsigned>(g.vertex_count());
  const auto nb = g.neighbor_masks();
  std::vector<std::size_t> best(n + 1, std::numeric_limits<std::size_t>::max());
  const std::uint64_t end = bit(n);
  for (std::uint64_t s = 0; s < end; ++s) {
    auto& b = best[std::popcount(s)];
    b = std::min(b, phi_mask(nb, s));
  }
  return best;
}

std::size_t b_v(std::size_t l, const Graph& g, std::size_t cap) {
  if (l > g.vertex_count()) throw ParameterError("b_v: l exceeds |V|");
  return b_v_profile(g, cap)[l];
}

std::optional<Separator> min_balanced_separator(const Graph& g, std::size_t size_cap,
                                                std::size_t cap) {
  require_cap(g, cap, "min_balanced_separator");
  const auto n = static_cast<unsigned>(g.vertex_count());
  const auto nb = g.neighbor_masks();
  const std::uint64_t full = bit(n) - 1;
  for (unsigned x = 0; x <= std::min<std::size_t>(size_cap, n); ++x) {
    for (std::uint64_t sep = 0; sep <= full; ++sep) {
      if (static_cast<unsigned>(std::popcount(sep)) != x) continue;
      const std::uint64_t rest = full & ~sep;
      std::vector<std::uint64_t> comps;
      for (std::uint64_t left = rest; left;) {
        std::uint64_t comp = left & -left, frontier = comp;
        while (frontier) {
          std::uint64_t next = 0;
          for (std::uint64_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
          frontier = next & rest & ~comp;
          comp |= frontier;
        }
        comps.push_back(comp);
        left &= ~comp;
      }
      const unsigned m = n - x;
      // Subset sum over component sizes with a predecessor table.
      std::vector<std::vector<char>> reach(comps.size() + 1, std::vector<char>(m + 1, 0));
      reach[0][0] = 1;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto sz = static_cast<unsigned>(std::popcount(comps[i]));
        for (unsigned a = 0; a <= m; ++a) {
          if (!reach[i][a]) continue;
          reach[i + 1][a] = 1;
          if (a + sz <= m) reach[i + 1][a + sz] = 1;
        }
      }
      for (unsigned a = 0; a <= m; ++a) {
        if (!reach[comps.size()][a] || 3 * a > 2 * m || 3 * (m - a) > 2 * m) continue;
        std::uint64_t part_a = 0;
        unsigned need = a;
        for (std::size_t i = comps.size(); i-- > 0;) {
          const auto sz = static_cast<unsigned>(std::popcount(comps[i]));
          if (reach[i][need]) continue;
          part_a |= comps[i];
          need -= sz;
        }
        auto to_list = [](std::uint64_t mask) {
          std::vector<Vertex> out;
          for (; mask; mask &= mask - 1) out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
          return out;
        };
        return Separator{to_list(sep), to_list(part_a), to_list(rest & ~part_a)};
      }
    }
  }
  return std::nullopt;
}

std::size_t max_cross_intersecting_sum(int n, int k, std::size_t cap) {
  if (k < 1 || n < k || n > 63) throw ParameterError("max_cross_intersecting_sum requires 1 <= k <= n");
  const BigInt count = binom_ext(n, k);
  if (count > cap || count > 31)
    throw SizeError("C(n,k) = " + to_string(count) + " exceeds cap " + std::to_string(cap));
  std::vector<std::uint64_t> sets;
  for (std::uint64_t m = 0; m < bit(static_cast<unsigned>(n)); ++m)
    if (std::popcount(m) == k) sets.push_back(m);
  const auto m = static_cast<unsigned>(sets.size());
  std::vector<std::uint32_t> meet(m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      if (sets[i] & sets[j]) meet[i] |= std::uint32_t{1} << j;
  const std::uint32_t all = m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  std::vector<std::uint32_t> forced(std::size_t{1} << m);
  forced[0] = all;
  std::size_t best = 0;
  for (std::uint32_t a = 1; a <= all && a != 0; ++a) {
    forced[a] = forced[a & (a - 1)] & meet[std::countr_zero(a)];
    if (forced[a] == 0) continue;
    best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(a) + std::popcount(forced[a])));
    if (a == all) break;
  }
  return best;
}

Matching bipartite_perfect_matching(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          throw PreconditionError("bipartite_perfect_matching: graph is not bipartite");
        }
      }
    }
  }
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> mate(n, kNone);
  std::vector<char> seen;
  std::function<bool(Vertex)> augment = [&](Vertex u) -> bool {
    for (Vertex w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (mate[w] == kNone || augment(mate[w])) {
        mate[w] = u;
        mate[u] = w;
        return true;
      }
    }
    return false;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (color[u] != 0 || mate[u] != kNone) continue;
    seen.assign(n, 0);
    augment(u);
  }
  Matching result;
  for (Vertex u = 0; u < n; ++u)
    if (color[u] == 0 && mate[u] != kNone) result.pairs.emplace_back(u, mate[u]);
  result.perfect = 2 * result.pairs.size() == n;
  return result;
}

std::size_t exact_transversal(const Hypergraph& h, std::size_t edge_cap) {
  h.validate();
  const std::size_t m = h.edge_count();
  if (m > edge_cap || m > 64)
    throw SizeError("exact_transversal: " + std::to_string(m) + " edges exceeds cap");
  if (m == 0) return 0;
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : bit(m) - 1;
  std::vector<std::uint64_t> covers(h.vertex_count, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (Vertex v : h.edges[i]) covers[v] |= bit(i);

  // Greedy packing of pairwise-disjoint uncovered edges is a lower bound.
  auto packing = [&](std::uint64_t covered) {
    std::uint64_t blocked = covered;
    std::size_t count = 0;
    for (std::uint64_t rem = all & ~covered; rem; rem &= rem - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rem));
      if (blocked & bit(i)) continue;
      ++count;
      for (Vertex v : h.edges[i]) blocked |= covers[v];
    }
    return count;
  };

  std::size_t best = m;
  std::function<void(std::uint64_t, std::size_t)> search = [&](std::uint64_t covered, std::size_t used) {
    if (covered == all) {
      best = std::min(best, used);
      return;
    }
    if (used + packing(covered) >= best) return;
    std::size_t pick = m;
    for (std::uint64_t rem = all & ~covered; rem; rem &= rem - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rem));
      if (pick == m || h.edges[i].size() < h.edges[pick].size()) pick = i;
    }
    for (Vertex v : h.edges[pick]) search(covered | covers[v], used + 1);
  };
  search(0, 0);
  return best;
}

}  // namespace widthlab
