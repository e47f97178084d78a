#include "widthlab/decomp.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "widthlab/error.hpp"
#include "widthlab/numeric.hpp"

namespace widthlab {

namespace {

Bag normalised(Bag b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

std::vector<std::size_t> positions(std::size_t n, std::span<const Vertex> order) {
  if (order.size() != n) throw PreconditionError("order is not a permutation of the vertex set");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= n || pos[order[i]] != n) throw PreconditionError("order is not a permutation of the vertex set");
    pos[order[i]] = i;
  }
  return pos;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Decomposition Decomposition::path(std::vector<Bag> bags) {
  Decomposition d;
  for (auto& b : bags) d.bags.push_back(normalised(std::move(b)));
  for (std::size_t i = 0; i + 1 < d.bags.size(); ++i) d.tree_edges.emplace_back(i, i + 1);
  return d;
}

std::size_t Decomposition::max_bag_size() const {
  std::size_t m = 0;
  for (const auto& b : bags) m = std::max(m, b.size());
  return m;
}

std::size_t Decomposition::width() const { return bags.empty() ? 0 : max_bag_size() - 1; }

bool Decomposition::is_path() const {
  if (tree_edges.size() + 1 != bags.size() && !bags.empty()) return false;
  std::vector<std::size_t> deg(bags.size(), 0);
  for (auto [a, b] : tree_edges) {
    if (a >= bags.size() || b >= bags.size()) return false;
    if (++deg[a] > 2 || ++deg[b] > 2) return false;
  }
  DisjointSets ds(bags.size());
  for (auto [a, b] : tree_edges)
    if (!ds.unite(a, b)) return false;
  return true;
}

DecompositionReport validate_decomposition(const Graph& g, const Decomposition& d) {
  const std::size_t nb = d.bags.size();
  const std::size_t n = g.vertex_count();
  if (nb > 0 && d.tree_edges.size() != nb - 1)
    throw StructuralError("decomposition shape has " + std::to_string(d.tree_edges.size()) + " edges for " +
                          std::to_string(nb) + " bags");
  if (nb == 0 && !d.tree_edges.empty()) throw StructuralError("tree edges without bags");
  DisjointSets ds(nb);
  for (auto [a, b] : d.tree_edges) {
    if (a >= nb || b >= nb) throw StructuralError("tree edge names a missing bag");
    if (!ds.unite(a, b)) throw StructuralError("decomposition shape contains a cycle");
  }

  // Bags that are already canonical are used in place.
  std::vector<Bag> copies;
  std::vector<const Bag*> bags(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& b = d.bags[i];
    const bool canonical = std::adjacent_find(b.begin(), b.end(), std::greater_equal<>()) == b.end();
    if (!canonical) copies.push_back(normalised(b));
  }
  for (std::size_t i = 0, c = 0; i < nb; ++i) {
    const auto& b = d.bags[i];
    const bool canonical = std::adjacent_find(b.begin(), b.end(), std::greater_equal<>()) == b.end();
    bags[i] = canonical ? &b : &copies[c++];
    if (!bags[i]->empty() && bags[i]->back() >= n) throw StructuralError("bag names a vertex outside the graph");
  }

  DecompositionReport report;
  std::vector<std::size_t> occurrences(n, 0), links(n, 0);
  std::vector<std::vector<std::size_t>> bags_of(n);
  for (std::size_t i = 0; i < nb; ++i)
    for (Vertex v : *bags[i]) {
      ++occurrences[v];
      bags_of[v].push_back(i);
    }
  for (auto [a, b] : d.tree_edges) {
    auto p = bags[a]->begin(), q = bags[b]->begin();
    const auto pe = bags[a]->end(), qe = bags[b]->end();
    while (p != pe && q != qe) {
      if (*p < *q) ++p;
      else if (*q < *p) ++q;
      else {
        ++links[*p];
        ++p;
        ++q;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (occurrences[v] == 0) report.missing_vertices.push_back(v);
    else if (links[v] != occurrences[v] - 1) report.disconnected_vertices.push_back(v);
  }
  for (auto [u, v] : g.edges()) {
    const auto& smaller = bags_of[u].size() <= bags_of[v].size() ? bags_of[u] : bags_of[v];
    const Vertex other = bags_of[u].size() <= bags_of[v].size() ? v : u;
    const bool covered = std::any_of(smaller.begin(), smaller.end(), [&](std::size_t i) {
      return std::binary_search(bags[i]->begin(), bags[i]->end(), other);
    });
    if (!covered) report.uncovered_edges.emplace_back(u, v);
  }
  report.ok = report.missing_vertices.empty() && report.uncovered_edges.empty() && report.disconnected_vertices.empty();
  if (report.ok) report.width = d.width();
  return report;
}

Decomposition petersen_pd(int n, int k, PetersenMode mode) {
  if (!(k >= 1 && n >= 2 * k + 1))
    throw ParameterError("petersen_pd requires k >= 1 and n >= 2k+1");
  auto v = [n](int i) { return petersen_v(n, i); };
  auto u = [n](int i) { return petersen_u(n, i); };
  Bag a{v(1)};
  for (int i = 1; i <= k; ++i) a.push_back(u(i));

  std::vector<Bag> bags;
  Bag b1;
  for (int i = 1; i <= k; ++i) b1.push_back(v(i));
  bags.push_back(b1);

  Bag x;
  int start = 1;
  if (mode == PetersenMode::verbatim) {
    Bag b2;
    for (int i = k; i <= 2 * k; ++i) b2.push_back(v(i));
    bags.push_back(b2);
    for (int i = k + 1; i <= 2 * k; ++i) x.push_back(u(i));
    x.push_back(v(2 * k));
  } else {
    start = 1 - k;
    for (int i = 1; i <= k; ++i) x.push_back(u(i));
    x.push_back(v(k));
  }
  x = normalised(std::move(x));
  bags.push_back(x);
  auto with = [](Bag b, Vertex w) {
    b.insert(std::lower_bound(b.begin(), b.end(), w), w);
    return normalised(std::move(b));
  };
  auto without = [](Bag b, Vertex w) {
    b.erase(std::remove(b.begin(), b.end(), w), b.end());
    return b;
  };
  bags.reserve(bags.size() + 4 * static_cast<std::size_t>(n));
  for (int i = start; i <= n - 2 * k; ++i) {
    Bag y = with(x, u(2 * k + i));
    Bag z = without(y, u(k + i));
    Bag w = with(z, v(2 * k + i));
    x = without(w, v(2 * k + i - 1));
    bags.push_back(std::move(y));
    bags.push_back(std::move(z));
    bags.push_back(std::move(w));
    bags.push_back(x);
  }
  for (auto& b : bags) {
    b.insert(b.end(), a.begin(), a.end());
    b = normalised(std::move(b));
  }
  Decomposition d;
  d.bags = std::move(bags);
  for (std::size_t i = 0; i + 1 < d.bags.size(); ++i) d.tree_edges.emplace_back(i, i + 1);
  return d;
}

Decomposition independent_set_td(const Graph& g, std::span<const Vertex> independent) {
  if (independent.empty()) throw PreconditionError("independent set is empty");
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : independent) {
    if (v >= g.vertex_count()) throw PreconditionError("vertex out of range");
    if (in[v]) throw PreconditionError("repeated vertex in independent set");
    in[v] = 1;
  }
  for (Vertex v : independent)
    for (Vertex w : g.neighbors(v))
      if (in[w]) throw PreconditionError("set is not independent");
  Bag centre;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!in[v]) centre.push_back(v);
  Decomposition d;
  d.bags.push_back(centre);
  for (Vertex v : independent) {
    Bag leaf = centre;
    leaf.push_back(v);
    d.bags.push_back(normalised(std::move(leaf)));
    d.tree_edges.emplace_back(0, d.bags.size() - 1);
  }
  return d;
}

Decomposition lift_pd(const Decomposition& pd, int t, int n, int q) {
  if (q < 2) throw ParameterError("lift_pd requires q >= 2");
  const Graph binary = gen_hamming(t, 2, n);
  const auto check = validate_decomposition(binary, pd);
  if (!check.ok) throw PreconditionError("lift_pd: input is not a valid decomposition of H(t,2,n)");
  const Graph target = gen_hamming(t, q, n);

  std::vector<Vertex> binary_id(binary.vertex_count());
  for (Vertex v = 0; v < binary.vertex_count(); ++v)
    binary_id[std::get<VectorLabel>(binary.label(v)).code] = v;
  const int half = (q + 1) / 2;
  std::vector<std::vector<Vertex>> preimage(binary.vertex_count());
  for (Vertex v = 0; v < target.vertex_count(); ++v) {
    const auto digits = std::get<VectorLabel>(target.label(v)).digits();
    std::uint64_t code = 0;
    for (int c = 0; c < n; ++c)
      if (digits[c] >= half) code |= std::uint64_t{1} << c;
    preimage[binary_id[code]].push_back(v);
  }
  Decomposition lifted;
  lifted.tree_edges = pd.tree_edges;
  for (const auto& bag : pd.bags) {
    Bag b;
    for (Vertex y : bag) b.insert(b.end(), preimage[y].begin(), preimage[y].end());
    lifted.bags.push_back(normalised(std::move(b)));
  }
  return lifted;
}

Decomposition pd_from_ordering(const Graph& g, std::span<const Vertex> order) {
  const auto pos = positions(g.vertex_count(), order);
  std::vector<std::size_t> last(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    last[v] = pos[v];
    for (Vertex w : g.neighbors(v)) last[v] = std::max(last[v], pos[w]);
  }
  std::vector<Bag> bags(order.size());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (std::size_t i = pos[v]; i <= last[v]; ++i) bags[i].push_back(v);
  return Decomposition::path(std::move(bags));
}

namespace {

std::vector<std::set<Vertex>> fill_in(const Graph& g, const std::vector<std::size_t>& pos,
                                      std::span<const Vertex> order) {
  std::vector<std::set<Vertex>> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex w : adj[v])
      if (pos[w] > pos[v]) later.push_back(w);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        adj[later[i]].insert(later[j]);
        adj[later[j]].insert(later[i]);
      }
  }
  return adj;
}

}  // namespace

Decomposition td_from_elimination(const Graph& g, std::span<const Vertex> order) {
  const auto pos = positions(g.vertex_count(), order);
  const auto adj = fill_in(g, pos, order);
  Decomposition d;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    Bag bag{v};
    std::size_t parent = order.size();
    for (Vertex w : adj[v])
      if (pos[w] > i) {
        bag.push_back(w);
        parent = std::min(parent, pos[w]);
      }
    d.bags.push_back(normalised(std::move(bag)));
    if (parent == order.size()) roots.push_back(i);
    else d.tree_edges.emplace_back(i, parent);
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) d.tree_edges.emplace_back(roots[i], roots[i + 1]);
  return d;
}

ChordalCertificate fillin_chordal(const Graph& g, std::span<const Vertex> order) {
  const auto pos = positions(g.vertex_count(), order);
  const auto adj = fill_in(g, pos, order);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : adj[v])
      if (v < w) edges.emplace_back(v, w);
  ChordalCertificate cert;
  cert.graph = Graph::from_edges(g.vertex_count(), edges, g.labels(), g.family());
  cert.peo.assign(order.begin(), order.end());
  cert.omega = clique_number_from_peo(cert.graph, cert.peo);
  return cert;
}

std::size_t clique_number_from_peo(const Graph& g, std::span<const Vertex> peo) {
  const auto pos = positions(g.vertex_count(), peo);
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t later = 0;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) ++later;
    best = std::max(best, later + 1);
  }
  return best;
}

ChordalityResult is_chordal(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // Maximum cardinality search; the reverse visit order is a PEO iff chordal.
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> visit;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && (!found || weight[v] > weight[pick])) {
        pick = v;
        found = true;
      }
    visited[pick] = 1;
    visit.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!visited[w]) ++weight[w];
  }
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  const auto pos = positions(n, peo);

  bool ok = true;
  for (Vertex v = 0; v < n && ok; ++v) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    if (later.empty()) continue;
    const Vertex first = *std::min_element(later.begin(), later.end(),
                                           [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    for (Vertex w : later)
      if (w != first && !g.adjacent(first, w)) {
        ok = false;
        break;
      }
  }
  ChordalityResult result;
  result.chordal = ok;
  if (ok) {
    result.peo = std::move(peo);
    return result;
  }

  // Witness: nonadjacent neighbours x, y of v joined outside N[v].
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Vertex x = nbrs[i], y = nbrs[j];
        if (g.adjacent(x, y)) continue;
        std::vector<char> blocked(n, 0);
        blocked[v] = 1;
        for (Vertex w : nbrs) blocked[w] = 1;
        blocked[x] = blocked[y] = 0;
        constexpr Vertex kNone = ~Vertex{0};
        std::vector<Vertex> parent(n, kNone);
        std::deque<Vertex> queue{x};
        parent[x] = x;
        while (!queue.empty() && parent[y] == kNone) {
          Vertex a = queue.front();
          queue.pop_front();
          for (Vertex b : g.neighbors(a)) {
            if (blocked[b] || parent[b] != kNone) continue;
            if (a == x && b == y) continue;
            parent[b] = a;
            queue.push_back(b);
          }
        }
        if (parent[y] == kNone) continue;
        std::vector<Vertex> cycle{v};
        std::vector<Vertex> path;
        for (Vertex c = y; c != x; c = parent[c]) path.push_back(c);
        path.push_back(x);
        cycle.insert(cycle.end(), path.rbegin(), path.rend());
        result.witness_cycle = std::move(cycle);
        return result;
      }
  }
  return result;
}

Graph bk_prime(int n, int k, const ChordalCertificate& h) {
  if (n != 2 * k + 1) throw PreconditionError("bk_prime requires n = 2k+1");
  const Graph johnson = gen_johnson(n, k);
  if (h.graph.vertex_count() != johnson.vertex_count())
    throw PreconditionError("bk_prime: H has the wrong vertex count");
  for (Vertex v = 0; v < johnson.vertex_count(); ++v)
    if (!std::holds_alternative<std::monostate>(h.graph.label(v)) && h.graph.label(v) != johnson.label(v))
      throw PreconditionError("bk_prime: H labels do not match J(n,k)");
  for (auto [a, b] : johnson.edges())
    if (!h.graph.adjacent(a, b)) throw PreconditionError("bk_prime: H does not contain J(n,k)");
  if (!is_chordal(h.graph).chordal) throw PreconditionError("bk_prime: H is not chordal");
  const Graph bk = gen_bipartite_kneser(n, k);
  auto edges = h.graph.edges();
  return bk.with_added_edges(edges);
}

// ---- PACE .td ----

void write_td(std::ostream& out, const Decomposition& d, std::size_t vertex_count) {
  out << "s td " << d.bags.size() << " " << d.max_bag_size() << " " << vertex_count << "\n";
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : d.bags[i]) out << " " << v + 1;
    out << "\n";
  }
  for (auto [a, b] : d.tree_edges) out << a + 1 << " " << b + 1 << "\n";
}

TdFile read_td(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::size_t bag_count = 0, max_size = 0, n = 0;
  TdFile file;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 's') {
      std::string s, td;
      if (header) throw ParseError(line_no, "duplicate solution line");
      if (!(ls >> s >> td >> bag_count >> max_size >> n) || td != "td")
        throw ParseError(line_no, "malformed header, expected 's td <bags> <max bag size> <n>'");
      header = true;
      file.vertex_count = n;
      file.decomposition.bags.assign(bag_count, {});
      seen.assign(bag_count, 0);
      continue;
    }
    if (!header) throw ParseError(line_no, "content before 's td' header");
    if (line[0] == 'b') {
      std::string b;
      std::size_t id = 0;
      ls >> b >> id;
      if (!ls || id < 1 || id > bag_count) throw ParseError(line_no, "bag id out of range");
      if (seen[id - 1]) throw ParseError(line_no, "bag " + std::to_string(id) + " given twice");
      seen[id - 1] = 1;
      Bag bag;
      long long v = 0;
      while (ls >> v) {
        if (v < 1 || static_cast<std::size_t>(v) > n) throw ParseError(line_no, "bag vertex out of range");
        bag.push_back(static_cast<Vertex>(v - 1));
      }
      if (!ls.eof()) throw ParseError(line_no, "malformed bag line");
      file.decomposition.bags[id - 1] = normalised(std::move(bag));
      continue;
    }
    long long a = 0, b = 0;
    if (!(ls >> a >> b)) throw ParseError(line_no, "malformed tree edge line");
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > bag_count || static_cast<std::size_t>(b) > bag_count)
      throw ParseError(line_no, "tree edge names a missing bag");
    file.decomposition.tree_edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 's td' header");
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ParseError(line_no, "a declared bag is missing");
  if (file.decomposition.max_bag_size() != max_size)
    throw ParseError(line_no, "max bag size does not match header");
  return file;
}

CheckedTd read_td_checked(std::istream& in, const Graph& g) {
  auto file = read_td(in);
  if (file.vertex_count != g.vertex_count()) throw PreconditionError(".td vertex count does not match the graph");
  CheckedTd out{file.decomposition, validate_decomposition(g, file.decomposition)};
  return out;
}

}  // namespace widthlab
