#include "widthlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "widthlab/error.hpp"
#include "widthlab/hales.hpp"

namespace widthlab {

namespace {

std::uint64_t checked_power(int base, int exponent, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= static_cast<std::uint64_t>(base);
    if (result > cap) throw SizeError("q^n exceeds vertex cap " + std::to_string(cap));
  }
  return result;
}

constexpr std::uint64_t kMaxHammingVertices = std::uint64_t{1} << 20;

}  // namespace

int VectorLabel::digit(int coordinate) const {
  std::uint64_t c = code;
  for (int i = 1; i < coordinate; ++i) c /= static_cast<std::uint64_t>(q);
  return static_cast<int>(c % static_cast<std::uint64_t>(q));
}

std::vector<int> VectorLabel::digits() const {
  std::vector<int> out(static_cast<std::size_t>(n));
  std::uint64_t c = code;
  for (auto& d : out) {
    d = static_cast<int>(c % static_cast<std::uint64_t>(q));
    c /= static_cast<std::uint64_t>(q);
  }
  return out;
}

std::vector<int> SubsetLabel::elements() const {
  std::vector<int> out;
  for (int i = 0; i < ground; ++i)
    if ((mask >> i) & 1U) out.push_back(i + 1);
  return out;
}

int SubsetLabel::size() const { return std::popcount(mask); }

int hamming_distance(const VectorLabel& a, const VectorLabel& b) {
  if (a.q == 2) return std::popcount(a.code ^ b.code);
  int d = 0;
  std::uint64_t x = a.code, y = b.code;
  const auto q = static_cast<std::uint64_t>(a.q);
  for (int i = 0; i < a.n; ++i, x /= q, y /= q)
    if (x % q != y % q) ++d;
  return d;
}

std::string label_to_string(const Label& label) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(const VectorLabel& v) const {
      std::string s;
      for (int d : v.digits()) {
        if (!s.empty() && v.q > 10) s += ',';
        s += std::to_string(d);
      }
      return s;
    }
    std::string operator()(const SubsetLabel& s) const {
      std::string out = "{";
      for (int e : s.elements()) {
        if (out.size() > 1) out += ',';
        out += std::to_string(e);
      }
      return out + "}";
    }
    std::string operator()(const PetersenLabel& p) const {
      return std::string(p.inner ? "u" : "v") + std::to_string(p.index);
    }
  };
  return std::visit(Visitor{}, label);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::hamming: return "hamming";
    case Family::johnson: return "johnson";
    case Family::bipartite_kneser: return "bipartite_kneser";
    case Family::petersen: return "petersen";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "hamming") return Family::hamming;
  if (name == "johnson") return Family::johnson;
  if (name == "bipartite_kneser" || name == "bk") return Family::bipartite_kneser;
  if (name == "petersen") return Family::petersen;
  throw ParameterError("unknown family '" + name + "'");
}

void FamilySpec::validate() const {
  switch (family) {
    case Family::hamming:
      if (t < 1 || q < 2 || n < 1)
        throw ParameterError("hamming requires t >= 1, q >= 2, n >= 1");
      break;
    case Family::johnson:
      if (!(n > k && k >= 1)) throw ParameterError("johnson requires n > k >= 1");
      if (n > 63) throw SizeError("johnson ground set limited to 63 elements");
      break;
    case Family::bipartite_kneser:
      if (!(k >= 1 && n >= 2 * k + 1))
        throw ParameterError("bipartite_kneser requires k >= 1 and n >= 2k+1");
      if (n > 63) throw SizeError("bipartite_kneser ground set limited to 63 elements");
      break;
    case Family::petersen:
      if (!(n >= 3 && k >= 1 && 2 * k < n))
        throw ParameterError("petersen requires n >= 3 and 1 <= k < n/2");
      break;
  }
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::hamming: os << "H(" << t << "," << q << "," << n << ")"; break;
    case Family::johnson: os << "J(" << n << "," << k << ")"; break;
    case Family::bipartite_kneser: os << "BK(" << n << "," << k << ")"; break;
    case Family::petersen: os << "G(" << n << "," << k << ")"; break;
  }
  return os.str();
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                        std::vector<Label> labels, std::optional<FamilySpec> family) {
  Graph g;
  g.adjacency_.assign(vertex_count, {});
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw ParameterError("edge endpoint out of range");
    if (u == v) throw ParameterError("self-loop on vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw ParameterError("duplicate edge");
  }
  g.edge_count_ = edges.size();
  if (labels.empty()) labels.assign(vertex_count, std::monostate{});
  if (labels.size() != vertex_count) throw ParameterError("label count mismatch");
  g.labels_ = std::move(labels);
  g.family_ = family;
  return g;
}

const std::vector<std::uint64_t>* Graph::dense_rows() const {
  const std::size_t n = vertex_count();
  if (n > kDenseLimit) return nullptr;
  auto rows = std::atomic_load(&dense_);
  if (!rows) {
    const std::size_t words = (n + 63) / 64;
    auto built = std::make_shared<std::vector<std::uint64_t>>(n * words, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (Vertex v : adjacency_[u]) (*built)[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    std::shared_ptr<const std::vector<std::uint64_t>> expected;
    rows = built;
    // Keep whichever table was published first so returned pointers stay valid.
    if (!std::atomic_compare_exchange_strong(&dense_, &expected, rows)) rows = expected;
  }
  return rows.get();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (const auto* rows = dense_rows()) {
    const std::size_t words = (vertex_count() + 63) / 64;
    return ((*rows)[u * words + v / 64] >> (v % 64)) & 1U;
  }
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t d = adjacency_.empty() ? 0 : adjacency_[0].size();
  for (const auto& row : adjacency_) d = std::min(d, row.size());
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& row : adjacency_) d = std::max(d, row.size());
  return d;
}

bool Graph::is_regular() const { return min_degree() == max_degree(); }

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::int64_t> position(vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> sub;
  std::vector<Label> sub_labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    sub_labels.push_back(labels_[vertices[i]]);
    for (Vertex w : adjacency_[vertices[i]]) {
      auto j = position[w];
      if (j > static_cast<std::int64_t>(i)) sub.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return from_edges(vertices.size(), sub, std::move(sub_labels));
}

Graph Graph::with_added_edges(std::span<const Edge> extra) const {
  auto all = edges();
  for (auto [u, v] : extra) {
    if (u == v) throw ParameterError("self-loop in added edges");
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    all.push_back(e);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return from_edges(vertex_count(), all, labels_, std::nullopt);
}

std::vector<std::uint64_t> Graph::neighbor_masks() const {
  if (vertex_count() > 64) throw SizeError("neighbor masks need at most 64 vertices");
  std::vector<std::uint64_t> masks(vertex_count(), 0);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u]) masks[u] |= std::uint64_t{1} << v;
  return masks;
}

Graph gen_hamming(int t, int q, int n) {
  FamilySpec spec{Family::hamming, t, q, n, 0};
  spec.validate();
  const std::uint64_t count = checked_power(q, n, kMaxHammingVertices);

  std::vector<std::uint64_t> codes;
  if (q == 2) {
    codes = hales_sequence(n);
  } else {
    // Lexicographic in (d_1, ..., d_n) with d_1 most significant.
    codes.reserve(count);
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t code = 0;
      for (int c = n - 1; c >= 0; --c) code = code * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(digits[c]);
      codes.push_back(code);
      for (int c = n - 1; c >= 0; --c) {
        if (++digits[c] < q) break;
        digits[c] = 0;
      }
    }
  }

  std::vector<Vertex> index_of_code(count);
  std::vector<Label> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    index_of_code[codes[i]] = static_cast<Vertex>(i);
    labels.emplace_back(VectorLabel{codes[i], q, n});
  }

  // Enumerate neighbours by changing between 1 and min(t,n) coordinates.
  std::vector<Edge> edges;
  const int reach = std::min(t, n);
  std::vector<std::uint64_t> place(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) place[c] = c == 0 ? 1 : place[c - 1] * static_cast<std::uint64_t>(q);
  for (std::uint64_t code = 0; code < count; ++code) {
    const Vertex u = index_of_code[code];
    // Depth-first over increasing coordinate positions.
    struct Frame {
      int next;
      int changed;
      std::uint64_t value;
    };
    std::vector<Frame> stack{{0, 0, code}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (f.changed > 0) {
        const Vertex v = index_of_code[f.value];
        if (u < v) edges.emplace_back(u, v);
      }
      if (f.changed == reach) continue;
      for (int c = f.next; c < n; ++c) {
        const auto d = static_cast<int>((code / place[c]) % static_cast<std::uint64_t>(q));
        for (int nd = 0; nd < q; ++nd) {
          if (nd == d) continue;
          const std::uint64_t value = f.value - static_cast<std::uint64_t>(d) * place[c] + static_cast<std::uint64_t>(nd) * place[c];
          stack.push_back({c + 1, f.changed + 1, value});
        }
      }
    }
  }
  return Graph::from_edges(count, edges, std::move(labels), spec);
}

Graph gen_johnson(int n, int k) {
  FamilySpec spec{Family::johnson, 0, 2, n, k};
  spec.validate();
  const auto rows = slice_order(n, k).rows;
  std::vector<Label> labels;
  for (auto m : rows) labels.emplace_back(SubsetLabel{m, n});
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (std::popcount(rows[i] & rows[j]) == k - 1)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(rows.size(), edges, std::move(labels), spec);
}

Graph gen_bipartite_kneser(int n, int k) {
  FamilySpec spec{Family::bipartite_kneser, 0, 2, n, k};
  spec.validate();
  const auto left = slice_order(n, k).rows;
  const auto right = slice_order(n, n - k).rows;
  std::vector<Label> labels;
  for (auto m : left) labels.emplace_back(SubsetLabel{m, n});
  for (auto m : right) labels.emplace_back(SubsetLabel{m, n});
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if ((left[i] & ~right[j]) == 0)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(left.size() + j));
  return Graph::from_edges(left.size() + right.size(), edges, std::move(labels), spec);
}

Graph gen_petersen(int n, int k) {
  FamilySpec spec{Family::petersen, 0, 2, n, k};
  spec.validate();
  std::vector<Label> labels;
  for (int i = 1; i <= n; ++i) labels.emplace_back(PetersenLabel{false, i});
  for (int i = 1; i <= n; ++i) labels.emplace_back(PetersenLabel{true, i});
  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b) { edges.emplace_back(std::min(a, b), std::max(a, b)); };
  for (int i = 1; i <= n; ++i) {
    add(petersen_v(n, i), petersen_u(n, i));
    add(petersen_v(n, i), petersen_v(n, i + 1));
    add(petersen_u(n, i), petersen_u(n, i + k));
  }
  return Graph::from_edges(static_cast<std::size_t>(2 * n), edges, std::move(labels), spec);
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::hamming: return gen_hamming(spec.t, spec.q, spec.n);
    case Family::johnson: return gen_johnson(spec.n, spec.k);
    case Family::bipartite_kneser: return gen_bipartite_kneser(spec.n, spec.k);
    case Family::petersen: return gen_petersen(spec.n, spec.k);
  }
  throw ParameterError("unknown family");
}

Graph make_path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(n, e);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  e.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, e);
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n, e);
}

// ---- PACE .gr ----

namespace {

std::string label_record(const Label& label) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const VectorLabel& v) const {
      std::string s = "vector " + std::to_string(v.q) + " ";
      auto d = v.digits();
      for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
      return s;
    }
    std::string operator()(const SubsetLabel& s) const {
      std::string out = "subset " + std::to_string(s.ground) + " ";
      auto e = s.elements();
      for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
      if (e.empty()) out += "-";
      return out;
    }
    std::string operator()(const PetersenLabel& p) const {
      return std::string("petersen ") + (p.inner ? "u " : "v ") + std::to_string(p.index);
    }
  };
  return std::visit(Visitor{}, label);
}

std::vector<int> parse_int_list(const std::string& text, std::size_t line) {
  std::vector<int> out;
  if (text == "-") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError(line, "bad integer '" + item + "' in label");
    }
  }
  return out;
}

}  // namespace

void write_gr(std::ostream& out, const Graph& g) {
  if (g.family()) {
    const auto& f = *g.family();
    out << "c family " << family_name(f.family) << " t=" << f.t << " q=" << f.q
        << " n=" << f.n << " k=" << f.k << "\n";
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto rec = label_record(g.label(v));
    if (!rec.empty()) out << "c label " << v + 1 << " " << rec << "\n";
  }
  out << "p tw " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
}

Graph read_gr(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::map<std::size_t, Label> labels;
  std::optional<FamilySpec> family;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == 'c') {
      std::string c, kind;
      ls >> c >> kind;
      if (kind == "family") {
        std::string name;
        ls >> name;
        FamilySpec f;
        try {
          f.family = parse_family(name);
        } catch (const ParameterError& e) {
          throw ParseError(line_no, e.what());
        }
        std::string kv;
        while (ls >> kv) {
          auto eq = kv.find('=');
          if (eq == std::string::npos) throw ParseError(line_no, "bad family field '" + kv + "'");
          int val = std::stoi(kv.substr(eq + 1));
          auto key = kv.substr(0, eq);
          if (key == "t") f.t = val;
          else if (key == "q") f.q = val;
          else if (key == "n") f.n = val;
          else if (key == "k") f.k = val;
        }
        family = f;
      } else if (kind == "label") {
        std::size_t v = 0;
        std::string type;
        if (!(ls >> v >> type) || v == 0) throw ParseError(line_no, "bad label line");
        if (type == "vector") {
          int q = 0;
          std::string digits;
          if (!(ls >> q >> digits)) throw ParseError(line_no, "bad vector label");
          auto d = parse_int_list(digits, line_no);
          std::uint64_t code = 0;
          for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(*it);
          labels[v - 1] = VectorLabel{code, q, static_cast<int>(d.size())};
        } else if (type == "subset") {
          int ground = 0;
          std::string elems;
          if (!(ls >> ground >> elems)) throw ParseError(line_no, "bad subset label");
          std::uint64_t mask = 0;
          for (int e : parse_int_list(elems, line_no)) mask |= std::uint64_t{1} << (e - 1);
          labels[v - 1] = SubsetLabel{mask, ground};
        } else if (type == "petersen") {
          std::string side;
          int index = 0;
          if (!(ls >> side >> index) || (side != "u" && side != "v"))
            throw ParseError(line_no, "bad petersen label");
          labels[v - 1] = PetersenLabel{side == "u", index};
        } else {
          throw ParseError(line_no, "unknown label kind '" + type + "'");
        }
      }
      continue;
    }
    if (line[0] == 'p') {
      std::string p, tw;
      if (header) throw ParseError(line_no, "duplicate header");
      if (!(ls >> p >> tw >> n >> m) || tw != "tw") throw ParseError(line_no, "malformed header, expected 'p tw <n> <m>'");
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, "edge before 'p tw' header");
    long long u = 0, v = 0;
    if (!(ls >> u >> v)) throw ParseError(line_no, "malformed edge line");
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
      throw ParseError(line_no, "edge endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'p tw' header");
  if (edges.size() != m) throw ParseError(line_no, "edge count does not match header");
  std::vector<Label> label_vec;
  if (!labels.empty()) {
    label_vec.assign(n, std::monostate{});
    for (auto& [v, l] : labels) {
      if (v >= n) throw ParseError(line_no, "label for vertex out of range");
      label_vec[v] = l;
    }
  }
  try {
    return Graph::from_edges(n, edges, std::move(label_vec), family);
  } catch (const ParameterError& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace widthlab
