// widthlab: command-line front end.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "widthlab/bounds.hpp"
#include "widthlab/decomp.hpp"
#include "widthlab/error.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/hales.hpp"
#include "widthlab/oracles.hpp"
#include "widthlab/suites.hpp"
#include "widthlab/tables.hpp"
#include "widthlab/widthcalc.hpp"

using namespace widthlab;
using nlohmann::json;

namespace {

struct Options {
  std::string family = "hamming";
  int t = 1, q = 2, n = 3, k = 1, s = 0;
  std::string mode = "repaired";
  std::string which = "tw";
  std::string name;
  std::string formula;
  std::string format = "json";
  std::string out;
  std::string graph_file;
  std::string td_file;
  std::optional<int> t_max, n_max, k_max;
  std::size_t cap = 0;
  int workers = 1;
  int pmax = 0;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream os;
  os << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

FamilySpec family_spec(const Options& o) {
  FamilySpec f{parse_family(o.family), o.t, o.q, o.n, o.k};
  f.validate();
  return f;
}

Graph load_graph(const Options& o) {
  if (o.graph_file.empty()) return generate(family_spec(o));
  std::ifstream in(o.graph_file);
  if (!in) throw std::runtime_error("cannot open '" + o.graph_file + "'");
  return read_gr(in);
}

json report_json(const DecompositionReport& r, int n) {
  json j{{"ok", r.ok}};
  if (r.width) j["width"] = *r.width;
  json uncovered = json::array();
  for (auto [a, b] : r.uncovered_edges) uncovered.push_back({a + 1, b + 1});
  json missing = json::array(), disconnected = json::array();
  for (auto v : r.missing_vertices) missing.push_back(v + 1);
  for (auto v : r.disconnected_vertices) disconnected.push_back(v + 1);
  j["uncovered_edges"] = uncovered;
  j["missing_vertices"] = missing;
  j["disconnected_vertices"] = disconnected;
  (void)n;
  return j;
}

int cmd_gen(const Options& o) {
  Output out(o.out);
  write_gr(out.stream(), generate(family_spec(o)));
  return 0;
}

int cmd_hales(const Options& o) {
  Output out(o.out);
  auto& os = out.stream();
  os << "rank,vector\n";
  std::vector<std::uint64_t> rows = o.k >= 0 && o.mode == "slice" ? slice_order(o.n, o.k).rows : hales_sequence(o.n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << i + 1 << ",";
    for (int c = 0; c < o.n; ++c) os << ((rows[i] >> c) & 1U);
    os << "\n";
  }
  return 0;
}

int cmd_bw(const Options& o) {
  json j{{"t", o.t}, {"n", o.n}, {"closed", to_string(bw_closed(o.t, o.n))},
         {"recursive", to_string(bw_recursion(o.t, o.n))}};
  const int cap = o.cap ? static_cast<int>(o.cap) : 10;
  if (o.n <= cap) j["direct"] = matrix_bandwidth(assemble_full(o.t, o.n, cap));
  Output out(o.out);
  out.stream() << j.dump(2) << "\n";
  return 0;
}

int cmd_radius(const Options& o) {
  const int p = o.t - 2 * o.s;
  json j{{"t", o.t}, {"n", o.n}, {"k", o.k}, {"s", o.s}, {"p", p},
         {"closed", radius_closed(o.t, o.n, o.k, o.s).to_string()},
         {"formula", to_string(radius_closed_formula(o.t, o.n, o.k, o.s))},
         {"recursive", radius_recursive(o.t, o.n, o.k, p).to_string()}};
  if (o.n <= kBlockDimensionCap) j["direct"] = manhattan_radius(assemble_block(o.t, o.n, o.k, o.k + p)).to_string();
  Output out(o.out);
  out.stream() << j.dump(2) << "\n";
  return 0;
}

int cmd_decomp(const Options& o) {
  if (!o.td_file.empty()) {
    const Graph g = load_graph(o);
    std::ifstream in(o.td_file);
    if (!in) throw std::runtime_error("cannot open '" + o.td_file + "'");
    const auto checked = read_td_checked(in, g);
    std::cout << report_json(checked.report, 0).dump(2) << "\n";
    return checked.report.ok ? 0 : 1;
  }
  if (o.family != "petersen") throw ParameterError("decomp builds petersen decompositions; use --td to validate a file");
  const auto mode = o.mode == "verbatim" ? PetersenMode::verbatim : PetersenMode::repaired;
  if (o.mode != "verbatim" && o.mode != "repaired") throw ParameterError("--mode must be verbatim or repaired");
  const auto d = petersen_pd(o.n, o.k, mode);
  const auto rep = validate_decomposition(gen_petersen(o.n, o.k), d);
  if (!o.out.empty()) {
    Output out(o.out);
    write_td(out.stream(), d, static_cast<std::size_t>(2 * o.n));
  }
  std::cout << report_json(rep, o.n).dump(2) << "\n";
  // The verbatim gap for k >= 2 is a known, documented deviation.
  return rep.ok || (mode == PetersenMode::verbatim && o.k >= 2) ? 0 : 1;
}

int cmd_bramble(const Options& o) {
  const Graph g = gen_petersen(o.n, o.k);
  const Bramble b = petersen_bramble(o.n, o.k);
  const auto rep = validate_bramble(g, b);
  const auto h = b.hypergraph(g.vertex_count());
  json j{{"n", o.n}, {"k", o.k}, {"t", petersen_bramble_t(o.n, o.k)}, {"sets", b.sets.size()},
         {"set_size", b.sets.front().size()}, {"ok", rep.ok},
         {"fraction_bound", to_string(transversal_fraction_bound(h))}};
  if (rep.non_touching) j["non_touching"] = {rep.non_touching->first + 1, rep.non_touching->second + 1};
  if (rep.disconnected_set) j["disconnected"] = *rep.disconnected_set + 1;
  if (h.edge_count() <= kTransversalEdgeCap && g.vertex_count() <= 40) j["order"] = exact_transversal(h);
  try {
    j["order_lower_bound"] = petersen_order_lower_bound(o.n, o.k);
  } catch (const HypothesisError& e) {
    j["order_lower_bound"] = nullptr;
  }
  Output out(o.out);
  out.stream() << j.dump(2) << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_spectrum(const Options& o) {
  const Spectrum s = bk_spectrum(o.k);
  json pairs = json::array();
  for (const auto& [l, m] : s.pairs) pairs.push_back({l, to_string(m)});
  json j{{"k", o.k}, {"n", 2 * o.k + 1}, {"spectrum", pairs}, {"bk_spectral_lb", to_string(bk_spectral_lb(o.k))}};
  bool ok = true;
  if (2 * binom_ext(2 * o.k + 1, o.k) <= kSpectrumVertexCap) {
    const Graph g = gen_bipartite_kneser(2 * o.k + 1, o.k);
    const auto rep = verify_spectrum_moments(g, s, o.pmax ? o.pmax : 2 * (o.k + 1));
    j["verified"] = rep.ok;
    j["annihilates"] = rep.annihilates;
    if (rep.failing_power) j["failing_power"] = *rep.failing_power;
    ok = rep.ok;
    if (ok) j["spectral_lower_bound"] = spectral_lower_bound(g, s);
  }
  Output out(o.out);
  out.stream() << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_oracle(const Options& o) {
  const Graph g = load_graph(o);
  json j{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"oracle", o.which}};
  if (g.family()) j["instance"] = g.family()->to_string();
  auto order_json = [](const std::vector<Vertex>& order) {
    json a = json::array();
    for (auto v : order) a.push_back(v + 1);
    return a;
  };
  if (o.which == "tw") {
    const auto r = exact_treewidth(g, o.cap ? o.cap : kTreewidthCap);
    j["value"] = r.width;
    j["certificate"] = order_json(r.order);
  } else if (o.which == "pw") {
    const auto r = exact_pathwidth(g, o.cap ? o.cap : kPathwidthCap);
    j["value"] = r.width;
    j["certificate"] = order_json(r.order);
  } else if (o.which == "bw") {
    const auto r = exact_bandwidth(g, o.cap ? o.cap : kBandwidthCap);
    j["value"] = r.bandwidth;
    j["certificate"] = order_json(r.ordering.sequence());
  } else if (o.which == "bv") {
    j["value"] = b_v_profile(g, o.cap ? o.cap : kBoundaryCap);
  } else if (o.which == "sep") {
    const auto r = min_balanced_separator(g, g.vertex_count(), o.cap ? o.cap : kSeparatorCap);
    j["value"] = r ? json(r->separator.size()) : json(nullptr);
    if (r) j["certificate"] = order_json(r->separator);
  } else if (o.which == "chordal") {
    const auto r = is_chordal(g);
    j["value"] = r.chordal;
    j["certificate"] = order_json(r.chordal ? r.peo : r.witness_cycle);
  } else {
    throw ParameterError("--which must be one of tw, pw, bw, bv, sep, chordal");
  }
  Output out(o.out);
  out.stream() << j.dump(2) << "\n";
  return 0;
}

int cmd_bounds(const Options& o) {
  const Graph g = load_graph(o);
  json lower{{"degree", degree_lower_bound(g)}};
  json upper = json::object();
  const auto& f = g.family();
  if (f && f->family == Family::bipartite_kneser && f->n == 2 * f->k + 1) lower["spectral"] = to_string(bk_spectral_lb(f->k));
  if (f && f->family == Family::petersen) {
    const auto b = petersen_bramble(f->n, f->k);
    const auto rep = validate_bramble(g, b);
    if (rep.ok && b.sets.size() <= kTransversalEdgeCap) lower["bramble"] = exact_transversal(b.hypergraph(g.vertex_count())) - 1;
    const auto pd = validate_decomposition(g, petersen_pd(f->n, f->k, PetersenMode::repaired));
    if (pd.ok) upper["petersen_pd"] = *pd.width;
  }
  if (f && f->family == Family::johnson && f->k >= 1) upper["slice_bandwidth"] = to_string(johnson_slice_bandwidth(f->n, f->k));
  if (f && f->family == Family::hamming && f->q == 2) upper["bandwidth"] = to_string(bw_closed(f->t, f->n));
  json j{{"instance", f ? f->to_string() : std::string("graph")}, {"lower_bounds", lower}, {"upper_bounds", upper}};
  if (g.vertex_count() <= (o.cap ? o.cap : 20)) j["oracle"] = {{"treewidth", exact_treewidth(g).width}};
  Output out(o.out);
  out.stream() << j.dump(2) << "\n";
  return 0;
}

int cmd_suite(const Options& o) {
  SuiteConfig config{o.name, o.t_max, o.n_max, o.k_max, std::nullopt, o.workers};
  if (o.cap) config.cap = o.cap;
  const auto report = run_suite(config);
  const auto j = report_to_json(report, utc_now());
  Output out(o.out);
  out.stream() << j.dump(2) << "\n";
  std::cerr << report.suite << ": " << report.records.size() << " checks, " << report.failures() << " failed, "
            << report.known_flags() << " known-flagged\n";
  return report.passed() ? 0 : 1;
}

int cmd_table(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw ParameterError("--format must be csv or json");
  const auto table = emit_table(o.formula, {o.t_max, o.n_max, o.k_max});
  Output out(o.out);
  if (o.format == "csv") write_csv(out.stream(), table);
  else write_json(out.stream(), table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"widthlab: width formulas, certificates and exact oracles for structured graph families"};
  app.require_subcommand(1);
  Options o;

  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", o.family, "hamming | johnson | bipartite_kneser | petersen");
    c->add_option("--t", o.t, "distance threshold");
    c->add_option("--q", o.q, "alphabet size");
    c->add_option("--n", o.n, "dimension / ground set size");
    c->add_option("--k", o.k, "subset size / skip");
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "output file (default stdout)"); };

  auto* gen = app.add_subcommand("gen", "write a family graph in .gr format");
  add_family(gen);
  add_out(gen);

  auto* hales = app.add_subcommand("hales", "print the Hales order (or a slice with --mode slice) as CSV");
  hales->add_option("--n", o.n)->required();
  hales->add_option("--k", o.k);
  hales->add_option("--mode", o.mode, "full | slice")->default_val("full");
  add_out(hales);

  auto* bw = app.add_subcommand("bw", "bandwidth of H(t,2,n): closed, recursive, direct");
  bw->add_option("--t", o.t)->required();
  bw->add_option("--n", o.n)->required();
  bw->add_option("--cap", o.cap, "largest n for the direct matrix");
  add_out(bw);

  auto* radius = app.add_subcommand("radius", "Manhattan radius of M^(t,n)_{k,k+t-2s}");
  radius->add_option("--t", o.t)->required();
  radius->add_option("--n", o.n)->required();
  radius->add_option("--k", o.k)->required();
  radius->add_option("--s", o.s)->required();
  add_out(radius);

  auto* decomp = app.add_subcommand("decomp", "build/validate decompositions");
  add_family(decomp);
  decomp->add_option("--mode", o.mode, "verbatim | repaired");
  decomp->add_option("--graph", o.graph_file, ".gr file");
  decomp->add_option("--td", o.td_file, ".td file to validate");
  add_out(decomp);

  auto* bramble = app.add_subcommand("bramble", "Petersen bramble and its order bounds");
  bramble->add_option("--n", o.n)->required();
  bramble->add_option("--k", o.k)->required();
  add_out(bramble);

  auto* spectrum = app.add_subcommand("spectrum", "spectrum of BK(2k+1,k) with exact verification");
  spectrum->add_option("--k", o.k)->required();
  spectrum->add_option("--pmax", o.pmax);
  add_out(spectrum);

  auto* oracle = app.add_subcommand("oracle", "exact oracle values");
  add_family(oracle);
  oracle->add_option("--which", o.which, "tw | pw | bw | bv | sep | chordal");
  oracle->add_option("--graph", o.graph_file, ".gr file");
  oracle->add_option("--cap", o.cap);
  add_out(oracle);

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds for one instance");
  add_family(bounds);
  bounds->add_option("--graph", o.graph_file, ".gr file");
  bounds->add_option("--cap", o.cap, "largest |V| for the exact treewidth oracle");
  add_out(bounds);

  auto* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("name,--name", o.name, "suite name")->required()->check(CLI::IsMember(suite_names()));
  suite->add_option("--t", o.t_max, "largest t");
  suite->add_option("--n", o.n_max, "largest n");
  suite->add_option("--k", o.k_max, "largest k");
  suite->add_option("--cap", o.cap, "oracle vertex cap");
  suite->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  suite->add_option("--format", o.format)->check(CLI::IsMember({"json"}));
  add_out(suite);

  auto* table = app.add_subcommand("table", "emit a formula table");
  table->add_option("formula,--formula", o.formula)->required()->check(CLI::IsMember(table_formulas()));
  table->add_option("--t", o.t_max, "largest t");
  table->add_option("--n", o.n_max, "largest n");
  table->add_option("--k", o.k_max, "largest k");
  table->add_option("--format", o.format)->default_val("csv");
  add_out(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*hales) return cmd_hales(o);
    if (*bw) return cmd_bw(o);
    if (*radius) return cmd_radius(o);
    if (*decomp) return cmd_decomp(o);
    if (*bramble) return cmd_bramble(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*oracle) return cmd_oracle(o);
    if (*bounds) return cmd_bounds(o);
    if (*suite) return cmd_suite(o);
    if (*table) return cmd_table(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
