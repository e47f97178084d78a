#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "widthlab/decomp.hpp"
#include "widthlab/error.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/tables.hpp"

using namespace widthlab;

TEST_CASE(".td round trip is byte exact") {
  const Decomposition d = petersen_pd(5, 2, PetersenMode::repaired);
  std::stringstream first;
  write_td(first, d, 10);
  const std::string text = first.str();
  CHECK(text.rfind("s td ", 0) == 0);
  std::istringstream in(text);
  const TdFile f = read_td(in);
  CHECK(f.vertex_count == 10);
  CHECK(f.decomposition == d);
  std::stringstream second;
  write_td(second, f.decomposition, f.vertex_count);
  CHECK(second.str() == text);
}

TEST_CASE("checked .td read validates against the graph") {
  const Graph g = gen_petersen(5, 2);
  std::stringstream good;
  write_td(good, petersen_pd(5, 2, PetersenMode::repaired), 10);
  const CheckedTd ok = read_td_checked(good, g);
  CHECK(ok.report.ok);
  CHECK(ok.report.width == 6);

  std::stringstream verbatim;
  write_td(verbatim, petersen_pd(5, 2, PetersenMode::verbatim), 10);
  CHECK_FALSE(read_td_checked(verbatim, g).report.ok);
}

TEST_CASE(".td tree decompositions keep their edges") {
  Decomposition d;
  d.bags = {{0, 1, 2}, {0, 2, 3}, {2, 4}};
  d.tree_edges = {{0, 1}, {1, 2}};
  std::stringstream ss;
  write_td(ss, d, 5);
  const TdFile f = read_td(ss);
  CHECK(f.decomposition.bags == d.bags);
  CHECK(f.decomposition.tree_edges == d.tree_edges);
}

TEST_CASE(".td parse errors") {
  std::istringstream header("s tw 1 1 1\nb 1 1\n");
  try {
    read_td(header);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  std::istringstream bag("s td 2 2 3\nb 1 1 2\nb 3 3\n1 2\n");
  try {
    read_td(bag);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream vertex("s td 1 1 3\nb 1 4\n");
  CHECK_THROWS_AS(read_td(vertex), ParseError);
}

TEST_CASE("tables") {
  const Table bw = emit_table("bw_closed", TableGrid{3, 10, std::nullopt});
  CHECK(bw.rows.size() == 24);
  std::ostringstream csv;
  write_csv(csv, bw);
  const std::string text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 25);
  std::ostringstream json;
  write_json(json, bw);
  CHECK(json.str().find("\"closed\"") != std::string::npos);
  CHECK_THROWS_AS(emit_table("no_such_formula", TableGrid{}), ParameterError);
  for (const auto& f : table_formulas()) CHECK_FALSE(emit_table(f, TableGrid{}).rows.empty());
}
