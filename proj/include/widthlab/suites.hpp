#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace widthlab {

/// One checked identity or inequality. `holds` is the outcome of
/// `lhs relation rhs`; `known` marks a documented, expected deviation.
struct SuiteRecord {
  std::string instance;
  std::string check;
  std::string lhs;
  std::string relation = "=";
  std::string rhs;
  bool holds = false;
  bool known = false;
};

struct SuiteConfig {
  std::string name;
  std::optional<int> t_max;
  std::optional<int> n_max;
  std::optional<int> k_max;
  std::optional<std::size_t> cap;  // oracle vertex cap override
  int workers = 1;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteRecord> records;

  std::size_t failures() const;       // !holds and !known
  std::size_t known_flags() const;
  bool passed() const { return failures() == 0; }
};

/// theorem1, appendixA, appendixB, hales, petersen, bramble, kneser,
/// theorem3, spectrum, limit, cross.
const std::vector<std::string>& suite_names();

/// Throws ParameterError for an unknown suite name or out-of-range ranges.
SuiteReport run_suite(const SuiteConfig& config);

/// {header: {suite, generated_at, ...}, records: [...]}. Records keep the
/// suite's deterministic order.
nlohmann::json report_to_json(const SuiteReport& report, const std::string& generated_at);

}  // namespace widthlab
