// Named verification suites and their canonical JSON reports.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "metacs/exec.hpp"

namespace metacs {

enum class Status { pass, fail, error };
std::string to_string(Status s);

struct Report {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::error;
  std::optional<std::string> witness;
  std::int64_t duration_ms = 0;
};

// Unset fields fall back to each suite's defaults.
struct SuiteOptions {
  std::optional<int> k;
  std::optional<int> n;
  std::optional<long> p;
  std::optional<int> trunc;
  std::optional<int> max_norm;
  std::optional<int> trials;
  std::uint64_t seed = 0;
  bool timings = false;  // real durations; otherwise 0 so output bytes are reproducible
  Exec exec = Exec::parallel;
};

const std::vector<std::string>& suite_names();  // without "all"

// Reports sorted by (check, params). Throws std::invalid_argument for an unknown suite.
std::vector<Report> run_suite(const std::string& suite, const SuiteOptions& opts);

nlohmann::json to_json(const Report& r);
// {version, command, seed, reports}, keys sorted, two-space indent, trailing newline.
std::string render_json(const std::string& command, std::uint64_t seed, const std::vector<Report>& reports);
std::string render_csv(const std::vector<Report>& reports);
std::string render_text(const std::vector<Report>& reports);

inline const std::string kVersion = "0.1.0";

}  // namespace metacs
