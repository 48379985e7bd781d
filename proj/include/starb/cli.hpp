#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starb::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2, kBudget = 3 };

/// Line-oriented "key: value" report. Everything before the trailing wall_ms line is
/// deterministic for fixed inputs.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<std::string> files;
  int exit_code = kOk;
  std::int64_t wall_ms = 0;

  void add(std::string key, std::string value) { lines.emplace_back(std::move(key), std::move(value)); }
  // Raises the exit code; a failure is never downgraded by a later budget or input issue.
  void fail(int code);

  void write_text(std::ostream& out, bool timing = true) const;
  void write_json(std::ostream& out, bool timing = true) const;
};

// Oracle time budget: STARB_BUDGET_MS if set and valid, else `fallback`.
std::int64_t budget_from_env(std::int64_t fallback);

struct ConstructOptions {
  std::string kind;               // hadamard | conference | template | named
  std::vector<std::string> args;  // positional: order / q / family id and parameters, then an optional output path
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> mu_sq;
  std::string out;
};
RunReport cmd_construct(const ConstructOptions& opts);

struct MaxOrderOptions {
  std::int64_t s = 0;
  std::int64_t mu_sq = 0;
  bool oracle = false;
  std::int64_t budget_ms = 60'000;
  std::uint64_t column_budget = 0;  // 0 = default
  int threads = 1;
};
RunReport cmd_maxorder(const MaxOrderOptions& opts);

struct SearchOptions {
  std::int64_t s = 0;
  std::int64_t mu_sq = 0;
  std::int64_t budget_ms = 60'000;
  std::uint64_t column_budget = 0;
  std::string emit_witness;
  int threads = 1;
};
RunReport cmd_search(const SearchOptions& opts);

struct VerifyOptions {
  std::string path;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> mu_sq;
  std::string format = "auto";  // auto | sign | int | edges
};
RunReport cmd_verify(const VerifyOptions& opts);

struct ReproduceOptions {
  std::string grid = "default";  // default | huge | s<=N
  std::int64_t budget_ms = 60'000;
  std::uint64_t column_budget = 0;
  int threads = 0;
};
RunReport cmd_reproduce(const ReproduceOptions& opts);

struct IsoOptions {
  std::string first;
  std::string second;
};
RunReport cmd_iso(const IsoOptions& opts);

RunReport cmd_catalog_list();

}  // namespace starb::cli
