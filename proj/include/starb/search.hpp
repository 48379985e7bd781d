#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "starb/star_core.hpp"

namespace starb {

/// All {-1,0,1}-vectors of length s with exactly mu_sq nonzero entries.
///
/// With sign reduction (default) only the representative whose first nonzero entry is +1
/// is kept: negating a column is a switching at that star-set vertex. Order: supports in
/// lexicographic order of their position sets, then sign patterns counting the minus
/// signs in binary from the last position (+ before -).
class ColumnSet {
 public:
  std::int64_t s() const noexcept { return s_; }
  std::int64_t mu_sq() const noexcept { return mu_sq_; }
  bool sign_reduced() const noexcept { return sign_reduced_; }
  std::size_t size() const noexcept { return count_; }
  std::span<const std::int8_t> column(std::size_t i) const {
    return {entries_.data() + i * static_cast<std::size_t>(s_), static_cast<std::size_t>(s_)};
  }
  // Exact inner product of two stored columns.
  int dot(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> find(std::span<const std::int8_t> col) const;

  friend ColumnSet enumerate_columns(std::int64_t, std::int64_t, std::uint64_t, bool);

 private:
  std::int64_t s_ = 0;
  std::int64_t mu_sq_ = 0;
  bool sign_reduced_ = true;
  std::size_t count_ = 0;
  std::vector<std::int8_t> entries_;
  std::vector<std::uint32_t> plus_;  // bit i set iff entry i == +1
  std::vector<std::uint32_t> minus_;
};

inline constexpr std::uint64_t kDefaultColumnBudget = 200'000;
inline constexpr std::int64_t kMaxSearchRows = 32;

// C(s, mu_sq) * 2^(mu_sq - 1) columns (2^mu_sq without sign reduction).
std::uint64_t column_count(std::int64_t s, std::int64_t mu_sq, bool sign_reduction = true);

// Throws BudgetExceeded if the column count exceeds `budget`, std::invalid_argument if
// existence fails or s > 32.
ColumnSet enumerate_columns(std::int64_t s, std::int64_t mu_sq, std::uint64_t budget = kDefaultColumnBudget,
                            bool sign_reduction = true);

/// Simple graph with one bitset row per vertex.
class CompatibilityGraph {
 public:
  CompatibilityGraph() = default;
  explicit CompatibilityGraph(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  bool adjacent(std::size_t i, std::size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1U; }
  void add_edge(std::size_t i, std::size_t j);
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;
  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Edge iff the exact inner product is 0.
CompatibilityGraph build_compatibility_graph(const ColumnSet& cols);
// Same, restricted to the listed columns (vertex i of the result is columns[subset[i]]).
CompatibilityGraph build_compatibility_graph(const ColumnSet& cols, std::span<const std::size_t> subset);

struct CliqueOptions {
  // 0 = no limit.
  std::int64_t time_budget_ms = 0;
  // Stop as soon as a clique of this size is found (an externally known upper bound). 0 = off.
  std::size_t stop_at = 0;
  // 1 = serial reference kernel; 0 = OpenMP default team; otherwise that many threads.
  int threads = 1;
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending vertex indices
  bool exact = true;                 // false: time budget ran out, size is a lower bound
  std::uint64_t nodes = 0;
};

/// Exact maximum clique: branch and bound with greedy-colouring bounds over bitsets.
///
/// Vertices are branched in descending degree order, ties by index. The size is found by
/// the serial or OpenMP kernel; the witness is then located by a serial pass that stops
/// at the first clique of that size, so every thread count returns the same witness.
CliqueResult max_clique(const CompatibilityGraph& g, const CliqueOptions& opts = {});

// The two size kernels, exposed for testing and benchmarking.
CliqueResult max_clique_serial(const CompatibilityGraph& g, const CliqueOptions& opts = {});
CliqueResult max_clique_parallel(const CompatibilityGraph& g, const CliqueOptions& opts = {});

struct OracleOptions {
  std::uint64_t column_budget = kDefaultColumnBudget;
  std::int64_t time_budget_ms = 60'000;
  bool sign_reduction = true;
  // Fix the first two clique columns to representatives of the signed row-permutation orbits.
  bool row_symmetry = true;
  int threads = 1;
};

struct OracleResult {
  std::int64_t s = 0;
  std::int64_t mu_sq = 0;
  std::int64_t n = 0;  // s + k
  std::size_t k = 0;
  bool exact = true;   // false: time budget exhausted, n is a lower bound
  BipartiteTemplate witness;
  std::size_t column_count = 0;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
};

// s + (maximum number of pairwise orthogonal columns). Throws BudgetExceeded / invalid_argument
// as enumerate_columns does.
OracleResult brute_force_max_order(std::int64_t s, std::int64_t mu_sq, const OracleOptions& opts = {});

}  // namespace starb
