#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

#include "starb/errors.hpp"
#include "starb/search.hpp"

namespace starb {

std::uint64_t column_count(std::int64_t s, std::int64_t mu_sq, bool sign_reduction) {
  if (mu_sq < 0 || mu_sq > s) return 0;
  boost::multiprecision::uint128_t binom = 1;
  for (std::int64_t i = 1; i <= mu_sq; ++i) binom = binom * static_cast<unsigned>(s - mu_sq + i) / static_cast<unsigned>(i);
  const std::int64_t sign_bits = sign_reduction ? mu_sq - 1 : mu_sq;
  if (sign_bits >= 64) return UINT64_MAX;
  const boost::multiprecision::uint128_t total = binom << static_cast<unsigned>(sign_bits);
  return total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total);
}

int ColumnSet::dot(std::size_t i, std::size_t j) const {
  return std::popcount(plus_[i] & plus_[j]) + std::popcount(minus_[i] & minus_[j]) -
         std::popcount(plus_[i] & minus_[j]) - std::popcount(minus_[i] & plus_[j]);
}

std::optional<std::size_t> ColumnSet::find(std::span<const std::int8_t> col) const {
  if (col.size() != static_cast<std::size_t>(s_)) return std::nullopt;
  std::uint32_t p = 0, m = 0;
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i] == 1) p |= 1U << i;
    if (col[i] == -1) m |= 1U << i;
  }
  for (std::size_t i = 0; i < count_; ++i)
    if (plus_[i] == p && minus_[i] == m) return i;
  return std::nullopt;
}

ColumnSet enumerate_columns(std::int64_t s, std::int64_t mu_sq, std::uint64_t budget, bool sign_reduction) {
  if (!existence_check(s, mu_sq)) throw std::invalid_argument("column enumeration needs 1 <= mu^2 <= s");
  if (s > kMaxSearchRows) throw std::invalid_argument("column enumeration supports s <= 32");
  const auto total = column_count(s, mu_sq, sign_reduction);
  if (total > budget)
    throw BudgetExceeded("column enumeration for s=" + std::to_string(s) + ", mu^2=" + std::to_string(mu_sq) + " needs " +
                         std::to_string(total) + " columns, budget is " + std::to_string(budget));

  ColumnSet cs;
  cs.s_ = s;
  cs.mu_sq_ = mu_sq;
  cs.sign_reduced_ = sign_reduction;
  cs.count_ = static_cast<std::size_t>(total);
  cs.entries_.reserve(cs.count_ * static_cast<std::size_t>(s));
  cs.plus_.reserve(cs.count_);
  cs.minus_.reserve(cs.count_);

  const auto w = static_cast<std::size_t>(mu_sq);
  std::vector<std::size_t> support(w);
  for (std::size_t i = 0; i < w; ++i) support[i] = i;
  const std::uint64_t patterns = std::uint64_t{1} << (sign_reduction ? w - 1 : w);
  while (true) {
    for (std::uint64_t r = 0; r < patterns; ++r) {
      std::vector<std::int8_t> col(static_cast<std::size_t>(s), 0);
      std::uint32_t p = 0, m = 0;
      for (std::size_t i = 0; i < w; ++i) {
        const bool negative = (r >> (w - 1 - i)) & 1U;
        col[support[i]] = negative ? -1 : 1;
        (negative ? m : p) |= 1U << support[i];
      }
      cs.entries_.insert(cs.entries_.end(), col.begin(), col.end());
      cs.plus_.push_back(p);
      cs.minus_.push_back(m);
    }
    // Next combination in lexicographic order.
    std::size_t i = w;
    while (i > 0 && support[i - 1] == static_cast<std::size_t>(s) - w + (i - 1)) --i;
    if (i == 0) break;
    ++support[i - 1];
    for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
  }
  if (cs.plus_.size() != cs.count_) throw std::logic_error("column count mismatch");
  return cs;
}

CompatibilityGraph::CompatibilityGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void CompatibilityGraph::add_edge(std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("compatibility graph is loopless");
  bits_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  bits_[j * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

std::size_t CompatibilityGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (auto w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t CompatibilityGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) total += degree(i);
  return total / 2;
}

CompatibilityGraph build_compatibility_graph(const ColumnSet& cols, std::span<const std::size_t> subset) {
  const std::size_t n = subset.size();
  CompatibilityGraph g(n);
  // Rows are written independently; each thread owns row i's bits for j > i and the
  // mirrored bits are filled afterwards.
  std::vector<std::vector<std::size_t>> upper(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (cols.dot(subset[i], subset[j]) == 0) upper[i].push_back(j);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : upper[i]) g.add_edge(i, j);
  return g;
}

CompatibilityGraph build_compatibility_graph(const ColumnSet& cols) {
  std::vector<std::size_t> all(cols.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return build_compatibility_graph(cols, all);
}

}  // namespace starb
