#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "starb/search.hpp"

namespace starb {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t remaining_ms(Clock::time_point deadline) {
  const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
  return std::max<std::int64_t>(left, 1);
}

BipartiteTemplate template_of(const ColumnSet& cols, const std::vector<std::size_t>& picks) {
  const auto s = static_cast<std::size_t>(cols.s());
  BipartiteTemplate t{IntMatrix(s, picks.size()), cols.mu_sq()};
  for (std::size_t j = 0; j < picks.size(); ++j) {
    const auto col = cols.column(picks[j]);
    for (std::size_t i = 0; i < s; ++i) t.b(i, j) = col[i];
  }
  return t;
}

// (1^{t/2}, (-1)^{t/2}, 0^{w-t}, 1^{w-t}, 0...): overlaps the first w rows in t places.
std::vector<std::int8_t> second_representative(std::int64_t s, std::int64_t w, std::int64_t t) {
  std::vector<std::int8_t> v(static_cast<std::size_t>(s), 0);
  for (std::int64_t i = 0; i < t; ++i) v[static_cast<std::size_t>(i)] = i < t / 2 ? 1 : -1;
  for (std::int64_t i = w; i < 2 * w - t; ++i) v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace

OracleResult brute_force_max_order(std::int64_t s, std::int64_t mu_sq, const OracleOptions& opts) {
  const auto start = Clock::now();
  const auto cols = enumerate_columns(s, mu_sq, opts.column_budget, opts.sign_reduction);
  const auto deadline = start + std::chrono::milliseconds(opts.time_budget_ms);
  const bool limited = opts.time_budget_ms > 0;

  OracleResult r;
  r.s = s;
  r.mu_sq = mu_sq;
  r.column_count = cols.size();

  auto clique_opts = [&](std::size_t stop_at) {
    CliqueOptions c;
    c.stop_at = stop_at;
    c.threads = opts.threads;
    c.time_budget_ms = limited ? remaining_ms(deadline) : 0;
    return c;
  };

  std::vector<std::size_t> best;
  if (!opts.row_symmetry) {
    const auto g = build_compatibility_graph(cols);
    const auto c = max_clique(g, clique_opts(static_cast<std::size_t>(s)));
    best = c.witness;
    r.exact = c.exact;
    r.nodes = c.nodes;
  } else {
    // Every orthogonal pair is carried by a signed row permutation onto (e, v_t) with t the
    // size of the support overlap, so it suffices to extend these pairs.
    std::vector<std::int8_t> e(static_cast<std::size_t>(s), 0);
    std::fill_n(e.begin(), mu_sq, std::int8_t{1});
    const auto first = cols.find(e);
    if (!first) throw std::logic_error("brute_force_max_order: representative column missing");
    best = {*first};
    for (std::int64_t t = 0; t <= mu_sq && best.size() < static_cast<std::size_t>(s); t += 2) {
      if (2 * mu_sq - t > s) continue;
      if (limited && Clock::now() > deadline) {
        r.exact = false;
        break;
      }
      const auto second = cols.find(second_representative(s, mu_sq, t));
      if (!second) {
        if (!opts.sign_reduction) throw std::logic_error("brute_force_max_order: representative column missing");
        continue;
      }
      std::vector<std::size_t> common;
      for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols.dot(i, *first) == 0 && cols.dot(i, *second) == 0) common.push_back(i);
      std::vector<std::size_t> picks{*first, *second};
      if (!common.empty()) {
        const auto g = build_compatibility_graph(cols, common);
        const auto c = max_clique(g, clique_opts(static_cast<std::size_t>(s - 2)));
        r.nodes += c.nodes;
        r.exact = r.exact && c.exact;
        for (auto v : c.witness) picks.push_back(common[v]);
      }
      if (picks.size() > best.size()) best = std::move(picks);
    }
  }

  r.k = best.size();
  r.n = s + static_cast<std::int64_t>(r.k);
  r.witness = template_of(cols, best);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return r;
}

}  // namespace starb
