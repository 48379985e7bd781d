#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "starb/catalog.hpp"

namespace starb {

namespace {

using boost::multiprecision::cpp_int;

class CycleCounter {
 public:
  CycleCounter(const SignedGraph& g, std::size_t max_len) : g_(g), max_len_(max_len), on_path_(g.order(), 0) {}

  std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> run() {
    for (start_ = 0; start_ < g_.order(); ++start_) {
      on_path_[start_] = 1;
      walk(start_, 1, 1);
      on_path_[start_] = 0;
    }
    // Each cycle was traced once in each direction.
    for (auto& [len, counts] : out_) {
      counts.first /= 2;
      counts.second /= 2;
    }
    return out_;
  }

 private:
  void walk(std::size_t v, std::size_t len, int sign) {
    for (std::size_t w = start_; w < g_.order(); ++w) {
      if (!g_.adjacent(v, w)) continue;
      const int next = sign * g_.sign(v, w);
      if (w == start_) {
        if (len >= 3) {
          auto& counts = out_[len];
          (next > 0 ? counts.first : counts.second) += 1;
        }
        continue;
      }
      if (on_path_[w] || len == max_len_) continue;
      on_path_[w] = 1;
      walk(w, len + 1, next);
      on_path_[w] = 0;
    }
  }

  const SignedGraph& g_;
  std::size_t max_len_;
  std::vector<char> on_path_;
  std::size_t start_ = 0;
  std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> out_;
};

std::vector<std::size_t> sorted_degrees(const SignedGraph& g) {
  std::vector<std::size_t> d(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) d[u] = g.degree(u);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> cycle_sign_profile(const SignedGraph& g,
                                                                                   std::size_t max_len) {
  return CycleCounter(g, max_len).run();
}

std::vector<std::string> closed_walk_traces(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<cpp_int> a(n * n), power(n * n), next(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = power[i * n + j] = g.sign(i, j);
  std::vector<std::string> traces;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          cpp_int sum = 0;
          for (std::size_t x = 0; x < n; ++x)
            if (a[x * n + j] != 0) sum += power[i * n + x] * a[x * n + j];
          next[i * n + j] = sum;
        }
      power.swap(next);
    }
    cpp_int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += power[i * n + i];
    traces.push_back(tr.str());
  }
  return traces;
}

std::vector<std::size_t> square_rank_sequence(const SignedGraph& g) {
  const std::size_t n = g.order();
  const auto a2 = g.adjacency() * g.adjacency();
  std::size_t max_deg = 0;
  for (std::size_t u = 0; u < n; ++u) max_deg = std::max(max_deg, g.degree(u));
  std::vector<std::size_t> ranks;
  for (std::size_t t = 0; t <= max_deg * max_deg; ++t)
    ranks.push_back(integer_rank(a2 - static_cast<IntMatrix::value_type>(t) * IntMatrix::identity(n)));
  return ranks;
}

bool invariants_match(const SignedGraph& g1, const SignedGraph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  if (sorted_degrees(g1) != sorted_degrees(g2)) return false;
  const auto len = std::min<std::size_t>(g1.order(), 6);
  if (cycle_sign_profile(g1, len) != cycle_sign_profile(g2, len)) return false;
  if (closed_walk_traces(g1) != closed_walk_traces(g2)) return false;
  return square_rank_sequence(g1) == square_rank_sequence(g2);
}

}  // namespace starb
