#include <algorithm>
#include <optional>
#include <stdexcept>

#include "starb/catalog.hpp"

namespace starb {

namespace {

// Records the first value seen for a class of pairs and rejects any later mismatch.
struct Constant {
  std::optional<std::int64_t> value;
  bool take(std::int64_t v) {
    if (!value) value = v;
    return *value == v;
  }
  std::int64_t get() const { return value.value_or(0); }
};

}  // namespace

std::optional<SrgParams> srg_check(const SignedGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  const auto r = g.degree(0);
  for (std::size_t u = 1; u < n; ++u)
    if (g.degree(u) != r) return std::nullopt;
  if (r == 0) return std::nullopt;
  if (r == n - 1) {
    const auto edges = g.edges();
    const bool homogeneous =
        std::all_of(edges.begin(), edges.end(), [&](const auto& e) { return e.sign == edges.front().sign; });
    if (homogeneous) return std::nullopt;
  }

  const auto& a = g.adjacency();
  const auto a2 = a * a;
  Constant pos, neg, non;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto w = a2(u, v);
      const bool ok = a(u, v) > 0 ? pos.take(w) : a(u, v) < 0 ? neg.take(w) : non.take(w);
      if (!ok) return std::nullopt;
    }

  SrgParams p{n, static_cast<std::int64_t>(r), pos.get(), neg.get(), non.get()};

  const auto abs_a = g.underlying();
  const auto complement = IntMatrix::ones(n, n) - IntMatrix::identity(n) - abs_a;
  const auto rhs = p.a * (a + abs_a) - p.b * (a - abs_a) + (2 * p.c) * complement + (2 * p.r) * IntMatrix::identity(n);
  if (2 * a2 != rhs) throw std::logic_error("srg_check: walk constants do not reproduce A^2");
  return p;
}

bool is_complete_bipartite(const SignedGraph& g, std::size_t m) {
  if (g.order() != 2 * m) return false;
  for (std::size_t u = 0; u < 2 * m; ++u)
    for (std::size_t v = 0; v < 2 * m; ++v)
      if (g.adjacent(u, v) != ((u < m) != (v < m))) return false;
  return true;
}

bool is_complete_bipartite_minus_matching(const SignedGraph& g, std::size_t m) {
  if (g.order() != 2 * m) return false;
  for (std::size_t u = 0; u < 2 * m; ++u)
    for (std::size_t v = 0; v < 2 * m; ++v) {
      const bool across = (u < m) != (v < m);
      const bool matched = u % m == v % m;
      if (g.adjacent(u, v) != (across && !matched)) return false;
    }
  return true;
}

SignedGraph signed_kronecker_bipartite(const SignedGraph& g1, std::size_t rows1, const SignedGraph& g2,
                                       std::size_t rows2) {
  const auto b = kronecker(bipartite_block(g1, rows1), bipartite_block(g2, rows2));
  const std::size_t rows = b.rows(), cols = b.cols();
  SignedGraph g(rows + cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g.set_edge(i, rows + j, static_cast<int>(b(i, j)));
  return g;
}

}  // namespace starb
