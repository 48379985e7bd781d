#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "starb/errors.hpp"
#include "starb/star_core.hpp"

namespace starb {

SignedGraph SignedGraph::from_adjacency(IntMatrix a) {
  if (!a.square()) throw std::invalid_argument("adjacency matrix must be square");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) throw std::invalid_argument("adjacency matrix must have zero diagonal");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) < -1 || a(i, j) > 1) throw std::invalid_argument("adjacency entries must be in {-1,0,1}");
      if (a(i, j) != a(j, i)) throw std::invalid_argument("adjacency matrix must be symmetric");
    }
  }
  SignedGraph g;
  g.adj_ = std::move(a);
  return g;
}

SignedGraph SignedGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  SignedGraph g(n);
  for (const auto& e : edges) g.set_edge(e.u, e.v, e.sign);
  return g;
}

void SignedGraph::set_edge(std::size_t u, std::size_t v, int sign) {
  if (u >= order() || v >= order()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (sign < -1 || sign > 1) throw std::invalid_argument("edge sign must be in {-1,0,1}");
  adj_(u, v) = sign;
  adj_(v, u) = sign;
}

IntMatrix SignedGraph::underlying() const {
  IntMatrix u = adj_;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = u(i, j) != 0 ? 1 : 0;
  return u;
}

std::vector<SignedGraph::Edge> SignedGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = u + 1; v < order(); ++v)
      if (adj_(u, v) != 0) out.push_back({u, v, static_cast<int>(adj_(u, v))});
  return out;
}

std::size_t SignedGraph::edge_count() const {
  std::size_t m = 0;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = u + 1; v < order(); ++v) m += adj_(u, v) != 0;
  return m;
}

std::size_t SignedGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < order(); ++v) d += adj_(u, v) != 0;
  return d;
}

std::vector<std::vector<std::size_t>> SignedGraph::components() const {
  const std::size_t n = order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t v = 0; v < n; ++v)
        if (!seen[v] && adj_(comp[head], v) != 0) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SignedGraph SignedGraph::switched(std::span<const int> signs) const {
  if (signs.size() != order()) throw std::invalid_argument("switching vector has wrong length");
  SignedGraph g = *this;
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = 0; j < order(); ++j) g.adj_(i, j) *= signs[i] * signs[j];
  return g;
}

SignedGraph SignedGraph::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = order();
  if (perm.size() != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<char> hit(n, 0);
  for (auto p : perm) {
    if (p >= n || hit[p]) throw std::invalid_argument("not a permutation");
    hit[p] = 1;
  }
  SignedGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.adj_(perm[i], perm[j]) = adj_(i, j);
  return g;
}

SignedGraph SignedGraph::disjoint_union(const SignedGraph& other) const {
  const std::size_t n1 = order(), n2 = other.order();
  SignedGraph g(n1 + n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) g.adj_(i, j) = adj_(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) g.adj_(n1 + i, n1 + j) = other.adj_(i, j);
  return g;
}

void write_edge_list(std::ostream& out, const SignedGraph& g) {
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (const auto& e : es) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
}

SignedGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty edge list", 0);
  long long n = -1, m = -1;
  std::string extra;
  {
    std::istringstream hdr(line);
    if (!(hdr >> n >> m) || n < 0 || m < 0 || (hdr >> extra)) throw ParseError("expected header \"n m\"", lineno);
  }
  SignedGraph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line()) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(e), lineno);
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string sign;
    if (!(row >> u >> v >> sign) || (row >> extra)) throw ParseError("expected \"u v sign\"", lineno);
    if (sign != "+" && sign != "-") throw ParseError("edge sign must be + or -", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex out of range", lineno);
    if (u == v) throw ParseError("loop edge", lineno);
    if (g.adjacent(static_cast<std::size_t>(u), static_cast<std::size_t>(v))) throw ParseError("duplicate edge", lineno);
    g.set_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), sign == "+" ? 1 : -1);
  }
  if (next_line()) throw ParseError("trailing content after edge list", lineno);
  return g;
}

}  // namespace starb
