#include <numeric>
#include <stdexcept>
#include <string>

#include "starb/errors.hpp"
#include "starb/star_core.hpp"

namespace starb {

namespace {

IntMatrix::value_type dot(std::span<const IntMatrix::value_type> a, std::span<const IntMatrix::value_type> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), IntMatrix::value_type{0});
}

}  // namespace

bool existence_check(std::int64_t s, const boost::rational<std::int64_t>& mu_sq) {
  return mu_sq.denominator() == 1 && mu_sq.numerator() > 0 && s >= mu_sq.numerator();
}

bool good_vertex_check(std::span<const IntMatrix::value_type> b, std::int64_t mu_sq) { return dot(b, b) == mu_sq; }

Compatibility compatible_check(std::span<const IntMatrix::value_type> bu, std::span<const IntMatrix::value_type> bv,
                               std::int64_t mu_sq) {
  if (bu.size() != bv.size()) throw std::invalid_argument("columns have different lengths");
  if (!good_vertex_check(bu, mu_sq) || !good_vertex_check(bv, mu_sq))
    throw std::invalid_argument("compatible_check needs two good columns");
  return dot(bu, bv) == 0 ? Compatibility::NonAdjacent : Compatibility::Incompatible;
}

std::vector<std::string> template_violations(const BipartiteTemplate& t) {
  std::vector<std::string> out;
  if (t.mu_sq < 1) out.push_back("mu^2 must be a positive integer");
  for (std::size_t i = 0; i < t.s(); ++i)
    for (std::size_t j = 0; j < t.k(); ++j) {
      const auto v = t.b(i, j);
      if (v < -1 || v > 1)
        out.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + std::to_string(v) +
                      " outside {-1,0,1}");
    }
  if (!out.empty()) return out;
  const auto gram = t.b.transpose() * t.b;
  for (std::size_t i = 0; i < t.k(); ++i) {
    if (gram(i, i) != t.mu_sq)
      out.push_back("column " + std::to_string(i + 1) + " has norm " + std::to_string(gram(i, i)) + ", expected " +
                    std::to_string(t.mu_sq));
    for (std::size_t j = i + 1; j < t.k(); ++j)
      if (gram(i, j) != 0)
        out.push_back("columns " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " not orthogonal (inner product " +
                      std::to_string(gram(i, j)) + ")");
  }
  return out;
}

bool verify_template(const BipartiteTemplate& t) { return template_violations(t).empty(); }

SignedGraph assemble_graph(const BipartiteTemplate& t) {
  if (auto v = template_violations(t); !v.empty()) throw std::invalid_argument("template fails verification: " + v.front());
  const std::size_t s = t.s(), k = t.k();
  IntMatrix a(s + k, s + k);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      a(i, s + j) = t.b(i, j);
      a(s + j, i) = t.b(i, j);
    }
  return SignedGraph::from_adjacency(std::move(a));
}

IntMatrix bipartite_block(const SignedGraph& g, std::size_t rows) {
  const std::size_t n = g.order();
  if (rows > n) throw std::invalid_argument("bipartition larger than the graph");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(i, j) && ((i < rows) == (j < rows)))
        throw std::invalid_argument("graph is not bipartite with the declared parts (edge " + std::to_string(i) + "-" +
                                    std::to_string(j) + ")");
  IntMatrix b(rows, n - rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = rows; j < n; ++j) b(i, j - rows) = g.sign(i, j);
  return b;
}

SpectrumClaim spectrum_check(const BipartiteTemplate& t) {
  const auto g = assemble_graph(t);
  const std::size_t s = t.s(), k = t.k(), n = s + k;

  const auto gram = t.b.transpose() * t.b;
  if (gram != t.mu_sq * IntMatrix::identity(k)) throw InternalInconsistency("B^T B != mu^2 I after verification");
  if (integer_rank(t.b) != k) throw InternalInconsistency("rank B < k although B^T B = mu^2 I");

  const auto& a = g.adjacency();
  const auto a2 = a * a;
  if (a2 * a2 != t.mu_sq * a2) throw InternalInconsistency("A^4 != mu^2 A^2");
  if (integer_rank(a2) != 2 * k) throw InternalInconsistency("rank A^2 != 2k");
  if (a.trace() != 0) throw InternalInconsistency("trace A != 0");

  return SpectrumClaim{n, s, t.mu_sq, k, s - k, k};
}

}  // namespace starb
