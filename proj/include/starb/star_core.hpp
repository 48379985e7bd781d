#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starb/int_matrix.hpp"

namespace starb {

/// Signed graph on vertices 0..n-1 stored as its {-1,0,1} adjacency matrix.
/// Always symmetric with zero diagonal.
class SignedGraph {
 public:
  struct Edge {
    std::size_t u;
    std::size_t v;
    int sign;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  SignedGraph() = default;
  explicit SignedGraph(std::size_t n) : adj_(n, n) {}
  // Throws std::invalid_argument unless `a` is a symmetric {-1,0,1} matrix with zero diagonal.
  static SignedGraph from_adjacency(IntMatrix a);
  static SignedGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.rows(); }
  int sign(std::size_t u, std::size_t v) const { return static_cast<int>(adj_(u, v)); }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_(u, v) != 0; }
  // sign = 0 removes the edge.
  void set_edge(std::size_t u, std::size_t v, int sign);

  const IntMatrix& adjacency() const noexcept { return adj_; }
  // |A|: the unsigned adjacency of the underlying graph.
  IntMatrix underlying() const;
  std::vector<Edge> edges() const;  // u < v, lexicographic
  std::size_t edge_count() const;
  std::size_t degree(std::size_t u) const;
  std::vector<std::vector<std::size_t>> components() const;

  // Conjugation by diag(signs); signs[i] in {-1, 1}.
  SignedGraph switched(std::span<const int> signs) const;
  // Vertex u of this graph becomes vertex perm[u].
  SignedGraph permuted(std::span<const std::size_t> perm) const;
  // Disjoint union; other's vertices follow this graph's.
  SignedGraph disjoint_union(const SignedGraph& other) const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  IntMatrix adj_;
};

/// The s x k block B of a signed bipartite graph whose star complement is sK_1.
/// Row i is complement vertex i; column j is star-set vertex j.
struct BipartiteTemplate {
  IntMatrix b;
  std::int64_t mu_sq = 0;

  std::size_t s() const noexcept { return b.rows(); }
  std::size_t k() const noexcept { return b.cols(); }
};

/// Multiplicities of mu, 0 and -mu in the assembled graph.
struct SpectrumClaim {
  std::size_t n = 0;
  std::size_t s = 0;
  std::int64_t mu_sq = 0;
  std::size_t plus_mu = 0;
  std::size_t zero = 0;
  std::size_t minus_mu = 0;
};

enum class Compatibility { NonAdjacent, Incompatible };

// True iff mu_sq is a positive integer and s >= mu_sq.
bool existence_check(std::int64_t s, const boost::rational<std::int64_t>& mu_sq);

bool good_vertex_check(std::span<const IntMatrix::value_type> b, std::int64_t mu_sq);

// Both columns must be good (std::invalid_argument otherwise). A bipartite graph with a
// totally disconnected complement admits no edge between star-set vertices, so the only
// compatible outcome is a zero inner product.
Compatibility compatible_check(std::span<const IntMatrix::value_type> bu, std::span<const IntMatrix::value_type> bv,
                               std::int64_t mu_sq);

// Human-readable list of the ways T fails B^T B = mu^2 I (1-based column numbers).
std::vector<std::string> template_violations(const BipartiteTemplate& t);
bool verify_template(const BipartiteTemplate& t);

// Vertices 0..s-1 are the complement, s..s+k-1 the star set; edge (i, s+j) has sign B[i][j].
SignedGraph assemble_graph(const BipartiteTemplate& t);

// Block between the first `rows` vertices and the rest. Throws std::invalid_argument if
// either side contains an edge.
IntMatrix bipartite_block(const SignedGraph& g, std::size_t rows);

/// Exact spectrum certificate for the assembled graph A = [[0, B^T], [B, 0]].
///
/// Checks, all over the integers: B^T B = mu^2 I_k, rank B = k, (A^2)^2 = mu^2 A^2
/// (so A^2 has eigenvalues in {0, mu^2}), rank A^2 = 2k and tr A = 0. Together these
/// force A to have eigenvalues +-mu with multiplicity k each and 0 with multiplicity s - k.
/// Throws std::invalid_argument if T fails verification, InternalInconsistency if a
/// derived identity does not hold.
SpectrumClaim spectrum_check(const BipartiteTemplate& t);

// Header "n m", then m lines "u v s" with s in {+,-}; 0-based vertices.
void write_edge_list(std::ostream& out, const SignedGraph& g);
SignedGraph read_edge_list(std::istream& in);

}  // namespace starb
