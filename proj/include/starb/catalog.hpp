#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starb/star_core.hpp"

namespace starb {

struct NamedFamily {
  std::string id;
  std::string params;  // "" or a list such as "s (even), isolated=0"
  std::string description;
};

const std::vector<NamedFamily>& list_families();

/// Named extremal signed graphs.
///
/// Bipartite families list one side first, then the other; for families that come from
/// a template the first side is the star complement. Parameters are positional.
///   sK2 s                 s disjoint positive edges, edge i -- s+i
///   K22_negK2             4-cycle a0 a1 | b0 b1 with a1b1 negative
///   K1s s                 leaves 0..s-1, centre s
///   K13                   K1s with s = 3
///   K13_K1                K13 plus isolated vertex 4
///   K44_negC6             a0..a3 | b0..b3, negative 6-cycle a0b0 a0b1 a1b1 a1b2 a2b2 a2b0
///   K44m4K2_negP4K2       K44 minus the matching aibi, negative path b2 a0 b1 a3 and edge a1b0
///   BR_signed             K66 minus the matching aibi, negative edges the 13 edges of BR
///   K2s_negK1s s [iso]    rows 0..s-1 | star 0,1; star 1 negative to rows s/2..s-1; iso isolated vertices last
///   srg_hadamard s        assembled H(s) template
///   srg_conference q      assembled C(q+1) template (mu^2 = q)
/// Throws std::invalid_argument for unknown ids or bad parameters.
SignedGraph build_named(std::string_view id, std::span<const std::int64_t> params = {});

// BR as (left, right) pairs, 0-based: a1 -> 0, b1 -> 0.
std::span<const std::pair<int, int>> br_edges();
// Bit 6*a + b set for every BR edge (a, b).
inline constexpr std::uint64_t kBrEdgeMask = 0xA478A72ULL;
std::uint64_t edge_mask(std::span<const std::pair<int, int>> edges);

struct SrgParams {
  std::size_t n = 0;
  std::int64_t r = 0;
  std::int64_t a = 0;  // 2-walk difference over positive edges (0 if there are none)
  std::int64_t b = 0;  // over negative edges
  std::int64_t c = 0;  // over non-adjacent pairs

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Signed strongly regular parameters, if any.
///
/// The graph must be regular, not totally disconnected and not a complete graph with all
/// edges of one sign; (A^2)_uv must be constant on positive edges, on negative edges and
/// on non-adjacent pairs. The returned parameters are checked against
/// 2A^2 = a(A + |A|) - b(A - |A|) + 2c(J - I - |A|) + 2rI before returning.
std::optional<SrgParams> srg_check(const SignedGraph& g);

// Underlying graph is K_{m,m} on parts {0..m-1}, {m..2m-1}; the second variant removes the
// matching i -- m + i.
bool is_complete_bipartite(const SignedGraph& g, std::size_t m);
bool is_complete_bipartite_minus_matching(const SignedGraph& g, std::size_t m);

// Block B1 (x) B2; the first rows1 * rows2 vertices form the first side.
// Throws std::invalid_argument if an input is not bipartite with the declared sides.
SignedGraph signed_kronecker_bipartite(const SignedGraph& g1, std::size_t rows1, const SignedGraph& g2,
                                       std::size_t rows2);

inline constexpr std::size_t kMaxCanonicalOrder = 16;

/// Switching canonical form.
///
/// Each connected component is encoded by a vertex order and a switching: vertex j
/// contributes its adjacencies to vertices 1..j-1 as symbols '+', '-', '0', switched so
/// that the first nonzero symbol is '+'. The form of a component is the lexicographically
/// least such string over all orders; the graph's form is "size:code;" per component,
/// sorted. Two graphs are switching isomorphic iff their forms are equal.
struct CanonicalForm {
  std::string code;
  std::vector<std::size_t> labeling;  // canonical position -> vertex
  std::vector<int> signs;             // switching applied to each vertex
};

// Throws std::invalid_argument if g has more than kMaxCanonicalOrder vertices.
// threads: 1 = serial reference; 0 = OpenMP default; otherwise that many threads.
CanonicalForm switching_canonical_form(const SignedGraph& g, int threads = 1);

struct SwitchingCertificate {
  std::vector<std::size_t> perm;  // vertex u of g1 maps to perm[u] of g2
  std::vector<int> signs;         // g1 is switched by signs before permuting
};

// g1.switched(signs).permuted(perm) == g2.
bool check_certificate(const SignedGraph& g1, const SignedGraph& g2, const SwitchingCertificate& cert);

// Certificate if g1 and g2 are switching isomorphic; verified before return.
std::optional<SwitchingCertificate> switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2, int threads = 1);

enum class Equivalence { Isomorphic, NotIsomorphic, ProbablyIsomorphic };
std::string to_string(Equivalence e);

// Exact up to kMaxCanonicalOrder vertices. Larger graphs are compared by invariants only,
// so a match is reported as ProbablyIsomorphic.
Equivalence switching_equivalence(const SignedGraph& g1, const SignedGraph& g2);

// Number of (positive, negative) simple cycles of each length 3..max_len, keyed by length.
// The sign of a cycle is the product of its edge signs and is switching invariant.
std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> cycle_sign_profile(const SignedGraph& g,
                                                                                   std::size_t max_len);

// tr(A^k) for k = 1..n, exact. Determines the spectrum.
std::vector<std::string> closed_walk_traces(const SignedGraph& g);

// rank(A^2 - t I) for t = 0..max degree^2 : multiplicities of the integer eigenvalues of A^2.
std::vector<std::size_t> square_rank_sequence(const SignedGraph& g);

// Underlying degree sequence (sorted), cycle profile up to min(n, 6), traces and rank sequence.
bool invariants_match(const SignedGraph& g1, const SignedGraph& g2);

}  // namespace starb
