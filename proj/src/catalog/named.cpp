#include <array>
#include <stdexcept>
#include <string>

#include "starb/catalog.hpp"
#include "starb/constructions.hpp"

namespace starb {

namespace {

constexpr std::array<std::pair<int, int>, 13> kBr{{{0, 1},
                                                   {0, 4},
                                                   {0, 5},
                                                   {1, 0},
                                                   {1, 3},
                                                   {1, 5},
                                                   {2, 3},
                                                   {2, 4},
                                                   {2, 5},
                                                   {3, 0},
                                                   {3, 4},
                                                   {4, 1},
                                                   {4, 3}}};

void expect_params(std::string_view id, std::span<const std::int64_t> params, std::size_t lo, std::size_t hi) {
  if (params.size() < lo || params.size() > hi)
    throw std::invalid_argument(std::string(id) + ": expected " + std::to_string(lo) +
                                (lo == hi ? "" : ".." + std::to_string(hi)) + " parameter(s), got " +
                                std::to_string(params.size()));
}

// Complete bipartite m x m (optionally without the matching) with the listed edges negative.
SignedGraph signed_bipartite(std::size_t m, bool drop_matching, std::span<const std::pair<int, int>> negative) {
  SignedGraph g(2 * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (!drop_matching || a != b) g.set_edge(a, m + b, 1);
  for (auto [a, b] : negative) {
    const auto u = static_cast<std::size_t>(a), v = m + static_cast<std::size_t>(b);
    if (!g.adjacent(u, v)) throw std::logic_error("negative edge outside the underlying graph");
    g.set_edge(u, v, -1);
  }
  return g;
}

SignedGraph star(std::int64_t leaves) {
  const auto s = static_cast<std::size_t>(leaves);
  SignedGraph g(s + 1);
  for (std::size_t i = 0; i < s; ++i) g.set_edge(i, s, 1);
  return g;
}

}  // namespace

std::span<const std::pair<int, int>> br_edges() { return kBr; }

std::uint64_t edge_mask(std::span<const std::pair<int, int>> edges) {
  std::uint64_t mask = 0;
  for (auto [a, b] : edges) mask |= std::uint64_t{1} << (6 * a + b);
  return mask;
}

const std::vector<NamedFamily>& list_families() {
  static const std::vector<NamedFamily> families{
      {"sK2", "s >= 1", "s disjoint positive edges; mu^2 = 1 maximum"},
      {"K22_negK2", "", "K_{2,2} with one negative edge; mu^2 = 2, s = 2"},
      {"K1s", "s >= 1", "positive star K_{1,s}"},
      {"K13", "", "positive star K_{1,3}; mu^2 = 3, s = 3"},
      {"K13_K1", "", "K_{1,3} plus an isolated vertex"},
      {"K44_negC6", "", "K_{4,4} with a negative 6-cycle; mu^2 = 4, s = 4"},
      {"K44m4K2_negP4K2", "", "K_{4,4} minus a perfect matching, negative P4 + K2; mu^2 = 3, s = 4"},
      {"BR_signed", "", "K_{6,6} minus a perfect matching, negative edges BR; mu^2 = 5, s = 6"},
      {"K2s_negK1s", "s (even), isolated=0", "K_{2,s} with a negative K_{1,s/2}; mu^2 = s"},
      {"srg_hadamard", "s (Hadamard order)", "assembled H(s) template, SRG(2s,s,0,0,0)"},
      {"srg_conference", "q (odd prime power)", "assembled C(q+1) template, mu^2 = q"},
  };
  return families;
}

SignedGraph build_named(std::string_view id, std::span<const std::int64_t> params) {
  if (id == "sK2") {
    expect_params(id, params, 1, 1);
    if (params[0] < 1) throw std::invalid_argument("sK2: s must be positive");
    const auto s = static_cast<std::size_t>(params[0]);
    SignedGraph g(2 * s);
    for (std::size_t i = 0; i < s; ++i) g.set_edge(i, s + i, 1);
    return g;
  }
  if (id == "K22_negK2") {
    expect_params(id, params, 0, 0);
    const std::array<std::pair<int, int>, 1> neg{{{1, 1}}};
    return signed_bipartite(2, false, neg);
  }
  if (id == "K1s") {
    expect_params(id, params, 1, 1);
    if (params[0] < 1) throw std::invalid_argument("K1s: s must be positive");
    return star(params[0]);
  }
  if (id == "K13") {
    expect_params(id, params, 0, 0);
    return star(3);
  }
  if (id == "K13_K1") {
    expect_params(id, params, 0, 0);
    return star(3).disjoint_union(SignedGraph(1));
  }
  if (id == "K44_negC6") {
    expect_params(id, params, 0, 0);
    const std::array<std::pair<int, int>, 6> neg{{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}}};
    return signed_bipartite(4, false, neg);
  }
  if (id == "K44m4K2_negP4K2") {
    expect_params(id, params, 0, 0);
    const std::array<std::pair<int, int>, 4> neg{{{0, 2}, {0, 1}, {3, 1}, {1, 0}}};
    return signed_bipartite(4, true, neg);
  }
  if (id == "BR_signed") {
    expect_params(id, params, 0, 0);
    return signed_bipartite(6, true, kBr);
  }
  if (id == "K2s_negK1s") {
    expect_params(id, params, 1, 2);
    const auto s = params[0];
    const auto iso = params.size() > 1 ? params[1] : 0;
    if (s < 2 || s % 2 != 0) throw std::invalid_argument("K2s_negK1s: s must be even and >= 2");
    if (iso < 0) throw std::invalid_argument("K2s_negK1s: isolated count must be non-negative");
    const auto rows = static_cast<std::size_t>(s);
    SignedGraph g(rows + 2 + static_cast<std::size_t>(iso));
    for (std::size_t i = 0; i < rows; ++i) {
      g.set_edge(i, rows, 1);
      g.set_edge(i, rows + 1, i < rows / 2 ? 1 : -1);
    }
    return g;
  }
  if (id == "srg_hadamard") {
    expect_params(id, params, 1, 1);
    const auto h = hadamard_of_order(params[0]);
    if (!h) throw std::invalid_argument("srg_hadamard: no constructible Hadamard matrix of order " + std::to_string(params[0]));
    return assemble_graph({h->matrix(), params[0]});
  }
  if (id == "srg_conference") {
    expect_params(id, params, 1, 1);
    if (!conference_parameter(params[0]))
      throw std::invalid_argument("srg_conference: q must be 1 or an odd prime power with q + 1 <= " +
                                  std::to_string(kMaxConferenceOrder));
    return assemble_graph({paley_conference(params[0]).matrix(), params[0]});
  }
  throw std::invalid_argument("unknown family '" + std::string(id) + "' (see catalog --list)");
}

}  // namespace starb
