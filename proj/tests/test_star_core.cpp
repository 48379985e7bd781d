#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "starb/constructions.hpp"
#include "starb/errors.hpp"
#include "starb/star_core.hpp"

using namespace starb;

namespace {

using Col = std::vector<IntMatrix::value_type>;

BipartiteTemplate random_template(std::size_t s, std::size_t k, std::mt19937& rng) {
  BipartiteTemplate t{IntMatrix(s, k), 0};
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < k; ++j) t.b(i, j) = static_cast<int>(rng() % 3) - 1;
  t.mu_sq = 0;
  for (std::size_t i = 0; i < s; ++i) t.mu_sq += t.b(i, 0) * t.b(i, 0);
  return t;
}

}  // namespace

TEST_SUITE("star_core") {
  TEST_CASE("existence") {
    CHECK(existence_check(4, 4));
    CHECK_FALSE(existence_check(3, 4));
    CHECK_FALSE(existence_check(5, boost::rational<std::int64_t>(5, 2)));
    CHECK_FALSE(existence_check(5, 0));
  }

  TEST_CASE("good vertices and compatibility") {
    CHECK(good_vertex_check(Col{1, 1, 1, 1}, 4));
    CHECK(good_vertex_check(Col{1, -1, 0}, 2));
    CHECK_FALSE(good_vertex_check(Col{1, 1, 0}, 3));
    CHECK(compatible_check(Col{1, 1, 1, 1}, Col{1, 1, -1, -1}, 4) == Compatibility::NonAdjacent);
    CHECK(compatible_check(Col{1, 1, 1, 1}, Col{1, 1, 1, -1}, 4) == Compatibility::Incompatible);
    CHECK(compatible_check(Col{1, 1, 1, 1}, Col{1, 1, 1, 1}, 4) == Compatibility::Incompatible);
    CHECK_THROWS_AS(compatible_check(Col{1, 1, 0}, Col{1, 1, 1}, 3), std::invalid_argument);
  }

  TEST_CASE("verify_template") {
    CHECK(verify_template({IntMatrix::identity(5), 1}));
    CHECK(verify_template({sylvester(2).matrix(), 4}));
    CHECK_FALSE(verify_template({IntMatrix{{1, 1}, {1, 1}}, 2}));
    CHECK_FALSE(verify_template({IntMatrix{{2}}, 4}));
    const auto v = template_violations({IntMatrix{{1, 1, 1}, {1, 1, -1}}, 2});
    REQUIRE(v.size() == 1);
    CHECK(v[0] == "columns 1,2 not orthogonal (inner product 2)");
  }

  TEST_CASE("column checks agree with verify_template on random inputs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const auto t = random_template(2 + rng() % 4, 1 + rng() % 3, rng);
      bool by_columns = t.mu_sq > 0;
      for (std::size_t j = 0; j < t.k() && by_columns; ++j) by_columns = good_vertex_check(t.b.column(j), t.mu_sq);
      for (std::size_t i = 0; i < t.k() && by_columns; ++i)
        for (std::size_t j = i + 1; j < t.k() && by_columns; ++j)
          by_columns = compatible_check(t.b.column(i), t.b.column(j), t.mu_sq) == Compatibility::NonAdjacent;
      CHECK(by_columns == verify_template(t));
    }
  }

  TEST_CASE("assemble_graph") {
    const auto g = assemble_graph({IntMatrix::identity(2), 1});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.sign(0, 2) == 1);
    CHECK(g.sign(1, 3) == 1);
    const auto star = assemble_graph({IntMatrix::ones(3, 1), 3});
    CHECK(star.degree(3) == 3);
    const auto c4 = assemble_graph({sylvester(1).matrix(), 2});
    std::size_t negative = 0;
    for (const auto& e : c4.edges()) negative += e.sign < 0;
    CHECK(c4.edge_count() == 4);
    CHECK(negative == 1);
    CHECK_THROWS_AS(assemble_graph({IntMatrix{{1, 1}, {1, 1}}, 2}), std::invalid_argument);
  }

  TEST_CASE("A^2 = diag(BB^T, mu^2 I) and no triangles") {
    const auto t = BipartiteTemplate{paley_conference(5).matrix(), 5};
    const auto a = assemble_graph(t).adjacency();
    const auto a2 = a * a;
    const auto bbt = t.b * t.b.transpose();
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        CHECK(a2(i, j) == bbt(i, j));
        CHECK(a2(6 + i, 6 + j) == (i == j ? 5 : 0));
        CHECK(a2(i, 6 + j) == 0);
      }
    const auto u = assemble_graph(t).underlying();
    CHECK((u * u * u).trace() == 0);
  }

  TEST_CASE("spectrum_check") {
    const auto h4 = spectrum_check({sylvester(2).matrix(), 4});
    CHECK(h4.plus_mu == 4);
    CHECK(h4.zero == 0);
    CHECK(h4.minus_mu == 4);
    const auto star = spectrum_check({IntMatrix::ones(3, 1), 3});
    CHECK(star.plus_mu == 1);
    CHECK(star.zero == 2);
    CHECK(star.minus_mu == 1);
    const auto id = spectrum_check({IntMatrix::identity(6), 1});
    CHECK(id.plus_mu == 6);
    CHECK(id.zero == 0);
    CHECK(spectrum_check({IntMatrix::identity(3).pad_rows(2), 1}).zero == 2);
    CHECK_THROWS_AS(spectrum_check({IntMatrix{{1, 1}, {1, 1}}, 2}), std::invalid_argument);
  }

  TEST_CASE("bipartite block") {
    const auto t = BipartiteTemplate{paley_conference(3).matrix(), 3};
    CHECK(bipartite_block(assemble_graph(t), 4) == t.b);
    CHECK_THROWS_AS(bipartite_block(assemble_graph(t), 3), std::invalid_argument);
  }

  TEST_CASE("signed graph operations") {
    SignedGraph g(4);
    g.set_edge(0, 1, 1);
    g.set_edge(1, 2, -1);
    g.set_edge(2, 3, 1);
    const std::vector<int> signs{1, -1, 1, 1};
    const auto sw = g.switched(signs);
    CHECK(sw.sign(0, 1) == -1);
    CHECK(sw.sign(1, 2) == 1);
    CHECK(sw.sign(2, 3) == 1);
    const std::vector<std::size_t> perm{3, 2, 1, 0};
    const auto p = g.permuted(perm);
    CHECK(p.sign(3, 2) == 1);
    CHECK(p.sign(2, 1) == -1);
    CHECK(g.components().size() == 1);
    CHECK(g.disjoint_union(SignedGraph(2)).components().size() == 3);
    CHECK_THROWS_AS(SignedGraph::from_adjacency(IntMatrix{{0, 1}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SignedGraph::from_adjacency(IntMatrix{{1, 0}, {0, 0}}), std::invalid_argument);
  }

  TEST_CASE("edge list format") {
    const auto g = assemble_graph({paley_conference(5).matrix(), 5});
    std::stringstream buf;
    write_edge_list(buf, g);
    CHECK(read_edge_list(buf) == g);
    std::istringstream loop("2 1\n0 0 +\n");
    CHECK_THROWS_AS(read_edge_list(loop), ParseError);
    std::istringstream dup("3 2\n0 1 +\n1 0 -\n");
    CHECK_THROWS_AS(read_edge_list(dup), ParseError);
    std::istringstream range("3 1\n0 3 +\n");
    CHECK_THROWS_AS(read_edge_list(range), ParseError);
    std::istringstream sign("3 1\n0 1 x\n");
    try {
      read_edge_list(sign);
      FAIL("no exception");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
}
