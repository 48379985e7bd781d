#include <doctest.h>

#include <algorithm>

#include "starb/constructions.hpp"
#include "starb/max_order.hpp"

using namespace starb;
using Verdict = MaxOrderResult::Verdict;

namespace {

bool has_plan(const std::vector<FactorizationPlan>& plans, std::int64_t p, std::int64_t q, BlockKind kind) {
  return std::any_of(plans.begin(), plans.end(), [&](const auto& x) { return x.p == p && x.q == q && x.kind == kind; });
}

}  // namespace

TEST_SUITE("max_order") {
  TEST_CASE("square cases") {
    auto exact = [](std::int64_t s, std::int64_t m) {
      const auto r = formula_max_order(s, m);
      REQUIRE(r.verdict == Verdict::Exact);
      return r.lo;
    };
    CHECK(exact(4, 4) == 8);
    CHECK(exact(3, 3) == 4);
    CHECK(exact(6, 6) == 8);
    CHECK(exact(6, 5) == 12);
    CHECK(exact(13, 4) == 25);
    CHECK(exact(9, 8) == 17);
    CHECK(exact(15, 15) == 16);
    CHECK(exact(7, 6) == 9);
    CHECK(exact(5, 1) == 10);
  }

  TEST_CASE("provenance names every clause at the winning value") {
    const auto r = formula_max_order(6, 6);
    CHECK(r.provenance_string().find("square 2 mod 4") != std::string::npos);
    CHECK(r.provenance_string().find("double column") != std::string::npos);
    CHECK(r.verdict_string() == "Exact 8");
    const auto c = formula_max_order(13, 4);
    CHECK(c.witness_plan->c == 3);
  }

  TEST_CASE("lower bound clauses") {
    // 15 = 5 * 3, both conference parameters; s in [pq, (p+1)q).
    const auto r = formula_max_order(16, 15);
    CHECK(r.verdict == Verdict::Bounds);
    CHECK(r.lo == 17);
    CHECK(r.hi == 32);
    // 12 = 4 * 3 with s in [12, 16): p in N(H), q in N(C); the Hadamard clause is exact here.
    CHECK(formula_max_order(12, 12).verdict == Verdict::Exact);
  }

  TEST_CASE("existence errors") {
    CHECK_THROWS_AS(formula_max_order(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(formula_max_order(3, 0), std::invalid_argument);
  }

  TEST_CASE("witness soundness and range over a wide grid") {
    for (std::int64_t m = 1; m <= 20; ++m) {
      std::int64_t previous = 0;
      for (std::int64_t s = m; s <= 40; ++s) {
        const auto r = formula_max_order(s, m);
        REQUIRE(r.witness);
        CHECK(verify_template(*r.witness));
        CHECK(r.witness->s() == static_cast<std::size_t>(s));
        CHECK(static_cast<std::int64_t>(r.witness->k()) + s == r.lo);
        CHECK(r.lo > s);
        CHECK(r.lo <= r.hi);
        CHECK(r.hi <= 2 * s);
        if (r.verdict == Verdict::Exact) CHECK(r.lo == r.hi);
        CHECK(r.lo >= previous);
        previous = r.lo;
        CHECK_FALSE(r.provenance.empty());
      }
    }
  }

  TEST_CASE("full blocks reach 2s") {
    for (std::int64_t m : {1, 2, 4, 8, 12}) {
      REQUIRE(classify_order(m).in_nh);
      for (std::int64_t c = 1; c <= 3; ++c) CHECK(formula_max_order(c * m, m).lo == 2 * c * m);
    }
    for (std::int64_t m : {3, 5, 7, 9}) {
      REQUIRE(classify_order(m).in_nc);
      for (std::int64_t c = 1; c <= 3; ++c) CHECK(formula_max_order(c * (m + 1), m).lo == 2 * c * (m + 1));
    }
  }

  TEST_CASE("extremal templates") {
    auto plan = [](std::int64_t s, std::int64_t m, std::int64_t p, std::int64_t q, BlockKind kind) {
      const auto plans = enumerate_factorization_plans(s, m);
      const auto it =
          std::find_if(plans.begin(), plans.end(), [&](const auto& x) { return x.p == p && x.q == q && x.kind == kind; });
      REQUIRE(it != plans.end());
      return build_extremal_template(s, m, *it);
    };
    const auto h4 = plan(4, 4, 2, 2, BlockKind::HadamardHadamard);
    CHECK(h4.k() == 4);
    CHECK(is_hadamard(h4.b));
    const auto c6 = plan(6, 5, 1, 5, BlockKind::HadamardConference);
    CHECK(c6.k() == 6);
    CHECK(is_conference(c6.b));
    const auto t = plan(12, 6, 2, 3, BlockKind::HadamardConference);
    CHECK(t.k() == 8);
    CHECK(t.s() + t.k() == 20);
    const auto j = plan(7, 3, 1, 3, BlockKind::HadamardOnes);
    CHECK(j.b == IntMatrix{{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}, {0, 0}});
    const auto co = plan(8, 6, 3, 2, BlockKind::ConferenceOnes);
    CHECK(co.k() == 4);
  }

  TEST_CASE("bad plans are rejected") {
    FactorizationPlan p{2, 3, classify_order(2), classify_order(3), BlockKind::HadamardConference, 2};
    CHECK_THROWS_AS(build_extremal_template(12, 6, p), std::invalid_argument);
    p.c = 1;
    CHECK_THROWS_AS(build_extremal_template(12, 8, p), std::invalid_argument);
    FactorizationPlan q{6, 1, classify_order(6), classify_order(1), BlockKind::HadamardHadamard, 1};
    CHECK_THROWS_AS(build_extremal_template(12, 6, q), std::invalid_argument);
  }

  TEST_CASE("plan enumeration") {
    const auto six = enumerate_factorization_plans(12, 6);
    CHECK(has_plan(six, 2, 3, BlockKind::HadamardConference));
    CHECK(has_plan(six, 3, 2, BlockKind::ConferenceOnes));
    CHECK(has_plan(six, 1, 6, BlockKind::HadamardOnes));
    CHECK(std::is_sorted(six.begin(), six.end(), [](const auto& a, const auto& b) { return a.p < b.p; }));
    const auto four = enumerate_factorization_plans(8, 4);
    CHECK(has_plan(four, 2, 2, BlockKind::HadamardHadamard));
    CHECK(has_plan(four, 4, 1, BlockKind::HadamardHadamard));
    const auto seven = enumerate_factorization_plans(8, 7);
    CHECK(has_plan(seven, 7, 1, BlockKind::ConferenceOnes));
    CHECK(has_plan(seven, 1, 7, BlockKind::HadamardConference));
    for (const auto& p : six) {
      CHECK(p.p * p.q == 6);
      CHECK(p.c * p.block_rows() <= 12);
      CHECK((p.c + 1) * p.block_rows() > 12);
    }
  }
}
