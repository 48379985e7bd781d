#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "starb/errors.hpp"
#include "starb/galois_field.hpp"
#include "starb/int_matrix.hpp"

using namespace starb;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, int lo, int hi, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

const IntMatrix h2{{1, 1}, {1, -1}};

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("prime field GF(5)") {
    const auto f = GaloisField::construct(5, 1);
    CHECK(f.order() == 5);
    std::size_t units = 0;
    for (const auto& a : f.elements()) units += !f.is_zero(a);
    CHECK(units == 4);
  }

  TEST_CASE("GF(9) modulus is x^2 + 1") {
    const auto f = GaloisField::construct(3, 2);
    CHECK(f.order() == 9);
    CHECK(f.modulus() == std::vector<int>{1, 0, 1});
    CHECK(is_irreducible_mod_p({1, 0, 1}, 3));
    CHECK_FALSE(is_irreducible_mod_p({2, 0, 1}, 3));  // x^2 - 1
  }

  TEST_CASE("construct rejects bad input") {
    CHECK_THROWS_AS(GaloisField::construct(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField::construct(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField::construct(2, 9), std::invalid_argument);
  }

  TEST_CASE("constructed fields have no zero divisors and full inverses") {
    for (auto [p, h] : {std::pair{2, 3}, {3, 2}, {5, 2}, {2, 4}, {3, 3}, {7, 1}}) {
      const auto f = GaloisField::construct(p, h);
      CHECK(is_irreducible_mod_p(f.modulus(), p));
      const auto els = f.elements();
      for (const auto& a : els) {
        if (f.is_zero(a)) continue;
        CHECK(f.mul(a, f.inv(a)) == f.one());
        for (const auto& b : els)
          if (!f.is_zero(b)) CHECK_FALSE(f.is_zero(f.mul(a, b)));
      }
    }
  }

  TEST_CASE("element indexing round trips") {
    const auto f = GaloisField::construct(5, 2);
    for (std::int64_t i = 0; i < f.order(); ++i) CHECK(f.index_of(f.element(i)) == i);
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
  }

  TEST_CASE("quadratic character in GF(5)") {
    const auto f = GaloisField::construct(5, 1);
    CHECK(quadratic_character(f, f.element(0)) == 0);
    CHECK(quadratic_character(f, f.element(2)) == -1);
    CHECK(quadratic_character(f, f.element(4)) == 1);
    CHECK_THROWS_AS(quadratic_character(GaloisField::construct(2, 2), f.element(1)), std::domain_error);
  }

  TEST_CASE("quadratic character agrees with enumerated squares") {
    for (int p : {3, 5, 7, 11, 13}) {
      const auto f = GaloisField::construct(p, 1);
      const auto sq = oracle::squares_mod(p);
      for (int x = 1; x < p; ++x) {
        const bool square = std::binary_search(sq.begin(), sq.end(), x);
        CHECK(quadratic_character(f, f.element(x)) == (square ? 1 : -1));
      }
    }
    for (auto [p, h] : {std::pair{3, 2}, {5, 2}, {3, 3}}) {
      const auto f = GaloisField::construct(p, h);
      std::vector<std::int64_t> squares;
      for (const auto& x : f.elements())
        if (!f.is_zero(x)) squares.push_back(f.index_of(f.mul(x, x)));
      std::sort(squares.begin(), squares.end());
      squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
      CHECK(static_cast<std::int64_t>(squares.size()) == (f.order() - 1) / 2);
      for (const auto& x : f.elements()) {
        if (f.is_zero(x)) continue;
        const bool square = std::binary_search(squares.begin(), squares.end(), f.index_of(x));
        CHECK(quadratic_character(f, x) == (square ? 1 : -1));
      }
    }
  }

  TEST_CASE("prime powers") {
    std::int64_t p = 0;
    int h = 0;
    CHECK(prime_power(9, &p, &h));
    CHECK(p == 3);
    CHECK(h == 2);
    CHECK(prime_power(125, &p, &h));
    CHECK(h == 3);
    CHECK_FALSE(prime_power(12));
    CHECK_FALSE(prime_power(1));
  }

  TEST_CASE("kronecker examples") {
    const IntMatrix m{{1, 2}, {3, 4}, {5, 6}};
    CHECK(kronecker(IntMatrix{{1}}, m) == m);
    const IntMatrix h4{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    CHECK(kronecker(h2, h2) == h4);
    const auto b = kronecker(h2, IntMatrix::ones(3, 1));
    CHECK(b.rows() == 6);
    CHECK(b.cols() == 2);
    CHECK(b(4, 1) == -1);
    CHECK(b(2, 1) == 1);
  }

  TEST_CASE("kronecker identities on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_matrix(2, 3, -2, 2, rng), b = random_matrix(3, 2, -2, 2, rng);
      const auto c = random_matrix(3, 2, -2, 2, rng), d = random_matrix(2, 4, -2, 2, rng);
      CHECK(kronecker(a, b).transpose() == kronecker(a.transpose(), b.transpose()));
      CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
    }
  }

  TEST_CASE("integer rank") {
    CHECK(integer_rank(IntMatrix::identity(4)) == 4);
    CHECK(integer_rank(IntMatrix(3, 3)) == 0);
    CHECK(integer_rank(kronecker(h2, h2)) == 4);
    CHECK(integer_rank(IntMatrix::ones(3, 5)) == 1);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      auto m = random_matrix(r, c, -1, 1, rng);
      if (trial % 3 == 0 && r > 1)
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) - (r > 2 ? m(1, j) : 0);
      CHECK(integer_rank(m) == oracle::rational_rank(m));
      CHECK(integer_rank(m.transpose() * m) == integer_rank(m));
    }
  }

  TEST_CASE("int matrix text format") {
    const IntMatrix m{{1, -2, 3}, {0, 5, -6}};
    std::stringstream buf;
    write_int_matrix(buf, m);
    CHECK(read_int_matrix(buf) == m);
    std::istringstream bad("2 2\n1 2\n3 x\n");
    try {
      read_int_matrix(bad);
      FAIL("no exception");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    std::istringstream shortfile("3 1\n1\n2\n");
    CHECK_THROWS_AS(read_int_matrix(shortfile), ParseError);
  }

  TEST_CASE("dimension checks") {
    CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(IntMatrix(2, 3).at(2, 0), std::out_of_range);
    CHECK(direct_sum_copies(h2, 3).rows() == 6);
    CHECK(direct_sum_copies(h2, 3)(3, 2) == 1);
    CHECK(direct_sum_copies(h2, 3)(3, 0) == 0);
  }
}
