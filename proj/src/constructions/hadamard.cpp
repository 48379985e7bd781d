#include <map>
#include <stdexcept>
#include <string>

#include "starb/constructions.hpp"
#include "starb/galois_field.hpp"

namespace starb {

namespace {

bool gram_is_scalar(const IntMatrix& m, IntMatrix::value_type k) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      IntMatrix::value_type dot = 0;
      for (std::size_t r = 0; r < n; ++r) dot += m(r, i) * m(r, j);
      if (dot != (i == j ? k : 0)) return false;
    }
  return true;
}

const IntMatrix& h2() {
  static const IntMatrix m{{1, 1}, {1, -1}};
  return m;
}

GaloisField field_of_order(std::int64_t q) {
  std::int64_t p = 0;
  int h = 0;
  if (!prime_power(q, &p, &h)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return GaloisField::construct(static_cast<int>(p), h);
}

}  // namespace

bool is_hadamard(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0) return false;
  for (auto v : m.data())
    if (v != 1 && v != -1) return false;
  return gram_is_scalar(m, static_cast<IntMatrix::value_type>(m.rows()));
}

bool is_conference(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto v = m(i, j);
      if (i == j ? v != 0 : (v != 1 && v != -1)) return false;
    }
  return gram_is_scalar(m, static_cast<IntMatrix::value_type>(m.rows()) - 1);
}

HadamardMatrix HadamardMatrix::certify(IntMatrix m) {
  if (!is_hadamard(m)) throw std::invalid_argument("matrix is not Hadamard");
  return HadamardMatrix(std::move(m));
}

ConferenceMatrix ConferenceMatrix::certify(IntMatrix m) {
  if (!is_conference(m)) throw std::invalid_argument("matrix is not a conference matrix");
  return ConferenceMatrix(std::move(m));
}

IntMatrix normalize_hadamard(IntMatrix h) {
  for (std::size_t j = 0; j < h.cols(); ++j)
    if (h(0, j) < 0)
      for (std::size_t i = 0; i < h.rows(); ++i) h(i, j) = -h(i, j);
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (h(i, 0) < 0)
      for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = -h(i, j);
  return h;
}

HadamardMatrix sylvester(int exponent) {
  if (exponent < 0 || exponent > kMaxSylvesterExponent)
    throw std::invalid_argument("sylvester: exponent must be in [0, " + std::to_string(kMaxSylvesterExponent) + "]");
  IntMatrix m{{1}};
  for (int i = 0; i < exponent; ++i) m = kronecker(h2(), m);
  return HadamardMatrix::certify(std::move(m));
}

ConferenceMatrix paley_conference(std::int64_t q) {
  if (q == 1) return ConferenceMatrix::certify(IntMatrix{{0, 1}, {1, 0}});
  if (q < 1 || q % 2 == 0 || !prime_power(q))
    throw std::invalid_argument("paley_conference: " + std::to_string(q) + " is not an odd prime power");
  if (q + 1 > kMaxConferenceOrder) throw std::invalid_argument("paley_conference: order q+1 exceeds 200");

  const auto field = field_of_order(q);
  const auto elems = field.elements();
  const auto n = static_cast<std::size_t>(q) + 1;
  const IntMatrix::value_type border = (q % 4 == 1) ? 1 : -1;
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) {
    c(0, i) = 1;
    c(i, 0) = border;
    for (std::size_t j = 1; j < n; ++j) c(i, j) = quadratic_character(field, field.sub(elems[i - 1], elems[j - 1]));
  }
  return ConferenceMatrix::certify(std::move(c));
}

HadamardMatrix paley_hadamard_1(std::int64_t q) {
  if (q < 3 || q % 4 != 3 || !prime_power(q))
    throw std::invalid_argument("paley_hadamard_1: q must be a prime power with q = 3 (mod 4)");
  const auto c = paley_conference(q);
  auto h = c.matrix() + IntMatrix::identity(c.order());
  return HadamardMatrix::certify(normalize_hadamard(std::move(h)));
}

HadamardMatrix paley_hadamard_2(std::int64_t q) {
  if (q < 5 || q % 4 != 1 || !prime_power(q))
    throw std::invalid_argument("paley_hadamard_2: q must be a prime power with q = 1 (mod 4)");
  const auto c = paley_conference(q);
  const IntMatrix zero_block{{1, -1}, {-1, -1}};
  auto h = kronecker(c.matrix(), h2()) + kronecker(IntMatrix::identity(c.order()), zero_block);
  return HadamardMatrix::certify(normalize_hadamard(std::move(h)));
}

std::string HadamardRoute::describe() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Sylvester: return "sylvester(t=" + std::to_string(param) + ")";
    case Kind::PaleyOne: return "paley-I(q=" + std::to_string(param) + ")";
    case Kind::PaleyTwo: return "paley-II(q=" + std::to_string(param) + ")";
    case Kind::Kronecker: return "kronecker(" + std::to_string(left) + "x" + std::to_string(right) + ")";
  }
  return "?";
}

namespace {

std::optional<HadamardRoute> route_memo(std::int64_t n, std::map<std::int64_t, std::optional<HadamardRoute>>& memo) {
  using Kind = HadamardRoute::Kind;
  if (n < 1) return std::nullopt;
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  std::optional<HadamardRoute> route;
  if (n <= 2) {
    route = HadamardRoute{Kind::Trivial, n, 0, 0};
  } else if ((n & (n - 1)) == 0 && n <= (std::int64_t{1} << kMaxSylvesterExponent)) {
    int t = 0;
    while ((std::int64_t{1} << t) < n) ++t;
    route = HadamardRoute{Kind::Sylvester, t, 0, 0};
  } else if (n % 4 != 0) {
    route = std::nullopt;
  } else if ((n - 1) % 4 == 3 && n <= kMaxConferenceOrder && prime_power(n - 1)) {
    route = HadamardRoute{Kind::PaleyOne, n - 1, 0, 0};
  } else if ((n / 2 - 1) % 4 == 1 && n / 2 <= kMaxConferenceOrder && prime_power(n / 2 - 1)) {
    route = HadamardRoute{Kind::PaleyTwo, n / 2 - 1, 0, 0};
  } else {
    for (std::int64_t a = 2; a * a <= n; ++a) {
      if (n % a != 0) continue;
      if (route_memo(a, memo) && route_memo(n / a, memo)) {
        route = HadamardRoute{Kind::Kronecker, 0, a, n / a};
        break;
      }
    }
  }
  memo[n] = route;
  return route;
}

}  // namespace

std::optional<HadamardRoute> hadamard_route(std::int64_t n) {
  std::map<std::int64_t, std::optional<HadamardRoute>> memo;
  return route_memo(n, memo);
}

std::optional<HadamardMatrix> hadamard_of_order(std::int64_t n) {
  using Kind = HadamardRoute::Kind;
  const auto route = hadamard_route(n);
  if (!route) return std::nullopt;
  switch (route->kind) {
    case Kind::Trivial: return n == 1 ? HadamardMatrix::certify(IntMatrix{{1}}) : sylvester(1);
    case Kind::Sylvester: return sylvester(static_cast<int>(route->param));
    case Kind::PaleyOne: return paley_hadamard_1(route->param);
    case Kind::PaleyTwo: return paley_hadamard_2(route->param);
    case Kind::Kronecker: {
      const auto a = hadamard_of_order(route->left);
      const auto b = hadamard_of_order(route->right);
      return HadamardMatrix::certify(kronecker(a->matrix(), b->matrix()));
    }
  }
  return std::nullopt;
}

bool conference_parameter(std::int64_t q) {
  if (q == 1) return true;
  if (q < 3 || q % 2 == 0 || q + 1 > kMaxConferenceOrder) return false;
  int h = 0;
  return prime_power(q, nullptr, &h) && h <= 8;
}

OrderClass classify_order(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("classify_order: m must be >= 1");
  OrderClass c;
  c.m = m;
  c.in_nh = hadamard_reachable(m);
  c.in_nc = conference_parameter(m);
  c.odd = m % 2 == 1;
  c.two_mod_four = m % 4 == 2;
  return c;
}

}  // namespace starb
