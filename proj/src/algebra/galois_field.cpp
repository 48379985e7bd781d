#include "starb/galois_field.hpp"

#include <stdexcept>
#include <string>

namespace starb {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(std::int64_t n, std::int64_t* p, int* h) {
  if (n < 2) return false;
  std::int64_t base = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      base = d;
      break;
    }
  }
  if (base == 0) base = n;
  int exp = 0;
  while (n % base == 0) {
    n /= base;
    ++exp;
  }
  if (n != 1) return false;
  if (p) *p = base;
  if (h) *h = exp;
  return true;
}

namespace {

int mod(std::int64_t a, int p) {
  auto r = static_cast<int>(a % p);
  return r < 0 ? r + p : r;
}

int inverse_mod_p(int a, int p) {
  // p is prime; Fermat.
  std::int64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

// Remainder of f modulo monic g, both low-to-high. Returned with trailing zeros trimmed.
std::vector<int> poly_rem(std::vector<int> f, const std::vector<int>& g, int p) {
  const std::size_t dg = g.size() - 1;
  while (!f.empty() && f.back() == 0) f.pop_back();
  while (f.size() > dg) {
    const int lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = mod(f[shift + i] - static_cast<std::int64_t>(lead) * g[i], p);
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& monic, int p) {
  const int deg = static_cast<int>(monic.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    const std::int64_t count = ipow(p, d);
    std::vector<int> g(static_cast<std::size_t>(d) + 1, 0);
    g[static_cast<std::size_t>(d)] = 1;
    for (std::int64_t v = 0; v < count; ++v) {
      std::int64_t x = v;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
        x /= p;
      }
      if (poly_rem(monic, g, p).empty()) return false;
    }
  }
  return true;
}

GaloisField::GaloisField(int p, int h, std::vector<int> modulus)
    : p_(p), h_(h), q_(ipow(p, h)), modulus_(std::move(modulus)) {}

GaloisField GaloisField::construct(int p, int h) {
  if (!is_prime(p)) throw std::invalid_argument("GF: characteristic " + std::to_string(p) + " is not prime");
  if (h < 1 || h > kMaxDegree)
    throw std::invalid_argument("GF: degree " + std::to_string(h) + " outside [1, " + std::to_string(kMaxDegree) + "]");
  std::int64_t q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("GF: order p^h too large");
  }

  // Lexicographic order with the x^{h-1} coefficient most significant.
  std::vector<int> f(static_cast<std::size_t>(h) + 1, 0);
  f[static_cast<std::size_t>(h)] = 1;
  for (std::int64_t v = 0; v < q; ++v) {
    std::int64_t x = v;
    for (int i = 0; i < h; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
      x /= p;
    }
    if (is_irreducible_mod_p(f, p)) return GaloisField(p, h, f);
  }
  throw std::logic_error("GF: no irreducible polynomial found");  // unreachable for prime p
}

FieldElement GaloisField::zero() const { return FieldElement{std::vector<int>(static_cast<std::size_t>(h_), 0)}; }

FieldElement GaloisField::one() const {
  auto e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement GaloisField::element(std::int64_t index) const {
  if (index < 0 || index >= q_) throw std::out_of_range("GF: element index out of range");
  auto e = zero();
  for (int i = 0; i < h_; ++i) {
    e.coeffs[static_cast<std::size_t>(i)] = static_cast<int>(index % p_);
    index /= p_;
  }
  return e;
}

std::int64_t GaloisField::index_of(const FieldElement& a) const {
  std::int64_t idx = 0;
  for (int i = h_ - 1; i >= 0; --i) idx = idx * p_ + a.coeffs[static_cast<std::size_t>(i)];
  return idx;
}

std::vector<FieldElement> GaloisField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(q_));
  for (std::int64_t i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

bool GaloisField::contains(const FieldElement& a) const {
  if (a.coeffs.size() != static_cast<std::size_t>(h_)) return false;
  for (int c : a.coeffs)
    if (c < 0 || c >= p_) return false;
  return true;
}

bool GaloisField::is_zero(const FieldElement& a) const {
  for (int c : a.coeffs)
    if (c != 0) return false;
  return true;
}

FieldElement GaloisField::add(const FieldElement& a, const FieldElement& b) const {
  auto r = zero();
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

FieldElement GaloisField::neg(const FieldElement& a) const {
  auto r = zero();
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = (p_ - a.coeffs[i]) % p_;
  return r;
}

FieldElement GaloisField::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement GaloisField::mul(const FieldElement& a, const FieldElement& b) const {
  std::vector<int> prod(static_cast<std::size_t>(2 * h_ - 1), 0);
  for (int i = 0; i < h_; ++i) {
    if (a.coeffs[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < h_; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = static_cast<int>((slot + static_cast<std::int64_t>(a.coeffs[static_cast<std::size_t>(i)]) *
                                          b.coeffs[static_cast<std::size_t>(j)]) %
                              p_);
    }
  }
  auto rem = poly_rem(std::move(prod), modulus_, p_);
  rem.resize(static_cast<std::size_t>(h_), 0);
  return FieldElement{std::move(rem)};
}

FieldElement GaloisField::pow(FieldElement a, std::uint64_t e) const {
  auto result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement GaloisField::inv(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("GF: zero has no inverse");
  if (h_ == 1) {
    auto r = zero();
    r.coeffs[0] = inverse_mod_p(a.coeffs[0], p_);
    return r;
  }
  return pow(a, static_cast<std::uint64_t>(q_ - 2));
}

int quadratic_character(const GaloisField& field, const FieldElement& a) {
  if (field.order() % 2 == 0) throw std::domain_error("quadratic character needs a field of odd order");
  if (field.is_zero(a)) return 0;
  const auto r = field.pow(a, static_cast<std::uint64_t>((field.order() - 1) / 2));
  if (r == field.one()) return 1;
  if (r == field.neg(field.one())) return -1;
  throw std::logic_error("quadratic character: a^((q-1)/2) is not +-1");
}

}  // namespace starb
