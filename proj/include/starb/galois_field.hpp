#pragma once

#include <cstdint>
#include <vector>

namespace starb {

// Polynomial-basis element of GF(p^h); coeffs[i] is the coefficient of x^i, each in [0, p).
struct FieldElement {
  std::vector<int> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

bool is_prime(std::int64_t n);

// If n = p^h with p prime and h >= 1, returns true and fills p, h.
bool prime_power(std::int64_t n, std::int64_t* p = nullptr, int* h = nullptr);

/// Finite field GF(p^h) in polynomial representation.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial of
/// degree h, comparing coefficients from x^{h-1} down to x^0. Elements are indexed
/// by reading their coefficients as base-p digits (x^0 least significant), which
/// fixes the enumeration order used by every matrix built over the field.
class GaloisField {
 public:
  static constexpr int kMaxDegree = 8;
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 24;

  // Throws std::invalid_argument if p is not prime, h is outside [1, 8], or p^h is too large.
  static GaloisField construct(int p, int h);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return h_; }
  std::int64_t order() const noexcept { return q_; }
  // Monic modulus, coefficients low to high (size h + 1).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::int64_t index) const;
  std::int64_t index_of(const FieldElement& a) const;
  std::vector<FieldElement> elements() const;
  bool contains(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  FieldElement inv(const FieldElement& a) const;

  bool is_zero(const FieldElement& a) const;

 private:
  GaloisField(int p, int h, std::vector<int> modulus);

  int p_;
  int h_;
  std::int64_t q_;
  std::vector<int> modulus_;
};

// True iff the monic polynomial (coefficients low to high) has no monic factor of
// degree 1..deg/2 over GF(p). Exhaustive trial division.
bool is_irreducible_mod_p(const std::vector<int>& monic, int p);

// 0 for zero, +1 for a nonzero square, -1 otherwise. Computed as a^((q-1)/2).
// Throws std::domain_error for fields of even order.
int quadratic_character(const GaloisField& field, const FieldElement& a);

}  // namespace starb
