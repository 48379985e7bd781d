#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "starb/int_matrix.hpp"

namespace starb {

bool is_hadamard(const IntMatrix& m);
bool is_conference(const IntMatrix& m);

// A +-1 matrix with H^T H = nI. Only obtainable through `certify` or the constructors below.
class HadamardMatrix {
 public:
  // Throws std::invalid_argument unless is_hadamard(m).
  static HadamardMatrix certify(IntMatrix m);

  std::size_t order() const noexcept { return m_.rows(); }
  const IntMatrix& matrix() const noexcept { return m_; }

 private:
  explicit HadamardMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

// Zero diagonal, +-1 elsewhere, C^T C = (n-1)I.
class ConferenceMatrix {
 public:
  static ConferenceMatrix certify(IntMatrix m);

  std::size_t order() const noexcept { return m_.rows(); }
  const IntMatrix& matrix() const noexcept { return m_; }
  bool symmetric() const { return m_ == m_.transpose(); }

 private:
  explicit ConferenceMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

inline constexpr int kMaxSylvesterExponent = 10;
inline constexpr std::int64_t kMaxConferenceOrder = 200;

// Rows and columns multiplied by signs so that the first row and column are all +1.
IntMatrix normalize_hadamard(IntMatrix h);

HadamardMatrix sylvester(int exponent);

// Bordered Jacobsthal matrix over GF(q). q = 1 gives [[0,1],[1,0]].
// Symmetric for q = 1 (mod 4), antisymmetric for q = 3 (mod 4).
ConferenceMatrix paley_conference(std::int64_t q);

// Order q + 1, q a prime power with q = 3 (mod 4).
HadamardMatrix paley_hadamard_1(std::int64_t q);
// Order 2(q + 1), q a prime power with q = 1 (mod 4).
HadamardMatrix paley_hadamard_2(std::int64_t q);

// How hadamard_of_order reaches an order.
struct HadamardRoute {
  enum class Kind { Trivial, Sylvester, PaleyOne, PaleyTwo, Kronecker };
  Kind kind = Kind::Trivial;
  std::int64_t param = 0;  // Sylvester exponent or Paley q
  std::int64_t left = 0;   // Kronecker factors (left <= right)
  std::int64_t right = 0;

  std::string describe() const;
};

// First applicable of: n in {1,2}; Sylvester; Paley I; Paley II; Kronecker of two
// reachable orders with the smaller factor ascending.
std::optional<HadamardRoute> hadamard_route(std::int64_t n);
inline bool hadamard_reachable(std::int64_t n) { return hadamard_route(n).has_value(); }
std::optional<HadamardMatrix> hadamard_of_order(std::int64_t n);

// q odd prime power (or q = 1) with q + 1 within the conference constructor's range.
bool conference_parameter(std::int64_t q);

struct OrderClass {
  std::int64_t m = 0;
  bool in_nh = false;  // a Hadamard matrix of order m is constructible
  bool in_nc = false;  // a conference matrix of order m + 1 is constructible
  bool odd = false;
  bool two_mod_four = false;
};

// Throws std::invalid_argument for m < 1.
OrderClass classify_order(std::int64_t m);

// Sign-matrix text: one row per line, characters from {+,-,0}.
void write_sign_matrix(std::ostream& out, const IntMatrix& m);
// Throws ParseError (with line number) on bad characters or ragged rows.
IntMatrix read_sign_matrix(std::istream& in);

}  // namespace starb
