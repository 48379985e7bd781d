#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace starb {

class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, value_type fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  value_type operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  // Bounds-checked access; throws std::out_of_range.
  value_type at(std::size_t r, std::size_t c) const;

  std::vector<value_type> column(std::size_t c) const;
  IntMatrix transpose() const;
  value_type trace() const;
  // Rows [0, rows) followed by `extra` zero rows.
  IntMatrix pad_rows(std::size_t extra) const;

  const std::vector<value_type>& data() const noexcept { return data_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

// Throws std::invalid_argument on dimension mismatch.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(IntMatrix::value_type k, IntMatrix a);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Block-diagonal sum of `copies` copies of `m` (I_c (x) m).
IntMatrix direct_sum_copies(const IntMatrix& m, std::size_t copies);

// Rank over Q by fraction-free (Bareiss) elimination on arbitrary-precision integers.
std::size_t integer_rank(const IntMatrix& m);

// Text format: "rows cols" on the first line, then `rows` lines of integers.
IntMatrix read_int_matrix(std::istream& in);
void write_int_matrix(std::ostream& out, const IntMatrix& m);

}  // namespace starb
