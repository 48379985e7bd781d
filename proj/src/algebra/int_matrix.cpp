#include "starb/int_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "starb/errors.hpp"

namespace starb {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, value_type fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols, 1); }

IntMatrix::value_type IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix: index out of range");
  return data_[r * cols_ + c];
}

std::vector<IntMatrix::value_type> IntMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("IntMatrix: column out of range");
  std::vector<value_type> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix::value_type IntMatrix::trace() const {
  if (!square()) throw std::invalid_argument("IntMatrix: trace of non-square matrix");
  value_type t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::pad_rows(std::size_t extra) const {
  IntMatrix out(rows_ + extra, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("IntMatrix: sum dimension mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-1 * b); }

IntMatrix operator*(IntMatrix::value_type k, IntMatrix a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= k;
  return a;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

IntMatrix direct_sum_copies(const IntMatrix& m, std::size_t copies) {
  return kronecker(IntMatrix::identity(copies), m);
}

std::size_t integer_rank(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<cpp_int> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> cpp_int& { return a[i * cols + j]; };

  cpp_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) at(i, j) = (at(rank, c) * at(i, j) - at(i, c) * at(rank, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

IntMatrix read_int_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty matrix file", 0);
  std::istringstream header(line);
  long long rows = -1, cols = -1;
  std::string extra;
  if (!(header >> rows >> cols) || rows < 0 || cols < 0 || (header >> extra))
    throw ParseError("expected header \"rows cols\"", lineno);
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!next_line()) throw ParseError("expected " + std::to_string(rows) + " rows, got " + std::to_string(r), lineno);
    std::istringstream row(line);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      long long v;
      if (!(row >> v)) throw ParseError("row " + std::to_string(r + 1) + " has fewer than " + std::to_string(cols) + " integers", lineno);
      m(r, c) = v;
    }
    if (row >> extra) throw ParseError("row " + std::to_string(r + 1) + " has more than " + std::to_string(cols) + " entries", lineno);
  }
  if (next_line()) throw ParseError("trailing content after matrix", lineno);
  return m;
}

void write_int_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
}

}  // namespace starb
