#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

namespace gammalat {

/// Arbitrary-precision integer used for all lattice arithmetic.
using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix over the integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
  static IntMatrix column_vector(const IntVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  void set_column(std::size_t j, const IntVector& v);
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix rows_range(std::size_t first, std::size_t count) const;
  IntMatrix select_columns(const std::vector<std::size_t>& which) const;
  IntMatrix select_rows(const std::vector<std::size_t>& which) const;

  IntMatrix transposed() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Exact power by repeated squaring; the matrix must be square.
  IntMatrix pow(std::uint64_t exponent) const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& scalar);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_columns(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Row-major nested vectors of machine integers; throws if an entry does not fit.
std::vector<std::vector<std::int64_t>> to_int64_rows(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace gammalat
