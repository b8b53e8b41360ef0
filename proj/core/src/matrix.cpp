#include "gammalat/matrix.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace gammalat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::column_vector(const IntVector& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, const IntVector& v) {
  assert(v.size() == rows_);
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
  return m;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& which) const {
  IntMatrix m(rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < which.size(); ++j) m(i, j) = (*this)(i, which[j]);
  return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& which) const {
  IntMatrix m(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(which[i], j);
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::pow(std::uint64_t exponent) const {
  if (rows_ != cols_) throw std::invalid_argument("IntMatrix::pow: not square");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("IntMatrix +: shape");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("IntMatrix -: shape");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix *: shape");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b(k, j);
        if (sgn(bkj) != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("IntMatrix * vector: shape");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0)
        mpz_addmul(out[i].get_mpz_t(), a(i, k).get_mpz_t(), v[k].get_mpz_t());
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_columns(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) {
    const Integer& s = (*this)(source, k);
    if (sgn(s) != 0) mpz_addmul((*this)(target, k).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) {
    const Integer& s = (*this)(k, source);
    if (sgn(s) != 0) mpz_addmul((*this)(k, target).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column mismatch");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

std::vector<std::vector<std::int64_t>> to_int64_rows(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p()) throw std::overflow_error("matrix entry exceeds 64 bits");
      out[i][j] = m(i, j).get_si();
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << m(i, j);
    }
  }
  return os << ']';
}

}  // namespace gammalat
