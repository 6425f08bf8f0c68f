#pragma once

// Exact rational vectors and matrices over GMP rationals.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coxcert {

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;
using IVector = std::vector<int>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_int_rows(const std::vector<IVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix scaled(const Rational& s) const;
  QVector apply(std::span<const Rational> v) const;
  QVector apply(std::span<const int> v) const;

  /// Gauss-Jordan inverse; throws SingularMatrixError.
  QMatrix inverse() const;
  bool is_identity() const;

  bool operator==(const QMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QVector to_rational(std::span<const int> v);

/// Dimension of the Q-span of the given integer vectors.
std::size_t span_rank(const std::vector<IVector>& vectors, std::size_t dim);

/// Scale a nonzero rational vector to the primitive integral vector on its
/// line whose first nonzero coordinate is positive.
std::vector<Integer> primitive_integral(std::span<const Rational> v);

std::string to_string(const Rational& x);

}  // namespace coxcert
