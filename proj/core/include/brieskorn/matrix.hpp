#ifndef BRIESKORN_MATRIX_HPP
#define BRIESKORN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "brieskorn/rational.hpp"

namespace brieskorn {

// Dense matrix over the rationals.  Everything here is exact; there is no
// pivoting-for-stability, only pivoting-for-nonzero.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational &at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix &o) const;
  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  Matrix scaled(const Rational &c) const;

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::size_t rank() const;

  // Inverse; throws DomainError when singular.
  Matrix inverse() const;

  bool is_zero() const;

  // In-place Gauss-Jordan to reduced row echelon form; returns the pivot
  // column of each pivot row, in order.
  std::vector<std::size_t> rref();

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::kInconsistent;
  std::vector<Rational> solution; // valid only when status == kUnique
};

// Solve A x = b exactly.
SolveResult solve_exact(const Matrix &a, const std::vector<Rational> &b);

// Whether v lies in the row space of a.
bool in_row_space(const Matrix &a, const std::vector<Rational> &v);

} // namespace brieskorn

#endif // BRIESKORN_MATRIX_HPP
