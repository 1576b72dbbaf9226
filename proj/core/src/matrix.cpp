#include "brieskorn/matrix.hpp"

#include "brieskorn/errors.hpp"

namespace brieskorn {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t.at(j, i) = at(i, j);
    }
  }
  return t;
}

Matrix Matrix::operator*(const Matrix &o) const {
  if (cols_ != o.rows_) {
    throw DomainError("matrix product shape mismatch");
  }
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational &aik = at(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) {
        p.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return p;
}

Matrix Matrix::operator+(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DomainError("matrix sum shape mismatch");
  }
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    s.data_[i] += o.data_[i];
  }
  return s;
}

Matrix Matrix::operator-(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DomainError("matrix difference shape mismatch");
  }
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    s.data_[i] -= o.data_[i];
  }
  return s;
}

Matrix Matrix::scaled(const Rational &c) const {
  Matrix s = *this;
  for (Rational &x : s.data_) {
    x *= c;
  }
  return s;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    // find a nonzero pivot at or below `row`
    std::size_t p = row;
    while (p < rows_ && at(p, col).is_zero()) {
      ++p;
    }
    if (p == rows_) {
      continue;
    }
    if (p != row) {
      for (std::size_t j = 0; j < cols_; ++j) {
        std::swap(at(p, j), at(row, j));
      }
    }
    const Rational inv = Rational(1) / at(row, col);
    for (std::size_t j = col; j < cols_; ++j) {
      at(row, j) *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) {
        continue;
      }
      const Rational f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) {
        at(i, j) -= f * at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) {
    throw DomainError("only square matrices invert");
  }
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      aug.at(i, j) = at(i, j);
    }
    aug.at(i, cols_ + i) = 1;
  }
  const auto pivots = aug.rref();
  if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= cols_)) {
    throw DomainError("matrix is singular");
  }
  Matrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      inv.at(i, j) = aug.at(i, cols_ + j);
    }
  }
  return inv;
}

bool Matrix::is_zero() const {
  for (const Rational &x : data_) {
    if (!x.is_zero()) {
      return false;
    }
  }
  return true;
}

SolveResult solve_exact(const Matrix &a, const std::vector<Rational> &b) {
  if (b.size() != a.rows()) {
    throw DomainError("solve shape mismatch");
  }
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      aug.at(i, j) = a.at(i, j);
    }
    aug.at(i, a.cols()) = b[i];
  }
  const auto pivots = aug.rref();
  SolveResult res;
  if (!pivots.empty() && pivots.back() == a.cols()) {
    res.status = SolveStatus::kInconsistent;
    return res;
  }
  if (pivots.size() < a.cols()) {
    res.status = SolveStatus::kUnderdetermined;
    return res;
  }
  res.status = SolveStatus::kUnique;
  res.solution.assign(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    res.solution[pivots[i]] = aug.at(i, a.cols());
  }
  return res;
}

bool in_row_space(const Matrix &a, const std::vector<Rational> &v) {
  if (v.size() != a.cols()) {
    throw DomainError("row space membership shape mismatch");
  }
  Matrix ext(a.rows() + 1, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      ext.at(i, j) = a.at(i, j);
    }
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    ext.at(a.rows(), j) = v[j];
  }
  return ext.rank() == a.rank();
}

} // namespace brieskorn

