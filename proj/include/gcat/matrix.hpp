#pragma once

#include <cstddef>
#include <vector>

#include "gcat/scalar.hpp"

namespace gcat {

/// Dense matrix over Q(i). Multiplication skips zero entries, so products of
/// the sparse 0/1 matrices that dominate this codebase stay cheap.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const CRational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  const std::vector<CRational>& flat() const { return a_; }

  bool is_zero() const;
  bool is_projection() const;  // self-adjoint idempotent

  ExactMatrix adjoint() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    return a += b;
  }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
    return a -= b;
  }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const CRational& s, const ExactMatrix& m);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
    return !(a == b);
  }

  /// Lexicographic order on (rows, cols, entries); canonical map key.
  friend int compare(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CRational> a_;
};

struct MatrixLess {
  bool operator()(const ExactMatrix& a, const ExactMatrix& b) const {
    return compare(a, b) < 0;
  }
};

}  // namespace gcat
