#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ppclass/gf.hpp"

namespace ppclass {

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::span<const std::vector<Elem>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> column(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
std::vector<Elem> multiply(const Field& field, const Matrix& a, std::span<const Elem> v);
Matrix subtract(const Field& field, const Matrix& a, const Matrix& b);
/// a - lambda I.
Matrix shift_diagonal(const Field& field, const Matrix& a, Elem lambda);
Matrix power(const Field& field, const Matrix& a, unsigned k);

/// In-place reduced row echelon form with the first-nonzero pivot rule;
/// zero rows are dropped. Returns the pivot columns.
std::vector<std::size_t> rref(const Field& field, Matrix& m);
std::size_t rank(const Field& field, Matrix m);
/// Basis (one vector per entry) of {v : m v = 0}, unnormalised.
std::vector<std::vector<Elem>> nullspace(const Field& field, const Matrix& m);

/// Subspace of F_q^ambient carried by its canonical RREF basis, so equal
/// subspaces have identical basis matrices.
class Subspace {
 public:
  static Subspace span(const Field& field, std::size_t ambient, std::span<const std::vector<Elem>> vectors);
  static Subspace kernel(const Field& field, const Matrix& m);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Field& field, std::span<const Elem> v) const;
  bool contains(const Field& field, const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Solves sum a_i u_i - sum b_j w_j = 0 and maps the solutions back through U.
Subspace intersect(const Field& field, const Subspace& a, const Subspace& b);

}  // namespace ppclass
