#include "ppclass/linalg.hpp"

#include <algorithm>

#include "ppclass/error.hpp"

namespace ppclass {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Elem{1};
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const std::vector<Elem>> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x.index == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Elem y = b.at(k, j);
        if (y.index == 0) continue;
        out.at(i, j) = field.add(out.at(i, j), field.mul(x, y));
      }
    }
  }
  return out;
}

std::vector<Elem> multiply(const Field& field, const Matrix& a, std::span<const Elem> v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  std::vector<Elem> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc{0};
    for (std::size_t k = 0; k < a.cols(); ++k) acc = field.add(acc, field.mul(a.at(i, k), v[k]));
    out[i] = acc;
  }
  return out;
}

Matrix subtract(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = field.sub(a.at(i, j), b.at(i, j));
  }
  return out;
}

Matrix shift_diagonal(const Field& field, const Matrix& a, Elem lambda) {
  Matrix out = a;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) out.at(i, i) = field.sub(out.at(i, i), lambda);
  return out;
}

Matrix power(const Field& field, const Matrix& a, unsigned k) {
  Matrix out = Matrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) out = multiply(field, out, a);
  return out;
}

std::vector<std::size_t> rref(const Field& field, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col).index == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(piv, c));
    }
    const Elem inv = field.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = field.mul(m.at(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Elem factor = m.at(r, col);
      if (factor.index == 0) continue;
      for (std::size_t c = col; c < m.cols(); ++c) {
        m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix trimmed(row, m.cols());
  for (std::size_t r = 0; r < row; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) trimmed.at(r, c) = m.at(r, c);
  }
  m = std::move(trimmed);
  return pivots;
}

std::size_t rank(const Field& field, Matrix m) { return rref(field, m).size(); }

std::vector<std::vector<Elem>> nullspace(const Field& field, const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = rref(field, reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Elem>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(reduced.at(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

Subspace Subspace::span(const Field& field, std::size_t ambient, std::span<const std::vector<Elem>> vectors) {
  Subspace s;
  s.basis_ = Matrix::from_rows(ambient, vectors);
  s.pivots_ = rref(field, s.basis_);
  return s;
}

Subspace Subspace::kernel(const Field& field, const Matrix& m) {
  const auto vecs = nullspace(field, m);
  return span(field, m.cols(), vecs);
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.basis_ = Matrix::identity(ambient);
  s.pivots_.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

bool Subspace::contains(const Field& field, std::span<const Elem> v) const {
  if (v.size() != ambient()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  // Eliminate against the RREF pivots; membership iff the residue vanishes.
  std::vector<Elem> residue(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Elem factor = residue[pivots_[r]];
    if (factor.index == 0) continue;
    for (std::size_t c = 0; c < ambient(); ++c) {
      residue[c] = field.sub(residue[c], field.mul(factor, basis_.at(r, c)));
    }
  }
  return std::all_of(residue.begin(), residue.end(), [](Elem e) { return e.index == 0; });
}

bool Subspace::contains(const Field& field, const Subspace& other) const {
  if (other.ambient() != ambient()) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(field, other.basis().row(r))) return false;
  }
  return true;
}

Subspace intersect(const Field& field, const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::DimensionMismatch, "ambient dimensions differ");
  const std::size_t amb = a.ambient();
  Matrix system(amb, a.dim() + b.dim());
  for (std::size_t c = 0; c < amb; ++c) {
    for (std::size_t i = 0; i < a.dim(); ++i) system.at(c, i) = a.basis().at(i, c);
    for (std::size_t j = 0; j < b.dim(); ++j) system.at(c, a.dim() + j) = field.neg(b.basis().at(j, c));
  }
  std::vector<std::vector<Elem>> vectors;
  for (const auto& sol : nullspace(field, system)) {
    std::vector<Elem> v(amb);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (sol[i].index == 0) continue;
      for (std::size_t c = 0; c < amb; ++c) v[c] = field.add(v[c], field.mul(sol[i], a.basis().at(i, c)));
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(field, amb, vectors);
}

}  // namespace ppclass
