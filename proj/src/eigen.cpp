#include "ppclass/eigen.hpp"

#include <string>

#include "ppclass/error.hpp"

namespace ppclass {

ShiftOperator build_shift_operator(const Field& field, Elem r) {
  const std::size_t dim = v_dimension(field);
  ShiftOperator op{r, Matrix(dim, dim)};
  const Poly step({r, field.one()});
  Poly power = Poly::monomial(0);
  for (std::size_t e = 1; e <= dim; ++e) {
    power = mul(field, power, step);  // (x + r)^e; e < q so nothing folds
    for (std::size_t i = 1; i <= dim; ++i) op.matrix.at(i - 1, e - 1) = power.coeff(i);
  }
  return op;
}

Poly apply_shift(const Field& field, Elem r, const Poly& f) {
  const Poly shifted = compose(field, f, Poly({r, field.one()}));
  return sub(field, shifted, Poly::monomial(0, evaluate(field, f, r)));
}

unsigned operator_order(const Field& field, const ShiftOperator& op) {
  const Matrix id = Matrix::identity(op.matrix.rows());
  Matrix acc = op.matrix;
  // Order divides p when r != 0; the loop bound only guards malformed input.
  for (unsigned k = 1; k <= field.q(); ++k) {
    if (acc == id) return k;
    acc = multiply(field, acc, op.matrix);
  }
  throw Error(ErrorCode::OutOfRange, "operator order exceeds q");
}

Subspace kernel_power(const Field& field, const ShiftOperator& op, unsigned k) {
  if (op.r.index == 0) throw Error(ErrorCode::ZeroShift, "kernel chain of A_0 is trivial");
  if (k < 1 || k > field.p()) {
    throw Error(ErrorCode::OutOfRange, "kernel stage " + std::to_string(k) + " outside [1, p]");
  }
  const Matrix base = shift_diagonal(field, op.matrix, field.one());
  return Subspace::kernel(field, power(field, base, k));
}

Subspace kernel_power(const Field& field, Elem r, unsigned k) {
  return kernel_power(field, build_shift_operator(field, r), k);
}

namespace {

bool is_power_of(std::size_t value, std::size_t p) {
  if (value == 0) return false;
  while (value % p == 0) value /= p;
  return value == 1;
}

std::vector<Poly> frobenius_monomials(const Field& field) {
  std::vector<Poly> out;
  std::size_t e = 1;
  for (std::uint32_t i = 0; i < field.n(); ++i, e *= field.p()) out.push_back(Poly::monomial(e));
  return out;
}

Poly xp_minus(const Field& field, Elem c) {
  return sub(field, Poly::monomial(field.p()), Poly::monomial(1, c));
}

}  // namespace

std::vector<Poly> predicted_basis(const Field& field, BasisVariant variant, const BasisParams& params) {
  const std::size_t p = field.p();
  const std::size_t top = field.q() / p;  // p^{n-1}
  std::vector<Poly> out;
  switch (variant) {
    case BasisVariant::EigenspaceMonomials:
    case BasisVariant::LineEigenspace: {
      if (field.n() < 2) throw Error(ErrorCode::OutOfRange, "eigenspace basis needs an extension field");
      Elem b = field.one();
      if (variant == BasisVariant::LineEigenspace) {
        if (params.r.index == 0 || params.r.index >= field.q()) throw Error(ErrorCode::ZeroShift, "r must be nonzero");
        b = field.pow(params.r, p - 1);
      }
      out = frobenius_monomials(field);
      const Poly base = xp_minus(field, b);
      for (std::size_t i = 2; i + 1 <= top; ++i) {
        if (is_power_of(i, p)) continue;
        out.push_back(pow(field, base, i));
      }
      break;
    }
    case BasisVariant::GeneralizedKernel: {
      if (field.n() < 2) throw Error(ErrorCode::OutOfRange, "generalized kernel basis needs an extension field");
      if (params.m < 1 || params.m > p) throw Error(ErrorCode::OutOfRange, "m outside [1, p]");
      const Poly base = xp_minus(field, field.one());
      for (std::size_t j = 0; j < params.m; ++j) {
        for (std::size_t i = 1; i + 1 <= top; ++i) {
          const std::size_t deg = j + i * p;
          if (deg > field.q() - 2) continue;
          out.push_back(mul(field, Poly::monomial(j), pow(field, base, i)));
        }
      }
      for (std::size_t k = 1; k <= params.m; ++k) out.push_back(Poly::monomial(k));
      break;
    }
    case BasisVariant::PrimeFieldKernel: {
      if (field.n() != 1) throw Error(ErrorCode::OutOfRange, "prime-field kernel basis needs n = 1");
      if (params.m < 1 || params.m > field.q() - 2) throw Error(ErrorCode::OutOfRange, "m outside [1, p-2]");
      for (std::size_t k = 1; k <= params.m; ++k) out.push_back(Poly::monomial(k));
      break;
    }
  }
  return out;
}

Subspace predicted_kernel(const Field& field, BasisVariant variant, const BasisParams& params) {
  switch (variant) {
    case BasisVariant::EigenspaceMonomials: return kernel_power(field, field.one(), 1);
    case BasisVariant::LineEigenspace: return kernel_power(field, params.r, 1);
    case BasisVariant::GeneralizedKernel:
    case BasisVariant::PrimeFieldKernel: return kernel_power(field, field.one(), params.m);
  }
  throw Error(ErrorCode::OutOfRange, "unknown basis variant");
}

Subspace span_of(const Field& field, const std::vector<Poly>& polys) {
  std::vector<std::vector<Elem>> rows;
  rows.reserve(polys.size());
  for (const auto& f : polys) rows.push_back(to_coords(field, f));
  return Subspace::span(field, v_dimension(field), rows);
}

std::vector<Elem> default_generators(const Field& field) {
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < field.n(); ++i) out.push_back(field.exp(i));
  return out;
}

Subspace intersection_space(const Field& field, unsigned k, const std::vector<Elem>& generators) {
  if (generators.empty()) return Subspace::full(v_dimension(field));
  Subspace acc = kernel_power(field, generators.front(), k);
  for (std::size_t i = 1; i < generators.size(); ++i) {
    acc = intersect(field, acc, kernel_power(field, generators[i], k));
  }
  return acc;
}

unsigned first_appearance_stage(const Field& field, const std::vector<Subspace>& chain, const Poly& f) {
  if (f.is_zero()) return 0;
  const Coords c = to_coords(field, f);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k].contains(field, c)) return static_cast<unsigned>(k + 1);
  }
  throw Error(ErrorCode::OutOfRange, "polynomial lies outside every kernel in the chain");
}

std::vector<Poly> basis_polys(const Subspace& s) {
  std::vector<Poly> out;
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(from_coords(s.basis().row(r)));
  return out;
}

}  // namespace ppclass
