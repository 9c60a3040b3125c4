#pragma once

#include <vector>

#include "ppclass/gf.hpp"
#include "ppclass/linalg.hpp"
#include "ppclass/poly.hpp"

namespace ppclass {

/// The map f(x) -> f(x + r) - f(r) on V[x], as a (q-2) x (q-2) matrix acting
/// on coordinate columns. Column e-1 holds (x + r)^e - r^e.
struct ShiftOperator {
  Elem r;
  Matrix matrix;
};

ShiftOperator build_shift_operator(const Field& field, Elem r);

/// Substitution-and-subtract at the polynomial level, without the matrix.
Poly apply_shift(const Field& field, Elem r, const Poly& f);

/// Smallest k >= 1 with A_r^k = I. Returns 1 for r = 0.
unsigned operator_order(const Field& field, const ShiftOperator& op);

/// ker (A_r - I)^k for 1 <= k <= p and r != 0.
Subspace kernel_power(const Field& field, Elem r, unsigned k);
Subspace kernel_power(const Field& field, const ShiftOperator& op, unsigned k);

enum class BasisVariant {
  /// Eigenspace of A_1: x^{p^i} and (x^p - x)^m, m in [2, p^{n-1}-1] not a power of p.
  EigenspaceMonomials,
  /// ker (A_1 - I)^m: x^j (x^p - x)^i and x^k.
  GeneralizedKernel,
  /// Eigenspace of A_r: x^{p^i} and (x^p - b x)^i with b = r^{p-1}.
  LineEigenspace,
  /// Over F_p, ker (A - I)^m = <x, ..., x^m>.
  PrimeFieldKernel,
};

struct BasisParams {
  unsigned m = 1;    // kernel stage, for GeneralizedKernel / PrimeFieldKernel
  Elem r{1};         // shift, for LineEigenspace
};

/// Explicit spanning polynomials predicted for the given kernel. For
/// GeneralizedKernel with m = p, the products whose degree exceeds q - 2 lie
/// outside V[x] and are omitted.
std::vector<Poly> predicted_basis(const Field& field, BasisVariant variant, const BasisParams& params);
/// Kernel the predicted basis is claimed to span.
Subspace predicted_kernel(const Field& field, BasisVariant variant, const BasisParams& params);
Subspace span_of(const Field& field, const std::vector<Poly>& polys);

/// {1, a, ..., a^{n-1}} for the primitive element a.
std::vector<Elem> default_generators(const Field& field);

/// Intersection over the generators of ker (A_g - I)^k, folded pairwise.
Subspace intersection_space(const Field& field, unsigned k, const std::vector<Elem>& generators);
inline Subspace intersection_space(const Field& field, unsigned k) {
  return intersection_space(field, k, default_generators(field));
}

/// Smallest k with coords(f) in ker (A_r - I)^k, given the kernel chain
/// chain[k-1] = ker (A_r - I)^k. Returns 0 for the zero polynomial.
unsigned first_appearance_stage(const Field& field, const std::vector<Subspace>& chain, const Poly& f);

/// Basis vectors of a subspace as polynomials.
std::vector<Poly> basis_polys(const Subspace& s);

}  // namespace ppclass
