#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppclass/gf.hpp"

namespace ppclass {

/// Polynomial over F_q. Always stored trimmed (no trailing zero coefficients);
/// arithmetic helpers below keep it reduced mod x^q - x, so length <= q.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs);

  static Poly monomial(std::size_t exponent, Elem coeff = Elem{1});

  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }
  Elem leading() const noexcept { return is_zero() ? Elem{0} : coeffs_.back(); }
  bool is_monic() const noexcept { return !is_zero() && coeffs_.back() == Elem{1}; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Elem> coeffs_;
};

/// Folds exponent e >= 1 onto 1 + ((e - 1) mod (q - 1)); the evaluation map is unchanged.
Poly reduce(const Field& field, std::span<const Elem> raw);

Elem evaluate(const Field& field, const Poly& f, Elem x);
/// Entry i is f(Elem{i}).
std::vector<Elem> evaluation_table(const Field& field, const Poly& f);

Poly add(const Field& field, const Poly& a, const Poly& b);
Poly sub(const Field& field, const Poly& a, const Poly& b);
Poly scale(const Field& field, const Poly& a, Elem c);
/// Product reduced mod x^q - x.
Poly mul(const Field& field, const Poly& a, const Poly& b);
/// Repeated squaring, reducing after every product.
Poly pow(const Field& field, const Poly& a, std::uint64_t e);
/// f(g(x)) mod x^q - x.
Poly compose(const Field& field, const Poly& f, const Poly& g);

// V[x]: reduced polynomials of degree <= q - 2 vanishing at 0, coordinatised
// over the ordered monomial basis (x, x^2, ..., x^{q-2}).
using Coords = std::vector<Elem>;

bool in_v(const Field& field, const Poly& f);
/// Throws OutOfRange when f is not in V[x].
Coords to_coords(const Field& field, const Poly& f);
Poly from_coords(std::span<const Elem> coords);
inline std::size_t v_dimension(const Field& field) { return field.q() - 2; }

/// L(x) = sum_j d_j x^{p^j}.
struct LinearizedPoly {
  std::vector<Elem> d;  // size n
};

Poly to_poly(const Field& field, const LinearizedPoly& l);
/// Recovers the coefficients on x^{p^j}; nullopt when f has other terms.
std::optional<LinearizedPoly> as_linearized(const Field& field, const Poly& f);

/// n x n matrix over F_p (entries < p), row-major: column j holds the
/// coordinates of L(t^j) in the power basis {1, t, ..., t^{n-1}}.
struct PrimeMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> entries;

  std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  friend bool operator==(const PrimeMatrix&, const PrimeMatrix&) = default;
};

PrimeMatrix linearized_to_matrix(const Field& field, const LinearizedPoly& l);
/// Inverse of linearized_to_matrix. Solves for the d_j by interpolating the
/// F_p-linear map on the power basis.
LinearizedPoly matrix_to_linearized(const Field& field, const PrimeMatrix& m);
std::uint32_t determinant_mod_p(const PrimeMatrix& m, std::uint32_t p);

enum class BlockKind { G, H };

/// d = (-1)^m b^{mp}.
Elem h_parameter(const Field& field, unsigned m, Elem b);

/// (x^p - b x)^m for BlockKind::G and (x^p - d x)^m with d = h_parameter(m, b)
/// for BlockKind::H. Requires 2 <= m <= p - 1 and b^{(q-1)/(p-1)} = 1.
Poly build_gmb_hmd(const Field& field, unsigned m, Elem b, BlockKind which);

/// Text form "c*x^e + ...", coefficients as element indices, descending degree.
std::string format_poly(const Poly& f);
/// Accepts terms "c*x^e", "c*x", "x^e", "x", "c" joined by '+', any order.
/// Repeated exponents are summed; the result is reduced.
Poly parse_poly(const Field& field, std::string_view text);

}  // namespace ppclass
