#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ppclass {

/// Element of F_{p^n}, stored as its coefficient vector (c_0, ..., c_{n-1})
/// over F_p packed in base p: index = sum c_i p^i. Index 0 is zero, 1 is one.
struct Elem {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint32_t kDefaultFieldCap = 1u << 16;

bool is_prime(std::uint64_t n);

/// Distinct prime factors in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Immutable description of F_q, q = p^n, with discrete exp/log tables
/// relative to the smallest-index primitive element.
class Field {
 public:
  /// Builds F_{p^n}. Without an override the modulus is the lexicographically
  /// smallest monic irreducible of degree n, comparing coefficients from the
  /// constant term upwards. For n = 1 the modulus is t.
  static Field build(std::uint32_t p, std::uint32_t n,
                     std::optional<std::vector<std::uint32_t>> modulus_override = std::nullopt,
                     std::uint32_t cap = kDefaultFieldCap);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic modulus, coefficients low degree first (length n + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Elem primitive() const noexcept { return primitive_; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Checked conversion from an index.
  Elem element(std::uint64_t index) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t value) const noexcept;
  bool in_prime_field(Elem x) const noexcept { return x.index < p_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept { return Elem{neg_[a.index]}; }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a.index == 0 || b.index == 0) return zero();
    std::uint32_t e = log_[a.index] + log_[b.index];
    if (e >= q_ - 1) e -= q_ - 1;
    return Elem{exp_[e]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  /// Square-and-multiply; exponent reduced mod q - 1 for nonzero bases.
  /// pow(0, 0) = 1.
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem frobenius(Elem a) const noexcept { return pow(a, p_); }

  /// Discrete log relative to primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t e) const noexcept { return Elem{exp_[e % (q_ - 1)]}; }
  std::uint64_t multiplicative_order(Elem a) const;

  /// Base-p digits of the element, constant coefficient first.
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  std::string describe_modulus() const;

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_table_;  // q*q, only for small q
};

/// All x with x^d = 1, sorted by index. d must divide q - 1.
std::vector<Elem> roots_of_unity(const Field& field, std::uint64_t d);

/// Number of lines through the origin, (q - 1)/(p - 1).
std::uint64_t line_count(const Field& field);

/// The F_p^*-multiples of a nonzero element. Every member r satisfies
/// r^{p-1} = b and b^{line_count} = 1.
struct Line {
  Elem representative;
  std::vector<Elem> members;  // sorted by index
  Elem b;
};

/// Partition of F_q^* into lines, ordered by representative.
std::vector<Line> line_decomposition(const Field& field);

}  // namespace ppclass
