#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppclass/gf.hpp"
#include "ppclass/poly.hpp"

namespace ppclass {

// The family f = (x^p - b x)^m + alpha x^p + beta x over F_{p^2}, b a
// (p+1)-th root of unity, 2 <= m <= p - 1, with parametric inverse
// h = delta (x^p - d x)^m + gamma x^p + epsilon x.

struct FamilyInstance {
  unsigned m = 0;
  Elem b, alpha, beta;
  Elem gamma, epsilon, delta, d;
};

struct ConditionVerdict {
  /// alpha^{p+1} != beta^{p+1}
  bool cond1 = false;
  /// (beta + b alpha)^{p-1} = (-1)^m b^{mp-1}; false when beta + b alpha = 0.
  bool cond2 = false;
  bool constructible = false;
};

/// Throws OutOfRange unless n = 2, BadExponent / NotRootOfUnity on (m, b).
void require_family_domain(const Field& field, unsigned m, Elem b);

/// (p+1)-th roots of unity of F_{p^2}, ascending.
std::vector<Elem> family_roots(const Field& field);

/// Derived gamma, epsilon, d and delta. Throws DegenerateParameters when
/// alpha^{p+1} = beta^{p+1} or beta^p - alpha d = 0.
FamilyInstance derive_params(const Field& field, unsigned m, Elem b, Elem alpha, Elem beta);

/// (beta + b alpha)^{m-1} / (beta^{p+1} - alpha^{p+1})^m.
Elem delta_closed_form(const Field& field, const FamilyInstance& inst);

ConditionVerdict check_conditions(const Field& field, unsigned m, Elem b, Elem alpha, Elem beta);

/// (b beta^p + alpha^p) / (beta + alpha b) = (-1)^m b^{mp}; nullopt when
/// beta + alpha b = 0.
std::optional<bool> condition2_quotient_form(const Field& field, unsigned m, Elem b, Elem alpha, Elem beta);

struct FamilyPair {
  Poly f;
  Poly h;
};

/// Throws NotConstructible unless both conditions hold.
FamilyPair build_pair(const Field& field, const FamilyInstance& inst);
Poly build_family_member(const Field& field, unsigned m, Elem b, Elem alpha, Elem beta);

struct ShapeMatch {
  Elem b, alpha, beta;
};

/// Writes f as (x^p - b x)^m + alpha x^p + beta x for some (p+1)-th root b.
std::optional<ShapeMatch> match_family_shape(const Field& field, unsigned m, const Poly& f);

enum class CensusMode { Conditioned, FullShape };

struct CensusResult {
  unsigned m = 0;
  Elem b;
  /// (alpha, beta) with both conditions.
  std::uint64_t conditioned = 0;
  /// Every (alpha, beta) in F_q^2 giving a permutation; FullShape mode only.
  std::optional<std::uint64_t> full;
  std::optional<std::uint64_t> excess;
  /// Permutations split by which conditions hold: [cond1][cond2].
  std::uint64_t pp_by_condition[2][2] = {{0, 0}, {0, 0}};
  /// Constructible pairs whose polynomial failed to permute.
  std::uint64_t conditioned_non_pp = 0;
};

/// Loops alpha outer, beta inner, ascending index; parallel over alpha.
CensusResult census(const Field& field, unsigned m, Elem b, CensusMode mode, unsigned workers = 1);

struct LemmaCheck {
  std::string id;
  std::string statement;
  std::uint64_t instances = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures = 0;
  /// First few counterexamples, verbatim.
  std::vector<std::string> counterexamples;
  /// False for the corrected variants added next to an identity that fails
  /// as written.
  bool as_stated = true;

  bool passed() const noexcept { return failures == 0; }
};

/// Instantiates each identity over its whole hypothesis range.
std::vector<LemmaCheck> lemma_suite(const Field& field);

}  // namespace ppclass
