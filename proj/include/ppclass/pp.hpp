#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ppclass/gf.hpp"
#include "ppclass/linalg.hpp"
#include "ppclass/poly.hpp"

namespace ppclass {

struct PermVerdict {
  bool is_pp = false;
  /// Monic, vanishing at 0, and a permutation.
  bool is_ppr = false;
  /// Two distinct points with equal image; present iff !is_pp.
  std::optional<std::pair<Elem, Elem>> witness;
};

PermVerdict is_permutation(const Field& field, const Poly& f);
/// Evaluation-table form; witness is the first collision in index order.
PermVerdict is_permutation_table(std::span<const Elem> table);

inline constexpr std::uint32_t kDefaultHermiteCap = 64;

/// f^{q-1} reduces to a monic polynomial of degree q - 1, and f^t reduces to
/// degree <= q - 2 for 1 <= t <= q - 2 with p not dividing t.
bool hermite_test(const Field& field, const Poly& f, std::uint32_t cap = kDefaultHermiteCap);

/// Unique polynomial of degree <= q - 1 with the given value table
/// (values[i] is the image of Elem{i}).
Poly interpolate(const Field& field, std::span<const Elem> values);

/// Inverts the evaluation permutation and interpolates over all q points.
Poly compositional_inverse(const Field& field, const Poly& f);

/// Scales and shifts a PP to its representative: (f - f(0)) / leading.
Poly normalize_to_ppr(const Field& field, const Poly& f);

/// base + sum c_j directions[j] for all (c_j) in F_q^k. A subspace is the
/// case base = 0 with its RREF basis as directions.
struct AffineFamily {
  Poly base;
  std::vector<Poly> directions;
};

AffineFamily family_of(const Subspace& s);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::size_t kDefaultListThreshold = 10'000;

struct EnumOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  std::size_t list_threshold = kDefaultListThreshold;
  /// Count PPRs (monic, f(0) = 0) rather than all PPs.
  bool require_ppr = true;
};

struct EnumReport {
  std::uint64_t searched = 0;
  std::uint64_t ppr_count = 0;
  /// V[x] coordinates of every hit, sorted lexicographically; emitted only
  /// when ppr_count <= list_threshold.
  std::vector<Coords> ppr_list;
  bool list_emitted = true;
  bool budget_exhausted = false;

  friend bool operator==(const EnumReport&, const EnumReport&) = default;
};

/// Number of candidates, saturating at UINT64_MAX.
std::uint64_t family_size(const Field& field, const AffineFamily& family);

/// Exhaustive scan of the family. Throws BudgetExceeded when the family has
/// more than options.budget members; nothing is truncated silently.
EnumReport enumerate_pprs(const Field& field, const AffineFamily& family, const EnumOptions& options = {});
EnumReport enumerate_pprs(const Field& field, const Subspace& domain, const EnumOptions& options = {});

inline constexpr std::uint32_t kDefaultDegreeCap = 11;

struct DegreeCensus {
  /// degree -> number of PPRs, for every degree 1..p-2.
  std::map<unsigned, std::uint64_t> by_degree;
  std::uint64_t total = 0;
  std::uint64_t searched = 0;
  /// PPRs whose first kernel stage differs from their degree.
  std::vector<Poly> stage_mismatches;
};

/// Census of all monic f in V[x] over a prime field, with the kernel-stage
/// check against ker (A_1 - I)^d.
DegreeCensus degree_distribution(const Field& field, const EnumOptions& options = {},
                                 std::uint32_t p_cap = kDefaultDegreeCap);

}  // namespace ppclass
