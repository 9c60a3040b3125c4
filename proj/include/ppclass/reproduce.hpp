#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "ppclass/gf.hpp"
#include "ppclass/pp.hpp"
#include "ppclass/report.hpp"

namespace ppclass {

struct ReproduceConfig {
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  /// Random polynomials per field for the Hermite comparison when the
  /// exhaustive run is out of reach. Fields with q > 27 use a tenth.
  std::size_t hermite_samples = 10'000;
};

struct ClaimSpec {
  std::string_view id;
  std::string_view group;
  std::string_view summary;
};

/// Every claim the driver can emit. Ids are unique.
const std::vector<ClaimSpec>& claim_inventory();

/// (p, n) pairs run by default: F_4, F_5, F_7, F_8, F_9, F_25, F_27, F_49.
std::vector<std::pair<std::uint32_t, std::uint32_t>> default_roster();

// Claim groups. Each returns only the claims that apply to the field.
std::vector<ClaimReport> check_shift_operator(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> check_kernel_chain(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> check_predicted_bases(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> check_intersections(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> check_enumeration(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> check_hermite(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> check_prime_field(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> check_fp2_conditioned(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> check_fp2_full_shape(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> check_fp2_identities(const Field& field, const ReproduceConfig& config);

std::vector<ClaimReport> reproduce_field(const Field& field, const ReproduceConfig& config);
std::vector<ClaimReport> reproduce_all(const ReproduceConfig& config,
                                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& roster);

}  // namespace ppclass
