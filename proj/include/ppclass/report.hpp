#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ppclass {

enum class ClaimStatus { Verified, Refuted, Measured, Skipped };

std::string_view to_string(ClaimStatus status);

struct ClaimReport {
  std::string claim_id;
  std::string group;
  /// e.g. "F_25"
  std::string field;
  ClaimStatus status = ClaimStatus::Skipped;
  /// Absent for measured claims.
  std::optional<std::string> expected;
  std::string observed;
  /// Counterexample for refuted claims, skip reason, or a remark.
  std::string note;
  double runtime_ms = 0.0;
};

enum class ReportFormat { Json, Csv, Markdown };

/// Stable field order. Runtimes are left out unless requested, which keeps
/// output byte-identical across runs.
std::string emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, bool include_runtime = false);

}  // namespace ppclass
