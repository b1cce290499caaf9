#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "urnlab/harness/config.hpp"

namespace urnlab::harness {

/// One line of a report. Rows that do not belong to a (n, theta) grid point
/// leave theta, t, limit and gap empty; pure limit-law checks use n = k = 0.
struct ReportRow {
  std::string suite;
  std::string label;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::optional<double> theta;
  std::optional<double> t;
  double value = 0.0;
  std::optional<double> limit;
  std::optional<double> gap;
  double tolerance = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;

  bool operator==(const ReportRow&) const = default;
};

inline constexpr std::string_view kCsvHeader =
    "suite,label,n,k,theta,t,value,limit,gap,tolerance,passed,seed";

/// Throws numeric_integrity_error for any non-finite number and
/// std::invalid_argument for text fields that would break the CSV layout.
void validate_row(const ReportRow& row);

std::string to_csv(std::span<const ReportRow> rows);
std::string to_json_text(std::span<const ReportRow> rows);
std::vector<ReportRow> parse_json_report(std::string_view text);

/// Stable sort by (suite, n, theta); rows without theta come first.
void canonical_sort(std::vector<ReportRow>& rows);

/// Writes through a sibling temporary file and a rename, so a failed write
/// leaves no partial file. Throws IoError naming the path.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

void emit_report(std::span<const ReportRow> rows, Format format,
                 const std::filesystem::path& path);

/// 0 when every row passed, 1 otherwise.
int exit_status(std::span<const ReportRow> rows) noexcept;

}  // namespace urnlab::harness
