#include "urnlab/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>
#include <unistd.h>

#include "urnlab/errors.hpp"

namespace urnlab::harness {

using nlohmann::json;

namespace {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

std::string json_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string("null");
}

void check_finite(double v, const ReportRow& row, const char* field) {
  if (!std::isfinite(v))
    throw numeric_integrity_error("report row '" + row.suite + "/" + row.label +
                                  "' has a non-finite " + field);
}

std::optional<double> optional_number(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

}  // namespace

void validate_row(const ReportRow& row) {
  for (const std::string* text : {&row.suite, &row.label})
    if (text->find_first_of(",\"\n\r") != std::string::npos)
      throw std::invalid_argument("report text field '" + *text +
                                  "' contains a CSV delimiter");
  check_finite(row.value, row, "value");
  check_finite(row.tolerance, row, "tolerance");
  if (row.theta) check_finite(*row.theta, row, "theta");
  if (row.t) check_finite(*row.t, row, "t");
  if (row.limit) check_finite(*row.limit, row, "limit");
  if (row.gap) check_finite(*row.gap, row, "gap");
}

std::string to_csv(std::span<const ReportRow> rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    validate_row(r);
    out += r.suite + ',' + r.label + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) +
           ',' + format_optional(r.theta) + ',' + format_optional(r.t) + ',' +
           format_number(r.value) + ',' + format_optional(r.limit) + ',' +
           format_optional(r.gap) + ',' + format_number(r.tolerance) + ',' +
           (r.passed ? "true" : "false") + ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

std::string to_json_text(std::span<const ReportRow> rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    validate_row(r);
    out += i == 0 ? "\n" : ",\n";
    out += "  {\"suite\": " + json(r.suite).dump() + ", \"label\": " + json(r.label).dump() +
           ", \"n\": " + std::to_string(r.n) + ", \"k\": " + std::to_string(r.k) +
           ", \"theta\": " + json_optional(r.theta) + ", \"t\": " + json_optional(r.t) +
           ", \"value\": " + format_number(r.value) + ", \"limit\": " + json_optional(r.limit) +
           ", \"gap\": " + json_optional(r.gap) +
           ", \"tolerance\": " + format_number(r.tolerance) +
           ", \"passed\": " + (r.passed ? "true" : "false") +
           ", \"seed\": " + std::to_string(r.seed) + "}";
  }
  out += rows.empty() ? "]\n" : "\n]\n";
  return out;
}

std::vector<ReportRow> parse_json_report(std::string_view text) {
  const json doc = json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("report JSON must be an array");
  std::vector<ReportRow> rows;
  for (const auto& j : doc) {
    ReportRow r;
    r.suite = j.at("suite").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.n = j.at("n").get<std::int64_t>();
    r.k = j.at("k").get<std::int64_t>();
    r.theta = optional_number(j, "theta");
    r.t = optional_number(j, "t");
    r.value = j.at("value").get<double>();
    r.limit = optional_number(j, "limit");
    r.gap = optional_number(j, "gap");
    r.tolerance = j.at("tolerance").get<double>();
    r.passed = j.at("passed").get<bool>();
    r.seed = j.at("seed").get<std::uint64_t>();
    rows.push_back(std::move(r));
  }
  return rows;
}

void canonical_sort(std::vector<ReportRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    if (a.n != b.n) return a.n < b.n;
    if (a.theta.has_value() != b.theta.has_value()) return !a.theta.has_value();
    return a.theta && *a.theta < *b.theta;
  });
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string() + ": cannot create temporary file");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("cannot write " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot write " + path.string() + ": " + ec.message());
  }
}

void emit_report(std::span<const ReportRow> rows, Format format,
                 const std::filesystem::path& path) {
  write_atomic(path, format == Format::csv ? to_csv(rows) : to_json_text(rows));
}

int exit_status(std::span<const ReportRow> rows) noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.passed; })
             ? 0
             : 1;
}

}  // namespace urnlab::harness
