#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kpos/tolerance.hpp"

namespace kpos {

enum class Status { holds, equality, violated_candidate, inapplicable };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// Which sampled trial produced a report.
struct Provenance {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

/// One verified statement on one input.
///
/// margin = (lhs - rhs) / scale. With eps = tolerance_level:
/// holds <=> margin > eps, equality <=> |margin| <= eps,
/// violated_candidate <=> margin < -eps.
struct InequalityReport {
  std::string statement;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> p;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  Status status = Status::inapplicable;
  double tolerance_level = 0;
  std::vector<std::pair<std::string, double>> witness;
  std::string note;
  std::optional<Provenance> provenance;

  std::optional<double> witness_value(std::string_view key) const;
  InequalityReport& with(std::string key, double value) {
    witness.emplace_back(std::move(key), value);
    return *this;
  }
};

Status classify(double margin, double eps);

/// lhs >= rhs, normalized by `scale` (floored at tol.abs).
InequalityReport make_report(std::string statement, std::size_t n, std::size_t k, double lhs,
                             double rhs, double scale, const Tolerance& tol);

/// lhs == rhs: margin = -|lhs - rhs| / scale, so the status is equality or
/// violated_candidate.
InequalityReport make_identity_report(std::string statement, std::size_t n, std::size_t k,
                                      double lhs, double rhs, double scale, double eps);

InequalityReport make_inapplicable(std::string statement, std::size_t n, std::size_t k,
                                   std::string reason);

/// Human-readable title of a statement tag ("hadamard_type", ...).
std::string_view statement_title(std::string_view statement);

inline constexpr int kFormatVersion = 1;

nlohmann::json report_to_json(const InequalityReport& r);
InequalityReport report_from_json(const nlohmann::json& j);

/// CSV: header line without trailing newline, and one row per report.
std::string report_csv_header();
std::string report_to_csv(const InequalityReport& r);

std::string report_to_human(const InequalityReport& r);

}  // namespace kpos
