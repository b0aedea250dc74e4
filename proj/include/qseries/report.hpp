#pragma once

#include <string>

#include "qseries/harness.hpp"

namespace qseries {

enum class ReportFormat { Json, Csv, Text };

/// Parses "json", "csv" or "text".
ReportFormat parse_format(const std::string& name);

std::string emit_report(const SuiteReport& report, ReportFormat format);

/// Registry catalog: id, kind, parameters, constraints and citation per entry.
std::string catalog(const Registry& reg, ReportFormat format);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace qseries
