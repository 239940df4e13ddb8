#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mcg/verify.hpp"

namespace mcg {

enum class ReportFormat { kText, kJson, kCsv };

std::optional<ReportFormat> parse_report_format(std::string_view name);
std::string_view report_format_extension(ReportFormat f);

/// text: human summary; json: complete, schema-versioned; csv: one row per
/// in-universe graph (index, graph6, holds, detail).
std::string emit_report(const VerificationReport& r, ReportFormat format);

/// Inverse of the json emitter. Throws std::runtime_error on schema
/// mismatch or malformed input.
VerificationReport report_from_json(std::string_view text);

}  // namespace mcg
