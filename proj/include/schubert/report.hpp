#pragma once

// Report serialization. The JSON form is versioned (kReportSchemaVersion)
// and byte-identical across runs except for the "elapsed_ms" fields.

#include <string>

#include "schubert/verify.hpp"

namespace schubert {

enum class ReportFormat { Json, Csv };

nlohmann::json report_to_json(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);
std::string render_report(const VerificationReport& r, ReportFormat f);

/// One line per suite ("conjB: 36/36 pairs pass") and per meta-check.
std::string report_summary(const VerificationReport& r);

/// Copy of a report JSON with every "elapsed_ms" removed, for comparisons.
nlohmann::json without_timings(nlohmann::json j);

} // namespace schubert
