#pragma once

#include <iosfwd>
#include <string>

#include "gegen/asymptotics.hpp"

namespace gegen::cli {

enum class Format { csv, json };

/// Writes a report as CSV (header "n,sup_norm,normalized_ratio,argmax_t"
/// plus one row per record) or as a JSON object. Numbers use the shortest
/// decimal form that round-trips; lines end in LF. A report without records
/// is rejected with gegen::domain_error before anything is written.
void emit_report(const AsymptoticReport& report, Format format, std::ostream& out);

/// Shortest round-trip decimal for a double ("nan", "inf" for non-finite).
std::string format_shortest(double value);

}  // namespace gegen::cli
