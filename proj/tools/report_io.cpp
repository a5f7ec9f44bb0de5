#include "report_io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

#include <json.hpp>

#include "gegen/errors.hpp"

namespace gegen::cli {

namespace {

using Json = nlohmann::ordered_json;

Json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

Json params_to_json(const FamilyParams& params) {
  return std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        Json j;
        if constexpr (std::is_same_v<T, GegenParams>) {
          j["family"] = "gengeg-orthonormal";
          j["lambda"] = p.lambda();
          j["mu"] = p.mu();
        } else {
          j["family"] = "jacobi";
          j["alpha"] = p.alpha();
          j["beta"] = p.beta();
        }
        return j;
      },
      params);
}

Json report_to_json(const AsymptoticReport& report) {
  Json j;
  j["params"] = params_to_json(report.params);
  j["target_exponent"] = number(report.target_exponent);
  j["fitted_exponent"] = number(report.fitted_exponent);
  j["ratio_min"] = number(report.ratio_min);
  j["ratio_max"] = number(report.ratio_max);
  j["tolerance_used"] = number(report.tolerance_used);
  j["verdict"] = to_string(report.verdict);
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json row;
    row["n"] = r.n;
    row["sup_norm"] = number(r.sup_norm);
    row["normalized_ratio"] = number(r.normalized_ratio);
    row["argmax_t"] = number(r.argmax_t);
    records.push_back(std::move(row));
  }
  j["records"] = std::move(records);
  j["label"] = report.label;
  if (report.slope_tolerance > 0.0) j["slope_tolerance"] = report.slope_tolerance;
  j["applicable"] = report.applicable;
  if (!report.note.empty()) j["note"] = report.note;
  if (!report.parts.empty()) {
    Json parts = Json::array();
    for (const auto& part : report.parts) parts.push_back(report_to_json(part));
    j["parts"] = std::move(parts);
  }
  return j;
}

}  // namespace

std::string format_shortest(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (result.ec != std::errc{}) return "nan";
  return std::string(buffer, result.ptr);
}

void emit_report(const AsymptoticReport& report, Format format, std::ostream& out) {
  if (report.records.empty()) {
    throw domain_error("refusing to emit report '" + report.label + "' without records");
  }
  if (format == Format::csv) {
    std::string text = "n,sup_norm,normalized_ratio,argmax_t\n";
    for (const auto& r : report.records) {
      text += std::to_string(r.n);
      text += ',';
      text += format_shortest(r.sup_norm);
      text += ',';
      text += format_shortest(r.normalized_ratio);
      text += ',';
      text += format_shortest(r.argmax_t);
      text += '\n';
    }
    out << text;
  } else {
    out << report_to_json(report).dump(2) << '\n';
  }
}

}  // namespace gegen::cli
