#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffcast/algebra/wronskian.hpp"
#include "diffcast/backtest/backtest.hpp"

namespace diffcast::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Everything needed to reproduce a report: identical manifests give identical bytes.
struct RunManifest {
  std::string command;
  Json config = Json::object();
  std::string input_digest;
  std::uint64_t seed = 0;
  std::string tool_version;
};

const char* tool_version() noexcept;

Json to_json(const RunManifest& manifest);
Json to_json(const IdentificationConfig& config);
Json to_json(const SmootherConfig& config);
Json to_json(const ForecastConfig& config);
Json to_json(const BacktestConfig& config);
Json to_json(const algebra::WronskianCertificate& certificate);
Json to_json(const DifferenceEquationModel<double>& model);
Json to_json(const CoverageScore& score);

/// Labels are attached from `series` when it carries them.
Json to_json(const ForecastRecord& record, const TimeSeries& series);

/// Per-window scores; per-origin records are included for `record_window` only (0 = none).
Json to_json(const BacktestReport& report, const TimeSeries& series, Eigen::Index record_window);

/// Non-finite values become null.
Json number(double v);

/// Top-level document: schema_version, manifest, then `body`'s members in order.
Json report_document(const RunManifest& manifest, const Json& body);

/// Two-space indented JSON followed by a newline.
std::string render_json(const Json& document);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& field);

/// Builds CSV text whose first line is "# manifest: <compact json>".
class CsvWriter {
 public:
  explicit CsvWriter(const RunManifest& manifest);

  CsvWriter& row(const std::vector<std::string>& fields);
  const std::string& str() const noexcept { return text_; }

 private:
  std::string text_;
};

/// Writes bytes exactly, creating parent directories.
void write_file(const std::string& path, const std::string& content);

}  // namespace diffcast::io
