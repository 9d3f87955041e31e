#include "diffcast/io/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "diffcast/io/digest.hpp"

namespace diffcast::io {

const char* tool_version() noexcept { return DIFFCAST_VERSION; }

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json to_json(const RunManifest& manifest) {
  Json j;
  j["command"] = manifest.command;
  j["config"] = manifest.config;
  j["input_digest"] = manifest.input_digest;
  j["seed"] = manifest.seed;
  j["tool_version"] = manifest.tool_version;
  return j;
}

Json to_json(const IdentificationConfig& config) {
  Json j;
  j["order"] = config.order;
  j["window"] = config.window;
  j["rank_tolerance"] = config.rank_tolerance;
  return j;
}

Json to_json(const SmootherConfig& config) {
  Json j;
  j["window"] = config.window;
  j["degree"] = config.degree;
  return j;
}

Json to_json(const ForecastConfig& config) {
  Json j;
  j["horizon"] = config.horizon;
  j["ma_window"] = config.ma_window;
  j["interval_multipliers"] = config.interval_multipliers;
  j["zero_tolerance"] = config.zero_tolerance;
  return j;
}

Json to_json(const BacktestConfig& config) {
  Json j;
  j["identification"] = to_json(config.ident);
  j["smoother"] = to_json(config.smoother);
  j["forecast"] = to_json(config.fc);
  j["ma_windows"] = config.ma_windows;
  j["start"] = config.start ? Json(*config.start) : Json(nullptr);
  j["stride"] = config.stride;
  return j;
}

Json to_json(const algebra::WronskianCertificate& certificate) {
  Json j;
  j["kind"] = algebra::to_string(certificate.kind);
  j["claimed_order"] = certificate.claimed_order;
  j["matrix_order"] = certificate.matrix_order;
  j["rank"] = certificate.rank;
  j["expected_rank"] = certificate.expected_rank();
  j["identifiable"] = certificate.identifiable;
  j["evaluation_point"] = algebra::to_string(certificate.evaluation_point);
  j["evaluations"] = certificate.evaluations;
  return j;
}

Json to_json(const DifferenceEquationModel<double>& model) {
  Json j;
  j["window_origin"] = model.window_origin;
  Json coefficients = Json::array();
  for (Eigen::Index i = 0; i < model.coefficients.size(); ++i) coefficients.push_back(number(model.coefficients(i)));
  j["coefficients"] = std::move(coefficients);
  j["condition_number"] = number(model.condition_number);
  j["rank"] = model.rank;
  return j;
}

Json to_json(const CoverageScore& score) {
  Json j;
  j["multiplier"] = score.multiplier;
  j["nominal"] = score.nominal;
  j["empirical"] = number(score.empirical);
  j["inside"] = score.inside;
  return j;
}

namespace {

void attach_label(Json& j, const char* key, const TimeSeries& series, TimeIndex t) {
  if (series.has_labels() && series.contains(t)) j[key] = series.label_at(t);
}

}  // namespace

Json to_json(const ForecastRecord& record, const TimeSeries& series) {
  Json j;
  j["origin"] = record.origin;
  attach_label(j, "origin_label", series, record.origin);
  j["target"] = record.target;
  attach_label(j, "target_label", series, record.target);
  j["trendline_forecast"] = number(record.trendline_forecast);
  j["ma_forecast"] = number(record.ma_forecast);
  j["mstd_forecast"] = number(record.mstd_forecast);
  j["indicator"] = to_string(record.indicator);
  Json intervals = Json::array();
  for (const auto& interval : record.intervals) {
    Json i;
    i["multiplier"] = interval.multiplier;
    i["lower"] = number(interval.lower);
    i["upper"] = number(interval.upper);
    intervals.push_back(std::move(i));
  }
  j["intervals"] = std::move(intervals);
  return j;
}

Json to_json(const BacktestReport& report, const TimeSeries& series, Eigen::Index record_window) {
  Json j;
  j["horizon"] = report.horizon;
  j["n_forecasts"] = report.n_forecasts;
  if (!report.origins.empty()) {
    j["first_origin"] = report.origins.front();
    j["last_origin"] = report.origins.back();
  }
  j["rmse_trendline"] = number(report.rmse_trendline);
  j["coverage_window"] = report.coverage_window;
  Json coverage = Json::array();
  for (const auto& c : report.per_k_coverage) coverage.push_back(to_json(c));
  j["coverage"] = std::move(coverage);

  Json windows = Json::array();
  for (const auto& w : report.windows) {
    Json wj;
    wj["ma_window"] = w.ma_window;
    wj["hits"] = w.hits;
    wj["misses"] = w.misses;
    wj["hit_rate"] = number(w.hit_rate);
    Json wc = Json::array();
    for (const auto& c : w.coverage) wc.push_back(to_json(c));
    wj["coverage"] = std::move(wc);
    if (w.ma_window == record_window) {
      Json records = Json::array();
      for (std::size_t i = 0; i < w.records.size(); ++i) {
        Json r = to_json(w.records[i], series);
        r["realized"] = number(report.realized[i]);
        r["realized_trendline"] = number(report.realized_trendline[i]);
        records.push_back(std::move(r));
      }
      wj["records"] = std::move(records);
    }
    windows.push_back(std::move(wj));
  }
  j["windows"] = std::move(windows);
  return j;
}

Json report_document(const RunManifest& manifest, const Json& body) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["manifest"] = to_json(manifest);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

std::string render_json(const Json& document) { return document.dump(2) + "\n"; }

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

CsvWriter::CsvWriter(const RunManifest& manifest) {
  text_ = "# manifest: " + to_json(manifest).dump() + "\n";
}

CsvWriter& CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) text_ += ',';
    text_ += csv_field(fields[i]);
  }
  text_ += "\n";
  return *this;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("cannot write '" + path + "'");
}

}  // namespace diffcast::io
