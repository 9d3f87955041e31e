// Command-line front end: ingestion, forecasting, backtests, certificates and plots.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "diffcast/algebra/generating_function.hpp"
#include "diffcast/algebra/wronskian.hpp"
#include "diffcast/backtest/backtest.hpp"
#include "diffcast/backtest/synthetic.hpp"
#include "diffcast/io/digest.hpp"
#include "diffcast/io/fetch.hpp"
#include "diffcast/io/ingest.hpp"
#include "diffcast/io/report.hpp"
#include "diffcast/io/svg.hpp"

namespace {

using namespace diffcast;
using io::Json;
using algebra::Rational;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
  std::string path;
  std::string url;
  std::string date_column = "0";
  std::string value_column = "1";
  std::size_t skip_rows = 0;
  bool reverse = false;
  std::string decimal = ".";
  std::string delimiter;
  std::string header = "auto";
  bool drop_invalid = false;
  std::string cache_dir;

  void attach(CLI::App* cmd) {
    auto* in = cmd->add_option("--input,-i", path, "Delimited input file (date, value columns)");
    auto* u = cmd->add_option("--url", url, "Fetch the input through the local cache instead");
    in->excludes(u);
    cmd->add_option("--date-column", date_column, "Date column: zero-based index or header name")->capture_default_str();
    cmd->add_option("--value-column", value_column, "Value column: zero-based index or header name")
        ->capture_default_str();
    cmd->add_option("--skip-rows", skip_rows, "Lines to skip before the header");
    cmd->add_flag("--reverse", reverse, "Rows are newest-first");
    cmd->add_option("--decimal", decimal, "Decimal separator")->check(CLI::IsMember({".", ","}))->capture_default_str();
    cmd->add_option("--delimiter", delimiter, "Field delimiter: ',', ';' or 'tab' (autodetected by default)")
        ->check(CLI::IsMember({",", ";", "tab"}));
    cmd->add_option("--header", header, "Header row present")->check(CLI::IsMember({"auto", "yes", "no"}))
        ->capture_default_str();
    cmd->add_flag("--drop-invalid", drop_invalid, "Skip rows with missing or non-numeric values (still reported)");
    cmd->add_option("--cache-dir", cache_dir, "Fetch cache directory (default: $DIFFCAST_CACHE or ~/.cache)");
  }

  static io::ColumnRef column(const std::string& text) {
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
      return static_cast<std::size_t>(std::stoull(text));
    }
    return text;
  }

  io::IngestSpec spec() const {
    io::IngestSpec s;
    s.path = path;
    s.url = url;
    s.date_column = column(date_column);
    s.value_column = column(value_column);
    s.skip_rows = skip_rows;
    s.reverse = reverse;
    s.decimal_separator = decimal.front();
    if (delimiter == "tab") {
      s.delimiter = '\t';
    } else if (!delimiter.empty()) {
      s.delimiter = delimiter.front();
    }
    if (header != "auto") s.header = header == "yes";
    s.drop_invalid = drop_invalid;
    s.cache_dir = cache_dir;
    s.validate();
    return s;
  }

  Json to_json() const {
    Json j;
    j["path"] = path;
    j["url"] = url;
    j["date_column"] = date_column;
    j["value_column"] = value_column;
    j["skip_rows"] = skip_rows;
    j["reverse"] = reverse;
    j["decimal_separator"] = decimal;
    j["delimiter"] = delimiter.empty() ? "auto" : delimiter;
    j["header"] = header;
    j["drop_invalid"] = drop_invalid;
    return j;
  }
};

struct ModelOptions {
  IdentificationConfig ident;
  SmootherConfig smoother;

  void attach(CLI::App* cmd) {
    cmd->add_option("--order,-n", ident.order, "Difference equation order")->capture_default_str();
    cmd->add_option("--L", ident.window, "Identification window length")->capture_default_str();
    cmd->add_option("--W", smoother.window, "Smoother window length")->capture_default_str();
    cmd->add_option("--d", smoother.degree, "Smoother polynomial degree")->capture_default_str();
    cmd->add_option("--rank-tolerance", ident.rank_tolerance, "Relative singular value cutoff")
        ->capture_default_str();
  }
};

io::IngestResult load(const InputOptions& input) {
  auto result = io::ingest(input.spec());
  for (const auto& d : result.diagnostics) std::cerr << "dropped " << d << "\n";
  return result;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts, const char* what) {
  std::vector<Rational> out;
  for (const auto& t : texts) {
    try {
      out.push_back(algebra::parse_rational(t));
    } catch (const Error& e) {
      throw ConfigError(std::string("invalid ") + what + " '" + t + "': " + e.what());
    }
  }
  return out;
}

std::string output_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void emit(const std::string& path, const std::string& content) {
  io::write_file(path, content);
  std::cout << path << "\n";
}

std::function<std::string(double)> label_ticks(const TimeSeries& series) {
  return [&series](double x) {
    const auto t = static_cast<TimeIndex>(std::llround(x));
    if (series.has_labels() && series.contains(t)) return series.label_at(t);
    return std::to_string(t);
  };
}

std::vector<double> index_axis(TimeIndex from, Eigen::Index count) {
  std::vector<double> xs(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) xs[static_cast<std::size_t>(i)] = static_cast<double>(from + i);
  return xs;
}

std::vector<double> to_std(const Vector<double>& v) { return {v.data(), v.data() + v.size()}; }

// forecast -----------------------------------------------------------------

struct ForecastCommand {
  InputOptions input;
  ModelOptions model;
  ForecastConfig fc;
  std::string origin;
  std::string out_dir = ".";

  void attach(CLI::App* cmd) {
    input.attach(cmd);
    model.attach(cmd);
    cmd->add_option("--horizon,-H", fc.horizon, "Forecast horizon in samples")->capture_default_str();
    cmd->add_option("--ma-window,-N", fc.ma_window, "Moving average window")->capture_default_str();
    cmd->add_option("--multipliers", fc.interval_multipliers, "Interval half-widths in moving std units")
        ->delimiter(',');
    cmd->add_option("--origin", origin, "Single origin (date label or index); default: every feasible origin");
    cmd->add_option("--out-dir,-o", out_dir, "Directory for forecast.json and forecast.svg")->capture_default_str();
  }

  int run() {
    model.ident.validate();
    model.smoother.validate();
    fc.validate();
    const auto ingested = load(input);
    const auto& series = ingested.series;

    io::RunManifest manifest{"forecast", Json::object(), io::series_digest(series), 0, io::tool_version()};
    manifest.config["input"] = input.to_json();
    manifest.config["identification"] = io::to_json(model.ident);
    manifest.config["smoother"] = io::to_json(model.smoother);
    manifest.config["forecast"] = io::to_json(fc);
    manifest.config["origin"] = origin;

    const ForecastEngine engine(series, model.ident, model.smoother, fc);
    std::vector<TimeIndex> origins;
    if (origin.empty()) {
      for (TimeIndex t = engine.earliest_origin(); t <= engine.last_origin(); ++t) origins.push_back(t);
    } else {
      origins.push_back(resolve_origin(series, origin));
    }

    std::vector<ForecastRecord> records;
    records.reserve(origins.size());
    for (const TimeIndex t : origins) records.push_back(engine.forecast_at(t));

    Json body;
    Json list = Json::array();
    for (const auto& r : records) list.push_back(io::to_json(r, series));
    body["records"] = std::move(list);
    const auto document = io::report_document(manifest, body);
    emit(output_path(out_dir, "forecast.json"), io::render_json(document));

    io::SvgChart chart("Exchange rates, filtered signal and forecast (h=" + std::to_string(fc.horizon) + ")");
    chart.x_axis("date", label_ticks(series)).y_axis("value");
    chart.add(io::LineSeries{index_axis(series.start_index(), series.size()), to_std(series.values()), "#1f4e9c",
                             false, 1.0, "realized"});
    chart.add(io::LineSeries{index_axis(engine.trendline().start_index(), engine.trendline().size()),
                             to_std(engine.trendline().values()), "#000000", true, 1.2, "filtered signal"});
    io::LineSeries forecast_line{{}, {}, "#d02020", false, 1.2, "forecasted signal"};
    for (const auto& r : records) {
      forecast_line.x.push_back(static_cast<double>(r.target));
      forecast_line.y.push_back(r.trendline_forecast);
    }
    chart.add(std::move(forecast_line));
    emit(output_path(out_dir, "forecast.svg"), chart.render(io::to_json(manifest).dump()));
    return 0;
  }

  static TimeIndex resolve_origin(const TimeSeries& series, const std::string& text) {
    if (series.has_labels()) {
      const auto& labels = series.labels();
      const auto it = std::find(labels.begin(), labels.end(), text);
      if (it != labels.end()) return series.start_index() + (it - labels.begin());
    }
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
      return static_cast<TimeIndex>(std::stoll(text));
    }
    throw RangeError("origin '" + text + "' is neither a date label nor an index of the input");
  }
};

// coeffs -------------------------------------------------------------------

struct CoeffsCommand {
  InputOptions input;
  ModelOptions model;
  std::string out_dir = ".";

  void attach(CLI::App* cmd) {
    input.attach(cmd);
    model.attach(cmd);
    cmd->add_option("--out-dir,-o", out_dir, "Directory for coeffs.csv and coeffs.svg")->capture_default_str();
  }

  int run() {
    model.ident.validate();
    model.smoother.validate();
    const auto ingested = load(input);
    const auto& series = ingested.series;

    io::RunManifest manifest{"coeffs", Json::object(), io::series_digest(series), 0, io::tool_version()};
    manifest.config["input"] = input.to_json();
    manifest.config["identification"] = io::to_json(model.ident);
    manifest.config["smoother"] = io::to_json(model.smoother);

    const auto models = rolling_identify(series, model.ident, model.smoother);
    const auto n = model.ident.order;

    io::CsvWriter csv(manifest);
    std::vector<std::string> header{"window_start", "window_end", "date"};
    for (Eigen::Index i = 1; i <= n; ++i) header.push_back("a_" + std::to_string(i));
    header.insert(header.end(), {"condition_number", "rank"});
    csv.row(header);
    std::vector<io::LineSeries> lines(static_cast<std::size_t>(n));
    static const char* palette[] = {"#1f4e9c", "#d02020", "#208a3c", "#8a3cc4", "#c47a1f", "#1fa3a3"};
    for (Eigen::Index i = 0; i < n; ++i) {
      auto& l = lines[static_cast<std::size_t>(i)];
      l.color = palette[i % 6];
      l.label = "a_" + std::to_string(i + 1);
    }
    for (const auto& m : models) {
      const TimeIndex end = m.window_origin + model.ident.window - 1;
      std::vector<std::string> row{std::to_string(m.window_origin), std::to_string(end),
                                   series.has_labels() ? series.label_at(end) : ""};
      for (Eigen::Index i = 0; i < n; ++i) {
        row.push_back(io::format_double(m.coefficients(i)));
        lines[static_cast<std::size_t>(i)].x.push_back(static_cast<double>(end));
        lines[static_cast<std::size_t>(i)].y.push_back(m.coefficients(i));
      }
      row.push_back(io::format_double(m.condition_number));
      row.push_back(std::to_string(m.rank));
      csv.row(row);
    }
    emit(output_path(out_dir, "coeffs.csv"), csv.str());

    io::SvgChart chart("Parameter estimations (n=" + std::to_string(n) + ", L=" +
                       std::to_string(model.ident.window) + ")");
    chart.x_axis("window end", label_ticks(series)).y_axis("coefficient");
    for (auto& l : lines) chart.add(std::move(l));
    emit(output_path(out_dir, "coeffs.svg"), chart.render(io::to_json(manifest).dump()));
    return 0;
  }
};

// backtest -----------------------------------------------------------------

struct BacktestCommand {
  InputOptions input;
  ModelOptions model;
  BacktestConfig config;
  std::vector<Eigen::Index> horizons{5, 10};
  std::optional<TimeIndex> start;
  std::string out_dir = ".";

  void attach(CLI::App* cmd) {
    input.attach(cmd);
    model.attach(cmd);
    cmd->add_option("--horizons", horizons, "Forecast horizons")->delimiter(',')->capture_default_str();
    cmd->add_option("--ma-windows", config.ma_windows, "Moving average windows")->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--ma-window,-N", config.fc.ma_window, "Window whose interval coverage is reported")
        ->capture_default_str();
    cmd->add_option("--multipliers", config.fc.interval_multipliers, "Interval half-widths in moving std units")
        ->delimiter(',');
    cmd->add_option("--stride", config.stride, "Spacing between forecast origins")->capture_default_str();
    cmd->add_option("--start", start, "First candidate origin index");
    cmd->add_option("--out-dir,-o", out_dir, "Directory for backtest reports and plots")->capture_default_str();
  }

  int run() {
    config.ident = model.ident;
    config.smoother = model.smoother;
    config.start = start;
    if (horizons.empty()) throw ConfigError("at least one horizon is required");
    for (const auto h : horizons) {
      if (h < 1) throw ConfigError("horizon must be >= 1, got " + std::to_string(h));
    }
    config.fc.horizon = horizons.front();
    config.validate();
    const auto ingested = load(input);
    const auto& series = ingested.series;

    io::RunManifest manifest{"backtest", Json::object(), io::series_digest(series), 0, io::tool_version()};
    manifest.config["input"] = input.to_json();
    manifest.config["backtest"] = io::to_json(config);
    manifest.config["horizons"] = horizons;

    const auto reports = sweep_report(series, config, horizons);

    io::CsvWriter hits(manifest);
    std::vector<std::string> header{"ma_window"};
    for (const auto& r : reports) header.push_back("hit_rate_h" + std::to_string(r.horizon));
    for (const auto& r : reports) header.push_back("n_forecasts_h" + std::to_string(r.horizon));
    hits.row(header);
    for (const auto n : config.ma_windows) {
      std::vector<std::string> row{std::to_string(n)};
      for (const auto& r : reports) row.push_back(io::format_double(r.window(n).hit_rate));
      for (const auto& r : reports) row.push_back(std::to_string(r.window(n).hits + r.window(n).misses));
      hits.row(row);
    }
    emit(output_path(out_dir, "backtest_hit_rates.csv"), hits.str());

    io::CsvWriter coverage(manifest);
    std::vector<std::string> cov_header{"multiplier", "nominal"};
    for (const auto& r : reports) cov_header.push_back("empirical_h" + std::to_string(r.horizon));
    coverage.row(cov_header);
    for (std::size_t k = 0; k < config.fc.interval_multipliers.size(); ++k) {
      const auto& first = reports.front().per_k_coverage[k];
      std::vector<std::string> row{io::format_double(first.multiplier), io::format_double(first.nominal)};
      for (const auto& r : reports) row.push_back(io::format_double(r.per_k_coverage[k].empirical));
      coverage.row(row);
    }
    emit(output_path(out_dir, "backtest_coverage.csv"), coverage.str());

    Json body;
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(io::to_json(r, series, config.fc.ma_window));
    body["reports"] = std::move(list);
    emit(output_path(out_dir, "backtest.json"), io::render_json(io::report_document(manifest, body)));

    const auto& report = reports.front();
    const auto& scored = report.window(config.fc.ma_window);
    const std::string tag = "h=" + std::to_string(report.horizon) + ", N=" + std::to_string(config.fc.ma_window);

    io::SvgChart indicator("Position indicator (" + tag + "), ∇: above, △: under");
    indicator.x_axis("date", label_ticks(series)).y_axis("deviation from trendline");
    io::LineSeries deviation{{}, {}, "#1f4e9c", false, 1.0, "realized deviation"};
    io::MarkerSeries above{{}, {}, io::Marker::TriangleDown, "#208a3c", 3.5, "forecast above"};
    io::MarkerSeries under{{}, {}, io::Marker::TriangleUp, "#d02020", 3.5, "forecast under"};
    for (std::size_t i = 0; i < scored.records.size(); ++i) {
      const auto& rec = scored.records[i];
      const auto x = static_cast<double>(rec.target);
      deviation.x.push_back(x);
      deviation.y.push_back(report.realized[i] - report.realized_trendline[i]);
      auto& markers = rec.indicator == Position::Above ? above : under;
      markers.x.push_back(x);
      markers.y.push_back(rec.ma_forecast);
    }
    indicator.add(std::move(deviation)).add(std::move(above)).add(std::move(under));
    emit(output_path(out_dir, "backtest_indicator.svg"), indicator.render(io::to_json(manifest).dump()));

    io::SvgChart bands("Forecast intervals (" + tag + ")");
    bands.x_axis("date", label_ticks(series)).y_axis("value");
    for (std::size_t k = config.fc.interval_multipliers.size(); k-- > 0;) {
      io::BandSeries band;
      band.color = "#d02020";
      band.opacity = 0.12;
      band.label = "center ± " + io::format_double(config.fc.interval_multipliers[k]) + " mstd";
      for (const auto& rec : scored.records) {
        band.x.push_back(static_cast<double>(rec.target));
        band.lower.push_back(rec.intervals[k].lower);
        band.upper.push_back(rec.intervals[k].upper);
      }
      bands.add(std::move(band));
    }
    io::LineSeries realized{{}, {}, "#1f4e9c", false, 1.0, "realized"};
    io::LineSeries center{{}, {}, "#000000", true, 1.0, "forecast center"};
    for (std::size_t i = 0; i < scored.records.size(); ++i) {
      realized.x.push_back(static_cast<double>(scored.records[i].target));
      realized.y.push_back(report.realized[i]);
      center.x.push_back(static_cast<double>(scored.records[i].target));
      center.y.push_back(scored.records[i].center());
    }
    bands.add(std::move(realized)).add(std::move(center));
    emit(output_path(out_dir, "backtest_bands.svg"), bands.render(io::to_json(manifest).dump()));
    return 0;
  }
};

// certify ------------------------------------------------------------------

struct CertifyCommand {
  std::vector<std::string> coeffs;
  std::vector<std::string> initials;
  std::optional<int> claimed_order;
  std::string which = "full";
  algebra::CertificateOptions options;
  std::string output;

  void attach(CLI::App* cmd) {
    cmd->add_option("--coeffs", coeffs, "Recursion coefficients a_1,...,a_n (rationals such as 1/2 or 0.25)")
        ->delimiter(',')
        ->required();
    cmd->add_option("--initials", initials, "Initial values x(0),...,x(n-1)")->delimiter(',')->required();
    cmd->add_option("--claimed-order", claimed_order, "Order to certify (default: number of coefficients)");
    cmd->add_option("--which", which, "Certificate kind")->check(CLI::IsMember({"full", "dynamics", "both"}))
        ->capture_default_str();
    cmd->add_option("--seed", options.seed, "Seed for the random evaluation points")->capture_default_str();
    cmd->add_option("--output", output, "Write the JSON here instead of standard output");
  }

  int run() {
    algebra::Recursion recursion{parse_rationals(coeffs, "coefficient"), parse_rationals(initials, "initial value")};
    if (recursion.coefficients.size() != recursion.initials.size()) {
      throw ConfigError("need exactly one initial value per coefficient (" +
                        std::to_string(recursion.coefficients.size()) + " coefficients, " +
                        std::to_string(recursion.initials.size()) + " initial values)");
    }
    const int order = claimed_order.value_or(static_cast<int>(recursion.order()));
    if (order < 1 || order > algebra::kMaxCertificateOrder) {
      throw ConfigError("claimed order must lie in [1, " + std::to_string(algebra::kMaxCertificateOrder) + "]");
    }
    const auto x = algebra::recursion_to_generating_function(recursion);

    io::RunManifest manifest{"certify", Json::object(), "", options.seed, io::tool_version()};
    manifest.config["coefficients"] = coeffs;
    manifest.config["initials"] = initials;
    manifest.config["claimed_order"] = order;
    manifest.config["which"] = which;
    manifest.config["evaluations"] = options.evaluations;
    manifest.config["max_draws"] = options.max_draws;
    manifest.config["point_bound"] = options.point_bound;
    manifest.input_digest = io::sha256_hex(algebra::to_string(x));

    Json body;
    body["generating_function"] = algebra::to_string(x);
    Json list = Json::array();
    if (which != "dynamics") {
      list.push_back(io::to_json(algebra::wronskian_certificate(x, order, algebra::WronskianKind::Full, options)));
    }
    if (which != "full") {
      list.push_back(
          io::to_json(algebra::wronskian_certificate(x, order, algebra::WronskianKind::Dynamics, options)));
    }
    body["certificates"] = std::move(list);
    const auto text = io::render_json(io::report_document(manifest, body));
    if (output.empty()) {
      std::cout << text;
    } else {
      emit(output, text);
    }
    return 0;
  }
};

// fetch --------------------------------------------------------------------

struct FetchCommand {
  std::string url;
  std::string cache_dir;

  void attach(CLI::App* cmd) {
    cmd->add_option("--url", url, "URL to download")->required();
    cmd->add_option("--cache-dir", cache_dir, "Cache directory (default: $DIFFCAST_CACHE or ~/.cache)");
  }

  int run() {
    const auto path = io::fetch(url, cache_dir.empty() ? io::default_cache_dir() : std::filesystem::path(cache_dir));
    std::cout << path.string() << "\n";
    return 0;
  }
};

// synth --------------------------------------------------------------------

struct SynthCommand {
  std::string kind = "market";
  synthetic::MarketFixture market;
  std::vector<std::string> coeffs;
  std::vector<std::string> initials;
  Eigen::Index length = 2400;
  std::string output;

  void attach(CLI::App* cmd) {
    cmd->add_option("kind", kind, "Fixture kind")->check(CLI::IsMember({"market", "recursion"}))->capture_default_str();
    cmd->add_option("--length", length, "Number of samples")->capture_default_str();
    cmd->add_option("--seed", market.seed, "Noise seed (market)")->capture_default_str();
    cmd->add_option("--sigma", market.sigma, "Noise standard deviation before the change point (market)")
        ->capture_default_str();
    cmd->add_option("--sigma-factor", market.sigma_factor, "Noise multiplier after the change point (market)")
        ->capture_default_str();
    cmd->add_option("--change-point", market.change_point, "Index where the noise level changes (market)");
    cmd->add_option("--coeffs", coeffs, "Recursion coefficients (recursion)")->delimiter(',');
    cmd->add_option("--initials", initials, "Initial values (recursion)")->delimiter(',');
    cmd->add_option("--output", output, "Write the CSV here instead of standard output");
  }

  int run() {
    if (length < 2) throw ConfigError("length must be >= 2");
    TimeSeries series;
    if (kind == "market") {
      market.length = length;
      series = synthetic::market_series(market).series;
    } else {
      const auto a = parse_rationals(coeffs, "coefficient");
      const auto x0 = parse_rationals(initials, "initial value");
      if (a.empty() || a.size() != x0.size()) {
        throw ConfigError("recursion fixture needs matching --coeffs and --initials");
      }
      std::vector<double> ad;
      std::vector<double> xd;
      for (const auto& v : a) ad.push_back(algebra::to_double(v));
      for (const auto& v : x0) xd.push_back(algebra::to_double(v));
      const auto raw = synthetic::recursion_series(ad, xd, length);
      series = TimeSeries(raw.values(), 0, synthetic::daily_labels(length));
    }
    std::string text = "date,value\n";
    for (Eigen::Index i = 0; i < series.size(); ++i) {
      text += series.labels()[static_cast<std::size_t>(i)] + "," + io::format_double(series[i]) + "\n";
    }
    if (output.empty()) {
      std::cout << text;
    } else {
      emit(output, text);
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding-window difference-equation forecasting of daily series"};
  app.set_version_flag("--version", std::string(io::tool_version()));
  app.require_subcommand(1);

  ForecastCommand forecast;
  CoeffsCommand coeffs;
  BacktestCommand backtest;
  CertifyCommand certify;
  FetchCommand fetch;
  SynthCommand synth;
  auto* forecast_cmd = app.add_subcommand("forecast", "Rolling forecasts with moving-average position and bands");
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Rolling difference-equation coefficient estimates");
  auto* backtest_cmd = app.add_subcommand("backtest", "Hit-rate and interval-coverage evaluation");
  auto* certify_cmd = app.add_subcommand("certify", "Exact Wronskian identifiability certificate");
  auto* fetch_cmd = app.add_subcommand("fetch", "Download a file into the local cache");
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic fixture series as CSV");
  forecast.attach(forecast_cmd);
  coeffs.attach(coeffs_cmd);
  backtest.attach(backtest_cmd);
  certify.attach(certify_cmd);
  fetch.attach(fetch_cmd);
  synth.attach(synth_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (forecast_cmd->parsed()) return forecast.run();
    if (coeffs_cmd->parsed()) return coeffs.run();
    if (backtest_cmd->parsed()) return backtest.run();
    if (certify_cmd->parsed()) return certify.run();
    if (fetch_cmd->parsed()) return fetch.run();
    if (synth_cmd->parsed()) return synth.run();
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::FetchError& e) {
    std::cerr << "fetch error (" << io::to_string(e.cause()) << "): " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
