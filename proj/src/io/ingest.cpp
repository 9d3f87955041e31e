#include "diffcast/io/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "diffcast/io/fetch.hpp"

namespace diffcast::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string summarize(const std::string& what, const std::vector<std::string>& diagnostics) {
  std::ostringstream msg;
  msg << what;
  const std::size_t shown = std::min<std::size_t>(diagnostics.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) msg << "\n  " << diagnostics[i];
  if (diagnostics.size() > shown) msg << "\n  ... and " << diagnostics.size() - shown << " more";
  return msg.str();
}

std::optional<double> parse_value(std::string_view field, char decimal_separator) {
  std::string text(trim(field));
  if (text.empty()) return std::nullopt;
  if (decimal_separator != '.') {
    if (text.find('.') != std::string::npos) return std::nullopt;
    std::replace(text.begin(), text.end(), decimal_separator, '.');
  }
  const char* first = text.data();
  if (*first == '+') ++first;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

char detect_delimiter(std::string_view line, char decimal_separator) {
  if (line.find(';') != std::string_view::npos) return ';';
  if (line.find('\t') != std::string_view::npos) return '\t';
  // A comma decimal separator only coexists with comma delimiters when fields are quoted.
  if (decimal_separator == ',' && line.find('"') == std::string_view::npos) return ';';
  return ',';
}

std::size_t resolve_column(const ColumnRef& ref, const std::vector<std::string>& header, bool has_header,
                           const char* role) {
  if (const auto* index = std::get_if<std::size_t>(&ref)) return *index;
  const auto& name = std::get<std::string>(ref);
  if (!has_header) throw IngestError(std::string(role) + " column '" + name + "' requested but the input has no header", {});
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return i;
  }
  throw IngestError(std::string(role) + " column '" + name + "' not found in header", {});
}

}  // namespace

IngestError::IngestError(const std::string& summary, std::vector<std::string> diagnostics)
    : Error(summarize(summary, diagnostics)), diagnostics_(std::move(diagnostics)) {}

void IngestSpec::validate() const {
  if (path.empty() == url.empty()) throw ConfigError("exactly one of an input path or URL must be given");
  if (decimal_separator != '.' && decimal_separator != ',') {
    throw ConfigError("decimal separator must be '.' or ','");
  }
  if (delimiter && *delimiter == decimal_separator) {
    throw ConfigError("field delimiter and decimal separator must differ");
  }
}

std::vector<std::string> split_delimited(std::string_view line, char delimiter) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delimiter) {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

IngestResult ingest_text(std::string_view text, const IngestSpec& spec) {
  if (spec.decimal_separator != '.' && spec.decimal_separator != ',') {
    throw ConfigError("decimal separator must be '.' or ','");
  }
  auto lines = split_lines(text);
  if (spec.skip_rows > lines.size()) throw IngestError("skip_rows exceeds the number of lines", {});
  lines.erase(lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(spec.skip_rows));
  std::erase_if(lines, [](const Line& l) { return trim(l.text).empty(); });
  if (lines.empty()) throw IngestError("input has no rows", {});

  const char delimiter = spec.delimiter.value_or(detect_delimiter(lines.front().text, spec.decimal_separator));
  if (delimiter == spec.decimal_separator) {
    throw IngestError("field delimiter and decimal separator are both '" + std::string(1, delimiter) + "'", {});
  }

  const auto first_fields = split_delimited(lines.front().text, delimiter);
  bool has_header = false;
  if (spec.header) {
    has_header = *spec.header;
  } else if (std::holds_alternative<std::string>(spec.value_column) ||
             std::holds_alternative<std::string>(spec.date_column)) {
    has_header = true;
  } else {
    const auto vi = std::get<std::size_t>(spec.value_column);
    has_header = vi >= first_fields.size() || !parse_value(first_fields[vi], spec.decimal_separator).has_value();
  }
  const std::size_t date_col = resolve_column(spec.date_column, first_fields, has_header, "date");
  const std::size_t value_col = resolve_column(spec.value_column, first_fields, has_header, "value");
  if (has_header) lines.erase(lines.begin());

  struct Row {
    std::size_t line;
    std::string date;
    double value;
  };
  std::vector<Row> rows;
  std::vector<std::string> invalid;
  for (const auto& line : lines) {
    const auto fields = split_delimited(line.text, delimiter);
    const std::string prefix = "row " + std::to_string(line.number) + ": ";
    if (std::max(date_col, value_col) >= fields.size()) {
      invalid.push_back(prefix + "expected at least " + std::to_string(std::max(date_col, value_col) + 1) +
                        " fields, found " + std::to_string(fields.size()));
      continue;
    }
    const std::string date(trim(fields[date_col]));
    if (date.empty()) {
      invalid.push_back(prefix + "empty date");
      continue;
    }
    const auto value = parse_value(fields[value_col], spec.decimal_separator);
    if (!value) {
      const auto raw = trim(fields[value_col]);
      invalid.push_back(prefix + (raw.empty() ? "empty value" : "non-numeric value '" + std::string(raw) + "'") +
                        " for " + date);
      continue;
    }
    rows.push_back({line.number, date, *value});
  }

  IngestResult result;
  result.rows_read = lines.size();
  if (!invalid.empty()) {
    if (!spec.drop_invalid) throw IngestError("rejected " + std::to_string(invalid.size()) + " row(s)", invalid);
    result.diagnostics = invalid;
  }
  if (spec.reverse) std::reverse(rows.begin(), rows.end());

  std::vector<std::string> order_errors;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto [it, inserted] = seen.emplace(rows[i].date, rows[i].line);
    if (!inserted) {
      order_errors.push_back("row " + std::to_string(rows[i].line) + ": duplicate date " + rows[i].date +
                             " (first seen at row " + std::to_string(it->second) + ")");
    } else if (i > 0 && rows[i].date < rows[i - 1].date) {
      order_errors.push_back("row " + std::to_string(rows[i].line) + ": date " + rows[i].date + " precedes " +
                             rows[i - 1].date + (spec.reverse ? "" : " (newest-first input needs reverse)"));
    }
  }
  if (!order_errors.empty()) throw IngestError("dates are not strictly increasing", order_errors);
  if (rows.size() < 2) {
    throw IngestError("need at least 2 valid rows, found " + std::to_string(rows.size()), result.diagnostics);
  }

  std::vector<double> values;
  std::vector<std::string> labels;
  values.reserve(rows.size());
  labels.reserve(rows.size());
  for (auto& r : rows) {
    values.push_back(r.value);
    labels.push_back(std::move(r.date));
  }
  result.series = TimeSeries(values, 0, std::move(labels));
  return result;
}

IngestResult ingest(const IngestSpec& spec) {
  spec.validate();
  std::filesystem::path path = spec.path;
  if (!spec.url.empty()) {
    path = fetch(spec.url, spec.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(spec.cache_dir));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open input '" + path.string() + "'", {});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ingest_text(buffer.str(), spec);
}

}  // namespace diffcast::io
