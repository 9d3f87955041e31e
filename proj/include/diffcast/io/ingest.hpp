#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diffcast/core/time_series.hpp"

namespace diffcast::io {

/// Zero-based column position or header name.
using ColumnRef = std::variant<std::size_t, std::string>;

/// Rejected input with one row-numbered diagnostic per problem.
class IngestError : public Error {
 public:
  IngestError(const std::string& summary, std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

struct IngestSpec {
  /// Exactly one of path and url is set.
  std::string path;
  std::string url;
  ColumnRef date_column = std::size_t{0};
  ColumnRef value_column = std::size_t{1};
  /// Physical lines skipped before the (optional) header.
  std::size_t skip_rows = 0;
  /// Rows are newest-first in the file.
  bool reverse = false;
  char decimal_separator = '.';
  /// Forced field delimiter; autodetected (';', tab, ',') when unset.
  std::optional<char> delimiter;
  /// Header presence; autodetected when unset.
  std::optional<bool> header;
  /// Drop rows with missing or non-numeric values instead of failing. Every
  /// dropped row is still reported in IngestResult::diagnostics.
  bool drop_invalid = false;
  /// Fetch cache used when url is set; empty selects default_cache_dir().
  std::string cache_dir;

  void validate() const;
};

struct IngestResult {
  TimeSeries series;
  std::vector<std::string> diagnostics;
  std::size_t rows_read = 0;
};

/// Parses delimited text already in memory.
IngestResult ingest_text(std::string_view text, const IngestSpec& spec);

/// Reads spec.path, or fetches spec.url through the cache first.
IngestResult ingest(const IngestSpec& spec);

/// Splits one delimited line honouring RFC-4180 double quotes.
std::vector<std::string> split_delimited(std::string_view line, char delimiter);

}  // namespace diffcast::io
