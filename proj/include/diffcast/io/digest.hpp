#pragma once

#include <string>
#include <string_view>

#include "diffcast/core/time_series.hpp"

namespace diffcast::io {

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

/// SHA-256 over a canonical "label,value" line per sample (values in shortest round-trip form).
std::string series_digest(const TimeSeries& series);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

}  // namespace diffcast::io
