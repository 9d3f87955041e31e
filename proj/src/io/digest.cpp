#include "diffcast/io/digest.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <openssl/evp.h>

namespace diffcast::io {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0x0f];
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return {buf.data(), ptr};
}

std::string series_digest(const TimeSeries& series) {
  std::string canonical;
  canonical.reserve(static_cast<std::size_t>(series.size()) * 24);
  for (Eigen::Index k = 0; k < series.size(); ++k) {
    if (series.has_labels()) canonical += series.labels()[static_cast<std::size_t>(k)];
    canonical += ',';
    canonical += format_double(series[k]);
    canonical += '\n';
  }
  return sha256_hex(canonical);
}

}  // namespace diffcast::io
