#pragma once

#include <filesystem>
#include <string>

#include "diffcast/core/errors.hpp"

namespace diffcast::io {

enum class FetchCause { Dns, Timeout, HttpStatus, Connection, Other };

const char* to_string(FetchCause cause) noexcept;

class FetchError : public Error {
 public:
  FetchError(FetchCause cause, const std::string& what, long status = 0)
      : Error(what), cause_(cause), status_(status) {}

  FetchCause cause() const noexcept { return cause_; }
  /// HTTP status for FetchCause::HttpStatus, 0 otherwise.
  long status() const noexcept { return status_; }

 private:
  FetchCause cause_;
  long status_;
};

/// Body length disagrees with the announced length; nothing was cached.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

struct FetchOptions {
  long timeout_seconds = 30;
  long connect_timeout_seconds = 10;
};

/// $DIFFCAST_CACHE, else $XDG_CACHE_HOME/diffcast, else ~/.cache/diffcast.
std::filesystem::path default_cache_dir();

/**
 * Downloads `url` into a content-addressed cache and returns the cached file.
 *
 * Cached entries are revalidated with If-None-Match / If-Modified-Since when
 * the server supplied an ETag or Last-Modified; a 304 answer, or a network
 * failure while a cached copy exists, returns the cached file. Objects are
 * stored under objects/<sha256 of body>; a truncated body is rejected before
 * anything is written.
 */
std::filesystem::path fetch(const std::string& url, const std::filesystem::path& cache_dir,
                            const FetchOptions& options = {});

}  // namespace diffcast::io
