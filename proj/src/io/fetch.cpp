#include "diffcast/io/fetch.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>

#include <curl/curl.h>
#include <json.hpp>

#include "diffcast/io/digest.hpp"

namespace diffcast::io {
namespace fs = std::filesystem;

const char* to_string(FetchCause cause) noexcept {
  switch (cause) {
    case FetchCause::Dns: return "dns";
    case FetchCause::Timeout: return "timeout";
    case FetchCause::HttpStatus: return "http-status";
    case FetchCause::Connection: return "connection";
    case FetchCause::Other: return "other";
  }
  return "other";
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("DIFFCAST_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "diffcast";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "diffcast";
  return fs::temp_directory_path() / "diffcast-cache";
}

namespace {

struct IndexEntry {
  std::string object;
  std::string etag;
  std::string last_modified;
};

struct Response {
  long status = 0;
  std::string body;
  std::string etag;
  std::string last_modified;
  std::optional<std::size_t> content_length;
};

void ensure_curl_initialized() {
  static std::once_flag once;
  std::call_once(once, [] { curl_global_init(CURL_GLOBAL_DEFAULT); });
}

std::size_t write_body(char* data, std::size_t size, std::size_t count, void* user) {
  static_cast<std::string*>(user)->append(data, size * count);
  return size * count;
}

std::string_view trim_header_value(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == '\r' || v.back() == '\n' || v.back() == ' ')) v.remove_suffix(1);
  return v;
}

bool header_is(std::string_view line, std::string_view name) {
  if (line.size() <= name.size() || line[name.size()] != ':') return false;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(line[i])) != name[i]) return false;
  }
  return true;
}

std::size_t read_header(char* data, std::size_t size, std::size_t count, void* user) {
  auto& response = *static_cast<Response*>(user);
  const std::string_view line(data, size * count);
  // A new status line starts a fresh header block (redirects, 100-continue).
  if (line.rfind("HTTP/", 0) == 0) {
    response.etag.clear();
    response.last_modified.clear();
    response.content_length.reset();
  } else if (header_is(line, "etag")) {
    response.etag = trim_header_value(line.substr(5));
  } else if (header_is(line, "last-modified")) {
    response.last_modified = trim_header_value(line.substr(14));
  } else if (header_is(line, "content-length")) {
    const auto value = trim_header_value(line.substr(15));
    try {
      response.content_length = static_cast<std::size_t>(std::stoull(std::string(value)));
    } catch (const std::exception&) {
      response.content_length.reset();
    }
  }
  return size * count;
}

FetchCause classify(CURLcode code) {
  switch (code) {
    case CURLE_COULDNT_RESOLVE_HOST:
    case CURLE_COULDNT_RESOLVE_PROXY: return FetchCause::Dns;
    case CURLE_OPERATION_TIMEDOUT: return FetchCause::Timeout;
    case CURLE_COULDNT_CONNECT:
    case CURLE_RECV_ERROR:
    case CURLE_SEND_ERROR:
    case CURLE_GOT_NOTHING:
    case CURLE_SSL_CONNECT_ERROR: return FetchCause::Connection;
    default: return FetchCause::Other;
  }
}

Response perform(const std::string& url, const std::optional<IndexEntry>& cached, const FetchOptions& options) {
  ensure_curl_initialized();
  std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> curl(curl_easy_init(), &curl_easy_cleanup);
  if (!curl) throw FetchError(FetchCause::Other, "cannot initialise HTTP client");

  Response response;
  curl_slist* headers = nullptr;
  if (cached) {
    if (!cached->etag.empty()) headers = curl_slist_append(headers, ("If-None-Match: " + cached->etag).c_str());
    if (!cached->last_modified.empty()) {
      headers = curl_slist_append(headers, ("If-Modified-Since: " + cached->last_modified).c_str());
    }
  }
  std::unique_ptr<curl_slist, decltype(&curl_slist_free_all)> header_guard(headers, &curl_slist_free_all);

  char error_buffer[CURL_ERROR_SIZE] = {0};
  curl_easy_setopt(curl.get(), CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl.get(), CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl.get(), CURLOPT_NOSIGNAL, 1L);
  curl_easy_setopt(curl.get(), CURLOPT_TIMEOUT, options.timeout_seconds);
  curl_easy_setopt(curl.get(), CURLOPT_CONNECTTIMEOUT, options.connect_timeout_seconds);
  curl_easy_setopt(curl.get(), CURLOPT_WRITEFUNCTION, &write_body);
  curl_easy_setopt(curl.get(), CURLOPT_WRITEDATA, &response.body);
  curl_easy_setopt(curl.get(), CURLOPT_HEADERFUNCTION, &read_header);
  curl_easy_setopt(curl.get(), CURLOPT_HEADERDATA, &response);
  curl_easy_setopt(curl.get(), CURLOPT_ERRORBUFFER, error_buffer);
  curl_easy_setopt(curl.get(), CURLOPT_USERAGENT, "diffcast/" DIFFCAST_VERSION);
  if (headers) curl_easy_setopt(curl.get(), CURLOPT_HTTPHEADER, headers);

  const CURLcode code = curl_easy_perform(curl.get());
  if (code == CURLE_PARTIAL_FILE) {
    throw IntegrityError("truncated download from " + url + ": body shorter than announced length");
  }
  if (code != CURLE_OK) {
    const std::string detail = error_buffer[0] ? error_buffer : curl_easy_strerror(code);
    throw FetchError(classify(code), "fetching " + url + " failed: " + detail);
  }
  curl_easy_getinfo(curl.get(), CURLINFO_RESPONSE_CODE, &response.status);
  return response;
}

std::optional<IndexEntry> read_index(const fs::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    return IndexEntry{j.at("object").get<std::string>(), j.value("etag", ""), j.value("last_modified", "")};
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void write_atomically(const fs::path& target, std::string_view content) {
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace

fs::path fetch(const std::string& url, const fs::path& cache_dir, const FetchOptions& options) {
  if (url.empty()) throw ConfigError("fetch requires a URL");
  const fs::path objects = cache_dir / "objects";
  const fs::path index_dir = cache_dir / "index";
  fs::create_directories(objects);
  fs::create_directories(index_dir);

  const fs::path index_file = index_dir / (sha256_hex(url) + ".json");
  std::optional<IndexEntry> cached = read_index(index_file);
  if (cached && !fs::exists(objects / cached->object)) cached.reset();

  Response response;
  try {
    response = perform(url, cached, options);
  } catch (const IntegrityError&) {
    throw;
  } catch (const FetchError&) {
    if (cached) return objects / cached->object;
    throw;
  }

  if (response.status == 304 && cached) return objects / cached->object;
  if (response.status < 200 || response.status >= 300) {
    throw FetchError(FetchCause::HttpStatus,
                     "fetching " + url + " failed with HTTP status " + std::to_string(response.status),
                     response.status);
  }
  if (response.content_length && *response.content_length != response.body.size()) {
    throw IntegrityError("download from " + url + " has " + std::to_string(response.body.size()) +
                         " bytes, announced " + std::to_string(*response.content_length));
  }

  const std::string object = sha256_hex(response.body);
  const fs::path object_path = objects / object;
  if (!fs::exists(object_path)) write_atomically(object_path, response.body);

  nlohmann::ordered_json index;
  index["url"] = url;
  index["object"] = object;
  index["etag"] = response.etag;
  index["last_modified"] = response.last_modified;
  write_atomically(index_file, index.dump(2) + "\n");
  return object_path;
}

}  // namespace diffcast::io
