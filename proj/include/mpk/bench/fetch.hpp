// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace mpk::bench {

inline constexpr const char* default_collection_url = "https://sparse.tamu.edu/MM";

class FetchError : public std::runtime_error {
 public:
  FetchError(const std::string& url, const std::string& what)
      : std::runtime_error(url + ": " + what), url_(url) {}
  [[nodiscard]] const std::string& url() const noexcept { return url_; }

 private:
  std::string url_;
};

/// "Group/Name" for a collection id; bare names of the benchmark matrices
/// resolve to their groups, and other bare names are rejected.
[[nodiscard]] std::string collection_id(const std::string& name);

/// Downloads <base_url>/<Group>/<Name>.tar.gz, extracts <Name>.mtx, checks
/// that it parses and stores it as dest_dir/<Name>.mtx. An existing cached
/// file is returned without any network access.
std::filesystem::path fetch_matrix(const std::string& name, const std::string& base_url,
                                   const std::filesystem::path& dest_dir);

namespace detail {
/// Decompresses a gzip stream.
[[nodiscard]] std::string gunzip(const std::string& data);
/// Returns the contents of the first regular tar member whose file name is
/// member_name (any directory prefix).
[[nodiscard]] std::string tar_extract(const std::string& tar, const std::string& member_name);
}  // namespace detail

}  // namespace mpk::bench
