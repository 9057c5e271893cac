// SPDX-License-Identifier: Apache-2.0

#include "mpk/bench/fetch.hpp"

#include <curl/curl.h>
#include <zlib.h>

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "mpk/sparse/matrix_market.hpp"

namespace mpk::bench {

namespace {

const std::map<std::string, std::string>& known_groups() {
  static const std::map<std::string, std::string> groups{{"mcfe", "HB"}, {"dwg961b", "Bai"}};
  return groups;
}

std::size_t append_body(char* data, std::size_t size, std::size_t count, void* user) {
  static_cast<std::string*>(user)->append(data, size * count);
  return size * count;
}

std::string http_get(const std::string& url) {
  static std::once_flag init;
  std::call_once(init, [] { curl_global_init(CURL_GLOBAL_DEFAULT); });

  CURL* h = curl_easy_init();
  if (h == nullptr) throw FetchError(url, "curl_easy_init failed");
  std::string body;
  char err[CURL_ERROR_SIZE] = {};
  curl_easy_setopt(h, CURLOPT_URL, url.c_str());
  curl_easy_setopt(h, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(h, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(h, CURLOPT_CONNECTTIMEOUT, 30L);
  curl_easy_setopt(h, CURLOPT_WRITEFUNCTION, append_body);
  curl_easy_setopt(h, CURLOPT_WRITEDATA, &body);
  curl_easy_setopt(h, CURLOPT_ERRORBUFFER, err);
  const CURLcode rc = curl_easy_perform(h);
  curl_easy_cleanup(h);
  if (rc != CURLE_OK) throw FetchError(url, err[0] != '\0' ? err : curl_easy_strerror(rc));
  return body;
}

std::uint64_t parse_octal(const char* field, std::size_t width) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width && field[i] != '\0' && field[i] != ' '; ++i) {
    if (field[i] < '0' || field[i] > '7') throw std::runtime_error("malformed tar size field");
    v = v * 8 + static_cast<std::uint64_t>(field[i] - '0');
  }
  return v;
}

std::string cstr_field(const char* field, std::size_t width) {
  std::size_t len = 0;
  while (len < width && field[len] != '\0') ++len;
  return std::string(field, len);
}

}  // namespace

namespace detail {

std::string gunzip(const std::string& data) {
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) throw std::runtime_error("inflateInit2 failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  zs.avail_in = static_cast<uInt>(data.size());
  std::string out;
  char buf[1 << 16];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof buf;
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw std::runtime_error("gzip data is corrupt");
    }
    out.append(buf, sizeof buf - zs.avail_out);
    if (rc == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
      inflateEnd(&zs);
      throw std::runtime_error("gzip data is truncated");
    }
  }
  inflateEnd(&zs);
  return out;
}

std::string tar_extract(const std::string& tar, const std::string& member_name) {
  constexpr std::size_t block = 512;
  std::size_t pos = 0;
  while (pos + block <= tar.size()) {
    const char* h = tar.data() + pos;
    if (h[0] == '\0') break;  // end-of-archive marker
    std::string name = cstr_field(h, 100);
    const std::string prefix = cstr_field(h + 345, 155);
    if (!prefix.empty() && std::string(h + 257, 5) == "ustar") name = prefix + "/" + name;
    const std::uint64_t size = parse_octal(h + 124, 12);
    const char type = h[156];
    const std::size_t data_pos = pos + block;
    if (data_pos + size > tar.size()) throw std::runtime_error("tar member " + name + " is truncated");
    const bool regular = type == '0' || type == '\0';
    const bool match = name == member_name ||
                       (name.size() > member_name.size() &&
                        name.compare(name.size() - member_name.size(), member_name.size(), member_name) == 0 &&
                        name[name.size() - member_name.size() - 1] == '/');
    if (regular && match) return tar.substr(data_pos, size);
    pos = data_pos + (size + block - 1) / block * block;
  }
  throw std::runtime_error("archive has no member " + member_name);
}

}  // namespace detail

std::string collection_id(const std::string& name) {
  if (name.find('/') != std::string::npos) return name;
  const auto it = known_groups().find(name);
  if (it == known_groups().end()) {
    throw std::invalid_argument("unknown matrix '" + name + "'; give it as Group/Name");
  }
  return it->second + "/" + name;
}

std::filesystem::path fetch_matrix(const std::string& name, const std::string& base_url,
                                   const std::filesystem::path& dest_dir) {
  const std::string id = collection_id(name);
  const std::string leaf = id.substr(id.rfind('/') + 1);
  const auto target = dest_dir / (leaf + ".mtx");
  if (std::filesystem::exists(target)) return target;

  std::string base = base_url;
  while (!base.empty() && base.back() == '/') base.pop_back();
  const std::string url = base + "/" + id + ".tar.gz";

  std::string mtx;
  try {
    mtx = detail::tar_extract(detail::gunzip(http_get(url)), leaf + ".mtx");
    std::istringstream check(mtx);
    (void)read_matrix_market(check);
  } catch (const FetchError&) {
    throw;
  } catch (const std::exception& e) {
    throw FetchError(url, e.what());
  }

  std::filesystem::create_directories(dest_dir);
  const auto tmp = dest_dir / (leaf + ".mtx.part");
  {
    std::ofstream f(tmp, std::ios::binary);
    f.write(mtx.data(), static_cast<std::streamsize>(mtx.size()));
    if (!f) throw FetchError(url, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
  return target;
}

}  // namespace mpk::bench
