// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <zlib.h>

#include <atomic>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <thread>

#include "httplib.h"
#include "mpk/bench/fetch.hpp"
#include "mpk/sparse/matrix_market.hpp"

using namespace mpk;
using namespace mpk::bench;
namespace fs = std::filesystem;

namespace {

const char* const small_mtx =
    "%%MatrixMarket matrix coordinate real general\n"
    "2 2 3\n1 1 4.0\n2 1 -1.0\n2 2 4.0\n";

std::string tar_member(const std::string& name, const std::string& data) {
  char h[512] = {};
  std::strncpy(h, name.c_str(), 99);
  std::snprintf(h + 100, 8, "%07o", 0644);
  std::snprintf(h + 108, 8, "%07o", 0);
  std::snprintf(h + 116, 8, "%07o", 0);
  std::snprintf(h + 124, 12, "%011lo", static_cast<unsigned long>(data.size()));
  std::snprintf(h + 136, 12, "%011o", 0);
  h[156] = '0';
  std::memcpy(h + 257, "ustar", 6);
  std::memcpy(h + 263, "00", 2);
  std::memset(h + 148, ' ', 8);
  unsigned sum = 0;
  for (unsigned char c : h) sum += c;
  std::snprintf(h + 148, 8, "%06o", sum);
  std::string out(h, 512);
  out += data;
  out.append((512 - data.size() % 512) % 512, '\0');
  return out;
}

std::string gzip(const std::string& in) {
  z_stream zs{};
  EXPECT_EQ(deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 16 + MAX_WBITS, 8, Z_DEFAULT_STRATEGY), Z_OK);
  std::string out(compressBound(static_cast<uLong>(in.size())) + 64, '\0');
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  EXPECT_EQ(deflate(&zs, Z_FINISH), Z_STREAM_END);
  out.resize(zs.total_out);
  deflateEnd(&zs);
  return out;
}

class LocalCollection : public ::testing::Test {
 protected:
  void SetUp() override {
    archive_ = gzip(tar_member("mcfe/README", "readme\n") + tar_member("mcfe/mcfe.mtx", small_mtx) +
                    std::string(1024, '\0'));
    server_.Get("/MM/HB/mcfe.tar.gz", [this](const httplib::Request&, httplib::Response& res) {
      ++hits_;
      res.set_content(archive_, "application/gzip");
    });
    server_.Get("/MM/HB/broken.tar.gz", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("not gzip", "application/gzip");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    dir_ = fs::temp_directory_path() / ("mpk_fetch_" + std::to_string(port_));
    fs::remove_all(dir_);
  }
  void TearDown() override {
    server_.stop();
    thread_.join();
    fs::remove_all(dir_);
  }
  std::string base() const { return "http://127.0.0.1:" + std::to_string(port_) + "/MM"; }

  httplib::Server server_;
  std::thread thread_;
  std::string archive_;
  std::atomic<int> hits_{0};
  int port_ = 0;
  fs::path dir_;
};

}  // namespace

TEST(CollectionId, KnownNames) {
  EXPECT_EQ(collection_id("mcfe"), "HB/mcfe");
  EXPECT_EQ(collection_id("dwg961b"), "Bai/dwg961b");
  EXPECT_EQ(collection_id("Group/Thing"), "Group/Thing");
  EXPECT_THROW((void)collection_id("unknown"), std::invalid_argument);
}

TEST(Archive, GunzipAndTar) {
  const std::string tar = tar_member("a/b.mtx", "hello") + std::string(1024, '\0');
  EXPECT_EQ(detail::gunzip(gzip(tar)), tar);
  EXPECT_EQ(detail::tar_extract(tar, "b.mtx"), "hello");
  EXPECT_THROW((void)detail::tar_extract(tar, "c.mtx"), std::runtime_error);
  EXPECT_THROW((void)detail::gunzip("plain text"), std::runtime_error);
}

TEST_F(LocalCollection, DownloadsExtractsAndCaches) {
  const auto path = fetch_matrix("HB/mcfe", base(), dir_);
  EXPECT_EQ(path, dir_ / "mcfe.mtx");
  const auto coo = read_matrix_market(path);
  EXPECT_EQ(coo.n_rows, 2);
  EXPECT_EQ(coo.entries.size(), 3u);
  EXPECT_EQ(fetch_matrix("mcfe", base(), dir_), path);
  EXPECT_EQ(hits_.load(), 1);
}

TEST_F(LocalCollection, ErrorsCarryTheUrl) {
  try {
    (void)fetch_matrix("HB/missing", base(), dir_);
    FAIL() << "expected a fetch error";
  } catch (const FetchError& e) {
    EXPECT_NE(e.url().find("HB/missing.tar.gz"), std::string::npos);
  }
  EXPECT_THROW((void)fetch_matrix("HB/broken", base(), dir_), FetchError);
  EXPECT_FALSE(fs::exists(dir_ / "broken.mtx"));
}
