#include "ridgebound/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>

#include <openssl/evp.h>

#include "ridgebound/error.hpp"

namespace ridgebound {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string RunManifest::id() const {
  Json core{{"tool_version", tool_version},
            {"command", command},
            {"parameters", parameters},
            {"seed", seed ? Json(*seed) : Json(nullptr)},
            {"input_digests", input_digests}};
  return sha256_hex(core.dump());
}

Json to_json(const RunManifest& m) {
  return Json{{"manifest_id", m.id()},
              {"tool_version", m.tool_version},
              {"command", m.command},
              {"command_line", m.command_line},
              {"parameters", m.parameters},
              {"seed", m.seed ? Json(*m.seed) : Json(nullptr)},
              {"input_digests", m.input_digests},
              {"output_digests", m.output_digests},
              {"timestamp", m.timestamp}};
}

}  // namespace ridgebound
