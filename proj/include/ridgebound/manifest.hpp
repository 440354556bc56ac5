#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ridgebound/serialize.hpp"

namespace ridgebound {

// Provenance of one CLI run. The id hashes only the fields that determine the
// outputs (command, parameters, seed, version, input digests), so reruns with a
// different thread count or output path share it.
struct RunManifest {
  std::string tool_version;
  std::string command;  // e.g. "packing build"
  std::vector<std::string> command_line;
  Json parameters = Json::object();
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::string> input_digests;   // path -> sha256
  std::map<std::string, std::string> output_digests;  // path -> sha256
  std::string timestamp;

  std::string id() const;
};

std::string sha256_hex(const std::string& bytes);

// UTC ISO-8601; honours SOURCE_DATE_EPOCH for reproducible manifests.
std::string utc_timestamp();

Json to_json(const RunManifest& m);

}  // namespace ridgebound
