// Copyright 2026 The Paraug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Run manifests: the reproducibility record written next to every augmented
// corpus, with SHA-256 checksums of the files involved.

#ifndef PARAUG_MANIFEST_HPP_
#define PARAUG_MANIFEST_HPP_

#include <openssl/evp.h>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "paraug/errors.hpp"

namespace paraug {

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &digest_len, EVP_sha256(),
                 nullptr) != 1) {
    throw IoError("SHA-256 digest computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * digest_len);
  for (unsigned int i = 0; i < digest_len; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

inline std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path.string());
  return sha256_hex(bytes);
}

struct RunManifest {
  std::string tool_version;
  std::string method;
  nlohmann::json parameters;
  std::uint64_t master_seed = 0;
  std::size_t input_pairs = 0;
  std::size_t output_pairs = 0;
  std::map<std::string, std::string> input_checksums;
  std::map<std::string, std::string> output_checksums;
  double duration_seconds = 0.0;
};

inline void to_json(nlohmann::json& j, const RunManifest& manifest) {
  j = nlohmann::json{{"tool_version", manifest.tool_version},
                     {"method", manifest.method},
                     {"parameters", manifest.parameters},
                     {"master_seed", manifest.master_seed},
                     {"input_pairs", manifest.input_pairs},
                     {"output_pairs", manifest.output_pairs},
                     {"input_checksums", manifest.input_checksums},
                     {"output_checksums", manifest.output_checksums},
                     {"duration_seconds", manifest.duration_seconds}};
}

inline void from_json(const nlohmann::json& j, RunManifest& manifest) {
  j.at("tool_version").get_to(manifest.tool_version);
  j.at("method").get_to(manifest.method);
  manifest.parameters = j.at("parameters");
  j.at("master_seed").get_to(manifest.master_seed);
  j.at("input_pairs").get_to(manifest.input_pairs);
  j.at("output_pairs").get_to(manifest.output_pairs);
  j.at("input_checksums").get_to(manifest.input_checksums);
  j.at("output_checksums").get_to(manifest.output_checksums);
  j.at("duration_seconds").get_to(manifest.duration_seconds);
}

}  // namespace paraug

#endif  // PARAUG_MANIFEST_HPP_
