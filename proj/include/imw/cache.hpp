// Copyright 2026 The imw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "imw/serialize.hpp"

namespace imw {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char *kCacheDirEnv = "IMW_CACHE_DIR";

/// $IMW_CACHE_DIR, else $XDG_CACHE_HOME/imw, else ~/.cache/imw, else the temp dir.
inline std::filesystem::path cache_dir() {
  if (const char *d = std::getenv(kCacheDirEnv); d && *d) return d;
  if (const char *x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "imw";
  if (const char *h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "imw";
  return std::filesystem::temp_directory_path() / "imw";
}

inline std::filesystem::path cache_path(const std::string &kind, const std::string &rep_key) {
  std::string safe;
  for (char c : rep_key) safe += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return cache_dir() / (kind + "-" + safe + ".v" + std::to_string(kCacheFormatVersion) + ".b" +
                        std::to_string(kBasisConventionVersion) + ".json");
}

/// Loads `kind` for `rep_key` from the cache when present and of the current
/// versions, otherwise computes and stores it. Cache I/O failures only warn.
template <class T>
T cached(const std::string &kind, const std::string &rep_key, bool use_cache, const std::function<T()> &compute,
         const std::function<T(const Json &)> &parse) {
  const auto path = cache_path(kind, rep_key);
  if (use_cache && std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      Json j = Json::parse(in);
      if (j.at("format_version").get<int>() == kCacheFormatVersion &&
          j.at("basis_convention_version").get<int>() == kBasisConventionVersion &&
          j.at("rep").get<std::string>() == rep_key) {
        return parse(j.at("data"));
      }
    } catch (const std::exception &e) {
      std::cerr << "imw: ignoring unreadable cache " << path << ": " << e.what() << "\n";
    }
  }
  T value = compute();
  try {
    std::filesystem::create_directories(path.parent_path());
    Json j = {{"format_version", kCacheFormatVersion},
              {"basis_convention_version", kBasisConventionVersion},
              {"rep", rep_key},
              {"data", to_json(value)}};
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump();
    }
    std::filesystem::rename(tmp, path);
  } catch (const std::exception &e) {
    std::cerr << "imw: could not write cache " << path << ": " << e.what() << "\n";
  }
  return value;
}

inline MacWilliamsMatrix cached_macwilliams(const Rep &rep, bool use_cache = true) {
  return cached<MacWilliamsMatrix>(
      "scalar", rep.key, use_cache, [&] { return macwilliams_from_sectors(conjugation_sectors(rep)); },
      macwilliams_from_json);
}

inline BlockMacWilliams cached_block_macwilliams(const Rep &rep, bool use_cache = true) {
  return cached<BlockMacWilliams>(
      "block", rep.key, use_cache, [&] { return block_macwilliams(conjugation_sectors(rep)); },
      block_macwilliams_from_json);
}

}  // namespace imw
