// Copyright 2026 The contactgw Authors.
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

#include <filesystem>
#include <vector>

#include "contactgw/graphs.hpp"

namespace contactgw {

inline constexpr int kGraphCacheFormatVersion = 1;
inline constexpr const char* kCacheDirEnv = "CONTACTGW_CACHE_DIR";
inline constexpr const char* kDefaultCacheDir = ".contactgw-cache";

/// $CONTACTGW_CACHE_DIR if set, otherwise ./.contactgw-cache.
std::filesystem::path default_cache_dir();

std::filesystem::path cache_path(const std::filesystem::path& dir, int degree);

/// Writes the classes for `degree` to the cache and returns the file path.
std::filesystem::path cache_graphs(const std::filesystem::path& dir, int degree,
                                   const std::vector<GraphClass>& classes);

/// Loads and re-verifies every record (tree invariants, canonical key,
/// automorphism order). Throws CacheInvalid on any mismatch or a missing,
/// unreadable or wrong-version file.
std::vector<GraphClass> load_graphs(const std::filesystem::path& dir, int degree);

/// Cached classes if valid, else enumerates and rewrites the cache.
std::vector<GraphClass> graphs_for_degree(int degree, const std::filesystem::path& dir);

}  // namespace contactgw
