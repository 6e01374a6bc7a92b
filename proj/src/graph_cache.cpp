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

#include "contactgw/graph_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <system_error>

#include "contactgw/errors.hpp"
#include "contactgw/json_io.hpp"

namespace contactgw {

namespace fs = std::filesystem;

fs::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return fs::path(env);
  return fs::path(kDefaultCacheDir);
}

fs::path cache_path(const fs::path& dir, int degree) {
  return dir / ("graphs_d" + std::to_string(degree) + ".json");
}

fs::path cache_graphs(const fs::path& dir, int degree, const std::vector<GraphClass>& classes) {
  fs::create_directories(dir);
  const fs::path target = cache_path(dir, degree);
  // Write then rename so a concurrent reader never sees a partial file.
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write graph cache " + tmp.string());
    out << graphs_to_json(degree, classes).dump() << '\n';
    if (!out) throw std::runtime_error("cannot write graph cache " + tmp.string());
  }
  fs::rename(tmp, target);
  return target;
}

std::vector<GraphClass> load_graphs(const fs::path& dir, int degree) {
  const fs::path source = cache_path(dir, degree);
  std::ifstream in(source, std::ios::binary);
  if (!in) throw CacheInvalid("graph cache missing: " + source.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CacheInvalid("graph cache " + source.string() + " is not valid JSON: " + e.what());
  }
  try {
    if (doc.at("format_version").get<int>() != kGraphCacheFormatVersion) {
      throw CacheInvalid("graph cache " + source.string() + " has unsupported format version");
    }
    if (doc.at("degree").get<int>() != degree) {
      throw CacheInvalid("graph cache " + source.string() + " is for another degree");
    }
    std::vector<GraphClass> classes;
    for (const nlohmann::json& entry : doc.at("classes")) {
      GraphClass stored = graph_class_from_json(entry);
      if (stored.representative.degree() != degree) throw CacheInvalid("cached graph has wrong total degree");
      const GraphClass fresh = make_graph_class(stored.representative);
      if (fresh.canonical_key != stored.canonical_key) throw CacheInvalid("cached canonical key does not match graph");
      if (fresh.aut_order != stored.aut_order) throw CacheInvalid("cached automorphism order does not match graph");
      if (!classes.empty() && !(classes.back().canonical_key < stored.canonical_key)) {
        throw CacheInvalid("cached classes are not strictly ordered by canonical key");
      }
      classes.push_back(std::move(stored));
    }
    return classes;
  } catch (const CacheInvalid&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheInvalid("graph cache " + source.string() + " is corrupt: " + e.what());
  }
}

std::vector<GraphClass> graphs_for_degree(int degree, const fs::path& dir) {
  if (degree < 1) throw DomainError("degree must be positive");
  std::error_code ec;
  if (fs::exists(cache_path(dir, degree), ec)) {
    try {
      return load_graphs(dir, degree);
    } catch (const CacheInvalid&) {
      // Fall through: recompute and overwrite.
    }
  }
  std::vector<GraphClass> classes = enumerate_fixed_graphs(degree);
  try {
    cache_graphs(dir, degree, classes);
  } catch (const std::exception&) {
    // An unwritable cache only costs recomputation next time.
  }
  return classes;
}

}  // namespace contactgw
