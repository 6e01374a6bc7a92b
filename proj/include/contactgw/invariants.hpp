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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "contactgw/graphs.hpp"
#include "contactgw/localization.hpp"

namespace contactgw {

enum class InvariantKind { contact, gw_lines, custom };

std::string to_string(InvariantKind kind);
/// Accepts "contact", "gw_lines"/"gw-lines", "custom".
InvariantKind parse_invariant_kind(const std::string& text);

struct InvariantRequest {
  int degree = 1;
  InvariantKind kind = InvariantKind::contact;
  /// Used only when kind == custom.
  ClassSelector custom_selector;

  /// Selector for the kind; throws DomainError if it is not dimension
  /// balanced or the degree is not positive.
  ClassSelector selector() const;
};

struct InvariantResult {
  Rational value;
  bool is_integer = false;
  std::size_t graph_class_count = 0;
  std::vector<TorusSpec> specializations_used;
  std::chrono::milliseconds elapsed{0};
};

inline constexpr int kDefaultRetryBudget = 32;
inline constexpr int kDefaultAgreement = 2;
inline constexpr long kSampleMagnitude = 1'000'000;

struct ComputeOptions {
  /// Worker threads for the per-class sum; 0 = hardware concurrency.
  unsigned threads = 1;
  int retry_budget = kDefaultRetryBudget;
  /// Graph cache directory; nullopt disables caching.
  std::optional<std::filesystem::path> cache_dir;
  /// Tried before sampled specialisations. A degenerate explicit one is an
  /// error (rethrown as SpecializationDegenerate), not a resample.
  std::vector<TorusSpec> explicit_specializations;
  /// Replaces sample_specialization when set.
  std::function<TorusSpec(std::uint64_t seed, std::uint64_t attempt)> sampler;
};

/// Four pairwise-distinct integers in [-10^6, 10^6], a pure function of
/// (seed, attempt).
TorusSpec sample_specialization(std::uint64_t seed, std::uint64_t attempt);

/// Exact sum of graph contributions over `classes`. With threads > 1 the
/// classes are split into contiguous chunks summed concurrently.
Rational sum_contributions(const std::vector<GraphClass>& classes, const TorusSpec& w,
                           const ClassSelector& sel, unsigned threads = 1);

/// Localisation sum checked at `min_agreement` generic specialisations.
/// Throws RetryExhausted, DisagreementError.
InvariantResult compute(const InvariantRequest& req, std::uint64_t seed,
                        int min_agreement = kDefaultAgreement, const ComputeOptions& options = {});

/// Same, over an already enumerated class list.
InvariantResult compute_over(const std::vector<GraphClass>& classes, const InvariantRequest& req,
                             std::uint64_t seed, int min_agreement, const ComputeOptions& options);

}  // namespace contactgw
