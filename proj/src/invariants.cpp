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

#include "contactgw/invariants.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <thread>

#include "contactgw/errors.hpp"
#include "contactgw/graph_cache.hpp"

namespace contactgw {

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::contact:
      return "contact";
    case InvariantKind::gw_lines:
      return "gw_lines";
    case InvariantKind::custom:
      return "custom";
  }
  return "unknown";
}

InvariantKind parse_invariant_kind(const std::string& text) {
  if (text == "contact") return InvariantKind::contact;
  if (text == "gw_lines" || text == "gw-lines") return InvariantKind::gw_lines;
  if (text == "custom") return InvariantKind::custom;
  throw DomainError("unknown invariant kind: " + text);
}

ClassSelector InvariantRequest::selector() const {
  if (degree < 1) throw DomainError("degree must be positive");
  ClassSelector sel;
  switch (kind) {
    case InvariantKind::contact:
      sel = ClassSelector::contact(degree);
      break;
    case InvariantKind::gw_lines:
      sel = ClassSelector::gw_lines(degree);
      break;
    case InvariantKind::custom:
      sel = custom_selector;
      break;
  }
  if (!sel.is_balanced(degree)) {
    throw DomainError("selector H^" + std::to_string(sel.incidence_exponent) +
                      (sel.include_contact_class ? " * c_top(E_d)" : "") +
                      " does not have dimension 4d for d = " + std::to_string(degree));
  }
  return sel;
}

TorusSpec sample_specialization(std::uint64_t seed, std::uint64_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> dist(-kSampleMagnitude, kSampleMagnitude);
  std::array<long, kColorCount> drawn{};
  for (int i = 0; i < kColorCount; ++i) {
    long x;
    do {
      x = dist(rng);
    } while (std::find(drawn.begin(), drawn.begin() + i, x) != drawn.begin() + i);
    drawn[i] = x;
  }
  std::array<Rational, kColorCount> lambda;
  for (int i = 0; i < kColorCount; ++i) lambda[i] = Rational(drawn[i]);
  return TorusSpec(lambda);
}

Rational sum_contributions(const std::vector<GraphClass>& classes, const TorusSpec& w,
                           const ClassSelector& sel, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(classes.size(), 1)));
  if (threads <= 1) {
    Rational sum;
    for (const GraphClass& gc : classes) sum += graph_contribution(gc, w, sel);
    return sum;
  }
  std::vector<Rational> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (classes.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(classes.size(), begin + chunk);
        for (std::size_t i = begin; i < end; ++i) partial[t] += graph_contribution(classes[i], w, sel);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Rational sum;
  for (const auto& p : partial) sum += p;
  return sum;
}

InvariantResult compute_over(const std::vector<GraphClass>& classes, const InvariantRequest& req,
                             std::uint64_t seed, int min_agreement, const ComputeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ClassSelector sel = req.selector();
  if (min_agreement < 2) throw DomainError("min_agreement must be at least 2");

  InvariantResult result;
  result.graph_class_count = classes.size();
  std::optional<Rational> value;
  auto accept = [&](const TorusSpec& w, Rational sum) {
    if (value && *value != sum) {
      throw DisagreementError("specialisations disagree: " + value->to_string() + " at (" +
                              result.specializations_used.front().to_string() + ") vs " +
                              sum.to_string() + " at (" + w.to_string() + ")");
    }
    value = std::move(sum);
    result.specializations_used.push_back(w);
  };

  for (const TorusSpec& w : options.explicit_specializations) {
    accept(w, sum_contributions(classes, w, sel, options.threads));
  }

  int failures = 0;
  std::uint64_t attempt = 0;
  while (static_cast<int>(result.specializations_used.size()) < min_agreement) {
    if (failures >= options.retry_budget) {
      throw RetryExhausted("no generic specialisation found after " + std::to_string(failures) +
                           " degenerate draws");
    }
    const TorusSpec w = options.sampler ? options.sampler(seed, attempt) : sample_specialization(seed, attempt);
    ++attempt;
    Rational sum;
    try {
      sum = sum_contributions(classes, w, sel, options.threads);
    } catch (const SpecializationDegenerate&) {
      ++failures;
      continue;
    }
    accept(w, std::move(sum));
  }

  result.value = *value;
  result.is_integer = result.value.is_integer();
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

InvariantResult compute(const InvariantRequest& req, std::uint64_t seed, int min_agreement,
                        const ComputeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  req.selector();
  const std::vector<GraphClass> classes =
      options.cache_dir ? graphs_for_degree(req.degree, *options.cache_dir) : enumerate_fixed_graphs(req.degree);
  InvariantResult result = compute_over(classes, req, seed, min_agreement, options);
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace contactgw
