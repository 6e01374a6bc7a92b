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

#include <string>
#include <vector>

#include "json.hpp"

#include "contactgw/graphs.hpp"
#include "contactgw/invariants.hpp"
#include "contactgw/rational.hpp"

namespace contactgw {

/// {"num": "<decimal>", "den": "<decimal>"}
nlohmann::json rational_to_json(const Rational& r);
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json graph_class_to_json(const GraphClass& gc);
GraphClass graph_class_from_json(const nlohmann::json& j);

/// Graph cache document (format_version 1).
nlohmann::json graphs_to_json(int degree, const std::vector<GraphClass>& classes);

nlohmann::json result_to_json(const InvariantRequest& req, const InvariantResult& result,
                              bool include_timing = true);

}  // namespace contactgw
