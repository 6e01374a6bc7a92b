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

#include "contactgw/json_io.hpp"

#include "contactgw/errors.hpp"

namespace contactgw {

using nlohmann::json;

json rational_to_json(const Rational& r) {
  return json{{"num", to_string(r.num())}, {"den", to_string(r.den())}};
}

Rational rational_from_json(const json& j) {
  return Rational(parse_bigint(j.at("num").get<std::string>()), parse_bigint(j.at("den").get<std::string>()));
}

json graph_class_to_json(const GraphClass& gc) {
  json edges = json::array();
  for (const Edge& e : gc.representative.edges()) edges.push_back({e.u, e.v, e.weight});
  return json{{"colors", gc.representative.colors()},
              {"edges", std::move(edges)},
              {"aut_order", gc.aut_order},
              {"canonical", to_hex(gc.canonical_key)}};
}

GraphClass graph_class_from_json(const json& j) {
  std::vector<int> colors = j.at("colors").get<std::vector<int>>();
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("edge must be [u, v, w]");
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  return GraphClass{WeightedColoredTree(std::move(colors), std::move(edges)), j.at("aut_order").get<std::uint64_t>(),
                    from_hex(j.at("canonical").get<std::string>())};
}

json graphs_to_json(int degree, const std::vector<GraphClass>& classes) {
  json list = json::array();
  for (const GraphClass& gc : classes) list.push_back(graph_class_to_json(gc));
  return json{{"format_version", 1}, {"degree", degree}, {"classes", std::move(list)}};
}

json result_to_json(const InvariantRequest& req, const InvariantResult& result, bool include_timing) {
  json specs = json::array();
  for (const TorusSpec& w : result.specializations_used) {
    json row = json::array();
    for (const Rational& x : w.values()) row.push_back(x.to_string());
    specs.push_back(std::move(row));
  }
  json out{{"degree", req.degree},
           {"kind", to_string(req.kind)},
           {"value", rational_to_json(result.value)},
           {"is_integer", result.is_integer},
           {"graph_classes", result.graph_class_count},
           {"specializations", std::move(specs)}};
  if (include_timing) out["elapsed_ms"] = result.elapsed.count();
  return out;
}

}  // namespace contactgw
