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

#include "contactgw/graphs.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "contactgw/errors.hpp"

namespace contactgw {

namespace {

std::string shape_key(const WeightedShape& s) {
  return canonicalize_tree(s.vertex_count, s.edges, {}).key;
}

void compositions(int total, int parts, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(current);
    return;
  }
  for (int w = 1; w <= total - (parts - 1); ++w) {
    current.push_back(w);
    compositions(total - w, parts - 1, current, out);
    current.pop_back();
  }
}

// Vertices in BFS order from 0 with the parent of each (parent of 0 is -1).
std::vector<std::pair<int, int>> bfs_order(const WeightedShape& s) {
  std::vector<std::vector<int>> adj(s.vertex_count);
  for (const Edge& e : s.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::pair<int, int>> order{{0, -1}};
  std::vector<bool> seen(s.vertex_count, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : adj[order[i].first]) {
      if (!seen[w]) {
        seen[w] = true;
        order.emplace_back(w, order[i].first);
      }
    }
  }
  return order;
}

void color_recursive(const WeightedShape& shape, const std::vector<std::pair<int, int>>& order,
                     std::size_t index, std::vector<int>& colors,
                     std::map<std::string, GraphClass>& out) {
  if (index == order.size()) {
    GraphClass gc = make_graph_class(WeightedColoredTree(colors, shape.edges));
    const std::string key = gc.canonical_key;
    out.try_emplace(key, std::move(gc));
    return;
  }
  const auto [v, parent] = order[index];
  for (int c = 0; c < kColorCount; ++c) {
    if (parent >= 0 && colors[parent] == c) continue;
    colors[v] = c;
    color_recursive(shape, order, index + 1, colors, out);
  }
}

}  // namespace

std::vector<WeightedShape> enumerate_tree_shapes(int vertex_count) {
  if (vertex_count < 1) throw DomainError("tree needs at least one vertex");
  std::vector<WeightedShape> current{WeightedShape{1, {}}};
  for (int n = 1; n < vertex_count; ++n) {
    std::map<std::string, WeightedShape> next;
    for (const WeightedShape& s : current) {
      for (int v = 0; v < n; ++v) {
        WeightedShape grown = s;
        grown.vertex_count = n + 1;
        grown.edges.push_back(Edge{v, n, 1});
        next.try_emplace(shape_key(grown), grown);
      }
    }
    current.clear();
    for (auto& [key, s] : next) current.push_back(std::move(s));
  }
  return current;
}

std::vector<WeightedShape> enumerate_weighted_shapes(int degree) {
  if (degree < 1) throw DomainError("degree must be positive");
  std::map<std::string, WeightedShape> out;
  for (int n = 2; n <= degree + 1; ++n) {
    std::vector<std::vector<int>> weightings;
    std::vector<int> scratch;
    compositions(degree, n - 1, scratch, weightings);
    for (const WeightedShape& shape : enumerate_tree_shapes(n)) {
      for (const auto& w : weightings) {
        WeightedShape weighted = shape;
        for (std::size_t e = 0; e < w.size(); ++e) weighted.edges[e].weight = w[e];
        out.try_emplace(shape_key(weighted), std::move(weighted));
      }
    }
  }
  std::vector<WeightedShape> result;
  result.reserve(out.size());
  for (auto& [key, s] : out) result.push_back(std::move(s));
  return result;
}

std::uint64_t shape_automorphism_order(const WeightedShape& shape) {
  return canonicalize_tree(shape.vertex_count, shape.edges, {}).automorphisms;
}

GraphClass make_graph_class(WeightedColoredTree tree) {
  TreeCanon canon = canonicalize_tree(tree.vertex_count(), tree.edges(), tree.colors());
  return GraphClass{std::move(tree), canon.automorphisms, std::move(canon.key)};
}

std::vector<GraphClass> enumerate_fixed_graphs(int degree) {
  if (degree < 1) throw DomainError("degree must be positive");
  std::map<std::string, GraphClass> classes;
  for (const WeightedShape& shape : enumerate_weighted_shapes(degree)) {
    const auto order = bfs_order(shape);
    std::vector<int> colors(shape.vertex_count, 0);
    color_recursive(shape, order, 0, colors, classes);
  }
  std::vector<GraphClass> out;
  out.reserve(classes.size());
  for (auto& [key, gc] : classes) out.push_back(std::move(gc));
  return out;
}

std::string combinatorial_type_key(const WeightedColoredTree& t) {
  std::array<int, kColorCount> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::vector<int> permuted(t.vertex_count());
  do {
    for (int v = 0; v < t.vertex_count(); ++v) permuted[v] = perm[t.color(v)];
    std::string key = canonicalize_tree(t.vertex_count(), t.edges(), permuted).key;
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string combinatorial_type_label(const std::string& type_key) {
  static constexpr char kLetters[] = "ijkl";
  std::string out = type_key;
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (out[i] == '(' && out[i + 1] >= '0' && out[i + 1] < '0' + kColorCount) {
      out[i + 1] = kLetters[out[i + 1] - '0'];
    }
  }
  return out;
}

std::map<std::string, TypeStatistic> type_statistics(const std::vector<GraphClass>& classes) {
  std::map<std::string, TypeStatistic> stats;
  for (const GraphClass& gc : classes) {
    const std::string key = combinatorial_type_key(gc.representative);
    auto [it, inserted] = stats.try_emplace(key);
    if (inserted) {
      it->second.label = combinatorial_type_label(key);
      it->second.a_gamma = a_gamma(gc.representative);
    }
    ++it->second.class_count;
  }
  return stats;
}

std::string to_dot(const std::vector<GraphClass>& classes, int degree) {
  std::ostringstream os;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const GraphClass& gc = classes[i];
    const WeightedColoredTree& t = gc.representative;
    os << "graph d" << degree << "_" << i << " {\n";
    os << "  label=\"aut=" << gc.aut_order << " a=" << a_gamma(t) << "\";\n";
    for (int v = 0; v < t.vertex_count(); ++v) {
      os << "  v" << v << " [label=\"" << t.color(v) << "\"];\n";
    }
    for (const Edge& e : t.edges()) {
      os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.weight << "\"];\n";
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace contactgw
