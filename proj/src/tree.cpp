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

#include "contactgw/tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "contactgw/errors.hpp"

namespace contactgw {

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(int n, std::span<const Edge> edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  return adj;
}

void check_tree_shape(int n, std::span<const Edge> edges) {
  if (n < 1) throw StructuralError("tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1) {
    throw StructuralError("edge count " + std::to_string(edges.size()) + " != vertex count - 1");
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw StructuralError("edge endpoint out of range");
    if (e.u == e.v) throw StructuralError("loop edge");
    if (e.weight < 1) throw StructuralError("edge weight must be positive");
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) throw StructuralError("edges contain a cycle");
    parent[a] = b;
  }
}

std::vector<int> centers(int n, const std::vector<std::vector<std::pair<int, int>>>& adj) {
  if (n == 1) return {0};
  std::vector<int> deg(n);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int leaf : leaves) {
      --remaining;
      for (auto [w, weight] : adj[leaf]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

struct Encoder {
  const std::vector<std::vector<std::pair<int, int>>>& adj;
  std::span<const int> colors;

  TreeCanon encode(int v, int parent) const {
    std::vector<std::string> items;
    std::uint64_t aut = 1;
    for (auto [w, weight] : adj[v]) {
      if (w == parent) continue;
      TreeCanon child = encode(w, v);
      aut *= child.automorphisms;
      items.push_back(std::to_string(weight) + ":" + child.key);
    }
    std::sort(items.begin(), items.end());
    // Identical (weight, subtree) children can be permuted freely.
    for (std::size_t i = 0; i < items.size();) {
      std::size_t j = i;
      while (j < items.size() && items[j] == items[i]) ++j;
      for (std::uint64_t k = 2; k <= j - i; ++k) aut *= k;
      i = j;
    }
    std::string key = "(";
    key += colors.empty() ? '*' : static_cast<char>('0' + colors[v]);
    for (const auto& item : items) key += item;
    key += ')';
    return {std::move(key), aut};
  }
};

}  // namespace

WeightedColoredTree::WeightedColoredTree(std::vector<int> colors, std::vector<Edge> edges)
    : colors_(std::move(colors)), edges_(std::move(edges)) {
  const int n = vertex_count();
  check_tree_shape(n, edges_);
  if (edges_.empty()) throw StructuralError("fixed graph needs at least one edge (degree >= 1)");
  for (int c : colors_) {
    if (c < 0 || c >= kColorCount) throw StructuralError("colour out of range: " + std::to_string(c));
  }
  incident_.assign(n, {});
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& edge = edges_[e];
    if (colors_[edge.u] == colors_[edge.v]) {
      throw StructuralError("adjacent vertices share colour " + std::to_string(colors_[edge.u]));
    }
    incident_[edge.u].push_back(e);
    incident_[edge.v].push_back(e);
  }
}

int WeightedColoredTree::multiplicity(int v) const {
  int m = 0;
  for (int e : incident_[v]) m += edges_[e].weight;
  return m;
}

int WeightedColoredTree::degree() const {
  int d = 0;
  for (const Edge& e : edges_) d += e.weight;
  return d;
}

int WeightedColoredTree::other_end(int e, int v) const {
  const Edge& edge = edges_[e];
  return edge.u == v ? edge.v : edge.u;
}

TreeCanon canonicalize_tree(int vertex_count, std::span<const Edge> edges, std::span<const int> colors) {
  check_tree_shape(vertex_count, edges);
  if (!colors.empty() && static_cast<int>(colors.size()) != vertex_count) {
    throw StructuralError("colour count does not match vertex count");
  }
  const auto adj = adjacency(vertex_count, edges);
  const Encoder encoder{adj, colors};
  const std::vector<int> c = centers(vertex_count, adj);
  if (c.size() == 1) return encoder.encode(c[0], -1);
  // Rooted at one centre, the other centre's subtree is the unique deepest
  // child, so the rooted group already fixes both centres.
  TreeCanon a = encoder.encode(c[0], -1);
  TreeCanon b = encoder.encode(c[1], -1);
  if (a.key == b.key) {
    a.automorphisms *= 2;
    return a;
  }
  return a.key < b.key ? a : b;
}

std::string canonical_form(const WeightedColoredTree& t) {
  return canonicalize_tree(t.vertex_count(), t.edges(), t.colors()).key;
}

std::uint64_t automorphism_order(const WeightedColoredTree& t) {
  return canonicalize_tree(t.vertex_count(), t.edges(), t.colors()).automorphisms;
}

std::uint64_t a_gamma(const WeightedColoredTree& t) {
  std::uint64_t out = automorphism_order(t);
  for (const Edge& e : t.edges()) out *= static_cast<std::uint64_t>(e.weight);
  return out;
}

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 0xF];
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out += static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1]));
  }
  return out;
}

}  // namespace contactgw
