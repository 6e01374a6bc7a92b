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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace contactgw {

inline constexpr int kColorCount = 4;

struct Edge {
  int u = 0;
  int v = 0;
  int weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Fixed-locus graph: a tree whose vertices carry colours in {0,1,2,3}
/// (coordinate points of P^3) and whose edges carry positive covering
/// degrees. Adjacent vertices have different colours.
class WeightedColoredTree {
 public:
  /// Validates every invariant; throws StructuralError.
  WeightedColoredTree(std::vector<int> colors, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(colors_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int color(int v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edge indices incident to v.
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  int valence(int v) const { return static_cast<int>(incident_[v].size()); }
  /// Sum of weights of edges at v.
  int multiplicity(int v) const;
  /// Sum of all edge weights.
  int degree() const;
  /// Endpoint of edge e that is not v.
  int other_end(int e, int v) const;

  friend bool operator==(const WeightedColoredTree&, const WeightedColoredTree&) = default;

 private:
  std::vector<int> colors_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

/// Canonical encoding of a vertex-labelled tree together with the order of
/// its label-preserving automorphism group. `colors` may be empty, in which
/// case vertices are unlabelled.
struct TreeCanon {
  std::string key;
  std::uint64_t automorphisms = 1;
};

/// Centre-rooted recursive encoding: each child contributes
/// (edge weight, colour, sorted child encodings). Two-centre trees take the
/// smaller of the two rootings and double the automorphism count when both
/// rootings coincide. Throws StructuralError if the edges are not a tree.
TreeCanon canonicalize_tree(int vertex_count, std::span<const Edge> edges,
                            std::span<const int> colors);

std::string canonical_form(const WeightedColoredTree& t);
std::uint64_t automorphism_order(const WeightedColoredTree& t);
/// automorphism_order(t) times the product of edge weights.
std::uint64_t a_gamma(const WeightedColoredTree& t);

/// Lower-case hex of a byte string; used for canonical keys in JSON.
std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

}  // namespace contactgw
