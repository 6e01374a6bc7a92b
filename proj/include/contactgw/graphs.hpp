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
#include <map>
#include <string>
#include <vector>

#include "contactgw/tree.hpp"

namespace contactgw {

/// One isomorphism class of torus-fixed stable maps.
struct GraphClass {
  WeightedColoredTree representative;
  std::uint64_t aut_order = 1;
  std::string canonical_key;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

/// Uncoloured tree with edge weights, used during enumeration.
struct WeightedShape {
  int vertex_count = 0;
  std::vector<Edge> edges;
};

/// Unlabelled trees on `vertex_count` vertices (all weights 1), one per
/// isomorphism class, ordered by canonical key.
std::vector<WeightedShape> enumerate_tree_shapes(int vertex_count);

/// Trees with positive edge weights summing to `degree`, up to
/// weight-preserving isomorphism.
std::vector<WeightedShape> enumerate_weighted_shapes(int degree);

/// Weight-preserving automorphisms of an uncoloured shape.
std::uint64_t shape_automorphism_order(const WeightedShape& shape);

/// Every fixed graph of total degree d, one per class, sorted by key.
/// Throws DomainError("degree must be positive") for d < 1.
std::vector<GraphClass> enumerate_fixed_graphs(int degree);

/// Builds a class record from a tree (computes key and automorphisms).
GraphClass make_graph_class(WeightedColoredTree tree);

/// Key of the colour pattern up to permutations of {0,1,2,3}: trees with
/// the same key differ only by renaming colours.
std::string combinatorial_type_key(const WeightedColoredTree& t);

/// Readable form of a type key using letters i,j,k,l for colours.
std::string combinatorial_type_label(const std::string& type_key);

struct TypeStatistic {
  std::string label;
  std::uint64_t a_gamma = 0;
  std::uint64_t class_count = 0;
};

/// Class counts grouped by combinatorial type, ordered by type key.
std::map<std::string, TypeStatistic> type_statistics(const std::vector<GraphClass>& classes);

/// Graphviz description; vertices labelled with colours, edges with weights.
std::string to_dot(const std::vector<GraphClass>& classes, int degree);

}  // namespace contactgw
