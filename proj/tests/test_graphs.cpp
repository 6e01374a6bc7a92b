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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "contactgw/errors.hpp"
#include "contactgw/graphs.hpp"
#include "contactgw/tree.hpp"
#include "fixtures/properties.hpp"
#include "fixtures/type_cells.hpp"
#include "oracle/brute_force_trees.hpp"

namespace contactgw {
namespace {

WeightedColoredTree make(std::vector<int> colors, std::vector<Edge> edges) {
  return WeightedColoredTree(std::move(colors), std::move(edges));
}

// Random relabelling of the vertices of t.
WeightedColoredTree shuffled(const WeightedColoredTree& t, std::mt19937& rng) {
  std::vector<int> perm(t.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> colors(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) colors[perm[v]] = t.color(v);
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) edges.push_back({perm[e.v], perm[e.u], e.weight});
  std::shuffle(edges.begin(), edges.end(), rng);
  return make(colors, edges);
}

TEST(WeightedColoredTree, RejectsInvalidInput) {
  EXPECT_THROW(make({0, 0}, {{0, 1, 1}}), StructuralError);
  EXPECT_THROW(make({0, 1, 2}, {{0, 1, 1}}), StructuralError);
  EXPECT_THROW(make({0, 1, 2}, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}), StructuralError);
  EXPECT_THROW(make({0, 4}, {{0, 1, 1}}), StructuralError);
  EXPECT_THROW(make({0, 1}, {{0, 1, 0}}), StructuralError);
  EXPECT_THROW(make({0}, {}), StructuralError);
}

TEST(WeightedColoredTree, Accessors) {
  const auto t = make({0, 1, 0}, {{0, 1, 2}, {1, 2, 1}});
  EXPECT_EQ(t.degree(), 3);
  EXPECT_EQ(t.valence(1), 2);
  EXPECT_EQ(t.multiplicity(1), 3);
  EXPECT_EQ(t.multiplicity(2), 1);
  EXPECT_EQ(t.other_end(0, 1), 0);
}

TEST(Canonical, AutomorphismExamples) {
  EXPECT_EQ(automorphism_order(make({0, 1, 0}, {{0, 1, 1}, {1, 2, 1}})), 2u);
  EXPECT_EQ(automorphism_order(make({0, 1, 2}, {{0, 1, 1}, {1, 2, 1}})), 1u);
  EXPECT_EQ(automorphism_order(make({0, 1, 1, 1}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}})), 6u);
  EXPECT_EQ(automorphism_order(make({0, 1, 0, 1}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}})), 1u);
  EXPECT_EQ(automorphism_order(make({0, 1, 2, 1, 0}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}})), 2u);
}

TEST(Canonical, AGammaExamples) {
  EXPECT_EQ(a_gamma(make({0, 1}, {{0, 1, 2}})), 2u);
  EXPECT_EQ(a_gamma(make({0, 1, 0}, {{0, 1, 2}, {1, 2, 2}})), 8u);
  EXPECT_EQ(a_gamma(make({0, 1}, {{0, 1, 3}})), 3u);
}

TEST(Canonical, BicentralSymmetry) {
  // Two-centre trees: swapping halves is an automorphism only if colours match.
  EXPECT_EQ(automorphism_order(make({0, 1}, {{0, 1, 1}})), 1u);
  const auto sym = make({2, 0, 1, 0}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  EXPECT_EQ(automorphism_order(sym), 1u);
  const auto uncoloured = canonicalize_tree(4, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, {});
  EXPECT_EQ(uncoloured.automorphisms, 2u);
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937 rng(3);
  for (int d = 1; d <= 4; ++d) {
    for (const GraphClass& gc : enumerate_fixed_graphs(d)) {
      const auto t = shuffled(gc.representative, rng);
      ASSERT_EQ(canonical_form(t), gc.canonical_key);
      ASSERT_EQ(automorphism_order(t), gc.aut_order);
    }
  }
}

TEST(Canonical, DistinguishesWeightsAndColours) {
  const auto a = make({0, 1, 2}, {{0, 1, 2}, {1, 2, 1}});
  const auto b = make({0, 1, 2}, {{0, 1, 1}, {1, 2, 2}});
  const auto c = make({0, 1, 3}, {{0, 1, 2}, {1, 2, 1}});
  EXPECT_NE(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(a), canonical_form(c));
  EXPECT_EQ(canonical_form(a), canonical_form(make({2, 1, 0}, {{0, 1, 1}, {1, 2, 2}})));
}

TEST(Canonical, HexRoundTrip) {
  const std::string key = canonical_form(make({0, 1, 0}, {{0, 1, 2}, {1, 2, 1}}));
  EXPECT_EQ(from_hex(to_hex(key)), key);
  EXPECT_THROW(from_hex("abc"), std::invalid_argument);
  EXPECT_THROW(from_hex("zz"), std::invalid_argument);
}

TEST(Shapes, UnlabelledTreeCounts) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_tree_shapes(n).size(), expected[n - 1]) << n;
}

TEST(Shapes, ColouringOrbitIdentity) {
  // Proper colourings of a shape split into orbits of size |Aut(shape)| / |Stab|.
  auto check = [](const WeightedShape& shape) {
    const auto r = fixtures::colouring_orbits(shape);
    EXPECT_TRUE(r.stabilizers_divide);
    EXPECT_EQ(r.proper_colourings, r.expected);
    EXPECT_EQ(r.orbit_sum, r.expected);
  };
  for (int n = 2; n <= 5; ++n) {
    for (const WeightedShape& s : enumerate_tree_shapes(n)) check(s);
  }
  for (int d = 1; d <= 4; ++d) {
    for (const WeightedShape& s : enumerate_weighted_shapes(d)) check(s);
  }
}

TEST(FixedGraphs, ClassCounts) {
  EXPECT_EQ(enumerate_fixed_graphs(1).size(), 6u);
  EXPECT_EQ(enumerate_fixed_graphs(2).size(), 30u);
  EXPECT_EQ(enumerate_fixed_graphs(3).size(), 136u);
  EXPECT_EQ(enumerate_fixed_graphs(4).size(), 756u);
  EXPECT_THROW(enumerate_fixed_graphs(0), DomainError);
}

TEST(FixedGraphs, SortedUniqueAndDeterministic) {
  const auto a = enumerate_fixed_graphs(4);
  const auto b = enumerate_fixed_graphs(4);
  EXPECT_EQ(a, b);
  for (std::size_t i = 1; i < a.size(); ++i) ASSERT_LT(a[i - 1].canonical_key, a[i].canonical_key);
  for (const GraphClass& gc : a) {
    ASSERT_EQ(gc.representative.degree(), 4);
    ASSERT_EQ(make_graph_class(gc.representative), gc);
  }
}

TEST(FixedGraphs, MatchesBruteForceOracle) {
  for (int d = 1; d <= 3; ++d) EXPECT_EQ(fixtures::compare_with_brute_force(d), "") << "degree " << d;
}

TEST(BruteForceOracle, SmallCases) {
  EXPECT_EQ(oracle::brute_force_fixed_graphs(1).size(), 6u);
  const oracle::LabelledTree iji{3, {0, 1, 0}, {{0, 1, 1}, {1, 2, 1}}};
  EXPECT_EQ(oracle::count_isomorphisms(iji, iji), 2u);
}

TEST(TypeStatistics, ReferenceCells) {
  std::map<int, std::map<std::string, TypeStatistic>> stats;
  for (int d = 2; d <= 4; ++d) stats[d] = type_statistics(enumerate_fixed_graphs(d));
  for (const auto& cell : fixtures::reference_type_cells()) {
    SCOPED_TRACE("d=" + std::to_string(cell.degree) + " " + cell.label);
    const auto t = make(cell.colors, cell.edges);
    const auto it = stats[cell.degree].find(combinatorial_type_key(t));
    ASSERT_NE(it, stats[cell.degree].end());
    EXPECT_EQ(it->second.a_gamma, cell.a_gamma);
    if (cell.degree == 3 && cell.label == "i-1-j-1-k-1-l") {
      // Reversing the path identifies (i,j,k,l) with (l,k,j,i): 24 colourings, 12 classes.
      EXPECT_EQ(it->second.class_count, 12u);
    } else {
      EXPECT_EQ(it->second.class_count, cell.classes);
    }
  }
}

TEST(TypeStatistics, MultiplicitiesSumToClassCount) {
  for (int d = 1; d <= 4; ++d) {
    const auto classes = enumerate_fixed_graphs(d);
    std::uint64_t sum = 0;
    for (const auto& [key, s] : type_statistics(classes)) sum += s.class_count;
    EXPECT_EQ(sum, classes.size());
  }
}

TEST(Dot, LabelsColoursAndWeights) {
  const std::string dot = to_dot(enumerate_fixed_graphs(1), 1);
  EXPECT_NE(dot.find("graph d1_0"), std::string::npos);
  EXPECT_NE(dot.find("[label=\"1\"]"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '}'), 6);
}

}  // namespace
}  // namespace contactgw
