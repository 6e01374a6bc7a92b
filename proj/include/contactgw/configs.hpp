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

#include "contactgw/rational.hpp"

namespace contactgw {

inline constexpr unsigned kCubicLinePool = 7;
inline constexpr unsigned kQuarticLinePool = 9;

inline constexpr const char* kMultiplicityAssumption =
    "assumption: every reducible boundary configuration is counted with multiplicity 1; "
    "irreducible estimates are conditional on it";

/// Choose `lines_chosen` of the remaining lines, then multiply by the number
/// of contact curves through them.
struct RecipeStep {
  unsigned lines_chosen = 0;
  BigInt branch_factor = 1;
};

struct IncidenceRecipe {
  BigInt symmetry_divisor = 1;
  std::vector<RecipeStep> steps;
};

/// (1/divisor) * prod binomial(remaining, chosen) * branch over a shrinking
/// pool. Throws RecipeError on pool underflow, a nonpositive divisor or
/// branch factor, or a product the divisor does not divide.
BigInt count_recipe(const IncidenceRecipe& recipe, unsigned pool);

struct ConfigEntry {
  std::string name;
  IncidenceRecipe recipe;
  BigInt count;
};

struct ConfigTable {
  std::string family;
  unsigned pool = 0;
  std::vector<ConfigEntry> entries;
  /// Sum of entry counts.
  BigInt total;
};

ConfigTable cubic_configuration_table();

/// The (3+1) entry needs the number of irreducible contact cubics.
ConfigTable quartic_configuration_table(const BigInt& cubic_irreducible);
/// Derives the irreducible cubic count from the degree-3 invariant.
ConfigTable quartic_configuration_table();

/// n_d minus the reducible total for d in {3, 4}; throws Unsupported otherwise.
BigInt irreducible_estimate(int degree, const BigInt& n_d);

/// "cubics" or "quartics"; throws Unsupported for anything else.
ConfigTable configuration_table(const std::string& family);

}  // namespace contactgw
