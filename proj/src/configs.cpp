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

#include "contactgw/configs.hpp"

#include "contactgw/errors.hpp"
#include "contactgw/invariants.hpp"

namespace contactgw {

namespace {

const BigInt kN1 = 2;

ConfigEntry entry(std::string name, IncidenceRecipe recipe, unsigned pool) {
  BigInt count = count_recipe(recipe, pool);
  return {std::move(name), std::move(recipe), std::move(count)};
}

ConfigTable finish(std::string family, unsigned pool, std::vector<ConfigEntry> entries) {
  ConfigTable t{std::move(family), pool, std::move(entries), 0};
  for (const ConfigEntry& e : t.entries) t.total += e.count;
  return t;
}

BigInt contact_invariant(int degree) {
  const InvariantResult r = compute(InvariantRequest{degree, InvariantKind::contact, {}}, 0);
  if (!r.value.is_integer()) throw Unsupported("non-integral contact invariant");
  return r.value.num();
}

}  // namespace

BigInt count_recipe(const IncidenceRecipe& recipe, unsigned pool) {
  if (recipe.symmetry_divisor <= 0) throw RecipeError("symmetry divisor must be positive");
  BigInt product = 1;
  unsigned remaining = pool;
  for (const RecipeStep& step : recipe.steps) {
    if (step.lines_chosen > remaining) {
      throw RecipeError("recipe chooses " + std::to_string(step.lines_chosen) + " lines from " +
                        std::to_string(remaining) + " remaining");
    }
    if (step.branch_factor <= 0) throw RecipeError("branch factor must be positive");
    product *= binomial(remaining, step.lines_chosen) * step.branch_factor;
    remaining -= step.lines_chosen;
  }
  if (product % recipe.symmetry_divisor != 0) {
    throw RecipeError("symmetry divisor " + to_string(recipe.symmetry_divisor) + " does not divide " +
                      to_string(product));
  }
  return product / recipe.symmetry_divisor;
}

ConfigTable cubic_configuration_table() {
  const unsigned pool = kCubicLinePool;
  return finish("cubics", pool,
                {entry("((3+1+3))", {2, {{3, kN1}, {3, kN1}, {1, kN1}}}, pool),
                 entry("((2+3+2))", {2, {{3, kN1}, {2, kN1}, {2, kN1}}}, pool),
                 entry("((3+2+2))", {1, {{3, kN1}, {2, kN1}, {2, kN1}}}, pool)});
}

ConfigTable quartic_configuration_table(const BigInt& cubic_irreducible) {
  const unsigned pool = kQuarticLinePool;
  const std::vector<RecipeStep> chain_3222{{3, kN1}, {2, kN1}, {2, kN1}, {2, kN1}};
  const std::vector<RecipeStep> chain_3123{{3, kN1}, {3, kN1}, {2, kN1}, {1, kN1}};
  return finish("quartics", pool,
                {entry("(3+1)", {1, {{3, kN1}, {6, cubic_irreducible}}}, pool),
                 entry("W((3+2+2+2))", {1, chain_3222}, pool),
                 entry("W((3+1+2+3))", {1, chain_3123}, pool),
                 entry("W((2+3+2+2))", {1, chain_3222}, pool),
                 entry("W((2+3+1+3))", {1, chain_3123}, pool),
                 entry("w((3+2+2+2))", {6, chain_3222}, pool),
                 entry("w((2+3+2+2))", {2, chain_3222}, pool),
                 entry("w((1+3+3+2))", {2, {{3, kN1}, {3, kN1}, {1, kN1}, {2, kN1}}}, pool),
                 entry("w((0+3+3+3))", {6, {{3, kN1}, {3, kN1}, {3, kN1}, {0, kN1}}}, pool)});
}

ConfigTable quartic_configuration_table() {
  return quartic_configuration_table(irreducible_estimate(3, contact_invariant(3)));
}

BigInt irreducible_estimate(int degree, const BigInt& n_d) {
  switch (degree) {
    case 3:
      return n_d - cubic_configuration_table().total;
    case 4:
      return n_d - quartic_configuration_table().total;
    default:
      throw Unsupported("configuration tables exist only for degrees 3 and 4");
  }
}

ConfigTable configuration_table(const std::string& family) {
  if (family == "cubics") return cubic_configuration_table();
  if (family == "quartics") return quartic_configuration_table();
  throw Unsupported("unknown configuration family: " + family);
}

}  // namespace contactgw
