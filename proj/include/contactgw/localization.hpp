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

#include <array>
#include <string>

#include "contactgw/graphs.hpp"
#include "contactgw/rational.hpp"

namespace contactgw {

/// Specialisation of the torus weights lambda_0..lambda_3.
class TorusSpec {
 public:
  /// Throws DomainError unless the four values are pairwise distinct.
  explicit TorusSpec(std::array<Rational, kColorCount> lambda);

  const Rational& operator[](int i) const { return lambda_[i]; }
  const std::array<Rational, kColorCount>& values() const { return lambda_; }
  TorusSpec scaled(const Rational& c) const;
  std::string to_string() const;

  friend bool operator==(const TorusSpec&, const TorusSpec&) = default;

 private:
  std::array<Rational, kColorCount> lambda_;
};

/// Integrand selector: H^m, optionally times the top Chern class of the
/// contact bundle.
struct ClassSelector {
  int incidence_exponent = 0;
  bool include_contact_class = false;

  /// c_{2d-1}(E_d) * H^{2d+1}.
  static ClassSelector contact(int degree) { return {2 * degree + 1, true}; }
  /// H^{4d}: curves meeting 4d general lines.
  static ClassSelector gw_lines(int degree) { return {4 * degree, false}; }

  /// True when the integrand has the dimension 4d of the moduli space.
  bool is_balanced(int degree) const;

  friend bool operator==(const ClassSelector&, const ClassSelector&) = default;
};

Rational vertex_factor(const WeightedColoredTree& g, const TorusSpec& w);
Rational edge_factor(const WeightedColoredTree& g, const TorusSpec& w);
Rational incidence_class(const WeightedColoredTree& g, const TorusSpec& w);
Rational contact_class(const WeightedColoredTree& g, const TorusSpec& w);

/// [contact] * H^m * V * E / a(Gamma). Throws SpecializationDegenerate.
Rational graph_contribution(const GraphClass& g, const TorusSpec& w, const ClassSelector& sel);

}  // namespace contactgw
