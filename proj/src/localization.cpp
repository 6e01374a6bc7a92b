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

#include "contactgw/localization.hpp"

#include <sstream>

#include "contactgw/errors.hpp"

namespace contactgw {

namespace {

Rational power_or_degenerate(const Rational& base, long exponent, const char* what) {
  if (exponent < 0 && base.is_zero()) {
    throw SpecializationDegenerate(std::string(what) + " is zero but raised to power " +
                                   std::to_string(exponent));
  }
  return base.pow(exponent);
}

// prod_{j != i} (lambda_i - lambda_j): tangent weight product at q_i.
Rational tangent_product(const TorusSpec& w, int i) {
  Rational p = 1;
  for (int j = 0; j < kColorCount; ++j) {
    if (j != i) p *= w[i] - w[j];
  }
  return p;
}

}  // namespace

TorusSpec::TorusSpec(std::array<Rational, kColorCount> lambda) : lambda_(std::move(lambda)) {
  for (int i = 0; i < kColorCount; ++i) {
    for (int j = i + 1; j < kColorCount; ++j) {
      if (lambda_[i] == lambda_[j]) {
        throw DomainError("torus weights must be pairwise distinct (lambda_" + std::to_string(i) +
                          " == lambda_" + std::to_string(j) + ")");
      }
    }
  }
}

TorusSpec TorusSpec::scaled(const Rational& c) const {
  std::array<Rational, kColorCount> out = lambda_;
  for (auto& x : out) x *= c;
  return TorusSpec(out);
}

std::string TorusSpec::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < kColorCount; ++i) os << (i ? "," : "") << lambda_[i];
  return os.str();
}

bool ClassSelector::is_balanced(int degree) const {
  const int contact_rank = include_contact_class ? 2 * degree - 1 : 0;
  return incidence_exponent >= 0 && incidence_exponent + contact_rank == 4 * degree;
}

Rational vertex_factor(const WeightedColoredTree& g, const TorusSpec& w) {
  Rational out = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int i = g.color(v);
    const long val = g.valence(v);
    Rational flag_sum;
    Rational flags = 1;
    for (int e : g.incident(v)) {
      const int j = g.color(g.other_end(e, v));
      const Rational flag = Rational(g.edges()[e].weight) / (w[i] - w[j]);
      flag_sum += flag;
      flags *= flag;
    }
    out *= tangent_product(w, i).pow(val - 1);
    out *= power_or_degenerate(flag_sum, val - 3, "flag sum at vertex");
    out *= flags;
  }
  return out;
}

Rational edge_factor(const WeightedColoredTree& g, const TorusSpec& w) {
  Rational out = 1;
  for (const Edge& edge : g.edges()) {
    const int i = g.color(edge.u);
    const int j = g.color(edge.v);
    const long d = edge.weight;
    const Rational rd(d);
    Rational factorial = 1;
    for (long k = 2; k <= d; ++k) factorial *= Rational(k);
    Rational term = (rd / (w[i] - w[j])).pow(2 * d) / (factorial * factorial);
    if (d % 2 != 0) term = -term;
    for (int k = 0; k < kColorCount; ++k) {
      if (k == i || k == j) continue;
      for (long a = 0; a <= d; ++a) {
        const Rational denom = (Rational(a) * w[i] + Rational(d - a) * w[j]) / rd - w[k];
        if (denom.is_zero()) {
          throw SpecializationDegenerate("edge denominator (" + std::to_string(a) + "*l" +
                                         std::to_string(i) + " + " + std::to_string(d - a) + "*l" +
                                         std::to_string(j) + ")/" + std::to_string(d) + " - l" +
                                         std::to_string(k) + " vanishes at (" + w.to_string() + ")");
        }
        term /= denom;
      }
    }
    out *= term;
  }
  return out;
}

Rational incidence_class(const WeightedColoredTree& g, const TorusSpec& w) {
  Rational sum;
  for (int v = 0; v < g.vertex_count(); ++v) sum += Rational(g.multiplicity(v)) * w[g.color(v)];
  return sum;
}

Rational contact_class(const WeightedColoredTree& g, const TorusSpec& w) {
  Rational out = 1;
  for (const Edge& edge : g.edges()) {
    const Rational& li = w[g.color(edge.u)];
    const Rational& lj = w[g.color(edge.v)];
    const long d = edge.weight;
    // Mixed monomials s^a t^(2d-a), 0 < a < 2d; symmetric in the endpoints.
    for (long a = 1; a <= 2 * d - 1; ++a) {
      out *= (Rational(a) * li + Rational(2 * d - a) * lj) / Rational(d);
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    out *= (Rational(2) * w[g.color(v)]).pow(g.valence(v) - 1);
  }
  return out;
}

Rational graph_contribution(const GraphClass& g, const TorusSpec& w, const ClassSelector& sel) {
  const WeightedColoredTree& t = g.representative;
  Rational out = vertex_factor(t, w) * edge_factor(t, w);
  if (sel.incidence_exponent != 0) out *= incidence_class(t, w).pow(sel.incidence_exponent);
  if (sel.include_contact_class) out *= contact_class(t, w);
  std::uint64_t a = g.aut_order;
  for (const Edge& e : t.edges()) a *= static_cast<std::uint64_t>(e.weight);
  return out / Rational(BigInt(static_cast<unsigned long>(a)));
}

}  // namespace contactgw
