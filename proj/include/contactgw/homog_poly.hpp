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

/// Dense homogeneous polynomial in (s, t). coefficient(a) multiplies
/// s^a t^(degree - a). The zero polynomial keeps its degree.
class HomogPoly2 {
 public:
  /// Zero polynomial of degree 0.
  HomogPoly2() : coeffs_(1) {}
  /// Zero polynomial of the given degree.
  explicit HomogPoly2(unsigned degree) : coeffs_(degree + 1) {}
  /// coeffs[a] is the coefficient of s^a t^(n-a); n = coeffs.size() - 1.
  /// Throws std::invalid_argument on an empty vector.
  explicit HomogPoly2(std::vector<Rational> coeffs);

  static HomogPoly2 monomial(unsigned degree, unsigned s_power, Rational c = 1);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& coefficient(unsigned s_power) const { return coeffs_.at(s_power); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  Rational evaluate(const Rational& s, const Rational& t) const;

  /// Requires equal degrees; throws std::invalid_argument otherwise.
  HomogPoly2& operator+=(const HomogPoly2& rhs);
  HomogPoly2& operator-=(const HomogPoly2& rhs);
  HomogPoly2& operator*=(const Rational& c);

  friend HomogPoly2 operator+(HomogPoly2 a, const HomogPoly2& b) { return a += b; }
  friend HomogPoly2 operator-(HomogPoly2 a, const HomogPoly2& b) { return a -= b; }
  friend HomogPoly2 operator*(HomogPoly2 a, const Rational& c) { return a *= c; }
  friend HomogPoly2 operator*(const Rational& c, HomogPoly2 a) { return a *= c; }
  friend HomogPoly2 operator*(const HomogPoly2& a, const HomogPoly2& b);
  HomogPoly2 operator-() const;

  friend bool operator==(const HomogPoly2&, const HomogPoly2&) = default;

  /// Linear substitution s -> a*s + b*t, t -> c*s + d*t.
  HomogPoly2 substitute(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) const;

  /// Human-readable form such as "3*s^2*t - 1/2*t^3".
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

HomogPoly2 partial_s(const HomogPoly2& p);
HomogPoly2 partial_t(const HomogPoly2& p);

/// Divides p by (b*s - a*t) if the division is exact; returns false
/// otherwise. The linear form vanishes at the point (a:b).
bool divide_by_linear_form(const HomogPoly2& p, const Rational& a, const Rational& b,
                           HomogPoly2& quotient);

/// Largest m with (b*s - a*t)^m dividing p. Throws std::domain_error for
/// p == 0 ("infinite multiplicity") or the point (0:0).
unsigned root_multiplicity(const HomogPoly2& p, const Rational& a, const Rational& b);

}  // namespace contactgw
