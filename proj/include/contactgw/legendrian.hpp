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

#include "contactgw/homog_poly.hpp"
#include "contactgw/rational.hpp"

namespace contactgw {

using Point4 = std::array<Rational, 4>;
using Matrix4 = std::array<std::array<Rational, 4>, 4>;

/// omega(u, v) = u0 v1 - u1 v0 + u2 v3 - u3 v2 on C^4.
struct SymplecticForm {
  static const Matrix4& matrix();
  static Rational determinant();
  static bool is_antisymmetric();
  static Rational pair(const Point4& u, const Point4& v);
};

/// f(s:t) = (f0 : f1 : f2 : f3), all of one degree d >= 1, not all zero.
class RationalCurveParam {
 public:
  /// Throws DomainError on degree mismatch, degree 0 or all-zero input.
  explicit RationalCurveParam(std::array<HomogPoly2, 4> coords);

  unsigned degree() const { return coords_[0].degree(); }
  const HomogPoly2& operator[](int i) const { return coords_[i]; }
  const std::array<HomogPoly2, 4>& coords() const { return coords_; }

  Point4 evaluate(const Rational& a, const Rational& b) const;
  /// Composes with s -> a s + b t, t -> c s + d t.
  RationalCurveParam reparametrized(const Rational& a, const Rational& b, const Rational& c,
                                    const Rational& d) const;
  std::string to_string() const;

  friend bool operator==(const RationalCurveParam&, const RationalCurveParam&) = default;

 private:
  std::array<HomogPoly2, 4> coords_;
};

/// omega(df/ds, df/dt), homogeneous of degree 2d - 2.
HomogPoly2 contact_pairing(const RationalCurveParam& f);
bool is_contact(const RationalCurveParam& f);

/// (s^(k+l), (k-l)/(k+l) t^(k+l), s^l t^k, s^k t^l). Requires k > l >= 1
/// coprime; throws DomainError otherwise.
RationalCurveParam buczynski(int k, int l);

/// Coefficients (p1, -p0, p3, -p2) of the contact plane at p = f(a:b).
/// Throws DegenerateParametrization when f(a:b) = 0.
Point4 contact_plane(const RationalCurveParam& f, const Rational& a, const Rational& b);

struct Osculation {
  /// The curve lies in the plane; multiplicity is unbounded.
  bool total = false;
  unsigned multiplicity = 0;
};

/// Order of vanishing at (a:b) of the contact plane at f(a:b) restricted to f.
Osculation osculation_multiplicity(const RationalCurveParam& f, const Rational& a, const Rational& b);

/// "buczynski:k,l" or four ';'-separated coefficient lists, each ','-separated
/// in descending powers of s ("1,0" is s, "0,1" is t). A list equal to a
/// single 0 is the zero polynomial of the common degree.
RationalCurveParam parse_curve(const std::string& text);

/// "a,b" as two rationals.
std::array<Rational, 2> parse_point(const std::string& text);

}  // namespace contactgw
