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

#include "contactgw/legendrian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "contactgw/errors.hpp"

namespace contactgw {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Rational parse_rational_field(const std::string& field) {
  const std::string t = trim(field);
  if (t.empty()) throw DomainError("empty coefficient");
  try {
    return Rational::parse(t);
  } catch (const std::exception& e) {
    throw DomainError("bad coefficient '" + t + "': " + e.what());
  }
}

}  // namespace

const Matrix4& SymplecticForm::matrix() {
  static const Matrix4 m = {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}};
  return m;
}

Rational SymplecticForm::determinant() {
  // Gaussian elimination over Q with row swaps.
  Matrix4 a = matrix();
  Rational det = 1;
  for (int c = 0; c < 4; ++c) {
    int pivot = c;
    while (pivot < 4 && a[pivot][c].is_zero()) ++pivot;
    if (pivot == 4) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

bool SymplecticForm::is_antisymmetric() {
  const Matrix4& m = matrix();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (m[i][j] != -m[j][i]) return false;
    }
  }
  return true;
}

Rational SymplecticForm::pair(const Point4& u, const Point4& v) {
  const Matrix4& m = matrix();
  Rational sum;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!m[i][j].is_zero()) sum += m[i][j] * u[i] * v[j];
    }
  }
  return sum;
}

RationalCurveParam::RationalCurveParam(std::array<HomogPoly2, 4> coords) : coords_(std::move(coords)) {
  const unsigned d = coords_[0].degree();
  if (d == 0) throw DomainError("curve degree must be at least 1");
  bool any = false;
  for (const HomogPoly2& p : coords_) {
    if (p.degree() != d) throw DomainError("curve coordinates must share one degree");
    any = any || !p.is_zero();
  }
  if (!any) throw DomainError("all curve coordinates are zero");
}

Point4 RationalCurveParam::evaluate(const Rational& a, const Rational& b) const {
  return {coords_[0].evaluate(a, b), coords_[1].evaluate(a, b), coords_[2].evaluate(a, b),
          coords_[3].evaluate(a, b)};
}

RationalCurveParam RationalCurveParam::reparametrized(const Rational& a, const Rational& b, const Rational& c,
                                                      const Rational& d) const {
  return RationalCurveParam({coords_[0].substitute(a, b, c, d), coords_[1].substitute(a, b, c, d),
                             coords_[2].substitute(a, b, c, d), coords_[3].substitute(a, b, c, d)});
}

std::string RationalCurveParam::to_string() const {
  std::string out = "(";
  for (int i = 0; i < 4; ++i) {
    if (i > 0) out += " : ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

HomogPoly2 contact_pairing(const RationalCurveParam& f) {
  const Matrix4& m = SymplecticForm::matrix();
  std::array<HomogPoly2, 4> ds, dt;
  for (int i = 0; i < 4; ++i) {
    ds[i] = partial_s(f[i]);
    dt[i] = partial_t(f[i]);
  }
  HomogPoly2 sum(2 * f.degree() - 2);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (m[i][j].is_zero() || ds[i].is_zero() || dt[j].is_zero()) continue;
      sum += m[i][j] * (ds[i] * dt[j]);
    }
  }
  return sum;
}

bool is_contact(const RationalCurveParam& f) { return contact_pairing(f).is_zero(); }

RationalCurveParam buczynski(int k, int l) {
  if (!(k > l && l >= 1)) throw DomainError("buczynski curve needs k > l >= 1");
  if (std::gcd(k, l) != 1) throw DomainError("buczynski curve needs coprime k and l");
  const unsigned n = static_cast<unsigned>(k + l);
  return RationalCurveParam({HomogPoly2::monomial(n, n), HomogPoly2::monomial(n, 0, Rational(k - l, k + l)),
                             HomogPoly2::monomial(n, static_cast<unsigned>(l)),
                             HomogPoly2::monomial(n, static_cast<unsigned>(k))});
}

Point4 contact_plane(const RationalCurveParam& f, const Rational& a, const Rational& b) {
  const Point4 p = f.evaluate(a, b);
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero()) {
    throw DegenerateParametrization("all coordinates vanish at (" + a.to_string() + ":" + b.to_string() + ")");
  }
  return {p[1], -p[0], p[3], -p[2]};
}

Osculation osculation_multiplicity(const RationalCurveParam& f, const Rational& a, const Rational& b) {
  const Point4 plane = contact_plane(f, a, b);
  HomogPoly2 section(f.degree());
  for (int i = 0; i < 4; ++i) {
    if (!plane[i].is_zero()) section += plane[i] * f[i];
  }
  if (section.is_zero()) return {true, 0};
  return {false, root_multiplicity(section, a, b)};
}

RationalCurveParam parse_curve(const std::string& raw) {
  const std::string text = trim(raw);
  const std::string prefix = "buczynski:";
  if (text.rfind(prefix, 0) == 0) {
    const auto kl = split(text.substr(prefix.size()), ',');
    if (kl.size() != 2) throw DomainError("expected buczynski:k,l");
    try {
      return buczynski(std::stoi(trim(kl[0])), std::stoi(trim(kl[1])));
    } catch (const std::logic_error&) {
      throw DomainError("expected integers in buczynski:k,l");
    }
  }
  const auto lists = split(text, ';');
  if (lists.size() != 4) throw DomainError("expected 4 ';'-separated coefficient lists");
  std::array<std::vector<Rational>, 4> desc;
  unsigned degree = 0;
  for (int i = 0; i < 4; ++i) {
    for (const std::string& field : split(lists[i], ',')) desc[i].push_back(parse_rational_field(field));
    if (desc[i].empty()) throw DomainError("empty coefficient list");
    degree = std::max<unsigned>(degree, static_cast<unsigned>(desc[i].size() - 1));
  }
  std::array<HomogPoly2, 4> coords;
  for (int i = 0; i < 4; ++i) {
    const bool zero = std::all_of(desc[i].begin(), desc[i].end(), [](const Rational& c) { return c.is_zero(); });
    if (zero) {
      coords[i] = HomogPoly2(degree);
      continue;
    }
    if (desc[i].size() - 1 != degree) throw DomainError("curve coordinates must share one degree");
    std::vector<Rational> asc(desc[i].rbegin(), desc[i].rend());
    coords[i] = HomogPoly2(std::move(asc));
  }
  return RationalCurveParam(std::move(coords));
}

std::array<Rational, 2> parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw DomainError("expected a point a,b");
  std::array<Rational, 2> p{parse_rational_field(parts[0]), parse_rational_field(parts[1])};
  if (p[0].is_zero() && p[1].is_zero()) throw DomainError("point (0:0) is not in P^1");
  return p;
}

}  // namespace contactgw
