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

#include "contactgw/homog_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace contactgw {

HomogPoly2::HomogPoly2(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
}

HomogPoly2 HomogPoly2::monomial(unsigned degree, unsigned s_power, Rational c) {
  if (s_power > degree) throw std::invalid_argument("monomial exponent exceeds degree");
  HomogPoly2 p(degree);
  p.coeffs_[s_power] = std::move(c);
  return p;
}

bool HomogPoly2::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Rational HomogPoly2::evaluate(const Rational& s, const Rational& t) const {
  const unsigned n = degree();
  Rational sum;
  for (unsigned a = 0; a <= n; ++a) {
    if (coeffs_[a].is_zero()) continue;
    sum += coeffs_[a] * s.pow(a) * t.pow(n - a);
  }
  return sum;
}

HomogPoly2& HomogPoly2::operator+=(const HomogPoly2& rhs) {
  if (rhs.degree() != degree()) throw std::invalid_argument("adding polynomials of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

HomogPoly2& HomogPoly2::operator-=(const HomogPoly2& rhs) {
  if (rhs.degree() != degree()) throw std::invalid_argument("subtracting polynomials of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

HomogPoly2& HomogPoly2::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

HomogPoly2 operator*(const HomogPoly2& a, const HomogPoly2& b) {
  HomogPoly2 out(a.degree() + b.degree());
  for (unsigned i = 0; i <= a.degree(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j <= b.degree(); ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

HomogPoly2 HomogPoly2::operator-() const {
  HomogPoly2 out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

HomogPoly2 HomogPoly2::substitute(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) const {
  const unsigned n = degree();
  const HomogPoly2 s_image({b, a});  // a*s + b*t
  const HomogPoly2 t_image({d, c});  // c*s + d*t
  HomogPoly2 out(n);
  for (unsigned k = 0; k <= n; ++k) {
    if (coeffs_[k].is_zero()) continue;
    HomogPoly2 term({coeffs_[k]});
    for (unsigned i = 0; i < k; ++i) term = term * s_image;
    for (unsigned i = k; i < n; ++i) term = term * t_image;
    out += term;
  }
  return out;
}

std::string HomogPoly2::to_string() const {
  const unsigned n = degree();
  std::ostringstream os;
  bool first = true;
  for (unsigned i = n + 1; i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const unsigned tp = n - i;
    const bool has_vars = i > 0 || tp > 0;
    if (!has_vars || mag != Rational(1)) {
      os << mag;
      if (has_vars) os << "*";
    }
    if (i > 0) {
      os << "s";
      if (i > 1) os << "^" << i;
    }
    if (tp > 0) {
      if (i > 0) os << "*";
      os << "t";
      if (tp > 1) os << "^" << tp;
    }
  }
  if (first) os << "0";
  return os.str();
}

HomogPoly2 partial_s(const HomogPoly2& p) {
  const unsigned n = p.degree();
  if (n == 0) return HomogPoly2(0);
  std::vector<Rational> out(n);
  for (unsigned a = 1; a <= n; ++a) out[a - 1] = p.coefficient(a) * Rational(static_cast<long>(a));
  return HomogPoly2(std::move(out));
}

HomogPoly2 partial_t(const HomogPoly2& p) {
  const unsigned n = p.degree();
  if (n == 0) return HomogPoly2(0);
  std::vector<Rational> out(n);
  for (unsigned a = 0; a < n; ++a) out[a] = p.coefficient(a) * Rational(static_cast<long>(n - a));
  return HomogPoly2(std::move(out));
}

bool divide_by_linear_form(const HomogPoly2& p, const Rational& a, const Rational& b,
                           HomogPoly2& quotient) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("(0:0) is not a point of P^1");
  const unsigned n = p.degree();
  if (n == 0) return false;
  // p_k = b*q_{k-1} - a*q_k for the product (b*s - a*t) * q.
  std::vector<Rational> q(n);
  if (!b.is_zero()) {
    q[n - 1] = p.coefficient(n) / b;
    for (unsigned k = n - 1; k >= 1; --k) q[k - 1] = (p.coefficient(k) + a * q[k]) / b;
    if (!(p.coefficient(0) + a * q[0]).is_zero()) return false;
  } else {
    for (unsigned k = 0; k < n; ++k) q[k] = -p.coefficient(k) / a;
    if (!p.coefficient(n).is_zero()) return false;
  }
  quotient = HomogPoly2(std::move(q));
  return true;
}

unsigned root_multiplicity(const HomogPoly2& p, const Rational& a, const Rational& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("(0:0) is not a point of P^1");
  if (p.is_zero()) throw std::domain_error("infinite multiplicity");
  unsigned m = 0;
  HomogPoly2 current = p;
  HomogPoly2 next;
  while (current.degree() > 0 && divide_by_linear_form(current, a, b, next)) {
    current = std::move(next);
    ++m;
  }
  return m;
}

}  // namespace contactgw
