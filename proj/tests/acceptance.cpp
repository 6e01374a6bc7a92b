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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "contactgw/configs.hpp"
#include "contactgw/graphs.hpp"
#include "contactgw/invariants.hpp"
#include "contactgw/legendrian.hpp"
#include "fixtures/properties.hpp"
#include "fixtures/type_cells.hpp"
#include "oracle/schubert.hpp"

namespace {

using namespace contactgw;
using Clock = std::chrono::steady_clock;

// Collects sub-check outcomes for one criterion.
class Criterion {
 public:
  explicit Criterion(std::string id) : id_(std::move(id)) {}

  void check(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
    ++checks_;
  }

  template <typename A, typename B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << actual << ", expected " << expected;
    check(actual == expected, os.str());
  }

  void within(double seconds, double limit, const std::string& what) {
    std::ostringstream os;
    os << what << " took " << seconds << " s (limit " << limit << " s)";
    check(seconds < limit, os.str());
  }

  void note(const std::string& text) { notes_.push_back(text); }

  bool report(std::ostream& out) const {
    out << (failures_.empty() ? "PASS " : "FAIL ") << id_ << " (" << checks_ - failures_.size() << "/" << checks_
        << " checks)";
    for (const auto& n : notes_) out << " " << n;
    out << '\n';
    for (const auto& f : failures_) out << "    " << f << '\n';
    return failures_.empty();
  }

 private:
  std::string id_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Timed {
  InvariantResult result;
  double seconds;
};

Timed timed_compute(int d, InvariantKind kind, const ComputeOptions& options = {}) {
  const auto start = Clock::now();
  InvariantResult r = compute(InvariantRequest{d, kind, {}}, 2026, kDefaultAgreement, options);
  return {std::move(r), std::chrono::duration<double>(Clock::now() - start).count()};
}

std::string label(int d, InvariantKind kind) { return to_string(kind) + "(d=" + std::to_string(d) + ")"; }

void ac1(Criterion& c) {
  for (const auto& [d, expected] : std::vector<std::pair<int, long>>{{1, 2}, {2, 40}}) {
    const Timed t = timed_compute(d, InvariantKind::contact);
    c.expect_eq(t.result.value, Rational(expected), label(d, InvariantKind::contact));
    c.within(t.seconds, 1.0, label(d, InvariantKind::contact));
  }
}

void ac2(Criterion& c) {
  const Timed t = timed_compute(3, InvariantKind::contact);
  c.expect_eq(t.result.value, Rational(4160), "contact(d=3)");
  c.within(t.seconds, 2.0, "contact(d=3)");
}

void ac3(Criterion& c) {
  const Timed t = timed_compute(4, InvariantKind::contact);
  c.expect_eq(t.result.value, Rational(1089024), "contact(d=4)");
  c.within(t.seconds, 30.0, "contact(d=4)");
}

void ac4(Criterion& c) {
  double total = 0;
  for (const auto& [d, expected] : std::vector<std::pair<int, long>>{{2, 92}, {3, 80160}, {4, 383306880}}) {
    const Timed t = timed_compute(d, InvariantKind::gw_lines);
    c.expect_eq(t.result.value, Rational(expected), label(d, InvariantKind::gw_lines));
    total += t.seconds;
  }
  c.within(total, 30.0, "all three");
}

void ac5(Criterion& c) {
  const std::int64_t schubert = oracle::sigma1_top_power(2, 4);
  c.expect_eq(schubert, 2, "Schubert sigma_1^4 on G(2,4)");
  c.expect_eq(timed_compute(1, InvariantKind::gw_lines).result.value, Rational(schubert), "gw_lines(d=1) vs oracle");
}

void ac6(Criterion& c) {
  std::map<int, std::vector<GraphClass>> classes;
  for (int d = 1; d <= 4; ++d) classes[d] = enumerate_fixed_graphs(d);
  c.expect_eq(classes[1].size(), 6u, "classes(d=1)");
  c.expect_eq(classes[2].size(), fixtures::kReferenceClassCountD2, "classes(d=2)");
  c.expect_eq(classes[3].size(), fixtures::kReferenceClassCountD3, "classes(d=3)");
  std::map<int, std::map<std::string, TypeStatistic>> stats;
  for (int d = 2; d <= 4; ++d) stats[d] = type_statistics(classes[d]);
  for (const auto& cell : fixtures::reference_type_cells()) {
    const std::string where = "d=" + std::to_string(cell.degree) + " " + cell.label;
    const auto it = stats[cell.degree].find(combinatorial_type_key(WeightedColoredTree(cell.colors, cell.edges)));
    if (it == stats[cell.degree].end()) {
      c.check(false, where + ": type not enumerated");
      continue;
    }
    c.expect_eq(it->second.a_gamma, cell.a_gamma, where + " a(Gamma)");
    c.expect_eq(it->second.class_count, cell.classes, where + " classes");
  }
}

void ac7(Criterion& c) {
  const ConfigTable cubics = cubic_configuration_table();
  std::map<std::string, BigInt> counts;
  for (const auto& e : cubics.entries) counts[e.name] = e.count;
  c.expect_eq(counts["((3+1+3))"], BigInt(560), "((3+1+3))");
  c.expect_eq(counts["((2+3+2))"], BigInt(840), "((2+3+2))");
  c.expect_eq(counts["((3+2+2))"], BigInt(1680), "((3+2+2))");
  c.expect_eq(cubics.total, BigInt(3080), "cubic total");
  const BigInt n3 = timed_compute(3, InvariantKind::contact).result.value.num();
  const BigInt n4 = timed_compute(4, InvariantKind::contact).result.value.num();
  c.expect_eq(irreducible_estimate(3, n3), BigInt(1080), "irreducible cubics");
  const ConfigTable quartics = quartic_configuration_table(irreducible_estimate(3, n3));
  counts.clear();
  for (const auto& e : quartics.entries) counts[e.name] = e.count;
  c.expect_eq(counts["(3+1)"], BigInt(181440), "(3+1)");
  c.expect_eq(quartics.total, BigInt(710080), "quartic total");
  c.expect_eq(irreducible_estimate(4, n4), BigInt(378944), "irreducible quartics");
  for (const ConfigTable* t : {&cubics, &quartics}) {
    for (const auto& e : t->entries) c.expect_eq(count_recipe(e.recipe, t->pool), e.count, "recipe " + e.name);
  }
}

void ac8(Criterion& c) {
  for (int n = 3; n <= 12; ++n) {
    for (int l = 1; 2 * l < n; ++l) {
      if (std::gcd(n - l, l) != 1) continue;
      c.check(is_contact(buczynski(n - l, l)),
              "buczynski(" + std::to_string(n - l) + "," + std::to_string(l) + ") not contact");
    }
  }
  const RationalCurveParam cubic = buczynski(2, 1);
  // omega(f_s, f_t) = f0_s f1_t - f1_s f0_t + f2_s f3_t - f3_s f2_t.
  const HomogPoly2 a = partial_s(cubic[0]) * partial_t(cubic[1]);
  const HomogPoly2 b = partial_s(cubic[1]) * partial_t(cubic[0]);
  const HomogPoly2 e = partial_s(cubic[2]) * partial_t(cubic[3]);
  const HomogPoly2 f = partial_s(cubic[3]) * partial_t(cubic[2]);
  c.expect_eq((a - b).to_string(), std::string("3*s^2*t^2"), "3 s^2 t^2 term");
  c.expect_eq(f.to_string(), std::string("4*s^2*t^2"), "4 s^2 t^2 term");
  c.expect_eq(e.to_string(), std::string("s^2*t^2"), "s^2 t^2 term");
  c.check(contact_pairing(cubic).is_zero() && (a - b + e - f).is_zero(), "twisted cubic pairing not zero");
  const RationalCurveParam quartic = buczynski(3, 1);
  c.expect_eq(osculation_multiplicity(quartic, 1, 1).multiplicity, 3u, "osculation at (1:1)");
  c.expect_eq(osculation_multiplicity(quartic, 1, 0).multiplicity, 4u, "osculation at (1:0)");
  c.expect_eq(osculation_multiplicity(quartic, 0, 1).multiplicity, 4u, "osculation at (0:1)");
}

void ac9(Criterion& c) {
  const auto start = Clock::now();
  // Specialisation independence and lambda scaling on every computed invariant.
  for (int d = 1; d <= 5; ++d) {
    const std::vector<GraphClass> classes = enumerate_fixed_graphs(d);
    for (InvariantKind kind : {InvariantKind::contact, InvariantKind::gw_lines}) {
      const InvariantRequest req{d, kind, {}};
      const InvariantResult r = compute_over(classes, req, 7, 3, {});
      c.check(r.specializations_used.size() >= 2, label(d, kind) + " used fewer than 2 specialisations");
      ComputeOptions scaled;
      scaled.explicit_specializations = {r.specializations_used.front().scaled(7)};
      c.expect_eq(compute_over(classes, req, 8, 2, scaled).value, r.value, label(d, kind) + " under 7*lambda");
      c.check(r.is_integer == r.value.is_integer(), label(d, kind) + " integrality flag");
      if (d <= 4) c.check(r.is_integer, label(d, kind) + " not an integer");
      if (d == 5) {
        c.note(label(d, kind) + "=" + r.value.to_string() + (r.is_integer ? " [integer]" : " [non-integer]"));
      }
      const TorusSpec w = sample_specialization(99, static_cast<std::uint64_t>(d));
      const ClassSelector sel = req.selector();
      c.expect_eq(sum_contributions(classes, w, sel, 4), sum_contributions(classes, w, sel, 1),
                  label(d, kind) + " parallel vs sequential");
    }
  }
  for (int n = 2; n <= 5; ++n) {
    for (const WeightedShape& s : enumerate_tree_shapes(n)) {
      c.check(fixtures::colouring_orbits(s).holds(), "orbit identity, shape on " + std::to_string(n) + " vertices");
    }
  }
  for (int d = 1; d <= 4; ++d) {
    for (const WeightedShape& s : enumerate_weighted_shapes(d)) {
      c.check(fixtures::colouring_orbits(s).holds(), "orbit identity, weighted shape of degree " + std::to_string(d));
    }
  }
  for (int d = 1; d <= 3; ++d) {
    const std::string mismatch = fixtures::compare_with_brute_force(d);
    c.check(mismatch.empty(), "brute-force oracle d=" + std::to_string(d) + ": " + mismatch);
  }
  c.within(std::chrono::duration<double>(Clock::now() - start).count(), 600.0, "property suite");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"AC1 contact invariants d=1,2", ac1},
      {"AC2 contact invariant d=3", ac2},
      {"AC3 contact invariant d=4", ac3},
      {"AC4 line-incidence invariants d=2,3,4", ac4},
      {"AC5 lines meeting four lines", ac5},
      {"AC6 fixed-graph enumeration and type table", ac6},
      {"AC7 reducible configuration tables", ac7},
      {"AC8 Legendrian curves", ac8},
      {"AC9 property suite", ac9},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Criterion c(name);
    try {
      run(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    all = c.report(std::cout) && all;
    std::cout.flush();
  }
  return all ? 0 : 1;
}
