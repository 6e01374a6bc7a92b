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

#include "contactgw/cli.hpp"

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "contactgw/configs.hpp"
#include "contactgw/errors.hpp"
#include "contactgw/graph_cache.hpp"
#include "contactgw/graphs.hpp"
#include "contactgw/invariants.hpp"
#include "contactgw/json_io.hpp"
#include "contactgw/legendrian.hpp"

namespace contactgw {

namespace {

using nlohmann::json;

struct GlobalFlags {
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  std::uint64_t seed = 0;
  std::string threads = "1";
  bool no_timing = false;
};

struct ComputeFlags {
  int degree = 0;
  std::string invariant = "contact";
  std::string lambda;
  int agree = kDefaultAgreement;
};

struct GraphsFlags {
  int degree = 0;
  bool stats = false;
};

struct LegendrianFlags {
  std::string curve;
  std::string point = "1,1";
  std::string action = "verify";
};

/// Thrown for bad flag combinations detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

unsigned parse_threads(const std::string& text) {
  if (text == "auto") return 0;
  try {
    std::size_t used = 0;
    const long n = std::stol(text, &used);
    if (used == text.size() && n >= 1) return static_cast<unsigned>(n);
  } catch (const std::logic_error&) {
  }
  throw UsageError("--threads must be a positive integer or 'auto'");
}

TorusSpec parse_lambda(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      values.push_back(Rational::parse(field));
    } catch (const std::exception&) {
      throw UsageError("bad --lambda entry '" + field + "'");
    }
  }
  if (values.size() != kColorCount) throw UsageError("--lambda needs exactly 4 values");
  try {
    return TorusSpec({values[0], values[1], values[2], values[3]});
  } catch (const DomainError& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
}

json bigint_json(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return to_string(n);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const std::string& command) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("--format " + format + " is not available for " + command);
}

int cmd_compute(const GlobalFlags& g, const ComputeFlags& c, std::ostream& out, std::ostream& err) {
  require_format(g.format, {"json", "text", "csv"}, "compute");
  if (c.degree < 1) throw UsageError("--degree must be at least 1");
  InvariantRequest req{c.degree, parse_invariant_kind(c.invariant), {}};
  if (req.kind == InvariantKind::custom) throw UsageError("--invariant must be contact or gw-lines");
  ComputeOptions options;
  options.threads = parse_threads(g.threads);
  if (!g.no_cache) options.cache_dir = g.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g.cache_dir);
  if (!c.lambda.empty()) options.explicit_specializations.push_back(parse_lambda(c.lambda));
  if (c.agree < 2) throw UsageError("--agree must be at least 2");

  const InvariantResult r = compute(req, g.seed, c.agree, options);
  if (!r.is_integer) err << "warning: value " << r.value << " is not an integer\n";

  if (g.format == "json") {
    out << result_to_json(req, r, !g.no_timing).dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::string> specs;
  for (const TorusSpec& w : r.specializations_used) specs.push_back(w.to_string());
  if (g.format == "text") {
    out << "degree: " << req.degree << '\n'
        << "kind: " << to_string(req.kind) << '\n'
        << "value: " << r.value << '\n'
        << "is_integer: " << (r.is_integer ? "true" : "false") << '\n'
        << "graph_classes: " << r.graph_class_count << '\n';
    for (const std::string& s : specs) out << "specialization: " << s << '\n';
    if (!g.no_timing) out << "elapsed_ms: " << r.elapsed.count() << '\n';
    return kExitOk;
  }
  out << "degree,kind,value,is_integer,graph_classes,specializations" << (g.no_timing ? "" : ",elapsed_ms") << '\n';
  std::string joined;
  for (const std::string& s : specs) joined += (joined.empty() ? "" : ";") + s;
  out << req.degree << ',' << to_string(req.kind) << ',' << r.value << ',' << (r.is_integer ? "true" : "false")
      << ',' << r.graph_class_count << ",\"" << joined << '"';
  if (!g.no_timing) out << ',' << r.elapsed.count();
  out << '\n';
  return kExitOk;
}

int cmd_graphs(const GlobalFlags& g, const GraphsFlags& c, std::ostream& out) {
  require_format(g.format, {"json", "text", "csv", "dot"}, "graphs");
  if (c.degree < 1) throw UsageError("--degree must be at least 1");
  const std::vector<GraphClass> classes = enumerate_fixed_graphs(c.degree);

  if (c.stats) {
    const auto stats = type_statistics(classes);
    if (g.format == "json") {
      json types = json::array();
      for (const auto& [key, s] : stats) {
        types.push_back({{"type", s.label}, {"a_gamma", s.a_gamma}, {"classes", s.class_count}});
      }
      out << json{{"degree", c.degree}, {"classes", classes.size()}, {"types", std::move(types)}}.dump(2) << '\n';
    } else if (g.format == "csv") {
      out << "type,a_gamma,classes\n";
      for (const auto& [key, s] : stats) out << s.label << ',' << s.a_gamma << ',' << s.class_count << '\n';
    } else if (g.format == "text") {
      out << "degree " << c.degree << ": " << classes.size() << " classes\n";
      for (const auto& [key, s] : stats) {
        out << std::left << std::setw(40) << s.label << " a=" << std::setw(6) << s.a_gamma << " classes=" << s.class_count
            << '\n';
      }
    } else {
      throw UsageError("--stats does not support --format dot");
    }
    return kExitOk;
  }

  if (g.format == "json") {
    out << graphs_to_json(c.degree, classes).dump(2) << '\n';
  } else if (g.format == "dot") {
    out << to_dot(classes, c.degree);
  } else {
    const bool csv = g.format == "csv";
    if (csv) out << "index,colors,edges,aut_order,a_gamma\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const WeightedColoredTree& t = classes[i].representative;
      std::string colors, edges;
      for (int v = 0; v < t.vertex_count(); ++v) colors += (v ? " " : "") + std::to_string(t.color(v));
      for (const Edge& e : t.edges()) {
        edges += (edges.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v) + ":" +
                 std::to_string(e.weight);
      }
      if (csv) {
        out << i << ',' << colors << ',' << edges << ',' << classes[i].aut_order << ',' << a_gamma(t) << '\n';
      } else {
        out << i << "  colors [" << colors << "]  edges [" << edges << "]  aut " << classes[i].aut_order << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_configs(const GlobalFlags& g, const std::string& family, std::ostream& out) {
  require_format(g.format, {"json", "text", "csv"}, "configs");
  const ConfigTable table = configuration_table(family);
  const int degree = family == "cubics" ? 3 : 4;
  const InvariantResult inv = compute(InvariantRequest{degree, InvariantKind::contact, {}}, g.seed);
  const BigInt n_d = inv.value.num();
  const BigInt irreducible = irreducible_estimate(degree, n_d);

  if (g.format == "json") {
    json entries = json::array();
    for (const ConfigEntry& e : table.entries) entries.push_back({{"name", e.name}, {"count", bigint_json(e.count)}});
    out << json{{"family", table.family},
                {"pool", table.pool},
                {"assumption", kMultiplicityAssumption},
                {"entries", std::move(entries)},
                {"total", bigint_json(table.total)},
                {"contact_invariant", bigint_json(n_d)},
                {"irreducible_estimate", bigint_json(irreducible)}}
               .dump(2)
        << '\n';
  } else if (g.format == "csv") {
    out << "name,count\n";
    for (const ConfigEntry& e : table.entries) out << '"' << e.name << "\"," << e.count << '\n';
    out << "total," << table.total << '\n' << "irreducible_estimate," << irreducible << '\n';
  } else {
    out << kMultiplicityAssumption << "\n\n";
    for (const ConfigEntry& e : table.entries) out << std::left << std::setw(16) << e.name << std::right << std::setw(12) << e.count << '\n';
    out << std::left << std::setw(16) << "total" << std::right << std::setw(12) << table.total << '\n'
        << std::left << std::setw(16) << "N_d" << std::right << std::setw(12) << n_d << '\n'
        << std::left << std::setw(16) << "irreducible" << std::right << std::setw(12) << irreducible << '\n';
  }
  return kExitOk;
}

int cmd_legendrian(const GlobalFlags& g, const LegendrianFlags& c, std::ostream& out) {
  require_format(g.format, {"json", "text"}, "legendrian");
  const RationalCurveParam f = parse_curve(c.curve);
  const bool contact = is_contact(f);
  if (c.action == "verify") {
    const HomogPoly2 pairing = contact_pairing(f);
    if (g.format == "json") {
      out << json{{"curve", f.to_string()}, {"degree", f.degree()}, {"contact", contact}, {"pairing", pairing.to_string()}}
                 .dump(2)
          << '\n';
    } else {
      out << "curve: " << f.to_string() << '\n'
          << "contact: " << (contact ? "true" : "false") << '\n'
          << "pairing: " << pairing.to_string() << '\n';
    }
    return kExitOk;
  }
  const auto p = parse_point(c.point);
  const Point4 plane = contact_plane(f, p[0], p[1]);
  const Osculation osc = osculation_multiplicity(f, p[0], p[1]);
  if (g.format == "json") {
    json plane_j = json::array();
    for (const Rational& x : plane) plane_j.push_back(x.to_string());
    json doc{{"curve", f.to_string()},
             {"point", {p[0].to_string(), p[1].to_string()}},
             {"contact", contact},
             {"plane", std::move(plane_j)},
             {"total", osc.total}};
    doc["multiplicity"] = osc.total ? json(nullptr) : json(osc.multiplicity);
    out << doc.dump(2) << '\n';
  } else {
    out << "curve: " << f.to_string() << '\n'
        << "contact: " << (contact ? "true" : "false") << '\n'
        << "plane: (" << plane[0] << ", " << plane[1] << ", " << plane[2] << ", " << plane[3] << ")\n"
        << "multiplicity: " << (osc.total ? std::string("total") : std::to_string(osc.multiplicity)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact torus-localization counts of contact curves in P^3", "contactgw"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv", "dot"}))
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir,
                 std::string("Graph cache directory (default: $") + kCacheDirEnv + " or " + kDefaultCacheDir + ")");
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the graph cache");
  app.add_option("--seed", g.seed, "Seed for torus specialisations")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads: positive integer or 'auto'")->capture_default_str();
  app.add_flag("--no-timing", g.no_timing, "Omit elapsed time so output is reproducible");

  ComputeFlags cf;
  CLI::App* compute_cmd = app.add_subcommand("compute", "Compute an invariant by localization");
  compute_cmd->add_option("--degree", cf.degree, "Curve degree d >= 1")->required();
  compute_cmd->add_option("--invariant", cf.invariant, "contact or gw-lines")
      ->check(CLI::IsMember({"contact", "gw-lines", "gw_lines"}))
      ->capture_default_str();
  compute_cmd->add_option("--lambda", cf.lambda, "Explicit torus weights l0,l1,l2,l3");
  compute_cmd->add_option("--agree", cf.agree, "Number of agreeing specialisations")->capture_default_str();

  GraphsFlags gf;
  CLI::App* graphs_cmd = app.add_subcommand("graphs", "Enumerate torus-fixed graphs");
  graphs_cmd->add_option("--degree", gf.degree, "Total degree d >= 1")->required();
  graphs_cmd->add_flag("--stats", gf.stats, "Summarize by combinatorial type");

  std::string family;
  CLI::App* configs_cmd = app.add_subcommand("configs", "Reducible configuration tables");
  configs_cmd->add_option("--family", family, "cubics or quartics")->required();

  LegendrianFlags lf;
  CLI::App* leg_cmd = app.add_subcommand("legendrian", "Check the contact condition for a parametrized curve");
  leg_cmd->add_option("--curve", lf.curve, "buczynski:k,l or four ';'-separated coefficient lists")->required();
  leg_cmd->add_option("--point", lf.point, "Point a,b of P^1")->capture_default_str();
  leg_cmd->add_option("--action", lf.action, "verify or osculation")
      ->check(CLI::IsMember({"verify", "osculation"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) return cmd_compute(g, cf, out, err);
    if (graphs_cmd->parsed()) return cmd_graphs(g, gf, out);
    if (configs_cmd->parsed()) return cmd_configs(g, family, out);
    return cmd_legendrian(g, lf, out);
  } catch (const DisagreementError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const RetryExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const SpecializationDegenerate& e) {
    err << "error: degenerate specialisation: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace contactgw
