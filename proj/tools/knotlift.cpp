// knotlift: command-line front end for the diagram library.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on
// unreadable or invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotlift/cut_systems.hpp"
#include "knotlift/diagram.hpp"
#include "knotlift/gauss_code.hpp"
#include "knotlift/heights.hpp"
#include "knotlift/invariants.hpp"
#include "knotlift/lifting.hpp"
#include "knotlift/moves.hpp"
#include "knotlift/numbering.hpp"
#include "knotlift/random.hpp"
#include "knotlift/verify.hpp"

#ifndef KNOTLIFT_DEFAULT_FIXTURES
#define KNOTLIFT_DEFAULT_FIXTURES "fixtures"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace knotlift;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Result {
  json body = json::object();
  int status = 0;
};

std::string fixture_dir() {
  if (const char* env = std::getenv("KNOTLIFT_FIXTURES"); env && *env) return env;
  return KNOTLIFT_DEFAULT_FIXTURES;
}

// Paths that do not exist are looked up in the fixture directory, with and
// without a leading "fixtures/".
std::string resolve(const std::string& path) {
  if (fs::exists(path)) return path;
  const fs::path dir = fixture_dir();
  for (fs::path cand : {dir / path, dir / fs::path(path).filename()})
    if (fs::exists(cand)) return cand.string();
  throw InputError("cannot open '" + path + "'");
}

PlanarDiagram load(const std::string& path) { return load_diagram(resolve(path)); }

json numbering_json(const ConstraintSystem& cs, const Numbering& n) {
  json j = json::object();
  for (const auto& v : cs.variables) j[v] = as_map(cs, n).at(v);
  return j;
}

std::string piece_name(CoverPiece p) {
  switch (p) {
    case CoverPiece::grid: return "grid";
    case CoverPiece::twist: return "twist";
    case CoverPiece::wrap: return "wrap";
  }
  return "?";
}

json covering_json(const CoveringDiagram& c) {
  json j;
  j["sheets"] = c.sheets;
  j["components"] = traverse(c.diagram).components.size();
  j["diagram"] = serialize_diagram(c.diagram);
  json prov = json::object();
  for (const auto& [id, p] : c.provenance) prov[id] = {{"source", p.source}, {"piece", piece_name(p.piece)}, {"sheets", p.sheets}};
  j["provenance"] = prov;
  return j;
}

json report_json(const InvariantReport& r) {
  json ac = json::object();
  for (const auto& [m, ok] : r.ac) ac[std::to_string(m)] = ok;
  return {{"components", r.components}, {"odd_writhes", r.odd_writhes}, {"linking", r.linking}, {"degrees", r.degrees}, {"ac", ac}};
}

// Text rendering: one "key: value" line per top-level field, multi-line
// strings printed as blocks.
void print_text(const json& j) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      std::cout << k << ":\n" << v.get<std::string>();
      if (v.get<std::string>().back() != '\n') std::cout << '\n';
    } else if (v.is_string()) {
      std::cout << k << ": " << v.get<std::string>() << '\n';
    } else {
      std::cout << k << ": " << v.dump() << '\n';
    }
  }
}

std::string modulus_name(long m) { return m == 0 ? "integral" : "mod-" + std::to_string(m); }

// --- commands ---------------------------------------------------------------

Result cmd_validate(const std::string& file) {
  std::ifstream in(resolve(file));
  std::stringstream ss;
  ss << in.rdbuf();
  const PlanarDiagram d = parse_diagram_unchecked(ss.str());
  const ValidationReport rep = validate(d);
  Result r;
  r.body["valid"] = rep.ok();
  json issues = json::array();
  for (const auto& i : rep.issues) issues.push_back({{"kind", std::string(to_string(i.kind))}, {"message", i.message}});
  r.body["issues"] = issues;
  r.status = rep.ok() ? 0 : 1;
  return r;
}

Result cmd_ac(const std::string& file, long m) {
  const PlanarDiagram d = load(file);
  const bool cuts = d.count(NodeKind::cut_point) != 0;
  const ConstraintSystem cs = build_constraints(traverse(d), cuts);
  Result r;
  r.body["modulus"] = m;
  r.body["cut_points"] = cuts;
  if (auto n = solve(cs, m)) {
    r.body["numberable"] = true;
    r.body["numbering"] = numbering_json(cs, *n);
  } else {
    r.body["numberable"] = false;
    r.body["report"] = "no " + modulus_name(m) + " numbering";
    r.body["defect"] = defect(cs);
    r.status = 1;
  }
  return r;
}

Result cmd_defect(const std::string& file) {
  const PlanarDiagram d = load(file);
  const ConstraintSystem cs = build_constraints(traverse(d), d.count(NodeKind::cut_point) != 0);
  Result r;
  r.body["defect"] = defect(cs);
  return r;
}

Result cmd_degree(const std::string& file, std::optional<int> component) {
  const PlanarDiagram d = load(file);
  Result r;
  const auto all = degrees(d);
  if (component) {
    if (*component < 0 || *component >= static_cast<int>(all.size())) throw InputError("no component " + std::to_string(*component));
    r.body["component"] = *component;
    r.body["degree"] = all[static_cast<std::size_t>(*component)];
  } else {
    r.body["degrees"] = all;
  }
  return r;
}

Result cmd_heights(const std::string& file, const std::string& base) {
  const PlanarDiagram d = load(file);
  std::string b = base;
  if (b.empty())
    for (const auto& n : d.nodes)
      if (n.kind == NodeKind::double_line) {
        b = n.id;
        break;
      }
  if (b.empty()) throw InputError("diagram has no double line");
  const HeightMap h = heights(d, b);
  Result r;
  r.body["base"] = h.base;
  r.body["modulus"] = h.modulus;
  r.body["heights"] = h.heights;
  return r;
}

Result cmd_lift(const std::string& file) {
  const PlanarDiagram d = load(file);
  const int deg = degree(d);
  const PlanarDiagram l = deg == 0 ? lift0(d) : liftk(d);
  Result r;
  r.body["construction"] = deg == 0 ? "lift0" : "liftk";
  r.body["degree"] = deg;
  r.body["code"] = format_code(traverse(l));
  r.body["canonical"] = canonical_code(traverse(l)).to_string();
  r.body["diagram"] = serialize_diagram(l);
  return r;
}

Result cmd_cover(const std::string& file, long m) {
  const PlanarDiagram d = load(file);
  const int deg = degree(d);
  Result r;
  if (deg == 0) {
    if (m < 1) throw InputError("cover needs -m M with M >= 1");
    r.body["construction"] = "cover0";
    r.body.update(covering_json(cover0(d, static_cast<int>(m))));
  } else {
    r.body["construction"] = "coverk";
    r.body.update(covering_json(coverk(d)));
  }
  return r;
}

Result cmd_cutsys(const std::string& action, const std::string& file, const std::string& kind, const std::string& site) {
  const PlanarDiagram d = load(file);
  Result r;
  if (action == "standard") {
    r.body["diagram"] = serialize_diagram(standard_cut_system(d));
  } else if (action == "check") {
    const bool ok = is_cut_system(d);
    const CutCounts c = count_cut_points(d);
    r.body["cut_system"] = ok;
    r.body["coherent"] = c.coherent;
    r.body["incoherent"] = c.incoherent;
    r.status = ok ? 0 : 1;
  } else if (action == "to-dl") {
    const PlanarDiagram dl = to_double_lines(d);
    r.body["degrees"] = degrees(dl);
    r.body["diagram"] = serialize_diagram(dl);
  } else {
    if (kind.empty()) throw InputError("cutsys move needs --kind");
    const CutMoveKind k = parse_cut_move_kind(kind);
    if (site.empty()) {
      json sites = json::array();
      for (const auto& s : enumerate_cut_sites(d, k)) sites.push_back(s.to_string());
      r.body["sites"] = sites;
    } else {
      r.body["diagram"] = serialize_diagram(apply_cut_move(d, k, MoveSite::parse(site)));
    }
  }
  return r;
}

Result cmd_moves(const std::string& action, const std::string& file, const std::string& kind, const std::string& site, int steps,
                 std::uint64_t seed) {
  const PlanarDiagram d = load(file);
  Result r;
  if (action == "list") {
    json sites = json::object();
    for (MoveKind k : kAllMoveKinds) {
      if (!kind.empty() && to_string(k) != kind) continue;
      json list = json::array();
      for (const auto& s : enumerate_sites(d, k)) list.push_back(s.to_string());
      sites[std::string(to_string(k))] = list;
    }
    if (!kind.empty() && sites.empty()) parse_move_kind(kind);
    r.body["sites"] = sites;
  } else if (action == "apply") {
    if (kind.empty() || site.empty()) throw InputError("moves apply needs --kind and --site");
    r.body["diagram"] = serialize_diagram(apply_move(d, parse_move_kind(kind), MoveSite::parse(site)));
  } else {
    std::vector<MoveKind> kinds{std::begin(kAllMoveKinds), std::end(kAllMoveKinds)};
    if (!kind.empty()) kinds = {parse_move_kind(kind)};
    const RandomWalk w = random_walk(d, steps, seed, kinds);
    json log = json::array();
    for (const auto& s : w.steps) log.push_back(std::string(to_string(s.kind)) + " " + s.site.to_string());
    r.body["steps"] = log;
    r.body["diagram"] = serialize_diagram(w.result);
  }
  return r;
}

Result cmd_report(const std::string& file) {
  Result r;
  r.body = report_json(invariant_report(load(file)));
  return r;
}

Result cmd_verify(const std::string& file, const std::vector<long>& moduli) {
  const PlanarDiagram d = load(file);
  Result r;
  json checks = json::array();
  for (long m : moduli) {
    const TheoremCheck c = verify_theorem(d, m);
    json j{{"m", m}, {"ok", c.ok()}, {"fallback", c.numbering.fallback}};
    j["components"] = traverse(c.cover.diagram).components.size();
    if (c.numbering.numbering) j["numbering"] = numbering_json(c.numbering.system, *c.numbering.numbering);
    if (!c.numbering.discrepancies.empty()) j["discrepancies"] = c.numbering.discrepancies;
    if (!c.ok()) r.status = 1;
    checks.push_back(j);
  }
  r.body["checks"] = checks;
  return r;
}

Result cmd_random_suite(std::uint64_t seed, int trials, const std::vector<long>& moduli) {
  SuiteOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.moduli = moduli;
  const SuiteReport rep = random_suite(opts);
  auto events = [](const std::vector<SuiteEvent>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back({{"trial", e.trial}, {"m", e.m}, {"detail", e.detail}});
    return a;
  };
  Result r;
  r.body["seed"] = seed;
  r.body["trials"] = rep.trials;
  r.body["checks"] = rep.checks;
  r.body["closed_form_rate"] = rep.closed_form_rate();
  r.body["fallbacks"] = events(rep.fallbacks);
  r.body["failures"] = events(rep.failures);
  r.body["ok"] = rep.ok();
  r.status = rep.ok() ? 0 : 1;
  return r;
}

Result cmd_realize(const std::string& code) {
  Result r;
  r.body["diagram"] = serialize_diagram(realize_code(parse_code(code)));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot diagrams with double lines: numberings, heights, lifts and coverings"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print JSON");

  std::string file, base, kind, site, action, code;
  long m = 0;
  std::vector<long> moduli;
  std::optional<int> component;
  std::uint64_t seed = 7;
  int trials = 1000, steps = 10;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "Diagram file")->required(); };
  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file");
  with_file(validate_cmd);
  auto* ac_cmd = app.add_subcommand("ac", "Alexander numbering over Z (-m 0) or Z_m");
  with_file(ac_cmd);
  ac_cmd->add_option("-m", m, "Modulus, 0 for the integers");
  auto* defect_cmd = app.add_subcommand("defect", "Modulus whose divisors admit a numbering");
  with_file(defect_cmd);
  auto* degree_cmd = app.add_subcommand("degree", "Double-line sign sum per component");
  with_file(degree_cmd);
  degree_cmd->add_option("--component", component);
  auto* heights_cmd = app.add_subcommand("heights", "Heights of long arcs");
  with_file(heights_cmd);
  heights_cmd->add_option("--base", base, "Base double line (default: first)");
  auto* lift_cmd = app.add_subcommand("lift", "lift0 for degree 0, liftk otherwise");
  with_file(lift_cmd);
  auto* cover_cmd = app.add_subcommand("cover", "cover0 with -m sheets for degree 0, coverk otherwise");
  with_file(cover_cmd);
  cover_cmd->add_option("-m", m, "Sheets");
  auto* cut_cmd = app.add_subcommand("cutsys", "Cut systems");
  cut_cmd->add_option("action", action)->required()->check(CLI::IsMember({"standard", "check", "to-dl", "move"}));
  with_file(cut_cmd);
  cut_cmd->add_option("--kind", kind);
  cut_cmd->add_option("--site", site);
  auto* moves_cmd = app.add_subcommand("moves", "Diagram moves");
  moves_cmd->add_option("action", action)->required()->check(CLI::IsMember({"list", "apply", "random-walk"}));
  with_file(moves_cmd);
  moves_cmd->add_option("--kind", kind);
  moves_cmd->add_option("--site", site);
  moves_cmd->add_option("--steps", steps);
  moves_cmd->add_option("--seed", seed);
  auto* report_cmd = app.add_subcommand("report", "Invariant report");
  with_file(report_cmd);
  auto* verify_cmd = app.add_subcommand("verify-theorem", "Cut system, double lines, covering, numbering");
  with_file(verify_cmd);
  verify_cmd->add_option("-m", moduli, "Moduli")->delimiter(',')->required();
  auto* suite_cmd = app.add_subcommand("random-suite", "Seeded coverings of random degree-0 diagrams");
  suite_cmd->add_option("--seed", seed);
  suite_cmd->add_option("--trials", trials);
  suite_cmd->add_option("-m", moduli, "Moduli")->delimiter(',');
  auto* realize_cmd = app.add_subcommand("realize", "Plane diagram from a marked Gauss code");
  realize_cmd->add_option("code", code)->required();

  CLI11_PARSE(app, argc, argv);

  Result r;
  try {
    if (*validate_cmd) r = cmd_validate(file);
    else if (*ac_cmd) r = cmd_ac(file, m);
    else if (*defect_cmd) r = cmd_defect(file);
    else if (*degree_cmd) r = cmd_degree(file, component);
    else if (*heights_cmd) r = cmd_heights(file, base);
    else if (*lift_cmd) r = cmd_lift(file);
    else if (*cover_cmd) r = cmd_cover(file, m);
    else if (*cut_cmd) r = cmd_cutsys(action, file, kind, site);
    else if (*moves_cmd) r = cmd_moves(action, file, kind, site, steps, seed);
    else if (*report_cmd) r = cmd_report(file);
    else if (*verify_cmd) r = cmd_verify(file, moduli);
    else if (*suite_cmd) r = cmd_random_suite(seed, trials, moduli.empty() ? std::vector<long>{2, 3, 4, 5} : moduli);
    else if (*realize_cmd) r = cmd_realize(code);
  } catch (const DiagramError& e) {
    std::cerr << "invalid diagram:\n" << e.report().to_string() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  if (as_json) std::cout << r.body.dump(2) << '\n';
  else print_text(r.body);
  return r.status;
}
