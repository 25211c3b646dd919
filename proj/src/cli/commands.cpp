#include "cube_orbits/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cube_orbits/cli/tables.hpp"
#include "cube_orbits/cli/verify.hpp"
#include "cube_orbits/cube_string.hpp"
#include "cube_orbits/oracle.hpp"

namespace cube_orbits::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string table;
  std::string suite;
  std::string cube;
  std::string ground;
  std::string witness_kind;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::optional<std::size_t> max;
  std::string format = "plain";
};

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_json(std::ostream& out, const std::string& command, json parameters, json result) {
  json doc;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["result"] = std::move(result);
  out << doc.dump(2) << '\n';
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto id = parse_table_id(o.table);
  if (!id) throw UsageError("unknown table '" + o.table + "' (expected gamma-v, gamma-e, lucas-classes, lambda-v, lambda-e)");
  const std::size_t max_n = o.max.value_or(default_table_max(*id));
  if (max_n < 1) throw UsageError("--max must be >= 1");
  const Table t = build_table(*id, max_n);
  if (o.format == "csv") {
    out << render_csv(t);
  } else if (o.format == "json") {
    emit_json(out, "table", {{"table", o.table}, {"max", max_n}}, {{"labels", t.labels}, {"columns", t.columns}});
  } else {
    out << render_plain(t);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto suite = parse_suite(o.suite);
  if (!suite)
    throw UsageError("unknown suite '" + o.suite + "' (expected formulas, oracle-vs-formula, bijections, automorphisms, all)");
  const auto reports = run_verify(*suite, o.max);

  bool failed = false;
  bool refused = false;
  for (const auto& r : reports) {
    refused = refused || r.refused;
    if (!r.refused && !r.passed()) failed = true;
  }
  const char* verdict = failed ? "FAIL" : refused ? "INCOMPLETE" : "PASS";

  if (o.format == "json") {
    json suites = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"range", c.range}, {"passed", c.passed}, {"counterexample", c.counterexample}});
      suites.push_back({{"suite", std::string(suite_name(r.suite))}, {"refused", r.refused}, {"refusal", r.refusal},
                        {"checks", std::move(checks)}});
    }
    json params = {{"suite", o.suite}};
    if (o.max) params["max"] = *o.max;
    emit_json(out, "verify", std::move(params), {{"suites", std::move(suites)}, {"verdict", verdict}});
  } else if (o.format == "csv") {
    out << "suite,check,range,status,counterexample\n";
    for (const auto& r : reports) {
      const std::string s(suite_name(r.suite));
      if (r.refused) out << csv_field(s) << ",\"\",\"\",\"REFUSED\"," << csv_field(r.refusal) << '\n';
      for (const auto& c : r.checks)
        out << csv_field(s) << ',' << csv_field(c.name) << ',' << csv_field(c.range) << ','
            << (c.passed ? "\"PASS\"" : "\"FAIL\"") << ',' << csv_field(c.counterexample) << '\n';
    }
  } else {
    for (const auto& r : reports) {
      out << "suite " << suite_name(r.suite);
      if (r.refused) {
        out << ": REFUSED (" << r.refusal << ")\n";
        continue;
      }
      out << '\n';
      for (const auto& c : r.checks) {
        out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.range << ")";
        if (!c.passed) out << "  first counterexample: " << c.counterexample;
        out << '\n';
      }
    }
    out << "verdict: " << verdict << '\n';
  }
  if (failed) return kExitVerificationFailed;
  return refused ? kExitUsage : kExitOk;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  Cube cube{};
  if (o.cube == "gamma")
    cube = Cube::Gamma;
  else if (o.cube == "lambda")
    cube = Cube::Lambda;
  else
    throw UsageError("unknown cube '" + o.cube + "' (expected gamma or lambda)");
  oracle::Ground ground{};
  if (o.ground == "vertices")
    ground = oracle::Ground::Vertices;
  else if (o.ground == "edges")
    ground = oracle::Ground::Edges;
  else
    throw UsageError("unknown ground set '" + o.ground + "' (expected vertices or edges)");
  if (o.n > oracle::CubeGraph::kMaxDimension)
    throw UsageError("n = " + std::to_string(o.n) + " exceeds the oracle bound " +
                     std::to_string(oracle::CubeGraph::kMaxDimension));

  const auto g = oracle::CubeGraph::build(o.n, cube);
  const auto p = ground == oracle::Ground::Vertices ? oracle::vertex_orbits(g) : oracle::edge_orbits(g);

  if (o.format == "json") {
    json orbits = json::array();
    for (const auto& orbit : p.orbits)
      orbits.push_back({{"representative", oracle::element_label(g, ground, orbit.representative)},
                        {"size", std::to_string(orbit.size())}});
    const SizeHistogram h = oracle::histogram(p);
    json hist = json::object();
    for (const auto& [size, count] : h.entries()) hist[std::to_string(size)] = to_decimal(count);
    emit_json(out, "orbits", {{"cube", o.cube}, {"n", o.n}, {"ground", o.ground}},
              {{"orbits", std::move(orbits)}, {"histogram", std::move(hist)}, {"total", std::to_string(p.orbits.size())}});
    return kExitOk;
  }
  if (o.format == "csv") out << "representative,size\n";
  for (const auto& orbit : p.orbits) {
    const std::string rep = oracle::element_label(g, ground, orbit.representative);
    if (o.format == "csv")
      out << csv_field(rep) << ',' << orbit.size() << '\n';
    else
      out << rep << ' ' << orbit.size() << '\n';
  }
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  CubeString w;
  if (o.witness_kind == "asymmetric") {
    w = asymmetric_witness(o.n);
  } else if (o.witness_kind == "vertex-orbit-size") {
    if (!o.k) throw UsageError("witness vertex-orbit-size requires an orbit size k");
    w = vertex_orbit_witness(o.n, *o.k);
  } else {
    throw UsageError("unknown witness kind '" + o.witness_kind + "' (expected asymmetric or vertex-orbit-size)");
  }
  // Recomputed from the materialised orbit, not from the period formula.
  const std::size_t size = dihedral_orbit(w).size();
  if (o.format == "json") {
    json params = {{"kind", o.witness_kind}, {"n", o.n}};
    if (o.k) params["k"] = *o.k;
    emit_json(out, "witness", std::move(params),
              {{"witness", w.to_string()}, {"lucas_valid", is_lucas(w)}, {"orbit_size", std::to_string(size)}});
  } else if (o.format == "csv") {
    out << "witness,lucas_valid,orbit_size\n" << w.to_string() << ',' << (is_lucas(w) ? "true" : "false") << ',' << size << '\n';
  } else {
    out << w.to_display() << " orbit size " << size << (is_lucas(w) ? "" : " (not a Lucas string)") << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit counts for Fibonacci cubes and Lucas cubes", "cube-orbits"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  };

  auto* table = app.add_subcommand("table", "Print a table of orbit counts");
  table->add_option("which", o.table, "gamma-v | gamma-e | lucas-classes | lambda-v | lambda-e")->required();
  table->add_option("--max", o.max, "Largest n (default depends on the table)");
  add_format(table);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "formulas | oracle-vs-formula | bijections | automorphisms | all")->required();
  verify->add_option("--max", o.max, "Largest n checked");
  add_format(verify);

  auto* orbits = app.add_subcommand("orbits", "List orbits by brute force");
  orbits->add_option("cube", o.cube, "gamma | lambda")->required();
  orbits->add_option("n", o.n, "Dimension")->required();
  orbits->add_option("ground", o.ground, "vertices | edges")->required();
  add_format(orbits);

  auto* witness = app.add_subcommand("witness", "Construct a Lucas string with a prescribed orbit");
  witness->add_option("kind", o.witness_kind, "asymmetric | vertex-orbit-size")->required();
  witness->add_option("n", o.n, "String length")->required();
  witness->add_option("k", o.k, "Orbit size (vertex-orbit-size only)");
  add_format(witness);

  std::vector<std::string> argv_store{"cube-orbits"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*orbits) return cmd_orbits(o, out);
    if (*witness) return cmd_witness(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cube_orbits::cli
