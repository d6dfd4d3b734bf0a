#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "orbhc/acceptance.hpp"
#include "orbhc/crossprod.hpp"
#include "orbhc/errors.hpp"
#include "orbhc/findim.hpp"
#include "orbhc/weyl.hpp"

namespace orbhc::cli {

namespace {

// ---------------------------------------------------------------------------
// config

std::size_t get_count(const Json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ConfigError(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

Rational parse_entry(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
      throw ConfigError("bad rational '" + v.get<std::string>() + "'");
    }
  }
  throw ConfigError("matrix entries and shifts must be integers or rational strings like \"1/2\"");
}

RationalMatrix parse_matrix(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ConfigError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ConfigError("matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_entry(j[r][c]);
  }
  return m;
}

MonomialElement parse_monomial(const Json& j, std::size_t n) {
  only_keys(j, {"perm", "shift"}, "torus generator");
  if (!j.contains("perm") || !j.at("perm").is_array() || j.at("perm").size() != n)
    throw ConfigError("torus generator needs 'perm' of length " + std::to_string(n));
  std::vector<std::size_t> perm;
  for (const auto& v : j.at("perm")) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw ConfigError("'perm' entries must be 0-based indices");
    perm.push_back(v.get<std::size_t>());
  }
  RationalVector shift(n);
  if (j.contains("shift")) {
    if (!j.at("shift").is_array() || j.at("shift").size() != n) throw ConfigError("'shift' must have length " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) shift[i] = parse_entry(j.at("shift")[i]);
  }
  try {
    return MonomialElement(std::move(perm), std::move(shift));
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Transposition (0 1) and the n-cycle.
std::vector<std::vector<std::size_t>> sn_generators(std::size_t n) {
  auto t = identity_perm(n), c = identity_perm(n);
  if (n >= 2) std::swap(t[0], t[1]);
  for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return {t, c};
}

FiniteGroup build_group(const JobConfig& c) {
  std::vector<GroupElement> gens;
  if (c.kind == "torus") {
    if (c.preset == "Sn") {
      for (auto& p : sn_generators(c.n)) gens.push_back(MonomialElement(p, RationalVector(c.n)));
    } else {
      for (const auto& g : c.generators) gens.push_back(parse_monomial(g, c.n));
    }
  } else if (c.kind == "linear") {
    if (c.preset == "Sn") {
      for (auto& p : sn_generators(c.n)) gens.push_back(LinearElement{permutation_matrix(p)});
    } else {
      for (const auto& g : c.generators) {
        RationalMatrix m = parse_matrix(g, c.n);
        if (rank(m) != c.n) throw ConfigError("linear generator is not invertible");
        gens.push_back(LinearElement{std::move(m)});
      }
    }
  } else {
    throw ConfigError("no group action on a space for kind '" + c.kind + "'");
  }
  if (gens.empty()) gens.push_back(identity_like(c.kind == "torus" ? GroupElement(MonomialElement(identity_perm(c.n), RationalVector(c.n)))
                                                                   : GroupElement(LinearElement{RationalMatrix::identity(c.n)})));
  return close_group(gens, c.group_limit);
}

struct FindimJob {
  FinDimAlgebra algebra;
  std::shared_ptr<const FiniteGroup> group;
};

FindimJob build_findim(const JobConfig& c) {
  FinDimAlgebra a = matrix_algebra(c.n);
  std::vector<GroupElement> gens;
  if (c.preset == "M2-azumaya") {
    gens.push_back(AlgebraAutomorphism{inner_automorphism(a, {0, 1, 1, 0})});
    gens.push_back(AlgebraAutomorphism{inner_automorphism(a, {1, 0, 0, -1})});
  } else {
    for (const auto& g : c.generators) {
      try {
        gens.push_back(make_automorphism(a, parse_matrix(g, c.n * c.n)));
      } catch (const NotAutomorphism& e) {
        throw ConfigError(std::string("findim generator: ") + e.what());
      }
    }
  }
  if (gens.empty()) gens.push_back(AlgebraAutomorphism{RationalMatrix::identity(c.n * c.n)});
  auto group = std::make_shared<const FiniteGroup>(close_group(gens, c.group_limit));
  return {findim_crossed_product(a, group), group};
}

// ---------------------------------------------------------------------------
// reports

Json table_json(const GradedTable& t, std::size_t q_max, std::size_t d_max) {
  Json rows = Json::array();
  for (std::size_t q = 0; q <= q_max; ++q) {
    Json row = Json::array();
    for (std::size_t D = 0; D <= d_max; ++D) {
      const auto it = t.find({q, D});
      row.push_back(it == t.end() ? 0 : it->second);
    }
    rows.push_back(row);
  }
  return rows;
}

void print_table(std::ostream& out, const std::string& theory, const GradedTable& t, std::size_t q_max, std::size_t d_max) {
  out << "    " << std::setw(6) << "";
  for (std::size_t D = 0; D <= d_max; ++D) out << std::setw(6) << ("D=" + std::to_string(D));
  out << '\n';
  for (std::size_t q = 0; q <= q_max; ++q) {
    out << "    " << std::setw(6) << (theory + "_" + std::to_string(q));
    for (std::size_t D = 0; D <= d_max; ++D) {
      const auto it = t.find({q, D});
      out << std::setw(6) << (it == t.end() ? 0 : it->second);
    }
    out << '\n';
  }
}

struct Outcome {
  Json report;
  std::string text;
  int code = kOk;
};

Outcome crossprod_outcome(const std::string& command, const JobConfig& c, const HomologyReport& r) {
  Outcome o;
  std::ostringstream text;
  const bool graded = command == "hh" || command == "hc";
  const std::string theory = command == "hh" ? "HH" : "HC";
  Json per_class = Json::array();
  std::size_t index = 0;
  for (const auto& cls : r.per_class) {
    Json e;
    e["representative"] = cls.representative;
    e["element"] = cls.element;
    e["class_size"] = cls.class_size;
    e["centralizer_size"] = cls.centralizer_size;
    e["fixed_set"] = describe_fixed_set(cls.fixed);
    text << "class " << ++index << ": element #" << cls.representative << " " << cls.element << "\n"
         << "  size " << cls.class_size << ", centralizer order " << cls.centralizer_size << ", fixed set: "
         << describe_fixed_set(cls.fixed) << '\n';
    Json tables = Json::object();
    if (graded) {
      tables[theory] = table_json(cls.table, r.q_max, r.d_max);
      print_table(text, theory, cls.table, r.q_max, r.d_max);
      if (cls.oracle) {
        tables[theory + "_oracle"] = table_json(*cls.oracle, r.q_max, r.d_max);
        text << "    bar-complex oracle agrees\n";
      }
    } else if (command == "hp") {
      tables["HP"] = {cls.hp[0], cls.hp[1]};
      text << "    HP_0 " << cls.hp[0] << ", HP_1 " << cls.hp[1] << '\n';
    }
    e["tables"] = tables;
    per_class.push_back(e);
  }
  Json totals = Json::object();
  if (graded) {
    totals[theory] = table_json(r.totals, r.q_max, r.d_max);
    text << "total\n";
    print_table(text, theory, r.totals, r.q_max, r.d_max);
  } else if (command == "hp") {
    totals["HP"] = {r.hp_totals[0], r.hp_totals[1]};
    text << "total: HP_0 " << r.hp_totals[0] << ", HP_1 " << r.hp_totals[1] << '\n';
  } else {
    totals["classes"] = r.per_class.size();
    text << "total: " << r.per_class.size() << " conjugacy classes\n";
  }
  o.report["command"] = command;
  o.report["config"] = c.to_json();
  o.report["per_class"] = per_class;
  o.report["totals"] = totals;
  o.text = text.str();
  return o;
}

Outcome findim_outcome(const std::string& command, const JobConfig& c) {
  const FindimJob job = build_findim(c);
  Outcome o;
  std::ostringstream text;
  Json per_class = Json::array();
  Json totals = Json::object();
  if (command == "classes") {
    for (const auto& cls : conjugacy_classes(*job.group)) {
      Json e;
      e["representative"] = cls.representative;
      e["element"] = describe(job.group->element(cls.representative));
      e["class_size"] = cls.members.size();
      e["centralizer_size"] = centralizer(*job.group, cls.representative).size();
      e["fixed_set"] = nullptr;
      e["tables"] = Json::object();
      text << "class " << per_class.size() + 1 << ": element #" << cls.representative << ", size " << cls.members.size()
           << '\n';
      per_class.push_back(e);
    }
    totals["classes"] = per_class.size();
    text << "total: " << per_class.size() << " conjugacy classes\n";
  } else if (command == "hh") {
    const FindimHHResult r = findim_hh_dims(job.algebra, c.q_max, c.findim_limit);
    auto row = [](const std::vector<std::size_t>& dims, std::ostream& os) {
      for (std::size_t q = 0; q < dims.size(); ++q) os << (q ? ", " : "") << "HH_" << q << " " << dims[q];
      os << '\n';
    };
    text << "algebra of dimension " << job.algebra.dimension() << " (M_" << c.n << " x| group of order "
         << job.group->size() << ")\n";
    for (const auto& cls : r.per_class) {
      Json e;
      e["representative"] = cls.representative;
      e["element"] = cls.description;
      e["fixed_set"] = nullptr;
      e["tables"] = {{"HH", cls.dims}};
      text << "class of element #" << cls.representative << ": ";
      row(cls.dims, text);
      per_class.push_back(e);
    }
    totals["HH"] = r.total;
    text << "total: ";
    row(r.total, text);
  } else {
    throw ConfigError("command '" + command + "' is not available for findim actions (use classes or hh)");
  }
  o.report["command"] = command;
  o.report["config"] = c.to_json();
  o.report["per_class"] = per_class;
  o.report["totals"] = totals;
  o.text = text.str();
  return o;
}

Outcome space_outcome(const std::string& command, const JobConfig& c) {
  if (c.kind == "findim") return findim_outcome(command, c);
  const FiniteGroup group = build_group(c);
  HomologyReport r;
  if (command == "classes") {
    r = classes_report(group);
  } else if (command == "hp") {
    r = hp_report(group);
  } else if (c.kind != "linear") {
    throw ConfigError("'" + command + "' needs a linear action (kind \"linear\")");
  } else if (command == "hh") {
    r = hh_graded_report(group, c.q_max, c.d_max, c.oracle, c.block_limit);
  } else {
    r = hc_graded_report(group, c.q_max, c.d_max, c.oracle, c.block_limit);
  }
  return crossprod_outcome(command, c, r);
}

std::string cycle_notation(const Permutation& p) {
  std::string s;
  for (const auto& cyc : permutation_cycles(p)) {
    if (cyc.size() == 1) continue;
    s += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) s += (i ? " " : "") + std::to_string(cyc[i] + 1);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Outcome weyl_outcome(std::size_t n, bool cross_check, std::size_t bound) {
  if (n == 0) throw ConfigError("--n must be positive");
  const WeylReport w = hp_weyl_formula(n);
  Outcome o;
  std::ostringstream text;
  Json per_class = Json::array();
  text << "partitions of " << n << ":\n";
  for (const auto& c : w.per_lambda) {
    std::string lambda = "(";
    for (std::size_t i = 0; i < c.lambda.size(); ++i) lambda += (i ? "," : "") + std::to_string(c.lambda[i]);
    lambda += ")";
    Json gens_q = Json::array(), gens_c = Json::array();
    for (const auto& p : q_lambda_generators(c.lambda)) gens_q.push_back(cycle_notation(p));
    for (const auto& p : cycle_generators(c.lambda)) gens_c.push_back(cycle_notation(p));
    Json e;
    e["partition"] = c.lambda;
    e["sigma"] = cycle_notation(sigma_lambda(c.lambda));
    e["t"] = c.t;
    e["cycle_generators"] = gens_c;
    e["q_lambda_generators"] = gens_q;
    e["tables"] = {{"HP", {c.hp0, c.hp1}}, {"HP_exterior_invariants", {c.invariant_hp0, c.invariant_hp1}}};
    per_class.push_back(e);
    text << "  " << std::left << std::setw(12) << lambda << std::right << " sigma " << std::left << std::setw(14)
         << cycle_notation(sigma_lambda(c.lambda)) << std::right << " t " << c.t << "  HP_0 " << c.hp0 << "  HP_1 "
         << c.hp1 << "  Q_lambda gens " << gens_q.size() << '\n';
  }
  Json totals;
  totals["HP"] = {w.hp0, w.hp1};
  text << "total: HP_0 " << w.hp0 << ", HP_1 " << w.hp1 << '\n';
  Json config;
  config["n"] = n;
  config["cross_check"] = cross_check;
  if (cross_check) {
    const bool agrees = weyl_cross_check(n, bound);
    totals["cross_check"] = agrees;
    text << "cross-check against the crossed-product report: " << (agrees ? "agrees" : "DISAGREES") << '\n';
    if (!agrees) o.code = kInvariantViolation;
  }
  o.report["command"] = "weyl";
  o.report["config"] = config;
  o.report["per_class"] = per_class;
  o.report["totals"] = totals;
  o.text = text.str();
  return o;
}

Outcome selftest_outcome(std::optional<int> criterion, std::ostream& progress) {
  Outcome o;
  std::vector<CheckResult> results;
  if (criterion) {
    results.push_back(run_criterion(*criterion));
    progress << format_result(results.back()) << std::endl;
  } else {
    results = run_selftest([&](const CheckResult& r) { progress << format_result(r) << std::endl; });
  }
  Json checks = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    checks.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    passed += r.passed;
  }
  o.report["command"] = "selftest";
  o.report["config"] = criterion ? Json{{"criterion", *criterion}} : Json::object();
  o.report["per_class"] = Json::array();
  o.report["checks"] = checks;
  o.report["totals"] = {{"passed", passed}, {"failed", results.size() - passed}};
  o.text = std::to_string(passed) + " of " + std::to_string(results.size()) + " checks passed\n";
  if (passed != results.size()) o.code = kInvariantViolation;
  return o;
}

}  // namespace

// ---------------------------------------------------------------------------

Json JobConfig::to_json() const {
  Json action;
  action["kind"] = kind;
  action["n"] = n;
  if (!preset.empty()) action["preset"] = preset;
  else action["generators"] = generators;
  Json j;
  j["action"] = action;
  j["q_max"] = q_max;
  j["d_max"] = d_max;
  j["oracle"] = oracle;
  j["limits"] = {{"group", group_limit}, {"block", block_limit}, {"findim", findim_limit}};
  return j;
}

JobConfig parse_config(const Json& j) {
  only_keys(j, {"action", "q_max", "d_max", "oracle", "limits"}, "config");
  if (!j.contains("action")) throw ConfigError("config needs an 'action'");
  const Json& a = j.at("action");
  only_keys(a, {"kind", "n", "preset", "generators"}, "action");
  JobConfig c;
  if (!a.contains("kind") || !a.at("kind").is_string()) throw ConfigError("action needs a 'kind'");
  c.kind = a.at("kind").get<std::string>();
  if (c.kind != "linear" && c.kind != "torus" && c.kind != "findim")
    throw ConfigError("action kind must be \"linear\", \"torus\" or \"findim\"");
  if (a.contains("preset")) {
    if (!a.at("preset").is_string()) throw ConfigError("'preset' must be a string");
    c.preset = a.at("preset").get<std::string>();
    if (a.contains("generators")) throw ConfigError("give either 'preset' or 'generators', not both");
    const bool ok = (c.preset == "Sn" && c.kind != "findim") || (c.preset == "M2-azumaya" && c.kind == "findim");
    if (!ok) throw ConfigError("preset '" + c.preset + "' does not apply to kind '" + c.kind + "'");
  } else if (a.contains("generators")) {
    if (!a.at("generators").is_array()) throw ConfigError("'generators' must be a list");
    c.generators = a.at("generators");
  }
  c.n = get_count(a, "n", c.preset == "M2-azumaya" ? 2 : 0);
  if (c.n == 0) throw ConfigError("action needs a positive dimension 'n'");
  if (c.preset == "M2-azumaya" && c.n != 2) throw ConfigError("preset M2-azumaya has n = 2");
  c.q_max = get_count(j, "q_max", c.q_max);
  c.d_max = get_count(j, "d_max", c.d_max);
  if (j.contains("oracle")) {
    if (!j.at("oracle").is_boolean()) throw ConfigError("'oracle' must be true or false");
    c.oracle = j.at("oracle").get<bool>();
  }
  if (j.contains("limits")) {
    only_keys(j.at("limits"), {"group", "block", "findim"}, "limits");
    c.group_limit = get_count(j.at("limits"), "group", c.group_limit);
    c.block_limit = get_count(j.at("limits"), "block", c.block_limit);
    c.findim_limit = get_count(j.at("limits"), "findim", c.findim_limit);
  }
  // validate the generators now, before any computation
  if (c.kind == "findim") build_findim(c);
  else build_group(c);
  return c;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

namespace {

const std::map<std::string, Json>& presets() {
  static const std::map<std::string, Json> table{
      {"s2-plane", {{"action", {{"kind", "linear"}, {"n", 2}, {"generators", {{{0, 1}, {1, 0}}}}}}, {"oracle", true}}},
      {"z2-line", {{"action", {{"kind", "linear"}, {"n", 1}, {"generators", {{{-1}}}}}}, {"oracle", true}}},
      {"klein-plane",
       {{"action", {{"kind", "linear"}, {"n", 2}, {"generators", {{{-1, 0}, {0, 1}}, {{1, 0}, {0, -1}}}}}}, {"oracle", true}}},
      {"z3-space",
       {{"action", {{"kind", "linear"}, {"n", 3}, {"generators", {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}}}},
        {"d_max", 3},
        {"oracle", true}}},
      {"s3-space", {{"action", {{"kind", "linear"}, {"n", 3}, {"preset", "Sn"}}}, {"q_max", 2}, {"d_max", 3}}},
      {"s2-torus", {{"action", {{"kind", "torus"}, {"n", 2}, {"preset", "Sn"}}}}},
      {"s4-torus", {{"action", {{"kind", "torus"}, {"n", 4}, {"preset", "Sn"}}}}},
      {"sign-torus",
       {{"action", {{"kind", "torus"}, {"n", 1}, {"generators", {{{"perm", {0}}, {"shift", {"1/2"}}}}}}}}},
      {"m2-azumaya", {{"action", {{"kind", "findim"}, {"n", 2}, {"preset", "M2-azumaya"}}}, {"q_max", 2}}},
  };
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, j] : presets()) out.push_back(name);
  return out;
}

JobConfig preset_config(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) {
    std::string known;
    for (const auto& n : preset_names()) known += " " + n;
    throw ConfigError("unknown preset '" + name + "'; known:" + known);
  }
  return parse_config(it->second);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild, cyclic and periodic cyclic homology of crossed products", "orbhc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, preset, json_path;
  std::optional<std::size_t> q_max, d_max;
  bool oracle = false, timings = false;
  app.add_option("--config", config_path, "JSON job config");
  app.add_option("--preset", preset, "named job preset");
  app.add_option("--q-max", q_max, "highest homological degree (default 3)");
  app.add_option("--d-max", d_max, "highest internal degree (default 4)");
  app.add_flag("--oracle", oracle, "cross-check HH/HC against the bar complex");
  app.add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  app.add_flag("--timings", timings, "record wall-clock time in the report");

  std::map<std::string, CLI::App*> commands;
  commands["classes"] = app.add_subcommand("classes", "conjugacy classes, centralizers and fixed sets");
  commands["hh"] = app.add_subcommand("hh", "graded Hochschild homology per conjugacy class");
  commands["hc"] = app.add_subcommand("hc", "graded cyclic homology per conjugacy class");
  commands["hp"] = app.add_subcommand("hp", "periodic cyclic homology per conjugacy class");
  auto* weyl = app.add_subcommand("weyl", "HP of the extended affine Weyl group of GL_n");
  std::size_t weyl_n = 0, weyl_bound = kDefaultWeylBound;
  bool cross_check = false;
  weyl->add_option("--n", weyl_n, "rank n")->required();
  weyl->add_flag("--cross-check", cross_check, "compare with the crossed-product computation");
  weyl->add_option("--bound", weyl_bound, "largest n allowed for the cross-check");
  auto* selftest = app.add_subcommand("selftest", "acceptance criteria and invariant suites");
  std::optional<int> criterion;
  selftest->add_option("--criterion", criterion, "run only this acceptance criterion (1-8)");
  auto* presets_cmd = app.add_subcommand("presets", "list the named presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    if (presets_cmd->parsed()) {
      for (const auto& name : preset_names()) out << name << '\n';
      return kOk;
    }
    if (weyl->parsed()) {
      o = weyl_outcome(weyl_n, cross_check, weyl_bound);
    } else if (selftest->parsed()) {
      o = selftest_outcome(criterion, json_path == "-" ? err : out);
    } else {
      if (config_path.empty() == preset.empty()) throw ConfigError("give exactly one of --config and --preset");
      JobConfig c = preset.empty() ? load_config(config_path) : preset_config(preset);
      if (q_max) c.q_max = *q_max;
      if (d_max) c.d_max = *d_max;
      if (oracle) c.oracle = true;
      for (const auto& [name, sub] : commands) {
        if (sub->parsed()) o = space_outcome(name, c);
      }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.report["timings"] = timings ? Json{{"total_seconds", seconds}} : Json(nullptr);
    if (json_path == "-") {
      out << o.report.dump(2) << '\n';
    } else {
      out << o.text;
      if (timings) out << "time: " << std::fixed << std::setprecision(3) << seconds << "s\n";
      if (!json_path.empty()) {
        std::ofstream file(json_path);
        if (!file) throw ConfigError("cannot write " + json_path);
        file << o.report.dump(2) << '\n';
      }
    }
    return o.code;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const SizeLimitExceeded& e) {
    err << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const Error& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  }
}

}  // namespace orbhc::cli
