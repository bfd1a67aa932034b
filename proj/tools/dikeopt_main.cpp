// Batch front end: solve, check-conditions, export-lp, verify-counterexample,
// round, gen-instance, and the micp subcommands.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "dikeopt/conditions.hpp"
#include "dikeopt/counterexample.hpp"
#include "dikeopt/error.hpp"
#include "dikeopt/gen_instance.hpp"
#include "dikeopt/instance_io.hpp"
#include "dikeopt/lp_format.hpp"
#include "dikeopt/micp.hpp"
#include "dikeopt/rounding.hpp"
#include "dikeopt/solvers.hpp"

namespace {

using namespace dikeopt;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

Instance load_instance(const std::string& path) {
  Instance inst = read_instance_file(path);
  ValidationReport report = validate_instance(inst);
  if (!report.valid()) fail(ErrorCode::InvalidInstance, report.summary());
  return inst;
}

void print_kv(const std::string& format, const std::string& key, const std::string& value) {
  if (format == "csv")
    std::cout << key << "," << value << "\n";
  else
    std::cout << key << ": " << value << "\n";
}

std::string profile_str(const std::vector<int>& profile) {
  std::string out;
  for (size_t i = 0; i < profile.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(profile[i]);
  }
  return out;
}

void print_plan(const std::string& format, const Instance& inst, const HeightPlan& plan) {
  print_kv(format, "barrier", profile_str(plan.barrier));
  for (int d = 0; d < inst.numSegments(); ++d)
    print_kv(format, inst.segments()[d], profile_str(plan.segment[d]));
}

IpPoint read_point_file(const ConstraintSystem& sys, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open point file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::IoError, std::string("point JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::IoError, "point file must map variable names to values");
  std::map<std::string, int> names;
  for (int i = 0; i < sys.vars.size(); ++i) names.emplace(sys.varName(i), i);
  IpPoint p(sys.vars);
  for (const auto& [name, value] : doc.items()) {
    auto it = names.find(name);
    if (it == names.end()) fail(ErrorCode::IoError, "unknown variable '" + name + "' in point file");
    if (!value.is_string()) fail(ErrorCode::IoError, "point values must be strings");
    p[it->second] = parse_rational(value.get<std::string>());
  }
  return p;
}

void write_point_file(const ConstraintSystem& sys, const IpPoint& p, const std::string& path) {
  nlohmann::json doc = nlohmann::json::object();
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] != 0) doc[sys.varName(i)] = to_decimal_string(p[i]);
  }
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << doc.dump(2) << "\n";
}

int cmd_solve(const std::string& instancePath, const std::string& method,
              const std::string& format, std::uint64_t planCap,
              std::uint64_t profileCap, bool serial, bool stats) {
  Instance inst = load_instance(instancePath);
  const ExecutionMode mode = serial ? ExecutionMode::serial : ExecutionMode::parallel;
  auto start = std::chrono::steady_clock::now();

  Money optimum;
  HeightPlan plan;
  bool exact = true;
  if (method == "dp") {
    DpStats dpStats;
    SolveResult r = solve_dp(inst, mode, stats ? &dpStats : nullptr);
    optimum = r.optimum;
    plan = r.plan;
    if (stats) {
      print_kv(format, "dp_states", std::to_string(dpStats.states));
      print_kv(format, "dp_transitions", std::to_string(dpStats.transitions));
    }
  } else if (method == "sp") {
    SpOptions options;
    options.mode = mode;
    if (profileCap) options.profileCap = profileCap;
    SpResult r = solve_sp(inst, options);
    optimum = r.optimum;
    plan = r.plan;
    exact = r.exact;
    if (stats) print_kv(format, "sp_profiles", std::to_string(r.profilesEnumerated));
  } else if (method == "bf") {
    BfOptions options;
    options.mode = mode;
    if (planCap) options.planCap = planCap;
    SolveResult r = solve_bf(inst, options);
    optimum = r.optimum;
    plan = r.plan;
    if (stats) print_kv(format, "bf_plans", std::to_string(plan_count(inst)));
  } else {
    fail(ErrorCode::IoError, "unknown method '" + method + "'");
  }

  print_kv(format, "optimum", to_decimal_string(optimum));
  print_plan(format, inst, plan);
  print_kv(format, "method", method);
  print_kv(format, "exact", exact ? "true" : "false");
  print_kv(format, "time_ms", std::to_string(ms_since(start)));
  return 0;
}

int cmd_check_conditions(const std::string& instancePath, const std::string& format,
                         const std::string& which, bool serial) {
  Instance inst = load_instance(instancePath);
  const ExecutionMode mode = serial ? ExecutionMode::serial : ExecutionMode::parallel;

  if (format == "csv") {
    std::vector<SurveyTable> tables = survey(inst, mode);
    bool all = which == "all";
    bool printed = false;
    for (const auto& table : tables) {
      if (!all && table.condition != which) continue;
      if (all) std::cout << "# condition: " << table.condition << "\n";
      std::cout << survey_csv(table);
      printed = true;
    }
    if (!printed) fail(ErrorCode::IoError, "unknown condition '" + which + "'");
    return 0;
  }

  if (which == "all" || which == "i") {
    ConditionReport r = check_condition_i(inst, mode);
    print_kv(format, "condition_i", r.satisfied ? "satisfied" : "violated");
  }
  if (which == "all" || which == "ii") {
    ConditionReport r = check_condition_ii(inst, mode);
    print_kv(format, "condition_ii", r.satisfied ? "satisfied" : "violated");
  }
  if (which == "all" || which == "iii") {
    ConditionReport r = check_condition_iii(inst, mode);
    print_kv(format, "condition_iii", r.satisfied ? "satisfied" : "violated");
  }
  if (which == "all" || which == "i_prime") {
    ConditionReport r = check_condition_i_prime(inst, mode);
    print_kv(format, "condition_i_prime", r.satisfied ? "satisfied" : "violated");
    for (size_t d = 0; d < r.segmentVerdicts.size(); ++d) {
      const auto& v = r.segmentVerdicts[d];
      std::string dir = v.geqAll && v.leqAll ? "both"
                        : v.geqAll           ? ">="
                        : v.leqAll           ? "<="
                                             : "neither";
      print_kv(format, "direction_" + inst.segments()[d], dir);
    }
  }
  std::cout << "\n" << survey_text(survey(inst, mode));
  return 0;
}

int cmd_verify_counterexample(const std::string& dumpTight) {
  Instance inst = counterexample_instance();
  ConstraintSystem sys = build_system(inst);
  IpPoint p = build_point_P(sys);

  FeasibilityReport feas = check_feasible(sys, p);
  std::cout << "point_feasible: " << (feas.feasible() ? "yes" : "no") << "\n";
  VertexCertificate cert = certify_vertex(sys, p);
  std::cout << "variables: " << cert.numVariables << "\n";
  std::cout << "tight_rows: " << cert.tightRows << "\n";
  std::cout << "rank: " << cert.rank << "/" << cert.numVariables << "\n";
  std::cout << "fractional_coordinates: " << p.fractionalCount() << "\n";
  std::cout << "verdict: " << (cert.isVertex ? "VERTEX" : "NOT_A_VERTEX") << "\n";

  if (!dumpTight.empty()) {
    std::ofstream out(dumpTight);
    if (!out) fail(ErrorCode::IoError, "cannot open " + dumpTight + " for writing");
    RationalMatrix m = tight_matrix(sys, p);
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_decimal_string(m.at(r, c));
      out << "\n";
    }
  }
  return cert.isVertex && p.fractionalCount() > 0 ? 0 : 2;
}

int cmd_round(const std::string& instancePath, const std::string& pointPath,
              const std::string& outPath, const std::string& logPath) {
  Instance inst = load_instance(instancePath);
  ConstraintSystem sys = build_system(inst);
  IpPoint p = read_point_file(sys, pointPath);

  std::vector<PairingDirection> dirs = pairing_directions(check_condition_i_prime(inst));

  RoundingResult result;
  try {
    result = round_to_integral(sys, p, dirs);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConditionsViolated) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    throw;
  }

  write_point_file(sys, result.point, outPath);

  std::ostringstream log;
  log << "objective_before: " << to_decimal_string(result.objectiveBefore) << "\n";
  log << "objective_after: " << to_decimal_string(result.objectiveAfter) << "\n";
  for (size_t i = 0; i < result.steps.size(); ++i) {
    const RoundingStep& s = result.steps[i];
    log << "step " << i + 1 << ": eps=" << to_decimal_string(s.epsilon)
        << " direction=" << (s.towardUpper ? "upper" : "lower")
        << " fractional=" << s.fractionalBefore << "->" << s.fractionalAfter
        << " objective=" << to_decimal_string(s.objective) << "\n";
  }
  if (!logPath.empty()) {
    std::ofstream out(logPath);
    if (!out) fail(ErrorCode::IoError, "cannot open " + logPath + " for writing");
    out << log.str();
  } else {
    std::cout << log.str();
  }
  std::cout << "rounded: " << outPath << " (" << result.steps.size() << " steps)\n";
  return 0;
}

int cmd_gen_instance(std::uint64_t seed, const std::string& family, const GenDims& dims,
                     const std::string& outPath) {
  Instance inst = gen_instance(seed, dims, family_from_string(family));
  write_instance_file(inst, outPath);
  std::cout << "wrote " << outPath << "\n";
  return 0;
}

int cmd_micp_solve(const std::string& micpPath, std::uint64_t tupleCap, bool serial) {
  MicpInstance inst = read_micp_file(micpPath);
  MicpBfOptions options;
  options.mode = serial ? ExecutionMode::serial : ExecutionMode::parallel;
  if (tupleCap) options.tupleCap = tupleCap;
  MicpSolveResult result = solve_micp_bf(inst, options);
  std::cout << "optimum: " << to_decimal_string(result.cost) << "\n";
  for (size_t j = 0; j < result.paths.size(); ++j) {
    std::cout << "path_" << j + 1 << ":";
    for (int v : result.paths[j].vertices) std::cout << " " << v;
    std::cout << "\n";
  }
  return 0;
}

int cmd_micp_from_dike(const std::string& instancePath, const std::string& outPath) {
  Instance inst = load_instance(instancePath);
  write_micp_file(dike_to_micp(inst), outPath);
  std::cout << "wrote " << outPath << "\n";
  return 0;
}

int cmd_micp_from_knapsack(const std::string& knapsackPath, const std::string& outPath) {
  std::ifstream in(knapsackPath);
  if (!in) fail(ErrorCode::IoError, "cannot open knapsack file " + knapsackPath);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::IoError, std::string("knapsack JSON parse error: ") + e.what());
  }
  std::vector<KnapsackItem> items;
  for (const auto& item : doc.at("items"))
    items.push_back({item.at("weight").get<std::int64_t>(),
                     parse_rational(item.at("profit").get<std::string>())});
  const std::int64_t capacity = doc.at("capacity").get<std::int64_t>();
  const int copies = doc.value("copies_allowed", 1);

  KnapsackReduction red = knapsack_to_dike(items, capacity, copies);
  write_instance_file(red.instance, outPath);
  std::cout << "offset: " << to_decimal_string(red.offset) << "\n";
  std::cout << "wrote " << outPath
            << " (knapsack maximum = offset - dike optimum; solve with `solve --method dp`)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-period dike/barrier heightening: exact solvers, IP tools, and audits"};
  app.require_subcommand(1);

  // solve
  std::string instancePath, method = "dp", format = "text";
  std::uint64_t planCap = 0, profileCap = 0, tupleCap = 0;
  bool serial = false, stats = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("-i,--instance", instancePath, "instance JSON file")->required();
  solve->add_option("-m,--method", method, "dp | sp | bf")
      ->check(CLI::IsMember({"dp", "sp", "bf"}));
  solve->add_option("--format", format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
  solve->add_option("--cap-plans", planCap, "brute-force plan cap");
  solve->add_option("--cap-profiles", profileCap,
                    "profile cap for sp (profiling only, result marked non-exact)");
  solve->add_flag("--serial", serial, "disable the OpenMP paths");
  solve->add_flag("--stats", stats, "print table/enumeration sizes");

  // check-conditions
  std::string condInstance, condFormat = "text", condWhich = "all";
  bool condSerial = false;
  auto* cond = app.add_subcommand("check-conditions", "Run the integrality condition checkers");
  cond->add_option("-i,--instance", condInstance, "instance JSON file")->required();
  cond->add_option("--format", condFormat, "text | csv")->check(CLI::IsMember({"text", "csv"}));
  cond->add_option("--condition", condWhich, "all | i | i_prime | ii | iii")
      ->check(CLI::IsMember({"all", "i", "i_prime", "ii", "iii"}));
  cond->add_flag("--serial", condSerial, "disable the OpenMP paths");

  // export-lp
  std::string lpInstance, lpOut;
  auto* lp = app.add_subcommand("export-lp", "Write the LP relaxation in CPLEX LP format");
  lp->add_option("-i,--instance", lpInstance, "instance JSON file")->required();
  lp->add_option("-o,--out", lpOut, "output .lp path")->required();

  // verify-counterexample
  std::string dumpTight;
  auto* verify = app.add_subcommand(
      "verify-counterexample", "Certify the fractional vertex of the built-in instance");
  verify->add_option("--dump-tight", dumpTight, "write the tight-constraint matrix to a file");

  // round
  std::string roundInstance, roundPoint, roundOut, roundLog;
  auto* round = app.add_subcommand("round", "Round a fractional feasible point to integral");
  round->add_option("-i,--instance", roundInstance, "instance JSON file")->required();
  round->add_option("-p,--point", roundPoint, "point JSON file (variable name -> value)")
      ->required();
  round->add_option("-o,--out", roundOut, "output point JSON path")->required();
  round->add_option("--log", roundLog, "step log path (default: stdout)");

  // gen-instance
  std::uint64_t seed = 0;
  std::string family = "monge", genOut;
  GenDims dims;
  auto* gen = app.add_subcommand("gen-instance", "Generate a deterministic instance");
  gen->add_option("--seed", seed, "64-bit seed")->required();
  gen->add_option("--family", family, "monge | random | mixed")
      ->check(CLI::IsMember({"monge", "random", "mixed"}));
  gen->add_option("--horizon", dims.horizon, "number of non-initial periods");
  gen->add_option("--segments", dims.segments, "number of dike segments");
  gen->add_option("--dike-heights", dims.dikeLevels, "dike height count");
  gen->add_option("--barrier-heights", dims.barrierLevels, "barrier height count");
  gen->add_option("-o,--out", genOut, "output instance path")->required();

  // micp
  auto* micp = app.add_subcommand("micp", "Layered-graph abstraction tools");
  micp->require_subcommand(1);
  std::string micpPath, micpDikeInstance, micpOut, knapsackPath;
  bool micpSerial = false;
  auto* micpSolve = micp->add_subcommand("solve", "Exhaustive MICP solve");
  micpSolve->add_option("-m,--micp", micpPath, "MICP JSON file")->required();
  micpSolve->add_option("--cap-tuples", tupleCap, "path tuple cap");
  micpSolve->add_flag("--serial", micpSerial, "disable the OpenMP paths");
  auto* micpFromDike = micp->add_subcommand("from-dike", "Embed an instance as an MICP");
  micpFromDike->add_option("-i,--instance", micpDikeInstance, "instance JSON file")->required();
  micpFromDike->add_option("-o,--out", micpOut, "output MICP path")->required();
  auto* micpFromKnapsack =
      micp->add_subcommand("from-knapsack", "Encode a bounded knapsack as a one-dike instance");
  micpFromKnapsack->add_option("-k,--knapsack", knapsackPath, "knapsack JSON file")->required();
  micpFromKnapsack->add_option("-o,--out", micpOut, "output instance path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed())
      return cmd_solve(instancePath, method, format, planCap, profileCap, serial, stats);
    if (cond->parsed()) return cmd_check_conditions(condInstance, condFormat, condWhich, condSerial);
    if (lp->parsed()) {
      Instance inst = load_instance(lpInstance);
      export_lp(build_system(inst), inst, lpOut);
      std::cout << "wrote " << lpOut << "\n";
      return 0;
    }
    if (verify->parsed()) return cmd_verify_counterexample(dumpTight);
    if (round->parsed()) return cmd_round(roundInstance, roundPoint, roundOut, roundLog);
    if (gen->parsed()) return cmd_gen_instance(seed, family, dims, genOut);
    if (micpSolve->parsed()) return cmd_micp_solve(micpPath, tupleCap, micpSerial);
    if (micpFromDike->parsed()) return cmd_micp_from_dike(micpDikeInstance, micpOut);
    if (micpFromKnapsack->parsed()) return cmd_micp_from_knapsack(knapsackPath, micpOut);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
