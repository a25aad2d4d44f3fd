// alignh: reductions, exact solvers and witness-recovery experiments for
// weighted sentence alignment.
//
// Exit codes: 0 success / decision true; 10 negative result (decide false,
// no weight-1 or monotone alignment, witness decodes to nothing); 2 parse,
// configuration and size-guard errors; 1 anything unexpected.

#include <alignh/cnf.hpp>
#include <alignh/core.hpp>
#include <alignh/graph.hpp>
#include <alignh/io.hpp>
#include <alignh/recovery.hpp>
#include <alignh/reductions.hpp>
#include <alignh/solvers.hpp>
#include <alignh/suite.hpp>
#include <alignh/witness.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

namespace {

constexpr int kExitNegative = 10;
constexpr int kExitUsage = 2;

using namespace alignh;

std::pair<int, int> parse_var_count(const std::string& text, const char* what) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw std::invalid_argument(std::string(what) +
                                " wants the form VAR:COUNT, got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": cannot parse '" + text +
                                "'");
  }
}

void emit(const std::string& content, const std::string& out_path,
          const std::string& echo) {
  if (out_path.empty()) {
    std::cout << content;
    if (!echo.empty()) std::cerr << echo << "\n";
  } else {
    write_file(out_path, content);
    if (!echo.empty()) std::cout << echo << "\n";
  }
}

struct ReduceSatArgs {
  std::string input;
  std::string to = "wsa";
  std::string amplify;
  std::string amplify_equiv;
  bool repair = false;
  std::string out;
};

int run_reduce_sat(const ReduceSatArgs& args) {
  CnfFormula f = parse_dimacs_cnf_string(read_file(args.input));
  int amplified_var = 0, amplified_copies = 0;
  if (!args.amplify.empty()) {
    auto [v, a] = parse_var_count(args.amplify, "--amplify");
    f = amplify_sat_dummy_clauses(f, v, a);
    amplified_var = v;
    amplified_copies = a;
  }
  std::string layout_echo;
  if (!args.amplify_equiv.empty()) {
    auto [z, a] = parse_var_count(args.amplify_equiv, "--amplify-equiv");
    auto [g, layout] = amplify_sat_equiv_vars(f, z, a);
    f = g;
    layout_echo = ", equiv copies y" + std::to_string(layout.copy_vars.front()) +
                  "..y" + std::to_string(layout.copy_vars.back());
  }
  InstanceFile file;
  if (args.to == "pwsa") {
    auto [inst, map] = sat_to_pwsa_unique(f);
    file.instance = inst;
    map.amplified_var = amplified_var;
    map.amplified_copies = amplified_copies;
    file.reduction_map = map;
  } else if (args.to == "wsa") {
    auto [inst, map] = sat_to_wsa(f, args.repair);
    file.instance = inst;
    map.amplified_var = amplified_var;
    map.amplified_copies = amplified_copies;
    file.reduction_map = map;
  } else {
    throw std::invalid_argument("--to wants wsa or pwsa, got '" + args.to + "'");
  }
  std::string echo = "|e| = " + std::to_string(file.instance.e.size()) +
                     ", |f| = " + std::to_string(file.instance.f.size()) +
                     layout_echo;
  emit(serialize_instance(file), args.out, echo);
  return 0;
}

struct ReduceVcArgs {
  std::string input;
  int k = 0;
  std::string amplify;
  std::string out;
};

int run_reduce_vc(const ReduceVcArgs& args) {
  Graph g = parse_dimacs_graph_string(read_file(args.input));
  int k = args.k;
  std::string gadget_echo;
  if (!args.amplify.empty()) {
    auto [v, l] = parse_var_count(args.amplify, "--amplify");
    auto [bigger, gadget] = amplify_vc_path(g, v, l);
    g = bigger;
    k = args.k + l;  // cover size shifts by exactly L
    gadget_echo = ", path gadget v' = " + std::to_string(gadget.copy_vertex) +
                  ", k' = " + std::to_string(k);
  }
  auto [inst, map] = vc_to_wsa(g, k);
  InstanceFile file;
  file.instance = inst;
  file.reduction_map = map;
  std::string echo = "|e| = " + std::to_string(file.instance.e.size()) +
                     ", |f| = " + std::to_string(file.instance.f.size()) +
                     gadget_echo;
  emit(serialize_instance(file), args.out, echo);
  return 0;
}

struct SolveArgs {
  std::string input;
  std::string mode = "exact";
  std::optional<int> guard;
  std::string out;
};

int run_solve(const SolveArgs& args) {
  InstanceFile file = parse_instance(read_file(args.input));
  const int guard = args.guard ? *args.guard : partition_guard_from_env();
  if (args.mode == "decide") {
    bool yes = decide_weight_one(file.instance, guard);
    std::cout << "weight >= 1: " << (yes ? "yes" : "no") << "\n";
    return yes ? 0 : kExitNegative;
  }
  SolveResult result;
  if (args.mode == "exact")
    result = solve_exact(file.instance, guard);
  else if (args.mode == "pwsa")
    result = solve_pwsa(file.instance, guard);
  else if (args.mode == "monotone")
    result = solve_monotone_dp(file.instance);
  else
    throw std::invalid_argument(
        "--mode wants exact|pwsa|monotone|decide, got '" + args.mode + "'");
  if (!result.found) {
    std::cout << "no alignment found\n";
    return kExitNegative;
  }
  std::cout << "weight " << format_weight(result.best_weight) << "\n";
  if (result.partition_witness)
    std::cout << "witness " << result.partition_witness->bits << "\n";
  else if (result.dual_witness)
    std::cout << "witness " << result.dual_witness->concat_bits() << "\n";
  if (!args.out.empty()) write_file(args.out, serialize_solution(result));
  return 0;
}

struct WitnessEncodeArgs {
  std::string instance;
  std::string solution;
  std::string kind = "partition";
  std::string out;
};

int run_witness_encode(const WitnessEncodeArgs& args) {
  InstanceFile file = parse_instance(read_file(args.instance));
  SolveResult sol = parse_solution(read_file(args.solution));
  if (!sol.best_alignment)
    throw std::invalid_argument("solution file has no alignment links");
  std::string bits;
  if (args.kind == "partition") {
    bits = encode_partition(file.instance, *sol.best_alignment).bits;
  } else if (args.kind == "dual") {
    bits = encode_dual(file.instance, *sol.best_alignment).concat_bits();
  } else if (args.kind == "matrix") {
    MatrixWitness m = encode_matrix(file.instance, *sol.best_alignment);
    bits.reserve(m.cells.size());
    for (uint8_t cell : m.cells) bits.push_back(cell ? '1' : '0');
  } else {
    throw std::invalid_argument("--kind wants partition|dual|matrix, got '" +
                                args.kind + "'");
  }
  emit(serialize_witness(bits), args.out, "");
  return 0;
}

struct WitnessDecodeArgs {
  std::string instance;
  std::string witness;
  std::string solution;
};

int run_witness_decode(const WitnessDecodeArgs& args) {
  InstanceFile file = parse_instance(read_file(args.instance));
  if (file.has_sat_map()) {
    if (args.witness.empty())
      throw std::invalid_argument("decoding a SAT instance wants --witness");
    const auto& map = std::get<SatReductionMap>(file.reduction_map);
    PartitionWitness w{parse_witness(read_file(args.witness))};
    std::optional<Assignment> asg = decode_assignment(w, map, file.instance);
    if (!asg) {
      std::cout << "no perfect matching for this witness\n";
      return kExitNegative;
    }
    for (std::size_t v = 1; v < asg->size(); ++v)
      std::cout << (v > 1 ? " " : "") << "x" << v << "="
                << ((*asg)[v] ? "true" : "false");
    std::cout << "\n";
    return 0;
  }
  if (file.has_vc_map()) {
    if (args.solution.empty())
      throw std::invalid_argument(
          "decoding a cover wants --solution (alignment links)");
    const auto& map = std::get<VcReductionMap>(file.reduction_map);
    SolveResult sol = parse_solution(read_file(args.solution));
    if (!sol.best_alignment)
      throw std::invalid_argument("solution file has no alignment links");
    VertexSet cover = decode_cover(*sol.best_alignment, map);
    std::cout << "cover (size " << cover.size() << "):";
    for (int v : cover) std::cout << " " << v;
    std::cout << "\n";
    return 0;
  }
  throw std::invalid_argument("instance file has no reduction map to decode");
}

struct WitnessDistanceArgs {
  std::string a;
  std::string b;
  std::string metric = "hamming";
};

int run_witness_distance(const WitnessDistanceArgs& args) {
  std::string wa = parse_witness(read_file(args.a));
  std::string wb = parse_witness(read_file(args.b));
  int d;
  if (args.metric == "hamming")
    d = hamming_distance(wa, wb);
  else if (args.metric == "edit")
    d = edit_distance(wa, wb, false);
  else if (args.metric == "edit-t")
    d = edit_distance(wa, wb, true);
  else
    throw std::invalid_argument("--metric wants hamming|edit|edit-t, got '" +
                                args.metric + "'");
  std::cout << d << "\n";
  return 0;
}

struct ExperimentArgs {
  std::string cnf;
  std::string amplify;
  std::string witness = "partition";
  std::string metric = "hamming";
  std::string strategy = "adversarial";
  std::optional<int> budget;
  std::optional<double> c;
  double epsilon = 0.25;
  int trials = 100;
  uint64_t seed = 1;
  std::string csv_out;
  std::string md_out;
};

int run_experiment(const ExperimentArgs& args) {
  ExperimentConfig config;
  config.formula = parse_dimacs_cnf_string(read_file(args.cnf));
  if (!args.amplify.empty()) {
    auto [v, a] = parse_var_count(args.amplify, "--amplify");
    config.amplify_var = v;
    config.amplify_copies = a;
  }
  if (args.witness == "partition")
    config.witness = WitnessKind::kPartition;
  else if (args.witness == "dual")
    config.witness = WitnessKind::kDual;
  else
    throw std::invalid_argument("--witness wants partition|dual, got '" +
                                args.witness + "'");
  if (args.metric == "hamming")
    config.metric = CorruptionMode::kHamming;
  else if (args.metric == "edit")
    config.metric = CorruptionMode::kEdit;
  else
    throw std::invalid_argument("--metric wants hamming|edit, got '" +
                                args.metric + "'");
  if (args.strategy == "adversarial")
    config.strategy = CorruptionStrategy::kAdversarialBlock;
  else if (args.strategy == "random")
    config.strategy = CorruptionStrategy::kRandom;
  else
    throw std::invalid_argument("--strategy wants adversarial|random, got '" +
                                args.strategy + "'");
  config.budget = args.budget;
  config.c = args.c.value_or(config.witness == WitnessKind::kDual ? 2.0 / 3.0
                                                                  : 0.5);
  config.epsilon = args.epsilon;
  config.trials = args.trials;
  config.seed = args.seed;

  ExperimentReport report = run_recovery_experiment(config);
  std::string summary =
      "success_rate " + std::to_string(report.success_rate) + " over " +
      std::to_string(report.rows.size()) + " trials (witness length " +
      std::to_string(report.witness_length) + ")";
  emit(report_to_csv(report), args.csv_out, summary);
  if (!args.md_out.empty()) write_file(args.md_out, report_to_markdown(report));
  return 0;
}

struct VerifyArgs {
  int max_vars = 3;
  int max_clauses = 3;
  int max_vertices = 4;
  int samples = 100;
  uint64_t seed = 1;
};

int run_verify(const VerifyArgs& args) {
  bool all_ok = true;

  long checked = 0, mismatches = 0;
  for (int n = 1; n <= args.max_vars; ++n) {
    for_each_both_polarity_formula(n, args.max_clauses, [&](const CnfFormula& f) {
      bool sat = brute_force_satisfiable(f);
      auto [inst, map] = sat_to_wsa(f);
      if (sat != decide_weight_one(inst)) ++mismatches;
      auto [inst2, map2] = sat_to_pwsa_unique(f);
      if (sat != decide_weight_one(inst2)) ++mismatches;
      ++checked;
      return true;
    });
  }
  std::mt19937_64 rng(args.seed);
  for (int i = 0; i < args.samples; ++i) {
    std::uniform_int_distribution<int> nv(2, 5), nc(4, 6);
    CnfFormula f = random_both_polarity_formula(nv(rng), nc(rng), rng);
    bool sat = brute_force_satisfiable(f);
    auto [inst, map] = sat_to_wsa(f);
    if (sat != decide_weight_one(inst)) ++mismatches;
    ++checked;
  }
  std::cout << "sat-equivalence: " << (mismatches == 0 ? "PASS" : "FAIL")
            << " (" << checked << " formulas)\n";
  all_ok = all_ok && mismatches == 0;

  checked = mismatches = 0;
  for (int n = 2; n <= args.max_vertices; ++n) {
    for_each_min_degree_one_graph(n, [&](const Graph& g) {
      for (int k = 1; k <= n; ++k) {
        bool cover = brute_force_has_cover(g, k);
        auto [inst, map] = vc_to_wsa(g, k);
        if (cover != decide_weight_one(inst)) ++mismatches;
        ++checked;
      }
      return true;
    });
  }
  std::cout << "vc-equivalence: " << (mismatches == 0 ? "PASS" : "FAIL") << " ("
            << checked << " pairs)\n";
  all_ok = all_ok && mismatches == 0;

  std::cout << (all_ok ? "verify: PASS" : "verify: FAIL") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Reductions, exact solvers and witness-recovery experiments for "
      "weighted sentence alignment"};
  app.require_subcommand(1);

  ReduceSatArgs reduce_sat;
  ReduceVcArgs reduce_vc;
  SolveArgs solve;
  WitnessEncodeArgs wenc;
  WitnessDecodeArgs wdec;
  WitnessDistanceArgs wdist;
  ExperimentArgs experiment;
  VerifyArgs verify;

  CLI::App* reduce = app.add_subcommand("reduce", "Build a WSA instance from a source problem");
  reduce->require_subcommand(1);
  CLI::App* rsat = reduce->add_subcommand("sat", "3-CNF satisfiability (DIMACS cnf input)");
  rsat->add_option("input", reduce_sat.input, "DIMACS CNF file")->required();
  rsat->add_option("--to", reduce_sat.to, "construction: wsa or pwsa (uniqueness variant)");
  rsat->add_option("--amplify", reduce_sat.amplify, "VAR:COUNT dummy clauses (v OR ~v)");
  rsat->add_option("--amplify-equiv", reduce_sat.amplify_equiv, "VAR:COUNT equivalent fresh variables");
  rsat->add_flag("--repair", reduce_sat.repair, "insert dummy pairs for single-polarity variables");
  rsat->add_option("-o,--output", reduce_sat.out, "instance file (default stdout)");

  CLI::App* rvc = reduce->add_subcommand("vc", "vertex cover (DIMACS edge-list input)");
  rvc->add_option("input", reduce_vc.input, "edge list file")->required();
  rvc->add_option("--k", reduce_vc.k, "cover budget")->required();
  rvc->add_option("--amplify", reduce_vc.amplify, "VERTEX:L path gadget (shifts k by L)");
  rvc->add_option("-o,--output", reduce_vc.out, "instance file (default stdout)");

  CLI::App* csolve = app.add_subcommand("solve", "Solve or decide an instance file");
  csolve->add_option("input", solve.input, "instance file")->required();
  csolve->add_option("--mode", solve.mode, "exact|pwsa|monotone|decide");
  csolve->add_option("--guard", solve.guard, "partition size guard (default " +
                                                 std::to_string(kDefaultPartitionGuard) +
                                                 ", env " + kGuardEnvVar + ")");
  csolve->add_option("-o,--output", solve.out, "solution file");

  CLI::App* witness = app.add_subcommand("witness", "Encode, decode and compare witnesses");
  witness->require_subcommand(1);
  CLI::App* wence = witness->add_subcommand("encode", "alignment -> witness string");
  wence->add_option("instance", wenc.instance, "instance file")->required();
  wence->add_option("--solution", wenc.solution, "solution file with links")->required();
  wence->add_option("--kind", wenc.kind, "partition|dual|matrix");
  wence->add_option("-o,--output", wenc.out, "witness file (default stdout)");

  CLI::App* wdecc = witness->add_subcommand("decode", "witness -> source-problem solution");
  wdecc->add_option("instance", wdec.instance, "instance file with reduction map")->required();
  wdecc->add_option("--witness", wdec.witness, "witness file (SAT instances)");
  wdecc->add_option("--solution", wdec.solution, "solution file (cover decoding)");

  CLI::App* wdistc = witness->add_subcommand("distance", "distance between two witness files");
  wdistc->add_option("a", wdist.a, "first witness file")->required();
  wdistc->add_option("b", wdist.b, "second witness file")->required();
  wdistc->add_option("--metric", wdist.metric, "hamming|edit|edit-t");

  CLI::App* cexp = app.add_subcommand("experiment", "Corruption-recovery experiment");
  cexp->add_option("--cnf", experiment.cnf, "DIMACS CNF file")->required();
  cexp->add_option("--amplify", experiment.amplify, "VAR:COUNT dummy-clause amplification");
  cexp->add_option("--witness", experiment.witness, "partition|dual");
  cexp->add_option("--metric", experiment.metric, "hamming|edit");
  cexp->add_option("--strategy", experiment.strategy, "adversarial|random");
  cexp->add_option("--budget", experiment.budget, "corruption budget (default floor(c*N - N^epsilon))");
  cexp->add_option("--c", experiment.c, "budget coefficient (default 1/2 partition, 2/3 dual)");
  cexp->add_option("--epsilon", experiment.epsilon, "budget exponent");
  cexp->add_option("--trials", experiment.trials, "number of trials");
  cexp->add_option("--seed", experiment.seed, "base seed");
  cexp->add_option("--csv", experiment.csv_out, "CSV report file (default stdout)");
  cexp->add_option("--md", experiment.md_out, "Markdown summary file");

  CLI::App* cverify = app.add_subcommand("verify", "Run the reduction-equivalence suite");
  cverify->add_option("--max-vars", verify.max_vars, "exhaustive formula variables");
  cverify->add_option("--max-clauses", verify.max_clauses, "exhaustive formula clauses");
  cverify->add_option("--max-vertices", verify.max_vertices, "exhaustive graph vertices");
  cverify->add_option("--samples", verify.samples, "random formulas on top");
  cverify->add_option("--seed", verify.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    if (rsat->parsed()) return run_reduce_sat(reduce_sat);
    if (rvc->parsed()) return run_reduce_vc(reduce_vc);
    if (csolve->parsed()) return run_solve(solve);
    if (wence->parsed()) return run_witness_encode(wenc);
    if (wdecc->parsed()) return run_witness_decode(wdec);
    if (wdistc->parsed()) return run_witness_distance(wdist);
    if (cexp->parsed()) return run_experiment(experiment);
    if (cverify->parsed()) return run_verify(verify);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
