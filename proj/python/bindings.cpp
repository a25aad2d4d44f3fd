// pybind11 bindings for the alignh core: reductions, solvers, witness
// codecs, corruption and the recovery experiment.  Weights cross the
// boundary as exact "p/q" strings; alignments as (eb, ee, fb, fe) tuples.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "alignh/cnf.hpp"
#include "alignh/core.hpp"
#include "alignh/graph.hpp"
#include "alignh/io.hpp"
#include "alignh/recovery.hpp"
#include "alignh/reductions.hpp"
#include "alignh/solvers.hpp"
#include "alignh/witness.hpp"

namespace py = pybind11;
using namespace alignh;

namespace {

using LinkTuple = std::tuple<int, int, int, int>;

Alignment alignment_from_tuples(const std::vector<LinkTuple>& links) {
  Alignment a;
  for (const auto& [eb, ee, fb, fe] : links)
    a.links.push_back(Link(Span(eb, ee), Span(fb, fe)));
  a.normalize();
  return a;
}

std::vector<LinkTuple> tuples_from_alignment(const Alignment& a) {
  std::vector<LinkTuple> out;
  out.reserve(a.links.size());
  for (const Link& l : a.links)
    out.emplace_back(l.e.begin, l.e.end, l.f.begin, l.f.end);
  return out;
}

CorruptionMode parse_mode(const std::string& name) {
  if (name == "hamming") return CorruptionMode::kHamming;
  if (name == "edit") return CorruptionMode::kEdit;
  throw std::invalid_argument("mode wants hamming|edit, got '" + name + "'");
}

CorruptionStrategy parse_strategy(const std::string& name) {
  if (name == "random") return CorruptionStrategy::kRandom;
  if (name == "adversarial") return CorruptionStrategy::kAdversarialBlock;
  throw std::invalid_argument("strategy wants random|adversarial, got '" +
                              name + "'");
}

}  // namespace

PYBIND11_MODULE(_alignh, m) {
  m.doc() =
      "Bijective weighted sentence alignment: gadget reductions, exact "
      "solvers, witness codecs and corruption-recovery experiments";

  py::class_<Span>(m, "Span")
      .def(py::init<>())
      .def(py::init<int, int>(), py::arg("begin"), py::arg("end"))
      .def_readwrite("begin", &Span::begin)
      .def_readwrite("end", &Span::end)
      .def("length", &Span::length)
      .def("__eq__",
           [](const Span& a, const Span& b) { return a == b; })
      .def("__repr__", [](const Span& s) {
        return "Span(" + std::to_string(s.begin) + ", " +
               std::to_string(s.end) + ")";
      });

  py::class_<CnfFormula>(m, "CnfFormula")
      .def(py::init<>())
      .def(py::init([](int num_vars, std::vector<std::vector<int>> clauses) {
             CnfFormula f;
             f.num_vars = num_vars;
             f.clauses = std::move(clauses);
             return f;
           }),
           py::arg("num_vars"), py::arg("clauses"))
      .def_readwrite("num_vars", &CnfFormula::num_vars)
      .def_readwrite("clauses", &CnfFormula::clauses)
      .def("num_clauses", &CnfFormula::num_clauses)
      .def("__repr__", [](const CnfFormula& f) {
        return "CnfFormula(num_vars=" + std::to_string(f.num_vars) + ", " +
               std::to_string(f.num_clauses()) + " clauses)";
      });

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init([](int num_vertices,
                       std::vector<std::pair<int, int>> edges) {
             Graph g;
             g.num_vertices = num_vertices;
             g.edges = std::move(edges);
             g.normalize();
             return g;
           }),
           py::arg("num_vertices"), py::arg("edges"))
      .def_readwrite("num_vertices", &Graph::num_vertices)
      .def_readwrite("edges", &Graph::edges)
      .def("num_edges", &Graph::num_edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.num_vertices) + " vertices, " +
               std::to_string(g.num_edges()) + " edges)";
      });

  py::class_<WsaInstance>(m, "WsaInstance")
      .def(py::init<>())
      .def_property(
          "e", [](const WsaInstance& i) { return i.e.tokens; },
          [](WsaInstance& i, std::vector<std::string> t) {
            i.e.tokens = std::move(t);
          })
      .def_property(
          "f", [](const WsaInstance& i) { return i.f.tokens; },
          [](WsaInstance& i, std::vector<std::string> t) {
            i.f.tokens = std::move(t);
          })
      .def(
          "weight",
          [](const WsaInstance& i, int eb, int ee, int fb, int fe) {
            return format_weight(i.phi(Link(Span(eb, ee), Span(fb, fe))));
          },
          py::arg("e_begin"), py::arg("e_end"), py::arg("f_begin"),
          py::arg("f_end"))
      .def(
          "set_weight",
          [](WsaInstance& i, int eb, int ee, int fb, int fe,
             const std::string& w) {
            i.phi.set(Link(Span(eb, ee), Span(fb, fe)), parse_weight(w));
          },
          py::arg("e_begin"), py::arg("e_end"), py::arg("f_begin"),
          py::arg("f_end"), py::arg("weight"))
      .def("links",
           [](const WsaInstance& i) {
             std::vector<std::tuple<int, int, int, int, std::string>> out;
             for (const auto& [link, w] : i.phi.entries())
               out.emplace_back(link.e.begin, link.e.end, link.f.begin,
                                link.f.end, format_weight(w));
             return out;
           })
      .def("__repr__", [](const WsaInstance& i) {
        return "WsaInstance(|e|=" + std::to_string(i.e.size()) + ", |f|=" +
               std::to_string(i.f.size()) + ", " +
               std::to_string(i.phi.size()) + " links)";
      });

  py::class_<SatReductionMap>(m, "SatReductionMap")
      .def_readonly("formula", &SatReductionMap::formula)
      .def_readonly("clause_word", &SatReductionMap::clause_word)
      .def_readonly("slack_word", &SatReductionMap::slack_word)
      .def_readonly("amplified_var", &SatReductionMap::amplified_var)
      .def_readonly("amplified_copies", &SatReductionMap::amplified_copies)
      .def(
          "block",
          [](const SatReductionMap& map, int v) {
            const auto& b = map.block_of(v);
            return std::make_pair(b.block.begin, b.block.end);
          },
          py::arg("var"), "e-span of the variable's block as (begin, end)");

  py::class_<VcReductionMap>(m, "VcReductionMap")
      .def_readonly("graph", &VcReductionMap::graph)
      .def_readonly("k", &VcReductionMap::k)
      .def_readonly("edge_word", &VcReductionMap::edge_word)
      .def_readonly("slack_word", &VcReductionMap::slack_word)
      .def_readonly("t_words", &VcReductionMap::t_words)
      .def(
          "block",
          [](const VcReductionMap& map, int v) {
            const auto& b = map.block_of(v);
            return std::make_pair(b.block.begin, b.block.end);
          },
          py::arg("vertex"));

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("found", &SolveResult::found)
      .def_property_readonly(
          "weight",
          [](const SolveResult& r) { return format_weight(r.best_weight); })
      .def_property_readonly(
          "links",
          [](const SolveResult& r) -> std::optional<std::vector<LinkTuple>> {
            if (!r.best_alignment) return std::nullopt;
            return tuples_from_alignment(*r.best_alignment);
          })
      .def_property_readonly(
          "partition_bits",
          [](const SolveResult& r) -> std::optional<std::string> {
            if (!r.partition_witness) return std::nullopt;
            return r.partition_witness->bits;
          })
      .def_property_readonly(
          "dual_bits",
          [](const SolveResult& r) -> std::optional<std::string> {
            if (!r.dual_witness) return std::nullopt;
            return r.dual_witness->concat_bits();
          })
      .def("__repr__", [](const SolveResult& r) {
        return r.found ? "SolveResult(found, weight " +
                             format_weight(r.best_weight) + ")"
                       : "SolveResult(not found)";
      });

  py::class_<BlockPattern>(m, "BlockPattern")
      .def_readonly("span", &BlockPattern::span)
      .def_readonly("true_pattern", &BlockPattern::true_pattern)
      .def_readonly("false_pattern", &BlockPattern::false_pattern)
      .def("length", &BlockPattern::length)
      .def("copy_positions", &BlockPattern::copy_positions);

  py::class_<InstanceFile>(m, "InstanceFile")
      .def(py::init<>())
      .def_readwrite("instance", &InstanceFile::instance)
      .def_property_readonly(
          "sat_map",
          [](const InstanceFile& f) -> std::optional<SatReductionMap> {
            if (!f.has_sat_map()) return std::nullopt;
            return std::get<SatReductionMap>(f.reduction_map);
          })
      .def_property_readonly(
          "vc_map",
          [](const InstanceFile& f) -> std::optional<VcReductionMap> {
            if (!f.has_vc_map()) return std::nullopt;
            return std::get<VcReductionMap>(f.reduction_map);
          })
      .def("serialize",
           [](const InstanceFile& f) { return serialize_instance(f); });

  // ---- text formats ------------------------------------------------------

  m.def("parse_cnf", &parse_dimacs_cnf_string, py::arg("text"),
        "DIMACS CNF text -> CnfFormula");
  m.def("to_cnf", &to_dimacs_cnf, py::arg("formula"));
  m.def("parse_graph", &parse_dimacs_graph_string, py::arg("text"),
        "DIMACS edge-list text -> Graph");
  m.def("to_graph", &to_dimacs_graph, py::arg("graph"));
  m.def(
      "serialize_instance",
      [](const WsaInstance& inst, std::optional<SatReductionMap> sat_map,
         std::optional<VcReductionMap> vc_map) {
        InstanceFile file;
        file.instance = inst;
        if (sat_map)
          file.reduction_map = *sat_map;
        else if (vc_map)
          file.reduction_map = *vc_map;
        return serialize_instance(file);
      },
      py::arg("instance"), py::arg("sat_map") = std::nullopt,
      py::arg("vc_map") = std::nullopt);
  m.def("parse_instance", &parse_instance, py::arg("text"));

  // ---- reductions --------------------------------------------------------

  m.def("sat_to_wsa", &sat_to_wsa, py::arg("formula"),
        py::arg("repair_single_polarity") = false,
        "-> (WsaInstance, SatReductionMap)");
  m.def("sat_to_pwsa_unique", &sat_to_pwsa_unique, py::arg("formula"),
        "dummy-pair uniqueness variant -> (WsaInstance, SatReductionMap)");
  m.def("vc_to_wsa", &vc_to_wsa, py::arg("graph"), py::arg("k"),
        "-> (WsaInstance, VcReductionMap)");
  m.def("amplify_sat_dummy_clauses", &amplify_sat_dummy_clauses,
        py::arg("formula"), py::arg("var"), py::arg("copies"));

  // ---- solvers -----------------------------------------------------------

  m.def("decide_weight_one", &decide_weight_one, py::arg("instance"),
        py::arg("guard") = kDefaultPartitionGuard);
  m.def("solve_exact", &solve_exact, py::arg("instance"),
        py::arg("guard") = kDefaultPartitionGuard);
  m.def("solve_pwsa", &solve_pwsa, py::arg("instance"),
        py::arg("guard") = kDefaultPartitionGuard);
  m.def("solve_monotone_dp", &solve_monotone_dp, py::arg("instance"));

  // ---- alignments and witnesses ------------------------------------------

  m.def(
      "alignment_weight",
      [](const WsaInstance& inst, const std::vector<LinkTuple>& links) {
        return format_weight(alignment_weight(inst,
                                              alignment_from_tuples(links)));
      },
      py::arg("instance"), py::arg("links"));
  m.def(
      "check_alignment",
      [](const WsaInstance& inst, const std::vector<LinkTuple>& links) {
        ValidityReport r = check_alignment(inst, alignment_from_tuples(links));
        return std::make_pair(r.valid, r.message);
      },
      py::arg("instance"), py::arg("links"), "-> (valid, first violation)");
  m.def(
      "encode_partition",
      [](const WsaInstance& inst, const std::vector<LinkTuple>& links) {
        return encode_partition(inst, alignment_from_tuples(links)).bits;
      },
      py::arg("instance"), py::arg("links"));
  m.def(
      "encode_dual",
      [](const WsaInstance& inst, const std::vector<LinkTuple>& links) {
        return encode_dual(inst, alignment_from_tuples(links)).concat_bits();
      },
      py::arg("instance"), py::arg("links"));
  m.def(
      "encode_matrix",
      [](const WsaInstance& inst, const std::vector<LinkTuple>& links) {
        MatrixWitness w = encode_matrix(inst, alignment_from_tuples(links));
        std::string bits;
        bits.reserve(w.cells.size());
        for (auto cell : w.cells) bits.push_back(cell ? '1' : '0');
        return bits;
      },
      py::arg("instance"), py::arg("links"),
      "row-major |f| x |e| cell bits as a string");

  m.def("hamming_distance", &hamming_distance, py::arg("a"), py::arg("b"));
  m.def("edit_distance", &edit_distance, py::arg("a"), py::arg("b"),
        py::arg("transpositions") = false);

  // ---- decoding ----------------------------------------------------------

  m.def(
      "decode_assignment",
      [](const std::string& bits, const SatReductionMap& map,
         const WsaInstance& inst) {
        return decode_assignment(PartitionWitness{bits}, map, inst);
      },
      py::arg("witness"), py::arg("map"), py::arg("instance"),
      "-> assignment (index 0 unused) or None when no perfect matching");
  m.def(
      "witness_from_assignment",
      [](const SatReductionMap& map, const Assignment& asg,
         const WsaInstance& inst) {
        return witness_from_assignment(map, asg, inst).bits;
      },
      py::arg("map"), py::arg("assignment"), py::arg("instance"));
  m.def(
      "decode_cover",
      [](const std::vector<LinkTuple>& links, const VcReductionMap& map) {
        VertexSet cover = decode_cover(alignment_from_tuples(links), map);
        return std::vector<int>(cover.begin(), cover.end());
      },
      py::arg("links"), py::arg("map"));
  m.def("ideal_block_pattern", &ideal_block_pattern, py::arg("map"),
        py::arg("var"));
  m.def("majority_decode", &majority_decode, py::arg("witness"),
        py::arg("pattern"));

  // ---- brute-force oracles ----------------------------------------------

  m.def("evaluate", &evaluate, py::arg("formula"), py::arg("assignment"),
        "assignment is 1-based: index 0 is padding");
  m.def("brute_force_satisfying", &brute_force_satisfying, py::arg("formula"));
  m.def("brute_force_satisfiable", &brute_force_satisfiable,
        py::arg("formula"));
  m.def(
      "is_vertex_cover",
      [](const Graph& g, const std::vector<int>& vertices) {
        return is_vertex_cover(g, VertexSet(vertices.begin(), vertices.end()));
      },
      py::arg("graph"), py::arg("vertices"));
  m.def(
      "brute_force_min_cover",
      [](const Graph& g) -> std::optional<std::vector<int>> {
        auto cover = brute_force_min_cover(g);
        if (!cover) return std::nullopt;
        return std::vector<int>(cover->begin(), cover->end());
      },
      py::arg("graph"));

  // ---- corruption and experiments ----------------------------------------

  m.def(
      "corrupt",
      [](const std::string& witness, int amount, const std::string& mode,
         const std::string& strategy, std::pair<int, int> target,
         uint64_t seed) {
        CorruptionBudget budget;
        budget.amount = amount;
        budget.mode = parse_mode(mode);
        budget.strategy = parse_strategy(strategy);
        budget.target = Span(target.first, target.second);
        budget.seed = seed;
        return corrupt(witness, budget);
      },
      py::arg("witness"), py::arg("amount"), py::arg("mode") = "hamming",
      py::arg("strategy") = "random",
      py::arg("target") = std::make_pair(0, 0), py::arg("seed") = 0);

  m.def(
      "run_experiment",
      [](const CnfFormula& formula, int amplify_var, int amplify_copies,
         const std::string& witness, const std::string& metric,
         const std::string& strategy, std::optional<int> budget,
         std::optional<double> c, double epsilon, int trials, uint64_t seed) {
        ExperimentConfig config;
        config.formula = formula;
        config.amplify_var = amplify_var;
        config.amplify_copies = amplify_copies;
        if (witness == "partition")
          config.witness = WitnessKind::kPartition;
        else if (witness == "dual")
          config.witness = WitnessKind::kDual;
        else
          throw std::invalid_argument("witness wants partition|dual, got '" +
                                      witness + "'");
        config.metric = parse_mode(metric);
        config.strategy = parse_strategy(strategy);
        config.budget = budget;
        config.c = c.value_or(config.witness == WitnessKind::kDual ? 2.0 / 3.0
                                                                   : 0.5);
        config.epsilon = epsilon;
        config.trials = trials;
        config.seed = seed;

        ExperimentReport report = run_recovery_experiment(config);
        py::dict out;
        out["success_rate"] = report.success_rate;
        out["witness_length"] = report.witness_length;
        out["csv"] = report_to_csv(report);
        out["markdown"] = report_to_markdown(report);
        py::list rows;
        for (const TrialRow& row : report.rows) {
          py::dict r;
          r["trial"] = row.trial;
          r["budget"] = row.budget;
          r["decoded"] = row.decoded;
          r["truth"] = row.truth;
          r["success"] = row.success;
          rows.append(r);
        }
        out["rows"] = rows;
        return out;
      },
      py::arg("formula"), py::arg("amplify_var") = 1,
      py::arg("amplify_copies") = 0, py::arg("witness") = "partition",
      py::arg("metric") = "hamming", py::arg("strategy") = "adversarial",
      py::arg("budget") = std::nullopt, py::arg("c") = std::nullopt,
      py::arg("epsilon") = 0.25, py::arg("trials") = 100, py::arg("seed") = 1);

  m.attr("DEFAULT_PARTITION_GUARD") = kDefaultPartitionGuard;
  m.attr("GUARD_ENV_VAR") = kGuardEnvVar;
}
