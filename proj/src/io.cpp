#include "alignh/io.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace alignh {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json span_to_json(const Span& s) { return ordered_json::array({s.begin, s.end}); }

Span span_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("span must be a [begin, end] pair");
  return Span(j[0].get<int>(), j[1].get<int>());
}

ordered_json formula_to_json(const CnfFormula& f) {
  ordered_json j;
  j["num_vars"] = f.num_vars;
  j["clauses"] = f.clauses;
  return j;
}

CnfFormula formula_from_json(const ordered_json& j) {
  CnfFormula f;
  f.num_vars = j.at("num_vars").get<int>();
  f.clauses = j.at("clauses").get<std::vector<std::vector<int>>>();
  return f;
}

ordered_json sat_map_to_json(const SatReductionMap& map) {
  ordered_json j;
  j["kind"] = "sat";
  j["formula"] = formula_to_json(map.formula);
  ordered_json blocks = ordered_json::array();
  for (const auto& b : map.blocks) {
    ordered_json jb;
    jb["var"] = b.var;
    jb["block"] = span_to_json(b.block);
    jb["positive"] = span_to_json(b.positive);
    jb["negative"] = span_to_json(b.negative);
    jb["dummy"] = b.dummy ? span_to_json(*b.dummy) : ordered_json(nullptr);
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  j["clause_word"] = map.clause_word;
  j["slack_word"] = map.slack_word;
  j["amplified_var"] = map.amplified_var;
  j["amplified_copies"] = map.amplified_copies;
  return j;
}

SatReductionMap sat_map_from_json(const ordered_json& j) {
  SatReductionMap map;
  map.formula = formula_from_json(j.at("formula"));
  for (const auto& jb : j.at("blocks")) {
    SatReductionMap::VarBlock b;
    b.var = jb.at("var").get<int>();
    b.block = span_from_json(jb.at("block"));
    b.positive = span_from_json(jb.at("positive"));
    b.negative = span_from_json(jb.at("negative"));
    if (!jb.at("dummy").is_null()) b.dummy = span_from_json(jb.at("dummy"));
    map.blocks.push_back(b);
  }
  map.clause_word = j.at("clause_word").get<std::vector<int>>();
  map.slack_word = j.at("slack_word").get<std::vector<int>>();
  map.amplified_var = j.at("amplified_var").get<int>();
  map.amplified_copies = j.at("amplified_copies").get<int>();
  return map;
}

ordered_json vc_map_to_json(const VcReductionMap& map) {
  ordered_json j;
  j["kind"] = "vc";
  ordered_json graph;
  graph["num_vertices"] = map.graph.num_vertices;
  graph["edges"] = map.graph.edges;
  j["graph"] = graph;
  j["k"] = map.k;
  ordered_json blocks = ordered_json::array();
  for (const auto& b : map.blocks) {
    ordered_json jb;
    jb["vertex"] = b.vertex;
    jb["block"] = span_to_json(b.block);
    jb["copies"] = b.copies;
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  j["edge_word"] = map.edge_word;
  j["slack_word"] = map.slack_word;
  j["t_words"] = map.t_words;
  return j;
}

VcReductionMap vc_map_from_json(const ordered_json& j) {
  VcReductionMap map;
  map.graph.num_vertices = j.at("graph").at("num_vertices").get<int>();
  map.graph.edges =
      j.at("graph").at("edges").get<std::vector<std::pair<int, int>>>();
  map.k = j.at("k").get<int>();
  for (const auto& jb : j.at("blocks")) {
    VcReductionMap::VertexBlock b;
    b.vertex = jb.at("vertex").get<int>();
    b.block = span_from_json(jb.at("block"));
    b.copies = jb.at("copies").get<int>();
    map.blocks.push_back(b);
  }
  map.edge_word = j.at("edge_word").get<std::vector<int>>();
  map.slack_word = j.at("slack_word").get<std::vector<int>>();
  map.t_words = j.at("t_words").get<std::vector<int>>();
  return map;
}

ordered_json links_to_json(const std::vector<Link>& links) {
  ordered_json arr = ordered_json::array();
  for (const Link& l : links) {
    ordered_json jl;
    jl["ei"] = l.e.begin;
    jl["ej"] = l.e.end;
    jl["fk"] = l.f.begin;
    jl["fl"] = l.f.end;
    arr.push_back(jl);
  }
  return arr;
}

std::vector<Link> links_from_json(const ordered_json& arr) {
  std::vector<Link> links;
  for (const auto& jl : arr)
    links.emplace_back(Span(jl.at("ei").get<int>(), jl.at("ej").get<int>()),
                       Span(jl.at("fk").get<int>(), jl.at("fl").get<int>()));
  return links;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

std::string format_double(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

}  // namespace

std::string serialize_instance(const InstanceFile& file) {
  ordered_json j;
  j["e"] = file.instance.e.tokens;
  j["f"] = file.instance.f.tokens;
  ordered_json phi = ordered_json::array();
  for (const auto& [link, w] : file.instance.phi.entries()) {
    ordered_json jl;
    jl["ei"] = link.e.begin;
    jl["ej"] = link.e.end;
    jl["fk"] = link.f.begin;
    jl["fl"] = link.f.end;
    jl["weight"] = format_weight(w);
    phi.push_back(jl);
  }
  j["phi"] = phi;
  if (file.has_sat_map())
    j["reduction_map"] = sat_map_to_json(std::get<SatReductionMap>(file.reduction_map));
  else if (file.has_vc_map())
    j["reduction_map"] = vc_map_to_json(std::get<VcReductionMap>(file.reduction_map));
  return dump(j);
}

InstanceFile parse_instance(const std::string& text) {
  ordered_json j = parse_json(text);
  InstanceFile file;
  file.instance.e.tokens = j.at("e").get<std::vector<std::string>>();
  file.instance.f.tokens = j.at("f").get<std::vector<std::string>>();
  for (const auto& jl : j.at("phi")) {
    Link link(Span(jl.at("ei").get<int>(), jl.at("ej").get<int>()),
              Span(jl.at("fk").get<int>(), jl.at("fl").get<int>()));
    file.instance.phi.set(link, parse_weight(jl.at("weight").get<std::string>()));
  }
  if (j.contains("reduction_map")) {
    const auto& jm = j.at("reduction_map");
    std::string kind = jm.at("kind").get<std::string>();
    if (kind == "sat")
      file.reduction_map = sat_map_from_json(jm);
    else if (kind == "vc")
      file.reduction_map = vc_map_from_json(jm);
    else
      throw std::invalid_argument("unknown reduction map kind: " + kind);
  }
  return file;
}

std::string serialize_witness(const std::string& bits) {
  for (char c : bits)
    if (c != '0' && c != '1')
      throw std::invalid_argument("witness must be 0/1 characters");
  return bits + "\n";
}

std::string parse_witness(const std::string& text) {
  std::string bits;
  bool seen_line = false;
  for (char c : text) {
    if (c == '\n') {
      seen_line = true;
      continue;
    }
    if (seen_line && !isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument("witness file has more than one line");
    if (c == '0' || c == '1') {
      bits.push_back(c);
    } else if (!isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("invalid witness character '") +
                                  c + "'");
    }
  }
  return bits;
}

std::string serialize_solution(const SolveResult& result) {
  ordered_json j;
  j["found"] = result.found;
  j["weight"] = format_weight(result.best_weight);
  j["links"] = result.best_alignment ? links_to_json(result.best_alignment->links)
                                     : ordered_json(nullptr);
  j["partition_witness"] = result.partition_witness
                               ? ordered_json(result.partition_witness->bits)
                               : ordered_json(nullptr);
  if (result.dual_witness) {
    ordered_json jd;
    jd["e_bits"] = result.dual_witness->e_bits;
    jd["f_bits"] = result.dual_witness->f_bits;
    jd["permutation"] = result.dual_witness->permutation;
    j["dual_witness"] = jd;
  } else {
    j["dual_witness"] = nullptr;
  }
  return dump(j);
}

SolveResult parse_solution(const std::string& text) {
  ordered_json j = parse_json(text);
  SolveResult result;
  result.found = j.at("found").get<bool>();
  result.best_weight = parse_weight(j.at("weight").get<std::string>());
  if (!j.at("links").is_null())
    result.best_alignment = Alignment{links_from_json(j.at("links"))};
  if (!j.at("partition_witness").is_null())
    result.partition_witness =
        PartitionWitness{j.at("partition_witness").get<std::string>()};
  if (!j.at("dual_witness").is_null()) {
    const auto& jd = j.at("dual_witness");
    DualWitness d;
    d.e_bits = jd.at("e_bits").get<std::string>();
    d.f_bits = jd.at("f_bits").get<std::string>();
    d.permutation = jd.at("permutation").get<std::vector<int>>();
    result.dual_witness = d;
  }
  return result;
}

namespace {

std::string witness_kind_name(WitnessKind k) {
  return k == WitnessKind::kPartition ? "partition" : "dual";
}

std::string metric_name(CorruptionMode m) {
  return m == CorruptionMode::kHamming ? "hamming" : "edit";
}

std::string strategy_name(CorruptionStrategy s) {
  return s == CorruptionStrategy::kRandom ? "random" : "adversarial";
}

std::string formula_line(const CnfFormula& f) {
  std::ostringstream out;
  out << f.num_vars << " |";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << " " << lit;
    out << " 0";
  }
  return out.str();
}

CnfFormula formula_from_line(const std::string& line) {
  auto bar = line.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("formula echo missing '|'");
  CnfFormula f;
  f.num_vars = std::stoi(line.substr(0, bar));
  std::istringstream lits(line.substr(bar + 1));
  std::vector<int> clause;
  int lit;
  while (lits >> lit) {
    if (lit == 0) {
      f.clauses.push_back(clause);
      clause.clear();
    } else {
      clause.push_back(lit);
    }
  }
  if (!clause.empty())
    throw std::invalid_argument("formula echo has an unterminated clause");
  return f;
}

}  // namespace

std::string report_to_csv(const ExperimentReport& report) {
  const ExperimentConfig& c = report.config;
  std::ostringstream out;
  out << "# formula: " << formula_line(c.formula) << "\n";
  out << "# amplify_var: " << c.amplify_var << "\n";
  out << "# amplify_copies: " << c.amplify_copies << "\n";
  out << "# witness: " << witness_kind_name(c.witness) << "\n";
  out << "# metric: " << metric_name(c.metric) << "\n";
  out << "# strategy: " << strategy_name(c.strategy) << "\n";
  out << "# budget: " << (c.budget ? std::to_string(*c.budget) : std::string("auto"))
      << "\n";
  out << "# c: " << format_double(c.c) << "\n";
  out << "# epsilon: " << format_double(c.epsilon) << "\n";
  out << "# trials: " << c.trials << "\n";
  out << "# seed: " << c.seed << "\n";
  out << "# witness_length: " << report.witness_length << "\n";
  out << "trial,budget,decoded,truth,success\n";
  for (const TrialRow& row : report.rows)
    out << row.trial << "," << row.budget << "," << (row.decoded ? 1 : 0) << ","
        << (row.truth ? 1 : 0) << "," << (row.success ? 1 : 0) << "\n";
  out << "# success_rate: " << format_double(report.success_rate) << "\n";
  return out.str();
}

ExperimentReport report_from_csv(const std::string& text) {
  ExperimentReport report;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("report line " + std::to_string(line_no) + ": " +
                                what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (colon == std::string::npos) fail("comment without key");
      std::string key = line.substr(2, colon - 2);
      std::string value = line.substr(colon + 1);
      if (!value.empty() && value[0] == ' ') value.erase(0, 1);
      if (key == "formula") report.config.formula = formula_from_line(value);
      else if (key == "amplify_var") report.config.amplify_var = std::stoi(value);
      else if (key == "amplify_copies") report.config.amplify_copies = std::stoi(value);
      else if (key == "witness")
        report.config.witness = value == "dual" ? WitnessKind::kDual
                                                : WitnessKind::kPartition;
      else if (key == "metric")
        report.config.metric = value == "edit" ? CorruptionMode::kEdit
                                               : CorruptionMode::kHamming;
      else if (key == "strategy")
        report.config.strategy = value == "random"
                                     ? CorruptionStrategy::kRandom
                                     : CorruptionStrategy::kAdversarialBlock;
      else if (key == "budget") {
        if (value != "auto") report.config.budget = std::stoi(value);
      } else if (key == "c") report.config.c = std::stod(value);
      else if (key == "epsilon") report.config.epsilon = std::stod(value);
      else if (key == "trials") report.config.trials = std::stoi(value);
      else if (key == "seed") report.config.seed = std::stoull(value);
      else if (key == "witness_length") report.witness_length = std::stoi(value);
      else if (key == "success_rate") report.success_rate = std::stod(value);
      else fail("unknown config key '" + key + "'");
      continue;
    }
    if (!header_seen) {
      if (line != "trial,budget,decoded,truth,success")
        fail("unexpected header row '" + line + "'");
      header_seen = true;
      continue;
    }
    TrialRow row;
    std::istringstream cells(line);
    std::string cell;
    int* ints[2] = {&row.trial, &row.budget};
    for (int i = 0; i < 2; ++i) {
      if (!std::getline(cells, cell, ',')) fail("short row");
      *ints[i] = std::stoi(cell);
    }
    bool* bools[3] = {&row.decoded, &row.truth, &row.success};
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(cells, cell, ',')) fail("short row");
      if (cell != "0" && cell != "1") fail("flag cell must be 0 or 1");
      *bools[i] = cell == "1";
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string report_to_markdown(const ExperimentReport& report) {
  const ExperimentConfig& c = report.config;
  std::ostringstream out;
  out << "# Recovery experiment\n\n";
  out << "| field | value |\n|---|---|\n";
  out << "| formula | " << c.formula.num_vars << " vars, "
      << c.formula.num_clauses() << " clauses |\n";
  out << "| amplified variable | x" << c.amplify_var << " |\n";
  out << "| amplification copies | " << c.amplify_copies << " |\n";
  out << "| witness | " << witness_kind_name(c.witness) << " (length "
      << report.witness_length << ") |\n";
  out << "| metric | " << metric_name(c.metric) << " |\n";
  out << "| strategy | " << strategy_name(c.strategy) << " |\n";
  out << "| budget | "
      << (report.rows.empty() ? std::string("-")
                              : std::to_string(report.rows.front().budget))
      << (c.budget ? "" : " (= floor(c*N - N^epsilon))") << " |\n";
  out << "| trials | " << c.trials << " |\n";
  out << "| seed | " << c.seed << " |\n\n";
  int successes = 0;
  for (const TrialRow& row : report.rows) successes += row.success ? 1 : 0;
  out << "**Success rate: " << successes << "/" << report.rows.size() << " = "
      << format_double(report.success_rate) << "**\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
  if (!out) throw std::invalid_argument("write failed for " + path);
}

}  // namespace alignh
