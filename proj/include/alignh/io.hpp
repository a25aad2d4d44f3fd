#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "alignh/core.hpp"
#include "alignh/recovery.hpp"
#include "alignh/reductions.hpp"
#include "alignh/solvers.hpp"

namespace alignh {

// File formats.  All serializers are canonical (fixed key order, sorted phi
// entries, 2-space indent, trailing newline) so parse/serialize round-trips
// are byte-identical.

struct InstanceFile {
  WsaInstance instance;
  std::variant<std::monostate, SatReductionMap, VcReductionMap> reduction_map;

  bool has_sat_map() const {
    return std::holds_alternative<SatReductionMap>(reduction_map);
  }
  bool has_vc_map() const {
    return std::holds_alternative<VcReductionMap>(reduction_map);
  }
};

std::string serialize_instance(const InstanceFile& file);
InstanceFile parse_instance(const std::string& text);

// Witness files: one line of 0/1 characters plus newline.
std::string serialize_witness(const std::string& bits);
std::string parse_witness(const std::string& text);

// Solution files: weight, witnesses and links of a SolveResult as JSON.
std::string serialize_solution(const SolveResult& result);
SolveResult parse_solution(const std::string& text);

// Experiment reports: CSV with '#'-prefixed config echo lines, a header row
// (trial,budget,decoded,truth,success) and a trailing aggregate comment.
std::string report_to_csv(const ExperimentReport& report);
ExperimentReport report_from_csv(const std::string& text);
std::string report_to_markdown(const ExperimentReport& report);

// Whole-file helpers.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace alignh
