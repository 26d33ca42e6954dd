#ifndef PCST_IO_HPP
#define PCST_IO_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "pcst/dual.hpp"
#include "pcst/growth_engine.hpp"
#include "pcst/instance.hpp"
#include "pcst/oracle.hpp"
#include "pcst/quota.hpp"
#include "pcst/solver.hpp"

namespace pcst {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Parses instance JSON:
///   {"root": id, "vertices": [{"id", "cost", "penalty", "profit"?}],
///    "edges": [[id, id], ...]}
/// Weights are integers or "p/q" strings. Throws ParseError.
Instance parse_instance(std::string_view text);
json instance_to_json(const Instance& inst);

Rational rational_from_json(const json& value);
json rational_to_json(const Rational& value);

json vertex_set_to_json(const Instance& inst, const VertexSet& set);
VertexSet vertex_set_from_json(const Instance& inst, const json& value);

/// [{"set": [ids], "y": "p/q"}] (plus "core" when known).
json dual_to_json(const Instance& inst, const DualSolution& dual);
DualSolution dual_from_json(const Instance& inst, const json& value);

json violations_to_json(const Instance& inst, const std::vector<DualViolation>& violations);
json charge_to_json(const Instance& inst, const ChargeEntry& charge);
json trace_event_to_json(const Instance& inst, const TraceEvent& event);

json solution_to_json(const Instance& inst, const SolutionReport& report, bool with_trace);
json lmp_to_json(const Instance& inst, const LmpReport& report, bool with_trace);
json baseline_to_json(const Instance& inst, const BaselineReport& report, bool with_trace);
json quota_to_json(const Instance& inst, const QuotaReport& report, bool with_trace);
json oracle_to_json(const Instance& inst, const OracleResult& result);

/// Stable text form used for every file the tool writes.
std::string dump(const json& value);

}  // namespace pcst

#endif  // PCST_IO_HPP
