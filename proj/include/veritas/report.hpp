#pragma once

/// Run reports: the data the CLI prints, in a canonical order so that a
/// fixed theory and flag set always produces byte-identical output. The JSON
/// form round-trips losslessly.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "veritas/errors.hpp"

namespace veritas {

struct CensusInfo {
  std::size_t nodes = 0;         // closure size
  std::size_t core = 0;          // |t_core|
  std::size_t fixed_points = 0;
  std::size_t intrinsic = 0;
  bool complete = true;          // false: enumeration skipped (budget)

  bool operator==(const CensusInfo&) const = default;
};

struct VerdictRow {
  std::string sentence;
  std::string primary;      // "true" | "false" | "undetermined" | "not-computed" | "?"
  std::string final_value;  // "true" | "false" | "?"

  bool operator==(const VerdictRow&) const = default;
};

struct FixedPointRow {
  std::string values;  // one char per core sentence: T, F or |
  bool least = false;
  bool intrinsic = false;
  bool maximal = false;

  bool operator==(const FixedPointRow&) const = default;
};

struct LawRow {
  std::string name;
  std::size_t instances = 0;
  std::vector<std::string> failures;

  bool operator==(const LawRow&) const = default;
};

struct RunReport {
  std::string command;
  std::string theory;
  std::string note;  // the range restriction statement
  bool complete = true;
  CensusInfo census;
  std::vector<std::string> core;  // t_core sentences (fixpoints command)
  std::vector<VerdictRow> verdicts;
  std::vector<FixedPointRow> fixed_points;
  std::size_t fixed_points_omitted = 0;
  std::vector<LawRow> laws;

  bool operator==(const RunReport&) const = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CensusInfo, nodes, core, fixed_points, intrinsic, complete)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerdictRow, sentence, primary, final_value)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FixedPointRow, values, least, intrinsic, maximal)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LawRow, name, instances, failures)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RunReport, command, theory, note, complete, census, core,
                                   verdicts, fixed_points, fixed_points_omitted, laws)

inline std::string report_to_json(const RunReport& r) {
  nlohmann::json j = r;
  return j.dump(2) + "\n";
}

inline RunReport report_from_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text).get<RunReport>();
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("malformed report JSON: ") + e.what());
  }
}

inline std::string report_to_text(const RunReport& r) {
  std::ostringstream out;
  out << "# " << r.command << ": " << r.theory << "\n";
  out << "# note: " << r.note << "\n";
  out << "closure size: " << r.census.nodes << "; t-core size: " << r.census.core << "\n";
  if (r.census.complete) {
    out << "fixed points: " << r.census.fixed_points << " (" << r.census.intrinsic
        << " intrinsic)\n";
  } else {
    out << "fixed points: not enumerated (budget exceeded); primary semantics incomplete,"
        << " values below are from the least fixed point\n";
  }
  if (!r.verdicts.empty()) {
    out << "verdicts:\n";
    for (const auto& v : r.verdicts) {
      out << "  sentence: " << v.sentence << "\n";
      out << "    primary: " << v.primary << "\n";
      out << "    final:   " << v.final_value << "\n";
    }
  }
  if (!r.core.empty()) {
    out << "t-core sentences:\n";
    for (std::size_t i = 0; i < r.core.size(); ++i)
      out << "  [" << i << "] " << r.core[i] << "\n";
  }
  if (!r.fixed_points.empty()) {
    out << "fixed points (listing):\n";
    for (const auto& p : r.fixed_points) {
      out << "  [" << p.values << "]";
      if (p.least) out << " least";
      if (p.intrinsic) out << " intrinsic";
      if (p.maximal) out << " maximal";
      out << "\n";
    }
    if (r.fixed_points_omitted > 0)
      out << "  ... and " << r.fixed_points_omitted << " more\n";
  }
  if (!r.laws.empty()) {
    std::size_t failed = 0;
    for (const auto& l : r.laws)
      if (!l.failures.empty()) ++failed;
    out << "laws: " << r.laws.size() << " schemas, " << failed << " failing\n";
    for (const auto& l : r.laws) {
      out << "  " << (l.failures.empty() ? "pass" : "FAIL") << "  " << l.name
          << " (instances: " << l.instances;
      if (!l.failures.empty()) out << ", failed: " << l.failures.size();
      out << ")\n";
      for (const auto& f : l.failures) out << "        " << f << "\n";
    }
  }
  return out.str();
}

}  // namespace veritas
