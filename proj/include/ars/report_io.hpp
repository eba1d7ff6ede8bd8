#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "ars/regularity.hpp"

namespace ars {

// Machine-readable verification report: one record per check.
inline nlohmann::json to_json(const TheoremReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"claim", c.claim},
                      {"status", c.pass ? "pass" : "fail"},
                      {"witness", c.witness}});
  return {{"theorem", theorem_name(report.id)},
          {"holds", report.holds},
          {"checks", checks}};
}

inline void render_text(std::ostream& out, const TheoremReport& report) {
  out << "theorem " << theorem_name(report.id) << ": "
      << (report.holds ? "holds" : "FAILS") << "\n";
  for (const auto& c : report.checks) {
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.claim << "\n";
    if (!c.pass && !c.witness.empty()) out << "         " << c.witness << "\n";
  }
}

}  // namespace ars
