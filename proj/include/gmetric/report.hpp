#pragma once

#include "gmetric/caristi.hpp"
#include "gmetric/convergence.hpp"
#include "gmetric/explorer.hpp"
#include "gmetric/space.hpp"
#include "gmetric/topology.hpp"

#include "json.hpp"

#include <string>

namespace gmetric {

// JSON encodings. Rationals are always canonical "p/q" strings.

nlohmann::json to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value);

nlohmann::json to_json(const FiniteSpace& space);
FiniteSpace space_from_json(const nlohmann::json& value);

nlohmann::json to_json(const AxiomViolation& violation);
AxiomViolation violation_from_json(const nlohmann::json& value);

nlohmann::json to_json(const SpaceClassification& c);
nlohmann::json to_json(const Ball& ball);
nlohmann::json to_json(const FiniteTopology& top);
nlohmann::json to_json(const SeparationReport& report);
nlohmann::json to_json(const ConvergenceVerdict& verdict);
nlohmann::json to_json(const ContinuityResult& result);
nlohmann::json to_json(const ConditionEntry& entry);
nlohmann::json to_json(const DominatedSet& set);
nlohmann::json to_json(const IterationTrace& trace);
nlohmann::json to_json(const TheoremCheck& check);
nlohmann::json to_json(const EkelandCertificate& certificate);
nlohmann::json to_json(const ProbeResult& result);

/// Human-readable rendering of both sides, e.g.
/// "P4 fails at (1,2,3): p(1,2) + p(3,3) = 15 > 14 = p(1,3) + p(3,2)".
std::string describe(const AxiomViolation& violation);

/// Outcome of one CLI invocation.
///   exit_code 0  requested property holds / nothing found
///             1  violation, refutation or non-fixed-point termination
///             2  usage or input error
struct RunReport {
  std::string command;
  std::string inputs_digest;
  nlohmann::json findings = nlohmann::json::object();
  int exit_code = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json to_json(const RunReport& report);
RunReport run_report_from_json(const nlohmann::json& value);

}  // namespace gmetric
