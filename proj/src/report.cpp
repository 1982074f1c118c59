#include "gmetric/report.hpp"

namespace gmetric {

using nlohmann::json;

json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const json& value) {
  if (!value.is_string()) throw Error(Errc::MalformedDocument, "expected a rational string");
  return parse_rational(value.get<std::string>());
}

namespace {

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string tuple(const std::vector<std::string>& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + ")";
}

std::string fn(std::string_view name, std::string_view a, std::string_view b) {
  return std::string(name) + "(" + std::string(a) + "," + std::string(b) + ")";
}

std::string negated(Relation r) {
  switch (r) {
    case Relation::Le: return ">";
    case Relation::Eq: return "!=";
    case Relation::Gt: return "<=";
  }
  return "?";
}

}  // namespace

json to_json(const FiniteSpace& space) {
  json rows = json::array();
  for (const auto& row : space.table()) rows.push_back(rationals(row));
  return {{"points", space.points()}, {"m", std::move(rows)}};
}

FiniteSpace space_from_json(const json& value) {
  std::vector<std::vector<Rational>> table;
  for (const auto& row : value.at("m")) {
    auto& out = table.emplace_back();
    for (const auto& cell : row) out.push_back(rational_from_json(cell));
  }
  return FiniteSpace::validate(value.at("points").get<std::vector<std::string>>(), std::move(table));
}

json to_json(const AxiomViolation& v) {
  return {{"axiom", std::string(to_string(v.axiom))},
          {"witness", v.witness},
          {"lhs", to_string(v.lhs)},
          {"rhs", to_string(v.rhs)},
          {"required", std::string(to_string(v.required))}};
}

AxiomViolation violation_from_json(const json& value) {
  return {parse_axiom(value.at("axiom").get<std::string>()), value.at("witness").get<std::vector<std::string>>(),
          rational_from_json(value.at("lhs")), rational_from_json(value.at("rhs")),
          parse_relation(value.at("required").get<std::string>())};
}

std::string describe(const AxiomViolation& v) {
  const auto& w = v.witness;
  const std::string_view d = v.axiom <= Axiom::MetTriangle ? "d" : (v.axiom <= Axiom::P4 ? "p" : "m");
  std::string lhs;
  std::string rhs;
  switch (v.axiom) {
    case Axiom::MetSymmetry:
    case Axiom::P2:
    case Axiom::M3:
      lhs = fn(d, w[0], w[1]);
      rhs = fn(d, w[1], w[0]);
      break;
    case Axiom::MetIdentity:
      lhs = fn(d, w[0], w[1]);
      rhs = "0";
      break;
    case Axiom::MetTriangle:
      lhs = fn(d, w[0], w[1]);
      rhs = fn(d, w[0], w[2]) + " + " + fn(d, w[2], w[1]);
      break;
    case Axiom::P1:
    case Axiom::M1:
      lhs = "|" + fn(d, w[0], w[0]) + " - " + fn(d, w[0], w[1]) + "| + |" + fn(d, w[1], w[1]) + " - " +
            fn(d, w[0], w[1]) + "|";
      rhs = "0";
      break;
    case Axiom::P3:
      lhs = fn(d, w[0], w[0]);
      rhs = fn(d, w[0], w[1]);
      break;
    case Axiom::P4:
      lhs = fn(d, w[0], w[1]) + " + " + fn(d, w[2], w[2]);
      rhs = fn(d, w[0], w[2]) + " + " + fn(d, w[2], w[1]);
      break;
    case Axiom::M2:
      lhs = "m_{" + w[0] + "," + w[1] + "}";
      rhs = fn(d, w[0], w[1]);
      break;
    case Axiom::M4:
      lhs = fn(d, w[0], w[1]) + " - m_{" + w[0] + "," + w[1] + "}";
      rhs = "(" + fn(d, w[0], w[2]) + " - m_{" + w[0] + "," + w[2] + "}) + (" + fn(d, w[2], w[1]) + " - m_{" +
            w[2] + "," + w[1] + "})";
      break;
  }
  std::string out = std::string(to_string(v.axiom)) + " fails at " + tuple(w) + ": " + lhs + " = " +
                    to_string(v.lhs) + " " + negated(v.required) + " " + to_string(v.rhs);
  return rhs == "0" ? out : out + " = " + rhs;
}

json to_json(const SpaceClassification& c) {
  auto list = [](const std::vector<AxiomViolation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
  };
  return {{"is_metric", c.is_metric},
          {"is_partial", c.is_partial},
          {"is_m_metric", c.is_m_metric},
          {"violations",
           {{"metric", list(c.metric_violations)},
            {"partial", list(c.partial_violations)},
            {"m_metric", list(c.m_metric_violations)}}}};
}

json to_json(const Ball& b) {
  return {{"center", b.center},
          {"epsilon", to_string(b.epsilon)},
          {"kind", std::string(to_string(b.kind))},
          {"members", b.members}};
}

json to_json(const FiniteTopology& top) {
  json opens = json::array();
  for (PointMask set : top.opens()) opens.push_back(top.labels(set));
  return {{"carrier", top.carrier()}, {"open_count", top.opens().size()}, {"discrete", top.is_discrete()},
          {"opens", std::move(opens)}};
}

json to_json(const SeparationReport& r) {
  json out = {{"t0", r.t0}, {"t1", r.t1}, {"hausdorff", r.hausdorff}, {"witness", nullptr}};
  if (r.witness) out["witness"] = {r.witness->first, r.witness->second};
  return out;
}

json to_json(const ConvergenceVerdict& v) {
  return {{"mode", std::string(to_string(v.mode))},
          {"holds", v.holds},
          {"tail_index", v.tail_index},
          {"tolerance", to_string(v.tolerance)},
          {"residuals", rationals(v.residuals)}};
}

json to_json(const ContinuityResult& r) {
  json out = {{"holds", r.holds}, {"witness", nullptr}};
  if (r.witness) {
    json failures = json::array();
    for (const auto& f : r.witness->failures) failures.push_back({{"delta", to_string(f.delta)}, {"point", f.point}});
    out["witness"] = {{"epsilon", to_string(r.witness->epsilon)}, {"failures", std::move(failures)}};
  }
  return out;
}

json to_json(const ConditionEntry& e) {
  return {{"point", e.point}, {"holds", e.holds}, {"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}};
}

json to_json(const DominatedSet& d) {
  return {{"base", d.base}, {"members", d.members}, {"alpha", to_string(d.alpha)}};
}

json to_json(const IterationTrace& t) {
  return {{"points", t.points},
          {"phi_values", rationals(t.phi_values)},
          {"alpha_values", rationals(t.alpha_values)},
          {"phi_limit", to_string(t.phi_limit)},
          {"terminated", std::string(to_string(t.terminated))}};
}

json to_json(const TheoremCheck& c) {
  json out = {{"hypothesis_holds", c.hypothesis_holds},
              {"conclusion_holds", c.conclusion_holds},
              {"strong_extra", nullptr},
              {"hypotheses_fully_verified", c.hypotheses_fully_verified},
              {"topology_discrete", c.topology_discrete},
              {"reachable_fixed_points", c.reachable_fixed_points}};
  if (c.strong_extra) out["strong_extra"] = *c.strong_extra;
  return out;
}

json to_json(const EkelandCertificate& c) {
  json margins = json::array();
  for (const auto& [x, m] : c.margins) margins.push_back({{"point", x}, {"margin", to_string(m)}});
  json out = {{"point_z", c.point_z}, {"strict", c.strict}, {"margins", std::move(margins)}, {"witness", nullptr}};
  if (c.witness) out["witness"] = *c.witness;
  return out;
}

json to_json(const ProbeResult& r) {
  json evidence = json::object();
  const auto& e = r.evidence;
  if (e.space) evidence["space"] = to_json(*e.space);
  if (e.violation) evidence["violation"] = to_json(*e.violation);
  if (e.phi) evidence["phi"] = rationals(*e.phi);
  if (e.map_t) evidence["T"] = *e.map_t;
  if (e.certificate) evidence["certificate"] = to_json(*e.certificate);
  if (e.separation) evidence["separation"] = to_json(*e.separation);
  return {{"claim_id", r.claim_id},
          {"verdict", std::string(to_string(r.verdict))},
          {"candidates_examined", r.candidates_examined},
          {"evidence", std::move(evidence)}};
}

json to_json(const RunReport& r) {
  return {{"command", r.command}, {"inputs_digest", r.inputs_digest}, {"findings", r.findings},
          {"exit_code", r.exit_code}};
}

RunReport run_report_from_json(const json& value) {
  return {value.at("command").get<std::string>(), value.at("inputs_digest").get<std::string>(),
          value.at("findings"), value.at("exit_code").get<int>()};
}

}  // namespace gmetric
