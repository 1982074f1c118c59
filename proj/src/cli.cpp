#include "gmetric/cli.hpp"

#include "gmetric/document.hpp"

#include "CLI11.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

namespace gmetric {

using nlohmann::json;

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_steps;
  std::string expect = "metric";
  std::string tol = "1/1000000";
  std::uint64_t tail_n = 10000;
  std::optional<std::size_t> max_witnesses;

  std::string file;
  std::string target_file;
  std::string mode;
  std::string report_mode = "m_metric";
  std::string kind = "m_open";
  std::optional<std::string> center;
  std::optional<std::string> eps;
  std::string seq;
  std::optional<std::string> x;
  std::optional<std::string> candidates;
  std::optional<std::string> prefix;
  std::string map;
  std::string at;
  std::optional<std::string> variant;
  std::optional<std::string> start;
  std::string search_target = "separating";
  std::string claim;
  std::size_t n = 0;
  std::string lo = "0";
  std::string hi;
  std::size_t max_candidates = 0;
};

// A command fills in findings and the human-readable text and returns the exit code.
struct Outcome {
  json findings = json::object();
  std::ostringstream text;
  int exit_code = 0;
};

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string braces(const std::vector<std::string>& items) { return "{" + join(items) + "}"; }

json violation_list(const std::vector<AxiomViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::size_t witness_cap(const Options& o) { return o.max_witnesses.value_or(kNoLimit); }

SearchBudget budget_from(const Options& o, std::size_t default_n, std::string_view default_hi,
                         std::size_t default_candidates) {
  SearchBudget b;
  b.seed = o.seed;
  b.size_n = o.n ? o.n : default_n;
  b.value_lo = parse_rational(o.lo);
  b.value_hi = parse_rational(o.hi.empty() ? std::string(default_hi) : o.hi);
  b.max_candidates = o.max_candidates ? o.max_candidates : default_candidates;
  return b;
}

void print_violations(std::ostream& text, const std::vector<AxiomViolation>& vs) {
  for (const auto& v : vs) text << "    " << describe(v) << "\n";
}

int cmd_classify(const Options& o, Outcome& r) {
  const AxiomMode expect = parse_axiom_mode(o.expect);
  const FiniteSpace space = parse_space_file(o.file).space();
  const auto c = classify(space, witness_cap(o));
  r.findings["classification"] = to_json(c);
  r.findings["expect"] = std::string(to_string(expect));
  r.findings["meets_expected"] = c.holds(expect);
  r.text << "metric:   " << (c.is_metric ? "yes" : "no") << "\n";
  print_violations(r.text, c.metric_violations);
  r.text << "partial:  " << (c.is_partial ? "yes" : "no") << "\n";
  print_violations(r.text, c.partial_violations);
  r.text << "m_metric: " << (c.is_m_metric ? "yes" : "no") << "\n";
  print_violations(r.text, c.m_metric_violations);
  r.text << "expected class " << to_string(expect) << (c.holds(expect) ? " holds" : " fails") << "\n";
  return c.holds(expect) ? 0 : 1;
}

int cmd_report(const Options& o, Outcome& r) {
  const AxiomMode mode = parse_axiom_mode(o.report_mode);
  const FiniteSpace space = parse_space_file(o.file).space();
  const auto vs = axiom_report(space, mode, witness_cap(o));
  r.findings["mode"] = std::string(to_string(mode));
  r.findings["violations"] = violation_list(vs);
  r.text << to_string(mode) << ": " << (vs.empty() ? "all axioms hold" : std::to_string(vs.size()) + " violation(s)")
         << "\n";
  print_violations(r.text, vs);
  return vs.empty() ? 0 : 1;
}

int cmd_balls(const Options& o, Outcome& r) {
  const BallKind kind = parse_ball_kind(o.kind);
  const FiniteSpace space = parse_space_file(o.file).space();
  std::vector<std::string> centers = o.center ? std::vector<std::string>{*o.center} : space.points();
  json balls = json::array();
  for (const auto& c : centers) {
    json entry = {{"center", c}};
    json crit = json::array();
    const auto critical = critical_epsilons(space, c, kind);
    std::vector<std::string> shown;
    for (const auto& e : critical) {
      crit.push_back(to_string(e));
      shown.push_back(to_string(e));
    }
    entry["critical_epsilons"] = std::move(crit);
    r.text << to_string(kind) << " balls at " << c << ": critical radii [" << join(shown) << "]\n";
    if (o.eps) {
      const Ball b = ball(space, c, parse_rational(*o.eps), kind);
      entry["ball"] = to_json(b);
      r.text << "  radius " << to_string(b.epsilon) << " -> " << braces(b.members) << "\n";
    }
    balls.push_back(std::move(entry));
  }
  r.findings["kind"] = std::string(to_string(kind));
  r.findings["balls"] = std::move(balls);
  return 0;
}

int cmd_topology(const Options& o, Outcome& r) {
  const BallKind kind = parse_ball_kind(o.kind);
  const FiniteSpace space = parse_space_file(o.file).space();
  const auto top = generate_topology(space, kind);
  const auto sep = separation_report(top);
  r.findings["kind"] = std::string(to_string(kind));
  r.findings["topology"] = to_json(top);
  r.findings["separation"] = to_json(sep);
  r.text << to_string(kind) << " topology on " << braces(top.carrier()) << ": " << top.opens().size()
         << " open sets" << (top.is_discrete() ? " (discrete)" : "") << "\n";
  for (PointMask set : top.opens()) r.text << "  " << braces(top.labels(set)) << "\n";
  r.text << "T0 " << (sep.t0 ? "yes" : "no") << ", T1 " << (sep.t1 ? "yes" : "no") << ", Hausdorff "
         << (sep.hausdorff ? "yes" : "no");
  if (sep.witness) r.text << " (cannot separate " << sep.witness->first << " and " << sep.witness->second << ")";
  r.text << "\n";
  return 0;
}

std::string verdict_line(const ConvergenceVerdict& v) {
  std::vector<std::string> residuals;
  for (const auto& x : v.residuals) residuals.push_back(to_string(x));
  return std::string(to_string(v.mode)) + ": " + (v.holds ? "holds" : "fails") + " at N = " +
         std::to_string(v.tail_index) + ", tol = " + to_string(v.tolerance) + "; residuals [" + join(residuals) + "]";
}

int cmd_converge(const Options& o, Outcome& r) {
  const ConvergenceMode mode = parse_convergence_mode(o.mode.empty() ? "usual" : o.mode);
  SequenceSpec seq = SequenceSpec::parse(o.seq);
  if (o.prefix) {
    for (const auto& v : split_list(*o.prefix)) seq.prefix.push_back(parse_rational(v));
  }
  TailSampling sampling{o.tail_n, parse_rational(o.tol)};
  const ParametricSpace ps;
  r.findings["sequence"] = seq.describe();
  r.text << "x_n = " << seq.describe() << " in ([0,inf), max)\n";

  if (mode == ConvergenceMode::Cauchy) {
    const auto v = cauchy_verdict(ps, seq, sampling);
    r.findings["verdict"] = to_json(v);
    r.text << verdict_line(v) << "\n";
    return v.holds ? 0 : 1;
  }
  if (o.candidates) {
    std::vector<Rational> candidates;
    for (const auto& c : split_list(*o.candidates)) candidates.push_back(parse_rational(c));
    const auto limits = limit_set(ps, seq, candidates, mode, sampling);
    json list = json::array();
    std::vector<std::string> shown;
    for (const auto& l : limits) {
      list.push_back(to_string(l));
      shown.push_back(to_string(l));
    }
    r.findings["mode"] = std::string(to_string(mode));
    r.findings["limit_set"] = std::move(list);
    r.text << to_string(mode) << " limits among candidates: " << braces(shown) << "\n";
    return limits.empty() ? 1 : 0;
  }
  if (!o.x) throw Error(Errc::UsageError, "converge needs --x, --candidates or --mode cauchy");
  const auto v = convergence_verdict(ps, seq, parse_rational(*o.x), mode, sampling);
  r.findings["x"] = to_string(parse_rational(*o.x));
  r.findings["verdict"] = to_json(v);
  r.text << verdict_line(v) << "\n";
  return v.holds ? 0 : 1;
}

int cmd_continuity(const Options& o, Outcome& r) {
  ContinuityQuery q{parse_space_file(o.file).space(), parse_space_file(o.target_file).space(), {}, o.at,
                    ContinuityMode::UU};
  for (const auto& pair : split_list(o.map)) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos) throw Error(Errc::UsageError, "map entries look like 'x:y', got '" + pair + "'");
    q.map_f[pair.substr(0, colon)] = pair.substr(colon + 1);
  }
  std::vector<ContinuityMode> modes;
  if (o.mode.empty() || o.mode == "all") {
    modes = {ContinuityMode::UU, ContinuityMode::SU, ContinuityMode::US, ContinuityMode::SS};
  } else {
    modes = {parse_continuity_mode(o.mode)};
  }
  bool all_hold = true;
  json results = json::object();
  for (auto mode : modes) {
    q.mode = mode;
    const auto res = continuity_check(q);
    results[std::string(to_string(mode))] = to_json(res);
    all_hold = all_hold && res.holds;
    r.text << to_string(mode) << "-continuity at " << q.point_a << ": " << (res.holds ? "holds" : "fails");
    if (res.witness) {
      r.text << " (radius " << to_string(res.witness->epsilon) << " has no admissible delta";
      for (const auto& f : res.witness->failures) r.text << "; delta " << to_string(f.delta) << " admits " << f.point;
      r.text << ")";
    }
    r.text << "\n";
  }
  r.findings["point"] = q.point_a;
  r.findings["results"] = std::move(results);
  return all_hold ? 0 : 1;
}

std::optional<CaristiVariant> variant_option(const Options& o) {
  if (!o.variant) return std::nullopt;
  return parse_caristi_variant(*o.variant);
}

int cmd_caristi_check(const Options& o, Outcome& r) {
  const auto inst = parse_space_file(o.file).instance(variant_option(o));
  const auto entries = condition_report(inst);
  json conditions = json::array();
  json dominated = json::array();
  bool all = true;
  r.text << to_string(inst.variant()) << " condition:\n";
  for (const auto& e : entries) {
    conditions.push_back(to_json(e));
    all = all && e.holds;
    r.text << "  x = " << e.point << ": " << to_string(e.lhs) << (e.holds ? " <= " : " > ") << to_string(e.rhs)
           << (e.holds ? "" : "  FAILS") << "\n";
  }
  r.text << "dominated sets:\n";
  for (const auto& p : inst.space().points()) {
    const auto d = dominated_set(inst, p);
    dominated.push_back(to_json(d));
    r.text << "  S(" << p << ") = " << braces(d.members) << ", alpha = " << to_string(d.alpha) << "\n";
  }
  r.findings["variant"] = std::string(to_string(inst.variant()));
  r.findings["conditions"] = std::move(conditions);
  r.findings["dominated_sets"] = std::move(dominated);
  r.findings["all_hold"] = all;
  return all ? 0 : 1;
}

int cmd_caristi_iterate(const Options& o, Outcome& r) {
  const auto inst = parse_space_file(o.file).instance(variant_option(o));
  if (!o.start) throw Error(Errc::UsageError, "caristi iterate needs --start");
  const auto trace = caristi_iterate(inst, *o.start, o.max_steps.value_or(sufficient_steps(inst)));
  r.findings["variant"] = std::string(to_string(inst.variant()));
  r.findings["trace"] = to_json(trace);
  r.text << "trace: " << join(trace.points, " -> ") << "\n";
  for (std::size_t i = 0; i < trace.points.size(); ++i) {
    r.text << "  x_" << i + 1 << " = " << trace.points[i] << ", phi = " << to_string(trace.phi_values[i])
           << ", alpha = " << to_string(trace.alpha_values[i]) << "\n";
  }
  r.text << "terminated: " << to_string(trace.terminated);
  if (trace.terminated == Termination::FixedPoint) r.text << " at " << trace.points.back();
  r.text << " (phi limit " << to_string(trace.phi_limit) << ")\n";
  return trace.terminated == Termination::FixedPoint ? 0 : 1;
}

int cmd_caristi_fixed(const Options& o, Outcome& r) {
  const auto inst = parse_space_file(o.file).instance(variant_option(o));
  const auto fixed = fixed_points(inst);
  r.findings["fixed_points"] = fixed;
  r.text << "fixed points: " << braces(fixed) << "\n";
  return fixed.empty() ? 1 : 0;
}

int cmd_caristi_theorem(const Options& o, Outcome& r) {
  const auto inst = parse_space_file(o.file).instance(variant_option(o));
  const auto check = theorem_check(inst);
  r.findings["variant"] = std::string(to_string(inst.variant()));
  r.findings["theorem"] = to_json(check);
  r.text << "variant " << to_string(inst.variant()) << "\n"
         << "hypotheses: " << (check.hypothesis_holds ? "hold" : "fail")
         << (check.hypothesis_holds && !check.hypotheses_fully_verified ? " (partially verified)" : "") << "\n"
         << "conclusion (a fixed point exists): " << (check.conclusion_holds ? "holds" : "fails") << "\n"
         << "fixed points reached by iteration: " << braces(check.reachable_fixed_points) << "\n";
  if (check.strong_extra) {
    r.text << "some reached fixed point has zero self-distance: " << (*check.strong_extra ? "yes" : "no") << "\n";
  }
  const bool ok = check.hypothesis_holds && check.conclusion_holds && check.strong_extra.value_or(true);
  return ok ? 0 : 1;
}

int cmd_ekeland(const Options& o, Outcome& r) {
  const auto doc = parse_space_file(o.file);
  if (!doc.phi) throw Error(Errc::TotalityError, "ekeland needs 'phi' in the document");
  const auto c = ekeland_point(doc.space(), *doc.phi);
  r.findings["certificate"] = to_json(c);
  r.text << "z = " << c.point_z << (c.strict ? " (strict)" : " (not strict)") << "\n";
  for (const auto& [x, m] : c.margins) r.text << "  margin at " << x << ": " << to_string(m) << "\n";
  if (c.witness) r.text << "no strict point exists; margin at " << *c.witness << " is not positive\n";
  return c.strict ? 0 : 1;
}

void print_table(std::ostream& text, const FiniteSpace& space) {
  for (PointId x = 0; x < space.size(); ++x) {
    text << "  ";
    for (PointId y = 0; y < space.size(); ++y) text << (y ? " " : "") << std::setw(4) << to_string(space(x, y));
    text << "\n";
  }
}

int cmd_search(const Options& o, Outcome& r) {
  const SearchBudget budget = budget_from(o, 3, "10", 10000);
  r.findings["target"] = o.search_target;
  try {
    if (o.search_target == "separating") {
      const auto found = find_separating_example(budget);
      r.findings["space"] = to_json(found.space);
      r.findings["violation"] = to_json(found.violation);
      r.text << "M-metric that is not a partial metric:\n";
      print_table(r.text, found.space);
      r.text << "  " << describe(found.violation) << "\n";
    } else {
      const AxiomMode mode = parse_axiom_mode(o.search_target);
      const auto space = random_space(budget, mode);
      r.findings["space"] = to_json(space);
      r.text << to_string(mode) << " space:\n";
      print_table(r.text, space);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::ExhaustedBudget) throw;
    r.findings["exhausted"] = e.what();
    r.text << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_probe(const Options& o, Outcome& r) {
  const SearchBudget budget = budget_from(o, 2, "3", 100000);
  const auto result = probe_claim(o.claim, budget);
  r.findings["probe"] = to_json(result);
  r.text << o.claim << ": " << to_string(result.verdict) << " after " << result.candidates_examined
         << " candidate(s)\n";
  const auto& e = result.evidence;
  if (e.space && result.verdict != ProbeVerdict::ExhaustedBudget) print_table(r.text, *e.space);
  if (e.violation) r.text << "  " << describe(*e.violation) << "\n";
  if (e.phi) {
    std::vector<std::string> shown;
    for (const auto& v : *e.phi) shown.push_back(to_string(v));
    r.text << "  phi = [" << join(shown) << "]\n";
  }
  if (e.map_t) r.text << "  T = [" << join(*e.map_t) << "]\n";
  if (e.certificate) {
    r.text << "  best candidate z = " << e.certificate->point_z << ", margin at "
           << e.certificate->witness.value_or("-") << " is not positive\n";
  }
  if (e.separation && e.separation->witness) {
    r.text << "  generated topology cannot separate " << e.separation->witness->first << " and "
           << e.separation->witness->second << "\n";
  }
  return result.verdict == ProbeVerdict::Refuted ? 1 : 0;
}

void add_budget_options(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Number of points per candidate");
  sub->add_option("--lo", o.lo, "Smallest table entry");
  sub->add_option("--hi", o.hi, "Largest table entry");
  sub->add_option("--max-candidates", o.max_candidates, "Candidate budget");
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::ExhaustedBudget:
      return false;
    default:
      return true;
  }
}

}  // namespace

RunReport run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for metric, partial metric and M-metric spaces", "gmetric"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit the machine-readable report");
  app.add_option("--seed", o.seed, "Search seed");
  app.add_option("--max-steps", o.max_steps, "Iteration step budget");
  app.add_option("--expect", o.expect, "Class that classify must confirm (metric, partial, m_metric)");
  app.add_option("--tol", o.tol, "Convergence tolerance");
  app.add_option("--tail-n", o.tail_n, "First sampled tail index");
  app.add_option("--max-witnesses", o.max_witnesses, "Cap on reported violations per class");

  auto* classify_cmd = app.add_subcommand("classify", "Decide the metric, partial and M-metric axioms");
  classify_cmd->add_option("file", o.file)->required();

  auto* report_cmd = app.add_subcommand("report", "List every violation of one axiom system");
  report_cmd->add_option("file", o.file)->required();
  report_cmd->add_option("--mode", o.report_mode, "metric, partial or m_metric")->capture_default_str();

  auto* balls_cmd = app.add_subcommand("balls", "Critical radii and ball members");
  balls_cmd->add_option("file", o.file)->required();
  balls_cmd->add_option("--center", o.center);
  balls_cmd->add_option("--eps", o.eps);
  balls_cmd->add_option("--kind", o.kind, "p_open, p_closed or m_open");

  auto* topology_cmd = app.add_subcommand("topology", "Generated topology and separation axioms");
  topology_cmd->add_option("file", o.file)->required();
  topology_cmd->add_option("--kind", o.kind, "p_open or m_open");

  auto* converge_cmd = app.add_subcommand("converge", "Sequences in [0,inf) with p(x,y) = max{x,y}");
  converge_cmd->add_option("--seq", o.seq, "e.g. 1+1/n^2")->required();
  converge_cmd->add_option("--x", o.x, "Limit candidate");
  converge_cmd->add_option("--candidates", o.candidates, "Comma-separated limit candidates");
  converge_cmd->add_option("--mode", o.mode, "usual, symmetric or cauchy");
  converge_cmd->add_option("--prefix", o.prefix, "Comma-separated values overriding the first terms");

  auto* continuity_cmd = app.add_subcommand("continuity", "Decide uu/su/us/ss continuity at a point");
  continuity_cmd->add_option("source", o.file)->required();
  continuity_cmd->add_option("target", o.target_file)->required();
  continuity_cmd->add_option("--map", o.map, "e.g. 1:2,2:1")->required();
  continuity_cmd->add_option("--at", o.at)->required();
  continuity_cmd->add_option("--mode", o.mode, "uu, su, us, ss or all");

  auto* caristi_cmd = app.add_subcommand("caristi", "Caristi condition, iteration and fixed points");
  caristi_cmd->require_subcommand(1);
  auto* check_cmd = caristi_cmd->add_subcommand("check", "Evaluate the Caristi condition at every point");
  auto* iterate_cmd = caristi_cmd->add_subcommand("iterate", "Run the 1/n-greedy walk through dominated sets");
  auto* fixed_cmd = caristi_cmd->add_subcommand("fixed-points", "List fixed points of T");
  auto* theorem_cmd = caristi_cmd->add_subcommand("theorem", "Check hypotheses and conclusion");
  for (auto* sub : {check_cmd, iterate_cmd, fixed_cmd, theorem_cmd}) {
    sub->add_option("file", o.file)->required();
    sub->add_option("--variant", o.variant, "m_weak, m_strong, p_weak or p_strong");
  }
  iterate_cmd->add_option("--start", o.start)->required();

  auto* ekeland_cmd = app.add_subcommand("ekeland", "Search for a strict Ekeland point");
  ekeland_cmd->add_option("file", o.file)->required();

  auto* search_cmd = app.add_subcommand("search", "Find a space of a given class");
  search_cmd->add_option("--target", o.search_target, "separating, metric, partial or m_metric");
  add_budget_options(search_cmd, o);

  auto* probe_cmd = app.add_subcommand("probe", "Test a registered claim");
  probe_cmd->add_option("claim", o.claim)->required()->check(CLI::IsMember(registered_claims()));
  add_budget_options(probe_cmd, o);

  RunReport report;
  Outcome outcome;
  std::string command;

  auto emit = [&](int code) {
    report.exit_code = code;
    report.findings = outcome.findings;
    if (o.json) {
      out << to_json(report).dump(2) << "\n";
    } else {
      out << outcome.text.str();
    }
    return report;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    report.command = "help";
    return report;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    report.command = "usage";
    report.exit_code = 2;
    if (o.json) {
      report.findings = {{"error", {{"code", "UsageError"}, {"message", e.what()}}}};
      out << to_json(report).dump(2) << "\n";
    }
    return report;
  }

  std::string digest_input;
  for (const auto& a : args) digest_input += a + '\0';

  try {
    std::function<int(const Options&, Outcome&)> handler;
    std::vector<std::string> files;
    if (classify_cmd->parsed()) {
      command = "classify";
      handler = cmd_classify;
    } else if (report_cmd->parsed()) {
      command = "report";
      handler = cmd_report;
    } else if (balls_cmd->parsed()) {
      command = "balls";
      handler = cmd_balls;
    } else if (topology_cmd->parsed()) {
      command = "topology";
      handler = cmd_topology;
    } else if (converge_cmd->parsed()) {
      command = "converge";
      handler = cmd_converge;
    } else if (continuity_cmd->parsed()) {
      command = "continuity";
      handler = cmd_continuity;
      files.push_back(o.target_file);
    } else if (check_cmd->parsed()) {
      command = "caristi check";
      handler = cmd_caristi_check;
    } else if (iterate_cmd->parsed()) {
      command = "caristi iterate";
      handler = cmd_caristi_iterate;
    } else if (fixed_cmd->parsed()) {
      command = "caristi fixed-points";
      handler = cmd_caristi_fixed;
    } else if (theorem_cmd->parsed()) {
      command = "caristi theorem";
      handler = cmd_caristi_theorem;
    } else if (ekeland_cmd->parsed()) {
      command = "ekeland";
      handler = cmd_ekeland;
    } else if (search_cmd->parsed()) {
      command = "search";
      handler = cmd_search;
    } else {
      command = "probe";
      handler = cmd_probe;
    }
    report.command = command;
    if (!o.file.empty()) files.insert(files.begin(), o.file);
    for (const auto& f : files) {
      std::ifstream in(resolve_space_path(f), std::ios::binary);
      std::ostringstream content;
      content << in.rdbuf();
      digest_input += content.str() + '\0';
    }
    report.inputs_digest = sha256_hex(digest_input);
    return emit(handler(o, outcome));
  } catch (const Error& e) {
    err << command << ": " << to_string(e.code()) << ": " << e.what() << "\n";
    outcome.findings = {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    outcome.text.str("");
    report.command = command;
    if (report.inputs_digest.empty()) report.inputs_digest = sha256_hex(digest_input);
    return emit(is_input_error(e.code()) ? 2 : 1);
  }
}

}  // namespace gmetric
