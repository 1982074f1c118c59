#include "gmetric/caristi.hpp"

#include "gmetric/topology.hpp"

#include <algorithm>
#include <set>

namespace gmetric {

std::string_view to_string(CaristiVariant variant) {
  switch (variant) {
    case CaristiVariant::MWeak: return "m_weak";
    case CaristiVariant::MStrong: return "m_strong";
    case CaristiVariant::PWeak: return "p_weak";
    case CaristiVariant::PStrong: return "p_strong";
  }
  return "?";
}

CaristiVariant parse_caristi_variant(std::string_view text) {
  if (text == "m_weak") return CaristiVariant::MWeak;
  if (text == "m_strong") return CaristiVariant::MStrong;
  if (text == "p_weak") return CaristiVariant::PWeak;
  if (text == "p_strong") return CaristiVariant::PStrong;
  throw Error(Errc::UsageError, "unknown Caristi variant '" + std::string(text) + "'");
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::FixedPoint: return "fixed_point";
    case Termination::StabilizedNonFixed: return "stabilized_non_fixed";
    case Termination::StepBudget: return "step_budget";
  }
  return "?";
}

namespace {

void require_m_metric(const FiniteSpace& space) {
  auto v = axiom_report(space, AxiomMode::MMetric, 1);
  if (!v.empty()) {
    throw Error(Errc::NotMMetric, "space is not an M-metric: " + std::string(to_string(v.front().axiom)) +
                                      " fails");
  }
}

void require_potential(const FiniteSpace& space, const std::vector<Rational>& phi) {
  if (phi.size() != space.size()) throw Error(Errc::NonTotalMap, "potential must cover every point");
  for (PointId x = 0; x < phi.size(); ++x) {
    if (phi[x] < 0) {
      throw Error(Errc::NegativePotential, "phi(" + space.label(x) + ") = " + to_string(phi[x]) + " is negative");
    }
  }
}

std::vector<Rational> potential_by_index(const FiniteSpace& space, const std::map<std::string, Rational>& phi) {
  std::vector<Rational> out(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    auto it = phi.find(space.label(x));
    if (it == phi.end()) throw Error(Errc::NonTotalMap, "phi has no value for '" + space.label(x) + "'");
    out[x] = it->second;
  }
  for (const auto& [label, value] : phi) space.index_of(label);
  return out;
}

}  // namespace

CaristiInstance CaristiInstance::make(FiniteSpace space, std::vector<PointId> map_t, std::vector<Rational> phi,
                                      CaristiVariant variant) {
  require_m_metric(space);
  if (is_partial_variant(variant) && !satisfies(space, AxiomMode::Partial)) {
    throw Error(Errc::VariantSpaceMismatch,
                std::string(to_string(variant)) + " needs a space satisfying the partial-metric axioms");
  }
  if (map_t.size() != space.size()) throw Error(Errc::NonTotalMap, "self-map must cover every point");
  for (PointId image : map_t) {
    if (image >= space.size()) throw Error(Errc::UnknownLabel, "self-map image outside the carrier");
  }
  require_potential(space, phi);
  return CaristiInstance(std::move(space), std::move(map_t), std::move(phi), variant);
}

CaristiInstance CaristiInstance::make(FiniteSpace space, const std::map<std::string, std::string>& map_t,
                                      const std::map<std::string, Rational>& phi, CaristiVariant variant) {
  std::vector<PointId> images(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    auto it = map_t.find(space.label(x));
    if (it == map_t.end()) throw Error(Errc::NonTotalMap, "self-map has no image for '" + space.label(x) + "'");
    images[x] = space.index_of(it->second);
  }
  for (const auto& [from, to] : map_t) space.index_of(from);
  auto potentials = potential_by_index(space, phi);
  return make(std::move(space), std::move(images), std::move(potentials), variant);
}

CaristiInstance CaristiInstance::with_variant(CaristiVariant variant) const {
  return make(space_, map_, phi_, variant);
}

std::vector<ConditionEntry> condition_report(const CaristiInstance& inst) {
  const FiniteSpace& s = inst.space();
  std::vector<ConditionEntry> out;
  out.reserve(s.size());
  for (PointId x = 0; x < s.size(); ++x) {
    const PointId tx = inst.image(x);
    const Rational drop = inst.phi(x) - inst.phi(tx);
    Rational rhs;
    switch (inst.variant()) {
      case CaristiVariant::MWeak: rhs = self_min(s, x, tx) + drop; break;
      case CaristiVariant::PWeak: rhs = s(x, x) + drop; break;
      case CaristiVariant::MStrong:
      case CaristiVariant::PStrong: rhs = drop; break;
    }
    const Rational& lhs = s(x, tx);
    out.push_back({s.label(x), lhs <= rhs, lhs, std::move(rhs)});
  }
  return out;
}

bool dominates(const CaristiInstance& inst, PointId x, PointId z) {
  const FiniteSpace& s = inst.space();
  const Rational& base = is_partial_variant(inst.variant()) ? s(x, x) : self_min(s, x, z);
  return s(x, z) <= base + inst.phi(x) - inst.phi(z);
}

namespace {

struct IndexedDominatedSet {
  std::vector<PointId> members;
  Rational alpha;
};

IndexedDominatedSet dominated(const CaristiInstance& inst, PointId x) {
  IndexedDominatedSet d;
  for (PointId z = 0; z < inst.space().size(); ++z) {
    if (dominates(inst, x, z)) d.members.push_back(z);
  }
  // x always dominates itself, so members is nonempty.
  d.alpha = inst.phi(d.members.front());
  for (PointId z : d.members) d.alpha = std::min(d.alpha, inst.phi(z));
  return d;
}

}  // namespace

DominatedSet dominated_set(const CaristiInstance& inst, std::string_view x) {
  const PointId base = inst.space().index_of(x);
  auto d = dominated(inst, base);
  DominatedSet out{inst.space().label(base), {}, std::move(d.alpha)};
  for (PointId z : d.members) out.members.push_back(inst.space().label(z));
  return out;
}

Rational alpha(const CaristiInstance& inst, std::string_view x) { return dominated_set(inst, x).alpha; }

IterationTrace caristi_iterate(const CaristiInstance& inst, std::string_view x0, std::size_t max_steps) {
  const FiniteSpace& s = inst.space();
  PointId current = s.index_of(x0);
  if (max_steps < 1) throw Error(Errc::InvalidArgument, "max_steps must be at least 1");

  IterationTrace trace;
  trace.points.push_back(s.label(current));
  trace.phi_values.push_back(inst.phi(current));
  for (std::size_t n = 1;; ++n) {
    auto d = dominated(inst, current);
    trace.alpha_values.push_back(d.alpha);
    if (n > max_steps) break;

    const Rational ceiling = d.alpha + Rational(1, n);
    std::optional<PointId> pick;
    for (PointId z : d.members) {
      if (inst.phi(z) > ceiling) continue;
      if (!pick || inst.phi(z) < inst.phi(*pick)) pick = z;
    }
    if (*pick == current) {
      trace.terminated = inst.image(current) == current ? Termination::FixedPoint : Termination::StabilizedNonFixed;
      trace.phi_limit = inst.phi(current);
      return trace;
    }
    current = *pick;
    trace.points.push_back(s.label(current));
    trace.phi_values.push_back(inst.phi(current));
  }
  trace.terminated = Termination::StepBudget;
  trace.phi_limit = trace.phi_values.back();
  return trace;
}

std::vector<std::string> fixed_points(const CaristiInstance& inst) {
  std::vector<std::string> out;
  for (PointId x = 0; x < inst.space().size(); ++x) {
    if (inst.image(x) == x) out.push_back(inst.space().label(x));
  }
  return out;
}

TheoremCheck theorem_check(const CaristiInstance& inst) {
  const FiniteSpace& s = inst.space();
  TheoremCheck r;
  const auto conditions = condition_report(inst);
  r.hypothesis_holds = std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.holds; });
  if (is_strong_variant(inst.variant()) && zero_self_set(s).empty()) r.hypothesis_holds = false;
  r.conclusion_holds = !fixed_points(inst).empty();

  std::set<PointId> reached;
  for (PointId x = 0; x < s.size(); ++x) {
    auto trace = caristi_iterate(inst, s.label(x), sufficient_steps(inst));
    if (trace.terminated == Termination::FixedPoint) reached.insert(s.index_of(trace.points.back()));
  }
  for (PointId z : reached) r.reachable_fixed_points.push_back(s.label(z));
  if (is_strong_variant(inst.variant())) {
    r.strong_extra = std::any_of(reached.begin(), reached.end(), [&](PointId z) { return s(z, z) == 0; });
  }

  if (s.size() <= kMaxTopologyPoints) {
    const BallKind kind = is_partial_variant(inst.variant()) ? BallKind::POpen : BallKind::MOpen;
    r.topology_discrete = generate_topology(s, kind).is_discrete();
  }
  r.hypotheses_fully_verified = r.hypothesis_holds && r.topology_discrete;
  return r;
}

EkelandCertificate ekeland_point(const FiniteSpace& space, const std::vector<Rational>& phi) {
  require_m_metric(space);
  require_potential(space, phi);
  const std::size_t n = space.size();

  auto certificate = [&](PointId z) {
    EkelandCertificate c{space.label(z), true, {}, std::nullopt};
    for (PointId x = 0; x < n; ++x) {
      if (x == z) continue;
      Rational margin = phi[x] + space(z, x) - self_min(space, x, z) - phi[z];
      if (margin <= 0 && c.strict) {
        c.strict = false;
        c.witness = space.label(x);
      }
      c.margins.emplace_back(space.label(x), std::move(margin));
    }
    return c;
  };

  const Rational lowest = *std::min_element(phi.begin(), phi.end());
  std::vector<PointId> order;
  for (PointId z = 0; z < n; ++z) {
    if (phi[z] == lowest) order.push_back(z);
  }
  const PointId first_minimiser = order.front();
  for (PointId z = 0; z < n; ++z) {
    if (phi[z] != lowest) order.push_back(z);
  }
  for (PointId z : order) {
    auto c = certificate(z);
    if (c.strict) return c;
  }
  return certificate(first_minimiser);
}

EkelandCertificate ekeland_point(const FiniteSpace& space, const std::map<std::string, Rational>& phi) {
  return ekeland_point(space, potential_by_index(space, phi));
}

}  // namespace gmetric
