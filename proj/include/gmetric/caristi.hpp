#pragma once

#include "gmetric/rational.hpp"
#include "gmetric/space.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gmetric {

/// Which Caristi inequality the self-map is checked against:
///   m_weak    m(x,Tx) <= m_{x,Tx} + phi(x) - phi(Tx)
///   m_strong  m(x,Tx) <= phi(x) - phi(Tx)
///   p_weak    p(x,Tx) <= p(x,x) + phi(x) - phi(Tx)
///   p_strong  p(x,Tx) <= phi(x) - phi(Tx)
/// The p_* variants also switch the dominated sets to their partial-metric form.
enum class CaristiVariant { MWeak, MStrong, PWeak, PStrong };

std::string_view to_string(CaristiVariant variant);
CaristiVariant parse_caristi_variant(std::string_view text);

inline bool is_partial_variant(CaristiVariant v) { return v == CaristiVariant::PWeak || v == CaristiVariant::PStrong; }
inline bool is_strong_variant(CaristiVariant v) { return v == CaristiVariant::MStrong || v == CaristiVariant::PStrong; }

/// A finite M-metric space with a total self-map T and a nonnegative
/// potential phi.
class CaristiInstance {
 public:
  /// Throws NotMMetric, VariantSpaceMismatch (p_* on a space failing the
  /// partial-metric axioms), NonTotalMap, UnknownLabel or NegativePotential.
  static CaristiInstance make(FiniteSpace space, const std::map<std::string, std::string>& map_t,
                              const std::map<std::string, Rational>& phi, CaristiVariant variant);

  /// Index-based form; map_t[i] is the image of point i, phi[i] its potential.
  static CaristiInstance make(FiniteSpace space, std::vector<PointId> map_t, std::vector<Rational> phi,
                              CaristiVariant variant);

  const FiniteSpace& space() const noexcept { return space_; }
  PointId image(PointId x) const { return map_.at(x); }
  const Rational& phi(PointId x) const { return phi_.at(x); }
  const std::vector<PointId>& map() const noexcept { return map_; }
  const std::vector<Rational>& potentials() const noexcept { return phi_; }
  CaristiVariant variant() const noexcept { return variant_; }

  /// Same instance with another variant, re-checked.
  CaristiInstance with_variant(CaristiVariant variant) const;

 private:
  CaristiInstance(FiniteSpace space, std::vector<PointId> map_t, std::vector<Rational> phi, CaristiVariant variant)
      : space_(std::move(space)), map_(std::move(map_t)), phi_(std::move(phi)), variant_(variant) {}

  FiniteSpace space_;
  std::vector<PointId> map_;
  std::vector<Rational> phi_;
  CaristiVariant variant_;
};

struct ConditionEntry {
  std::string point;
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

/// The variant's inequality evaluated at every point, in carrier order.
std::vector<ConditionEntry> condition_report(const CaristiInstance& inst);

struct DominatedSet {
  std::string base;
  std::vector<std::string> members;  // carrier order
  Rational alpha;
};

/// S(x) = {z : m(x,z) <= m_{x,z} + phi(x) - phi(z)} (M-form) or
/// {z : p(x,z) <= p(x,x) + phi(x) - phi(z)} (p-form), and alpha(x), the
/// minimum of phi over S(x).
DominatedSet dominated_set(const CaristiInstance& inst, std::string_view x);
Rational alpha(const CaristiInstance& inst, std::string_view x);

bool dominates(const CaristiInstance& inst, PointId x, PointId z);

enum class Termination { FixedPoint, StabilizedNonFixed, StepBudget };

std::string_view to_string(Termination t);

/// x_1 = x0, then x_{n+1} is chosen from {z in S(x_n) : phi(z) <= alpha(x_n) + 1/n}
/// by smallest phi, then carrier order. The walk stops when x_{n+1} = x_n.
/// `points` holds x_1..x_k without the repeated final point; alpha_values[i]
/// is alpha(points[i]).
struct IterationTrace {
  std::vector<std::string> points;
  std::vector<Rational> phi_values;
  std::vector<Rational> alpha_values;
  Rational phi_limit;
  Termination terminated = Termination::StepBudget;
};

/// `max_steps` bounds the number of selections.
IterationTrace caristi_iterate(const CaristiInstance& inst, std::string_view x0, std::size_t max_steps);

/// Selections needed from any start: the pair (phi, carrier index) strictly
/// decreases along every trace, so |X| + 1 always suffices.
inline std::size_t sufficient_steps(const CaristiInstance& inst) { return inst.space().size() + 1; }

std::vector<std::string> fixed_points(const CaristiInstance& inst);

struct TheoremCheck {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  /// Strong variants only: some fixed point reached by iteration has zero
  /// self-distance.
  std::optional<bool> strong_extra;
  /// Hypotheses hold and the space's generated topology (m_open for m_*,
  /// p_open for p_*) is discrete, which makes every phi lower semicontinuous.
  /// Completeness of finite spaces is assumed, not checked.
  bool hypotheses_fully_verified = false;
  bool topology_discrete = false;
  std::vector<std::string> reachable_fixed_points;
};

TheoremCheck theorem_check(const CaristiInstance& inst);

struct EkelandCertificate {
  std::string point_z;
  bool strict = false;
  /// phi(x) + m(z,x) - m_{x,z} - phi(z) for every x != z, carrier order.
  std::vector<std::pair<std::string, Rational>> margins;
  /// First x whose margin is not positive, when strict is false.
  std::optional<std::string> witness;
};

/// Looks for z with phi(z) < phi(x) + m(z,x) - m_{x,z} for all x != z,
/// trying phi-minimisers first and then every remaining point, both in
/// carrier order. Falls back to the first phi-minimiser with strict = false.
/// Throws NotMMetric, NonTotalMap or NegativePotential.
EkelandCertificate ekeland_point(const FiniteSpace& space, const std::map<std::string, Rational>& phi);
EkelandCertificate ekeland_point(const FiniteSpace& space, const std::vector<Rational>& phi);

}  // namespace gmetric
