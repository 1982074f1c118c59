#pragma once

#include "gmetric/error.hpp"
#include "gmetric/rational.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gmetric {

using PointId = std::size_t;

/// A finite carrier of labeled points with a symmetric, nonnegative table of
/// exact distances. The same table is read as p (partial metric), m
/// (M-metric) or d (metric) depending on which axioms are being checked.
///
/// Instances are immutable once validated.
class FiniteSpace {
 public:
  /// Checks dimensions, label uniqueness, nonnegativity and symmetry, in that
  /// order, and throws the matching Errc on the first failure.
  static FiniteSpace validate(std::vector<std::string> points,
                              std::vector<std::vector<Rational>> table);

  /// Same as above, parsing every entry with parse_rational first.
  static FiniteSpace validate(std::vector<std::string> points,
                              const std::vector<std::vector<std::string>>& raw_table);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& label(PointId id) const { return points_.at(id); }

  std::optional<PointId> find(std::string_view label) const;
  /// Throws UnknownLabel.
  PointId index_of(std::string_view label) const;

  const Rational& operator()(PointId x, PointId y) const { return table_[x * points_.size() + y]; }
  const Rational& dist(std::string_view x, std::string_view y) const {
    return (*this)(index_of(x), index_of(y));
  }

  std::vector<std::vector<Rational>> table() const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  FiniteSpace() = default;

  std::vector<std::string> points_;
  std::vector<Rational> table_;
};

struct ExtremaPair {
  Rational m_min;
  Rational m_max;
};

/// m_{x,y} and M_{x,y}: the smaller and larger of the two self-distances.
ExtremaPair m_extrema(const FiniteSpace& space, std::string_view x, std::string_view y);

inline const Rational& self_min(const FiniteSpace& s, PointId x, PointId y) {
  return s(x, x) < s(y, y) ? s(x, x) : s(y, y);
}

/// m(x,y) - m_{x,y}, the quantity the M-metric triangle inequality is stated on.
inline Rational m_excess(const FiniteSpace& s, PointId x, PointId y) { return s(x, y) - self_min(s, x, y); }

enum class AxiomMode { Metric, Partial, MMetric };

enum class Axiom { MetSymmetry, MetIdentity, MetTriangle, P1, P2, P3, P4, M1, M2, M3, M4 };

/// The relation the axiom requires between lhs and rhs.
enum class Relation { Le, Eq, Gt };

std::string_view to_string(AxiomMode mode);
std::string_view to_string(Axiom axiom);
std::string_view to_string(Relation relation);
AxiomMode parse_axiom_mode(std::string_view text);
Axiom parse_axiom(std::string_view text);
Relation parse_relation(std::string_view text);

/// One failed instance of an axiom.
///
/// Witness conventions (z is always the intermediate point of a triangle):
///   MET-symmetry, P2, M3  (x,y)    d(x,y) = d(y,x)
///   MET-identity          (x,x)    d(x,x) = 0
///                         (x,y)    d(x,y) > 0 for x != y
///   MET-triangle          (x,y,z)  d(x,y) <= d(x,z) + d(z,y)
///   P1, M1                (x,y)    spread > 0 for x != y, where spread is
///                                  |p(x,x)-p(x,y)| + |p(y,y)-p(x,y)|;
///                                  (x,x) checks the reverse direction, spread = 0
///   P3                    (x,y)    p(x,x) <= p(x,y)
///   P4                    (x,y,z)  p(x,y) + p(z,z) <= p(x,z) + p(z,y)
///   M2                    (x,y)    m_{x,y} <= m(x,y)
///   M4                    (x,y,z)  m(x,y)-m_{x,y} <= (m(x,z)-m_{x,z}) + (m(z,y)-m_{z,y})
struct AxiomViolation {
  Axiom axiom;
  std::vector<std::string> witness;
  Rational lhs;
  Rational rhs;
  Relation required;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

bool relation_holds(Relation relation, const Rational& lhs, const Rational& rhs);

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// Exhaustive check over all ordered witness tuples. Violations are grouped by
/// axiom and, within an axiom, ordered lexicographically by carrier index.
/// `limit` caps the number of violations returned.
std::vector<AxiomViolation> axiom_report(const FiniteSpace& space, AxiomMode mode,
                                         std::size_t limit = kNoLimit);

/// Equivalent to axiom_report(space, mode, 1).empty().
bool satisfies(const FiniteSpace& space, AxiomMode mode);

struct SpaceClassification {
  bool is_metric = false;
  bool is_partial = false;
  bool is_m_metric = false;
  std::vector<AxiomViolation> metric_violations;
  std::vector<AxiomViolation> partial_violations;
  std::vector<AxiomViolation> m_metric_violations;

  bool holds(AxiomMode mode) const;
  const std::vector<AxiomViolation>& violations(AxiomMode mode) const;
};

/// Runs all three axiom systems. Throws std::logic_error if the results ever
/// break metric => partial => M-metric.
SpaceClassification classify(const FiniteSpace& space, std::size_t limit_per_class = kNoLimit);

class NotPartialMetricError : public Error {
 public:
  explicit NotPartialMetricError(AxiomViolation violation);
  const AxiomViolation& violation() const noexcept { return violation_; }

 private:
  AxiomViolation violation_;
};

/// d_p(x,y) = 2p(x,y) - p(x,x) - p(y,y). Throws NotPartialMetricError carrying
/// the first partial-metric violation.
FiniteSpace induced_metric(const FiniteSpace& space);

/// Points with zero self-distance, in carrier order.
std::vector<std::string> zero_self_set(const FiniteSpace& space);

}  // namespace gmetric
