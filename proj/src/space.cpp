#include "gmetric/space.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

namespace gmetric {

FiniteSpace FiniteSpace::validate(std::vector<std::string> points,
                                  std::vector<std::vector<Rational>> table) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(Errc::DimensionMismatch, "a space needs at least one point");
  if (table.size() != n) {
    throw Error(Errc::DimensionMismatch, "table has " + std::to_string(table.size()) +
                                             " rows for " + std::to_string(n) + " points");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(Errc::DimensionMismatch, "row " + std::to_string(i + 1) + " has " +
                                               std::to_string(table[i].size()) + " entries, expected " +
                                               std::to_string(n));
    }
  }
  std::set<std::string_view> seen;
  for (const auto& p : points) {
    if (!seen.insert(p).second) throw Error(Errc::DuplicateLabel, "duplicate label '" + p + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] < 0) {
        throw Error(Errc::NegativeEntry, "negative entry at (" + points[i] + "," + points[j] +
                                             "): " + to_string(table[i][j]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table[i][j] != table[j][i]) {
        throw Error(Errc::AsymmetricTable, "asymmetric pair (" + points[i] + "," + points[j] +
                                               "): " + to_string(table[i][j]) +
                                               " != " + to_string(table[j][i]));
      }
    }
  }

  FiniteSpace space;
  space.points_ = std::move(points);
  space.table_.reserve(n * n);
  for (auto& row : table) {
    for (auto& v : row) space.table_.push_back(std::move(v));
  }
  return space;
}

FiniteSpace FiniteSpace::validate(std::vector<std::string> points,
                                  const std::vector<std::vector<std::string>>& raw_table) {
  std::vector<std::vector<Rational>> table;
  table.reserve(raw_table.size());
  for (const auto& row : raw_table) {
    auto& out = table.emplace_back();
    out.reserve(row.size());
    for (const auto& cell : row) out.push_back(parse_rational(cell));
  }
  return validate(std::move(points), std::move(table));
}

std::optional<PointId> FiniteSpace::find(std::string_view label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) return std::nullopt;
  return static_cast<PointId>(it - points_.begin());
}

PointId FiniteSpace::index_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw Error(Errc::UnknownLabel, "unknown point '" + std::string(label) + "'");
}

std::vector<std::vector<Rational>> FiniteSpace::table() const {
  const std::size_t n = size();
  std::vector<std::vector<Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].assign(table_.begin() + i * n, table_.begin() + (i + 1) * n);
  return rows;
}

ExtremaPair m_extrema(const FiniteSpace& space, std::string_view x, std::string_view y) {
  const PointId a = space.index_of(x);
  const PointId b = space.index_of(y);
  const Rational& ma = space(a, a);
  const Rational& mb = space(b, b);
  return ma <= mb ? ExtremaPair{ma, mb} : ExtremaPair{mb, ma};
}

namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 11> kAxiomNames{{
    {Axiom::MetSymmetry, "MET-symmetry"},
    {Axiom::MetIdentity, "MET-identity"},
    {Axiom::MetTriangle, "MET-triangle"},
    {Axiom::P1, "P1"},
    {Axiom::P2, "P2"},
    {Axiom::P3, "P3"},
    {Axiom::P4, "P4"},
    {Axiom::M1, "M1"},
    {Axiom::M2, "M2"},
    {Axiom::M3, "M3"},
    {Axiom::M4, "M4"},
}};

Rational abs_diff(const Rational& a, const Rational& b) { return a < b ? Rational(b - a) : Rational(a - b); }

// Visitor returns false to stop the enumeration.
using Sink = std::function<bool(AxiomViolation&&)>;

class Checker {
 public:
  Checker(const FiniteSpace& s, const Sink& sink) : s_(s), sink_(sink) {}

  void run(AxiomMode mode) {
    switch (mode) {
      case AxiomMode::Metric:
        pairs(Axiom::MetSymmetry) && pairs(Axiom::MetIdentity) && triples(Axiom::MetTriangle);
        break;
      case AxiomMode::Partial:
        pairs(Axiom::P1) && pairs(Axiom::P2) && pairs(Axiom::P3) && triples(Axiom::P4);
        break;
      case AxiomMode::MMetric:
        pairs(Axiom::M1) && pairs(Axiom::M2) && pairs(Axiom::M3) && triples(Axiom::M4);
        break;
    }
  }

 private:
  bool emit(Axiom axiom, std::initializer_list<PointId> witness, Rational lhs, Rational rhs,
            Relation required) {
    if (relation_holds(required, lhs, rhs)) return true;
    AxiomViolation v{axiom, {}, std::move(lhs), std::move(rhs), required};
    for (PointId id : witness) v.witness.push_back(s_.label(id));
    return sink_(std::move(v));
  }

  bool pairs(Axiom axiom) {
    const std::size_t n = s_.size();
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        if (!pair(axiom, x, y)) return false;
      }
    }
    return true;
  }

  bool pair(Axiom axiom, PointId x, PointId y) {
    switch (axiom) {
      case Axiom::MetSymmetry:
      case Axiom::P2:
      case Axiom::M3:
        return emit(axiom, {x, y}, s_(x, y), s_(y, x), Relation::Eq);
      case Axiom::MetIdentity:
        if (x == y) return emit(axiom, {x, x}, s_(x, x), Rational(0), Relation::Eq);
        return emit(axiom, {x, y}, s_(x, y), Rational(0), Relation::Gt);
      case Axiom::P1:
      case Axiom::M1: {
        Rational spread = abs_diff(s_(x, x), s_(x, y)) + abs_diff(s_(y, y), s_(x, y));
        return emit(axiom, {x, y}, std::move(spread), Rational(0), x == y ? Relation::Eq : Relation::Gt);
      }
      case Axiom::P3:
        return emit(axiom, {x, y}, s_(x, x), s_(x, y), Relation::Le);
      case Axiom::M2:
        return emit(axiom, {x, y}, self_min(s_, x, y), s_(x, y), Relation::Le);
      default:
        throw std::logic_error("not a pair axiom");
    }
  }

  bool triples(Axiom axiom) {
    const std::size_t n = s_.size();
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        for (PointId z = 0; z < n; ++z) {
          if (!triple(axiom, x, y, z)) return false;
        }
      }
    }
    return true;
  }

  bool triple(Axiom axiom, PointId x, PointId y, PointId z) {
    switch (axiom) {
      case Axiom::MetTriangle:
        return emit(axiom, {x, y, z}, s_(x, y), s_(x, z) + s_(z, y), Relation::Le);
      case Axiom::P4:
        return emit(axiom, {x, y, z}, s_(x, y) + s_(z, z), s_(x, z) + s_(z, y), Relation::Le);
      case Axiom::M4:
        return emit(axiom, {x, y, z}, m_excess(s_, x, y), m_excess(s_, x, z) + m_excess(s_, z, y),
                    Relation::Le);
      default:
        throw std::logic_error("not a triple axiom");
    }
  }

  const FiniteSpace& s_;
  const Sink& sink_;
};

}  // namespace

std::string_view to_string(AxiomMode mode) {
  switch (mode) {
    case AxiomMode::Metric: return "metric";
    case AxiomMode::Partial: return "partial";
    case AxiomMode::MMetric: return "m_metric";
  }
  return "?";
}

std::string_view to_string(Axiom axiom) {
  for (const auto& [a, name] : kAxiomNames) {
    if (a == axiom) return name;
  }
  return "?";
}

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::Le: return "<=";
    case Relation::Eq: return "=";
    case Relation::Gt: return ">";
  }
  return "?";
}

AxiomMode parse_axiom_mode(std::string_view text) {
  if (text == "metric") return AxiomMode::Metric;
  if (text == "partial") return AxiomMode::Partial;
  if (text == "m_metric" || text == "m-metric") return AxiomMode::MMetric;
  throw Error(Errc::UsageError, "unknown axiom system '" + std::string(text) + "'");
}

Axiom parse_axiom(std::string_view text) {
  for (const auto& [a, name] : kAxiomNames) {
    if (name == text) return a;
  }
  throw Error(Errc::MalformedDocument, "unknown axiom id '" + std::string(text) + "'");
}

Relation parse_relation(std::string_view text) {
  if (text == "<=") return Relation::Le;
  if (text == "=") return Relation::Eq;
  if (text == ">") return Relation::Gt;
  throw Error(Errc::MalformedDocument, "unknown relation '" + std::string(text) + "'");
}

bool relation_holds(Relation relation, const Rational& lhs, const Rational& rhs) {
  switch (relation) {
    case Relation::Le: return lhs <= rhs;
    case Relation::Eq: return lhs == rhs;
    case Relation::Gt: return lhs > rhs;
  }
  return false;
}

std::vector<AxiomViolation> axiom_report(const FiniteSpace& space, AxiomMode mode, std::size_t limit) {
  std::vector<AxiomViolation> out;
  if (limit == 0) return out;
  Sink sink = [&](AxiomViolation&& v) {
    out.push_back(std::move(v));
    return out.size() < limit;
  };
  Checker(space, sink).run(mode);
  return out;
}

bool satisfies(const FiniteSpace& space, AxiomMode mode) { return axiom_report(space, mode, 1).empty(); }

bool SpaceClassification::holds(AxiomMode mode) const {
  switch (mode) {
    case AxiomMode::Metric: return is_metric;
    case AxiomMode::Partial: return is_partial;
    case AxiomMode::MMetric: return is_m_metric;
  }
  return false;
}

const std::vector<AxiomViolation>& SpaceClassification::violations(AxiomMode mode) const {
  switch (mode) {
    case AxiomMode::Metric: return metric_violations;
    case AxiomMode::Partial: return partial_violations;
    case AxiomMode::MMetric: break;
  }
  return m_metric_violations;
}

SpaceClassification classify(const FiniteSpace& space, std::size_t limit_per_class) {
  SpaceClassification c;
  c.metric_violations = axiom_report(space, AxiomMode::Metric, limit_per_class);
  c.partial_violations = axiom_report(space, AxiomMode::Partial, limit_per_class);
  c.m_metric_violations = axiom_report(space, AxiomMode::MMetric, limit_per_class);
  // With a zero cap nothing is collected, so fall back to early-exit checks.
  c.is_metric = limit_per_class == 0 ? satisfies(space, AxiomMode::Metric) : c.metric_violations.empty();
  c.is_partial = limit_per_class == 0 ? satisfies(space, AxiomMode::Partial) : c.partial_violations.empty();
  c.is_m_metric = limit_per_class == 0 ? satisfies(space, AxiomMode::MMetric) : c.m_metric_violations.empty();
  if ((c.is_metric && !c.is_partial) || (c.is_partial && !c.is_m_metric)) {
    throw std::logic_error("classification breaks metric => partial => M-metric");
  }
  return c;
}

NotPartialMetricError::NotPartialMetricError(AxiomViolation violation)
    : Error(Errc::NotPartialMetric, "not a partial metric: " + std::string(to_string(violation.axiom)) +
                                        " fails"),
      violation_(std::move(violation)) {}

FiniteSpace induced_metric(const FiniteSpace& space) {
  auto blocking = axiom_report(space, AxiomMode::Partial, 1);
  if (!blocking.empty()) throw NotPartialMetricError(std::move(blocking.front()));
  const std::size_t n = space.size();
  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) table[x][y] = 2 * space(x, y) - space(x, x) - space(y, y);
  }
  return FiniteSpace::validate(space.points(), std::move(table));
}

std::vector<std::string> zero_self_set(const FiniteSpace& space) {
  std::vector<std::string> out;
  for (PointId x = 0; x < space.size(); ++x) {
    if (space(x, x) == 0) out.push_back(space.label(x));
  }
  return out;
}

}  // namespace gmetric
