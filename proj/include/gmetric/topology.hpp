#pragma once

#include "gmetric/rational.hpp"
#include "gmetric/space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gmetric {

/// Subsets of a carrier, bit i standing for the i-th point in carrier order.
using PointMask = std::uint32_t;

/// Largest carrier the topology routines accept.
inline constexpr std::size_t kMaxTopologyPoints = 20;

enum class BallKind { POpen, PClosed, MOpen };

std::string_view to_string(BallKind kind);
BallKind parse_ball_kind(std::string_view text);

struct Ball {
  std::string center;
  Rational epsilon;
  BallKind kind;
  std::vector<std::string> members;  // carrier order
  PointMask mask = 0;
};

/// B_p(x,eps) = {y : p(x,y) < p(x,x) + eps}, or with <= when closed.
Ball p_ball(const FiniteSpace& space, std::string_view center, const Rational& eps, bool closed);

/// B_M(x,eps) = {y : m(x,y) < m_{x,y} + eps}. Also checks, and throws
/// std::logic_error if it fails, that the result equals
/// B_p(x,eps) intersected with {y : x in B_p(y,eps)}.
Ball m_ball(const FiniteSpace& space, std::string_view center, const Rational& eps);

Ball ball(const FiniteSpace& space, std::string_view center, const Rational& eps, BallKind kind);

/// Membership gap of y for a ball of the given kind centred at x: y belongs to
/// the open ball iff gap < eps, to the closed one iff gap <= eps.
Rational ball_gap(const FiniteSpace& space, PointId x, PointId y, BallKind kind);

/// Sorted distinct nonnegative radii at which the ball around x changes
/// membership. Always contains 0 (the centre's own gap).
std::vector<Rational> critical_epsilons(const FiniteSpace& space, std::string_view center, BallKind kind);

/// Radii that realise every distinct open ball around any centre: each
/// positive critical value over all centres, plus one beyond the largest.
std::vector<Rational> representative_radii(const FiniteSpace& space, BallKind kind);

class FiniteTopology {
 public:
  FiniteTopology(std::vector<std::string> carrier, std::vector<PointMask> opens);

  const std::vector<std::string>& carrier() const noexcept { return carrier_; }
  /// Sorted ascending by mask value.
  const std::vector<PointMask>& opens() const noexcept { return opens_; }
  PointMask full() const noexcept;
  bool is_open(PointMask set) const;
  bool is_discrete() const noexcept { return opens_.size() == (std::size_t{1} << carrier_.size()); }
  std::vector<std::string> labels(PointMask set) const;

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

 private:
  std::vector<std::string> carrier_;
  std::vector<PointMask> opens_;
};

/// Topology generated by all open balls of the given kind (POpen or MOpen),
/// over every centre and every representative radius.
FiniteTopology generate_topology(const FiniteSpace& space, BallKind kind);

/// Smallest topology containing the given sets.
FiniteTopology topology_from_subbase(std::vector<std::string> carrier, const std::vector<PointMask>& subbase);

struct SeparationReport {
  bool t0 = false;
  bool t1 = false;
  bool hausdorff = false;
  /// Carrier-ordered pair for the weakest property that fails.
  std::optional<std::pair<std::string, std::string>> witness;
};

SeparationReport separation_report(const FiniteTopology& top);

}  // namespace gmetric
