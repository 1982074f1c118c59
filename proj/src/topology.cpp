#include "gmetric/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmetric {

std::string_view to_string(BallKind kind) {
  switch (kind) {
    case BallKind::POpen: return "p_open";
    case BallKind::PClosed: return "p_closed";
    case BallKind::MOpen: return "m_open";
  }
  return "?";
}

BallKind parse_ball_kind(std::string_view text) {
  if (text == "p_open") return BallKind::POpen;
  if (text == "p_closed") return BallKind::PClosed;
  if (text == "m_open") return BallKind::MOpen;
  throw Error(Errc::UsageError, "unknown ball kind '" + std::string(text) + "'");
}

namespace {

void require_topology_size(const FiniteSpace& space) {
  if (space.size() > kMaxTopologyPoints) {
    throw Error(Errc::CarrierTooLarge, "carrier has " + std::to_string(space.size()) + " points, limit is " +
                                           std::to_string(kMaxTopologyPoints));
  }
}

void require_positive(const Rational& eps) {
  if (eps <= 0) throw Error(Errc::NonpositiveEpsilon, "radius must be positive, got " + to_string(eps));
}

bool member(const Rational& gap, const Rational& eps, BallKind kind) {
  return kind == BallKind::PClosed ? gap <= eps : gap < eps;
}

PointMask ball_mask(const FiniteSpace& space, PointId x, const Rational& eps, BallKind kind) {
  PointMask mask = 0;
  for (PointId y = 0; y < space.size(); ++y) {
    if (member(ball_gap(space, x, y, kind), eps, kind)) mask |= PointMask{1} << y;
  }
  return mask;
}

Ball make_ball(const FiniteSpace& space, PointId x, const Rational& eps, BallKind kind, PointMask mask) {
  Ball b{space.label(x), eps, kind, {}, mask};
  for (PointId y = 0; y < space.size(); ++y) {
    if (mask & (PointMask{1} << y)) b.members.push_back(space.label(y));
  }
  return b;
}

}  // namespace

Rational ball_gap(const FiniteSpace& space, PointId x, PointId y, BallKind kind) {
  if (kind == BallKind::MOpen) return m_excess(space, x, y);
  return space(x, y) - space(x, x);
}

Ball p_ball(const FiniteSpace& space, std::string_view center, const Rational& eps, bool closed) {
  require_topology_size(space);
  require_positive(eps);
  const PointId x = space.index_of(center);
  const BallKind kind = closed ? BallKind::PClosed : BallKind::POpen;
  return make_ball(space, x, eps, kind, ball_mask(space, x, eps, kind));
}

Ball m_ball(const FiniteSpace& space, std::string_view center, const Rational& eps) {
  require_topology_size(space);
  require_positive(eps);
  const PointId x = space.index_of(center);
  const PointMask mask = ball_mask(space, x, eps, BallKind::MOpen);

  PointMask decomposed = 0;
  const PointMask forward = ball_mask(space, x, eps, BallKind::POpen);
  for (PointId y = 0; y < space.size(); ++y) {
    const PointMask bit = PointMask{1} << y;
    if ((forward & bit) && (ball_mask(space, y, eps, BallKind::POpen) & (PointMask{1} << x))) {
      decomposed |= bit;
    }
  }
  if (decomposed != mask) throw std::logic_error("M-ball differs from the two-sided p-ball intersection");
  return make_ball(space, x, eps, BallKind::MOpen, mask);
}

Ball ball(const FiniteSpace& space, std::string_view center, const Rational& eps, BallKind kind) {
  if (kind == BallKind::MOpen) return m_ball(space, center, eps);
  return p_ball(space, center, eps, kind == BallKind::PClosed);
}

std::vector<Rational> critical_epsilons(const FiniteSpace& space, std::string_view center, BallKind kind) {
  const PointId x = space.index_of(center);
  std::vector<Rational> out;
  for (PointId y = 0; y < space.size(); ++y) {
    Rational gap = ball_gap(space, x, y, kind);
    // Negative gaps put y in every ball and never change membership.
    if (gap >= 0) out.push_back(std::move(gap));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> representative_radii(const FiniteSpace& space, BallKind kind) {
  std::vector<Rational> all;
  for (PointId x = 0; x < space.size(); ++x) {
    for (auto& c : critical_epsilons(space, space.label(x), kind)) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Rational> out;
  for (const auto& c : all) {
    if (c > 0) out.push_back(c);
  }
  out.push_back(all.back() + 1);
  return out;
}

FiniteTopology::FiniteTopology(std::vector<std::string> carrier, std::vector<PointMask> opens)
    : carrier_(std::move(carrier)), opens_(std::move(opens)) {
  if (carrier_.size() > kMaxTopologyPoints) throw Error(Errc::CarrierTooLarge, "carrier too large");
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (PointMask set : opens_) {
    if ((set & ~full()) != 0) throw Error(Errc::InvalidArgument, "open set outside the carrier");
  }
  if (!is_open(0) || !is_open(full())) {
    throw Error(Errc::InvalidArgument, "a topology must contain the empty set and the carrier");
  }
}

PointMask FiniteTopology::full() const noexcept {
  return carrier_.size() >= 32 ? ~PointMask{0} : (PointMask{1} << carrier_.size()) - 1;
}

bool FiniteTopology::is_open(PointMask set) const { return std::binary_search(opens_.begin(), opens_.end(), set); }

std::vector<std::string> FiniteTopology::labels(PointMask set) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    if (set & (PointMask{1} << i)) out.push_back(carrier_[i]);
  }
  return out;
}

FiniteTopology topology_from_subbase(std::vector<std::string> carrier, const std::vector<PointMask>& subbase) {
  const std::size_t n = carrier.size();
  if (n > kMaxTopologyPoints) throw Error(Errc::CarrierTooLarge, "carrier too large");
  const PointMask full = (PointMask{1} << n) - 1;

  // On a finite carrier every open set is a union of the minimal
  // neighbourhoods U_x = intersection of the subbase sets containing x.
  std::vector<PointMask> minimal(n, full);
  for (PointMask set : subbase) {
    for (std::size_t x = 0; x < n; ++x) {
      if (set & (PointMask{1} << x)) minimal[x] &= set;
    }
  }

  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<PointMask> opens{0};
  seen[0] = true;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const PointMask current = opens[i];
    for (std::size_t x = 0; x < n; ++x) {
      if (current & (PointMask{1} << x)) continue;
      const PointMask next = current | minimal[x];
      if (!seen[next]) {
        seen[next] = true;
        opens.push_back(next);
      }
    }
  }
  return FiniteTopology(std::move(carrier), std::move(opens));
}

FiniteTopology generate_topology(const FiniteSpace& space, BallKind kind) {
  if (kind == BallKind::PClosed) throw Error(Errc::UsageError, "closed balls do not generate a topology");
  require_topology_size(space);
  std::vector<PointMask> subbase;
  for (const Rational& eps : representative_radii(space, kind)) {
    for (PointId x = 0; x < space.size(); ++x) subbase.push_back(ball_mask(space, x, eps, kind));
  }
  return topology_from_subbase(space.points(), subbase);
}

SeparationReport separation_report(const FiniteTopology& top) {
  const std::size_t n = top.carrier().size();
  std::vector<PointMask> minimal(n, top.full());
  for (PointMask set : top.opens()) {
    for (std::size_t x = 0; x < n; ++x) {
      if (set & (PointMask{1} << x)) minimal[x] &= set;
    }
  }
  auto in = [&](std::size_t x, std::size_t y) { return (minimal[y] & (PointMask{1} << x)) != 0; };

  SeparationReport r{true, true, true, std::nullopt};
  std::optional<std::pair<std::size_t, std::size_t>> t0_fail, t1_fail, t2_fail;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      // Every open set containing y contains x iff x is in U_y.
      const bool x_in_uy = in(x, y);
      const bool y_in_ux = in(y, x);
      if (x_in_uy && y_in_ux && !t0_fail) t0_fail = {x, y};
      if ((x_in_uy || y_in_ux) && !t1_fail) t1_fail = {x, y};
      if ((minimal[x] & minimal[y]) != 0 && !t2_fail) t2_fail = {x, y};
    }
  }
  r.t0 = !t0_fail;
  r.t1 = !t1_fail;
  r.hausdorff = !t2_fail;
  const auto& fail = t0_fail ? t0_fail : (t1_fail ? t1_fail : t2_fail);
  if (fail) r.witness = std::make_pair(top.carrier()[fail->first], top.carrier()[fail->second]);
  return r;
}

}  // namespace gmetric
