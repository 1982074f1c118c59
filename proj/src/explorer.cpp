#include "gmetric/explorer.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <random>

namespace gmetric {

namespace {

struct Grid {
  Integer lo;
  std::uint64_t size;
};

Integer ceil_of(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;
  if (q * den < num) q += 1;
  return q;
}

Integer floor_of(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;
  if (q * den > num) q -= 1;
  return q;
}

Grid grid_of(const SearchBudget& budget) {
  const Integer lo = ceil_of(budget.value_lo);
  const Integer hi = floor_of(budget.value_hi);
  if (lo < 0) throw Error(Errc::InvalidArgument, "table entries must be nonnegative");
  if (hi < lo) throw Error(Errc::InvalidArgument, "value range contains no integer");
  const Integer width = hi - lo + 1;
  if (width > 1'000'000) throw Error(Errc::InvalidArgument, "value range too wide");
  return {lo, width.convert_to<std::uint64_t>()};
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t radix) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % radix + 1) % radix;
  std::uint64_t draw = rng();
  while (draw > limit) draw = rng();
  return draw % radix;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::size_t table_digits(std::size_t n, bool zero_diagonal) {
  return zero_diagonal ? n * (n - 1) / 2 : n * (n + 1) / 2;
}

// Upper triangle, row-major, starting at `offset` in the digit vector.
FiniteSpace table_from_digits(const std::vector<std::uint64_t>& digits, std::size_t offset, std::size_t n,
                              const Grid& grid, bool zero_diagonal) {
  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
  std::size_t k = offset;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = zero_diagonal ? i + 1 : i; j < n; ++j) {
      const Rational v(grid.lo + digits[k++]);
      table[i][j] = v;
      table[j][i] = v;
    }
  }
  return FiniteSpace::validate(default_labels(n), std::move(table));
}

std::vector<Rational> potentials_from_digits(const std::vector<std::uint64_t>& digits, std::size_t offset,
                                             std::size_t n, const Grid& grid) {
  std::vector<Rational> phi;
  for (std::size_t i = 0; i < n; ++i) phi.emplace_back(grid.lo + digits[offset + i]);
  return phi;
}

[[noreturn]] void exhausted(std::string_view what, std::size_t examined) {
  throw Error(Errc::ExhaustedBudget,
              std::string(what) + ": nothing found in " + std::to_string(examined) + " candidates");
}

}  // namespace

void validate_budget(const SearchBudget& budget) {
  if (budget.max_candidates < 1) throw Error(Errc::InvalidArgument, "max_candidates must be at least 1");
  if (budget.size_n < 2) throw Error(Errc::InvalidArgument, "size_n must be at least 2");
  if (budget.size_n > kMaxTopologyPoints) throw Error(Errc::InvalidArgument, "size_n too large");
  grid_of(budget);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::size_t for_each_candidate(const SearchBudget& budget, const std::vector<std::uint64_t>& radices,
                               const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  if (budget.max_candidates < 1) throw Error(Errc::InvalidArgument, "max_candidates must be at least 1");
  Integer total = 1;
  for (auto r : radices) {
    if (r == 0) throw Error(Errc::InvalidArgument, "empty digit range");
    total *= r;
  }
  std::vector<std::uint64_t> digits(radices.size(), 0);

  if (total <= budget.max_candidates) {
    const std::size_t count = total.convert_to<std::size_t>();
    for (std::size_t i = 0; i < count; ++i) {
      if (visit(digits)) return i + 1;
      for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < radices[k]) break;
        digits[k] = 0;
      }
    }
    return count;
  }

  for (std::size_t i = 0; i < budget.max_candidates; ++i) {
    std::mt19937_64 rng(splitmix64(budget.seed + (i + 1) * 0x9E3779B97F4A7C15ULL));
    for (std::size_t k = 0; k < radices.size(); ++k) digits[k] = bounded(rng, radices[k]);
    if (visit(digits)) return i + 1;
  }
  return budget.max_candidates;
}

FiniteSpace random_space(const SearchBudget& budget, AxiomMode target) {
  validate_budget(budget);
  const Grid grid = grid_of(budget);
  const std::size_t n = budget.size_n;
  const bool zero_diagonal = target == AxiomMode::Metric;
  std::optional<FiniteSpace> found;
  const auto examined = for_each_candidate(
      budget, std::vector<std::uint64_t>(table_digits(n, zero_diagonal), grid.size), [&](const auto& digits) {
        auto space = table_from_digits(digits, 0, n, grid, zero_diagonal);
        if (!satisfies(space, target)) return false;
        found = std::move(space);
        return true;
      });
  if (!found) exhausted("random_space(" + std::string(to_string(target)) + ")", examined);
  return std::move(*found);
}

std::optional<AxiomViolation> separation_witness(const FiniteSpace& space) {
  if (!satisfies(space, AxiomMode::MMetric)) return std::nullopt;
  auto violations = axiom_report(space, AxiomMode::Partial);
  if (violations.empty()) return std::nullopt;
  auto p4 = std::find_if(violations.begin(), violations.end(), [](const auto& v) { return v.axiom == Axiom::P4; });
  return p4 != violations.end() ? *p4 : violations.front();
}

SeparatingExample find_separating_example(const SearchBudget& budget) {
  validate_budget(budget);
  const Grid grid = grid_of(budget);
  const std::size_t n = budget.size_n;
  std::optional<SeparatingExample> found;
  const auto examined =
      for_each_candidate(budget, std::vector<std::uint64_t>(table_digits(n, false), grid.size), [&](const auto& digits) {
        auto space = table_from_digits(digits, 0, n, grid, false);
        auto witness = separation_witness(space);
        if (!witness) return false;
        found = SeparatingExample{std::move(space), std::move(*witness)};
        return true;
      });
  if (!found) exhausted("find_separating_example", examined);
  return std::move(*found);
}

std::string_view to_string(ProbeVerdict verdict) {
  switch (verdict) {
    case ProbeVerdict::Confirmed: return "confirmed";
    case ProbeVerdict::Refuted: return "refuted";
    case ProbeVerdict::ExhaustedBudget: return "exhausted_budget";
  }
  return "?";
}

std::vector<std::string> registered_claims() {
  return {"sec1-example-is-m-metric", "ekeland-strict-holds-on-finite", "m-topology-non-hausdorff-exists",
          "caristi-fixed-point-on-finite"};
}

namespace {

ProbeResult probe_three_point() {
  ProbeResult r{"sec1-example-is-m-metric", ProbeVerdict::Confirmed, {}, 1};
  FiniteSpace space = builtin_space("three-point");
  auto violations = axiom_report(space, AxiomMode::MMetric);
  if (!violations.empty()) {
    r.verdict = ProbeVerdict::Refuted;
    r.evidence.violation = violations.front();
  }
  r.evidence.space = std::move(space);
  return r;
}

ProbeResult probe_ekeland(const SearchBudget& budget) {
  validate_budget(budget);
  const Grid grid = grid_of(budget);
  const std::size_t n = budget.size_n;
  const std::size_t t = table_digits(n, false);
  ProbeResult r{"ekeland-strict-holds-on-finite", ProbeVerdict::ExhaustedBudget, {}, 0};
  r.candidates_examined =
      for_each_candidate(budget, std::vector<std::uint64_t>(t + n, grid.size), [&](const auto& digits) {
        auto space = table_from_digits(digits, 0, n, grid, false);
        if (!satisfies(space, AxiomMode::MMetric)) return false;
        auto phi = potentials_from_digits(digits, t, n, grid);
        auto certificate = ekeland_point(space, phi);
        if (certificate.strict) return false;
        r.verdict = ProbeVerdict::Refuted;
        r.evidence.space = std::move(space);
        r.evidence.phi = std::move(phi);
        r.evidence.certificate = std::move(certificate);
        return true;
      });
  return r;
}

ProbeResult probe_non_hausdorff(const SearchBudget& budget) {
  validate_budget(budget);
  const Grid grid = grid_of(budget);
  const std::size_t n = budget.size_n;
  ProbeResult r{"m-topology-non-hausdorff-exists", ProbeVerdict::ExhaustedBudget, {}, 0};
  r.candidates_examined =
      for_each_candidate(budget, std::vector<std::uint64_t>(table_digits(n, false), grid.size), [&](const auto& digits) {
        auto space = table_from_digits(digits, 0, n, grid, false);
        if (!satisfies(space, AxiomMode::MMetric)) return false;
        auto report = separation_report(generate_topology(space, BallKind::MOpen));
        if (report.hausdorff) return false;
        r.verdict = ProbeVerdict::Confirmed;
        r.evidence.space = std::move(space);
        r.evidence.separation = std::move(report);
        return true;
      });
  return r;
}

ProbeResult probe_caristi(const SearchBudget& budget) {
  validate_budget(budget);
  const Grid grid = grid_of(budget);
  const std::size_t n = budget.size_n;
  const std::size_t t = table_digits(n, false);
  std::vector<std::uint64_t> radices(t + n, grid.size);
  radices.insert(radices.end(), n, n);
  ProbeResult r{"caristi-fixed-point-on-finite", ProbeVerdict::ExhaustedBudget, {}, 0};
  r.candidates_examined = for_each_candidate(budget, radices, [&](const auto& digits) {
    auto space = table_from_digits(digits, 0, n, grid, false);
    if (!satisfies(space, AxiomMode::MMetric)) return false;
    std::vector<PointId> map_t(digits.begin() + static_cast<std::ptrdiff_t>(t + n), digits.end());
    auto inst = CaristiInstance::make(space, map_t, potentials_from_digits(digits, t, n, grid), CaristiVariant::MWeak);
    const auto conditions = condition_report(inst);
    if (!std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.holds; })) return false;
    if (!fixed_points(inst).empty()) return false;
    r.verdict = ProbeVerdict::Refuted;
    r.evidence.phi = inst.potentials();
    std::vector<std::string> images;
    for (PointId x = 0; x < n; ++x) images.push_back(space.label(inst.image(x)));
    r.evidence.map_t = std::move(images);
    r.evidence.space = std::move(space);
    return true;
  });
  return r;
}

}  // namespace

ProbeResult probe_claim(std::string_view claim_id, const SearchBudget& budget) {
  if (claim_id == "sec1-example-is-m-metric") return probe_three_point();
  if (claim_id == "ekeland-strict-holds-on-finite") return probe_ekeland(budget);
  if (claim_id == "m-topology-non-hausdorff-exists") return probe_non_hausdorff(budget);
  if (claim_id == "caristi-fixed-point-on-finite") return probe_caristi(budget);
  throw Error(Errc::UnknownClaim, "unknown claim '" + std::string(claim_id) + "'");
}

namespace {

FiniteSpace from_integers(std::vector<std::string> labels, const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> table;
  for (const auto& row : rows) {
    auto& out = table.emplace_back();
    for (long long v : row) out.emplace_back(v);
  }
  return FiniteSpace::validate(std::move(labels), std::move(table));
}

}  // namespace

FiniteSpace builtin_space(std::string_view name) {
  if (name == "three-point") {
    return from_integers({"1", "2", "3"}, {{1, 10, 7}, {10, 4, 6}, {7, 6, 5}});
  }
  if (name == "ex4-1") {
    return from_integers({"1", "2", "3", "4"}, {{1, 10, 7, 8}, {10, 3, 7, 6}, {7, 7, 5, 6}, {8, 6, 6, 3}});
  }
  if (name == "ex4-2") {
    return from_integers({"1", "2", "3", "4"}, {{0, 10, 7, 8}, {10, 3, 7, 5}, {7, 7, 5, 6}, {8, 5, 6, 0}});
  }
  if (name == "max-123") {
    return from_integers({"1", "2", "3"}, {{1, 2, 3}, {2, 2, 3}, {3, 3, 3}});
  }
  if (name == "max-12") {
    return from_integers({"1", "2"}, {{1, 2}, {2, 2}});
  }
  throw Error(Errc::UnknownLabel, "no built-in space named '" + std::string(name) + "'");
}

}  // namespace gmetric
