#pragma once

#include "gmetric/caristi.hpp"
#include "gmetric/rational.hpp"
#include "gmetric/space.hpp"
#include "gmetric/topology.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gmetric {

/// Candidates are tables over the integer grid [ceil(value_lo), floor(value_hi)]
/// on points labelled "1".."size_n".
///
/// Candidate streams are reproducible across implementations: when the whole
/// grid has at most max_candidates elements it is enumerated exhaustively in
/// lexicographic order (last digit fastest), otherwise candidate i draws its
/// digits from std::mt19937_64 seeded with splitmix64(seed + (i+1) * 0x9E3779B97F4A7C15),
/// reducing each 64-bit output to [0, radix) by rejection of the top partial
/// block followed by modulo.
struct SearchBudget {
  std::size_t max_candidates = 10000;
  std::uint64_t seed = 1;
  std::size_t size_n = 3;
  Rational value_lo{0};
  Rational value_hi{10};
};

/// Throws InvalidArgument unless max_candidates >= 1, size_n >= 2 and the
/// grid is nonempty.
void validate_budget(const SearchBudget& budget);

std::uint64_t splitmix64(std::uint64_t x);

/// Calls `visit` on candidate digit vectors (digit k in [0, radices[k])) until
/// it returns true or the budget is spent. Returns the number of candidates
/// visited.
std::size_t for_each_candidate(const SearchBudget& budget, const std::vector<std::uint64_t>& radices,
                               const std::function<bool(const std::vector<std::uint64_t>&)>& visit);

/// First candidate table (diagonal fixed to zero when the target is metric)
/// satisfying the target axiom system. Throws ExhaustedBudget.
FiniteSpace random_space(const SearchBudget& budget, AxiomMode target);

/// The first partial-metric violation of an M-metric space, preferring P4.
/// Empty when the space is a partial metric or not an M-metric.
std::optional<AxiomViolation> separation_witness(const FiniteSpace& space);

struct SeparatingExample {
  FiniteSpace space;
  AxiomViolation violation;
};

/// An M-metric space that is not a partial metric. Throws ExhaustedBudget.
SeparatingExample find_separating_example(const SearchBudget& budget);

enum class ProbeVerdict { Confirmed, Refuted, ExhaustedBudget };

std::string_view to_string(ProbeVerdict verdict);

/// Everything needed to re-check a verdict independently.
struct ProbeEvidence {
  std::optional<FiniteSpace> space;
  std::optional<AxiomViolation> violation;
  std::optional<std::vector<Rational>> phi;
  std::optional<std::vector<std::string>> map_t;  // image of each point, carrier order
  std::optional<EkelandCertificate> certificate;
  std::optional<SeparationReport> separation;
};

struct ProbeResult {
  std::string claim_id;
  ProbeVerdict verdict = ProbeVerdict::ExhaustedBudget;
  ProbeEvidence evidence;
  std::size_t candidates_examined = 0;
};

/// Registered claims:
///   sec1-example-is-m-metric        the three-point table is an M-metric
///   ekeland-strict-holds-on-finite  every finite M-metric space with a
///                                   potential has a strict Ekeland point
///   m-topology-non-hausdorff-exists some M-metric space has a non-Hausdorff
///                                   generated topology
///   caristi-fixed-point-on-finite   every self-map of a finite M-metric space
///                                   meeting the weak Caristi condition has a
///                                   fixed point
std::vector<std::string> registered_claims();

/// Throws UnknownClaim.
ProbeResult probe_claim(std::string_view claim_id, const SearchBudget& budget);

/// Built-in tables: "three-point", "ex4-1", "ex4-2", "max-123" (p = max on {1,2,3})
/// and "max-12". Throws UnknownLabel for other names.
FiniteSpace builtin_space(std::string_view name);

}  // namespace gmetric
