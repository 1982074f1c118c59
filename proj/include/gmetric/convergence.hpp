#pragma once

#include "gmetric/rational.hpp"
#include "gmetric/space.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gmetric {

enum class ParametricFamily { MaxNonneg };

/// A partial metric on an infinite carrier. The only family is the nonnegative
/// rationals with p(x,y) = max{x,y}.
struct ParametricSpace {
  ParametricFamily family = ParametricFamily::MaxNonneg;
};

/// Throws NegativeCarrierValue when either argument is negative.
Rational eval_parametric(const ParametricSpace& ps, const Rational& x, const Rational& y);

enum class SequenceRule { Constant, Harmonic, InverseSquare };

/// x_n = c, c + a/n or c + a/n^2 for n >= 1, except that the first
/// prefix.size() terms are taken from `prefix`.
struct SequenceSpec {
  SequenceRule rule = SequenceRule::Constant;
  Rational c;
  Rational a;
  std::vector<Rational> prefix;

  Rational at(std::uint64_t n) const;

  /// Accepts sums of rational constants and at most one term "<coef>/n" or
  /// "<coef>/n^2", e.g. "1+1/n^2", "3", "1/n", "1/2 - (3/4)/n".
  static SequenceSpec parse(std::string_view text);
  std::string describe() const;
};

enum class ConvergenceMode { Usual, Symmetric, Cauchy };

std::string_view to_string(ConvergenceMode mode);
ConvergenceMode parse_convergence_mode(std::string_view text);

struct TailSampling {
  std::uint64_t tail_n = 10000;
  Rational tolerance{1, 1000000};
};

/// The sampled indices for a tail starting at n: {n, 2n, 4n, 8n}.
std::vector<std::uint64_t> sample_indices(std::uint64_t tail_n);

/// A semi-decision: `holds` is certified only at the sampled indices and the
/// stated tolerance. `residuals` lists the gaps behind the verdict: for usual
/// mode |p(x_n,x) - p(x,x)| per sample; symmetric mode appends
/// |p(x_n,x_n) - p(x,x)| per sample; Cauchy mode lists p(x_n,x_m) minus the
/// smallest sampled value, over all sampled pairs n <= m.
struct ConvergenceVerdict {
  ConvergenceMode mode;
  bool holds = false;
  std::uint64_t tail_index = 0;
  Rational tolerance;
  std::vector<Rational> residuals;
};

ConvergenceVerdict convergence_verdict(const ParametricSpace& ps, const SequenceSpec& seq, const Rational& x,
                                       ConvergenceMode mode, const TailSampling& sampling = {});

ConvergenceVerdict cauchy_verdict(const ParametricSpace& ps, const SequenceSpec& seq,
                                  const TailSampling& sampling = {});

/// The candidates, sorted and deduplicated, to which the sequence converges.
std::vector<Rational> limit_set(const ParametricSpace& ps, const SequenceSpec& seq,
                                const std::vector<Rational>& candidates, ConvergenceMode mode,
                                const TailSampling& sampling = {});

/// First letter: convergence required of the images; second letter: the
/// convergence assumed of the arguments, read off the ball conditions
///   uu  x in B(a,d)                 => f(x) in B(f(a),e)
///   su  x in B(a,d), a in B(x,d)    => f(x) in B(f(a),e)
///   us  x in B(a,d)                 => f(x) in B(f(a),e), f(a) in B(f(x),e)
///   ss  x in B(a,d), a in B(x,d)    => f(x) in B(f(a),e), f(a) in B(f(x),e)
enum class ContinuityMode { UU, SU, US, SS };

std::string_view to_string(ContinuityMode mode);
ContinuityMode parse_continuity_mode(std::string_view text);

struct ContinuityQuery {
  FiniteSpace source;
  FiniteSpace target;
  std::map<std::string, std::string> map_f;
  std::string point_a;
  ContinuityMode mode = ContinuityMode::UU;
};

struct DeltaFailure {
  Rational delta;
  std::string point;  // admitted by the hypothesis at this delta, image outside the ball
};

struct ContinuityWitness {
  Rational epsilon;
  std::vector<DeltaFailure> failures;  // one per representative delta
};

struct ContinuityResult {
  bool holds = false;
  std::optional<ContinuityWitness> witness;
};

/// Exact decision using p-balls on both sides. Radii range over the
/// representative radii of each space, which realise every distinct ball.
/// The witness reports the smallest failing epsilon.
ContinuityResult continuity_check(const ContinuityQuery& q);

}  // namespace gmetric
