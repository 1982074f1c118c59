#include "gmetric/convergence.hpp"

#include "gmetric/topology.hpp"

#include <algorithm>
#include <cctype>

namespace gmetric {

Rational eval_parametric(const ParametricSpace& ps, const Rational& x, const Rational& y) {
  if (x < 0 || y < 0) {
    throw Error(Errc::NegativeCarrierValue, "max family is defined on nonnegative values only");
  }
  switch (ps.family) {
    case ParametricFamily::MaxNonneg: return x < y ? y : x;
  }
  return x;
}

Rational SequenceSpec::at(std::uint64_t n) const {
  if (n == 0) throw Error(Errc::InvalidArgument, "sequences are indexed from n = 1");
  if (n <= prefix.size()) return prefix[n - 1];
  const Integer idx(n);
  switch (rule) {
    case SequenceRule::Constant: return c;
    case SequenceRule::Harmonic: return c + a / Rational(idx);
    case SequenceRule::InverseSquare: return c + a / Rational(idx * idx);
  }
  return c;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

std::string_view unparen(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

SequenceSpec SequenceSpec::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(Errc::UsageError, "empty sequence");

  // Split into signed terms at top-level '+' / '-' that are not exponent signs.
  std::vector<std::pair<bool, std::string>> terms;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    const char ch = i < s.size() ? s[i] : '\0';
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    const bool split = i == s.size() ||
                       (depth == 0 && (ch == '+' || ch == '-') && i > start &&
                        s[i - 1] != 'e' && s[i - 1] != 'E' && s[i - 1] != '/' && s[i - 1] != '^');
    if (split) {
      if (i == start) throw Error(Errc::UsageError, "malformed sequence '" + std::string(text) + "'");
      terms.emplace_back(negative, s.substr(start, i - start));
      negative = ch == '-';
      start = i + 1;
    }
  }

  SequenceSpec spec;
  bool have_n_term = false;
  for (const auto& [neg, term] : terms) {
    std::string_view t = term;
    std::optional<SequenceRule> rule;
    if (t.size() >= 4 && t.substr(t.size() - 4) == "/n^2") {
      rule = SequenceRule::InverseSquare;
      t.remove_suffix(4);
    } else if (t.size() >= 2 && t.substr(t.size() - 2) == "/n") {
      rule = SequenceRule::Harmonic;
      t.remove_suffix(2);
    }
    if (t.find('n') != std::string_view::npos) {
      throw Error(Errc::UsageError, "unsupported sequence term '" + term + "'");
    }
    Rational value;
    try {
      value = parse_rational(unparen(t));
    } catch (const Error&) {
      throw Error(Errc::UsageError, "unsupported sequence term '" + term + "'");
    }
    if (neg) value = -value;
    if (rule) {
      if (have_n_term) throw Error(Errc::UsageError, "at most one n-dependent term is supported");
      have_n_term = true;
      spec.rule = *rule;
      spec.a = value;
    } else {
      spec.c += value;
    }
  }
  return spec;
}

std::string SequenceSpec::describe() const {
  std::string out = to_string(c);
  switch (rule) {
    case SequenceRule::Constant: break;
    case SequenceRule::Harmonic: out += " + (" + to_string(a) + ")/n"; break;
    case SequenceRule::InverseSquare: out += " + (" + to_string(a) + ")/n^2"; break;
  }
  if (!prefix.empty()) out += " [prefix of " + std::to_string(prefix.size()) + "]";
  return out;
}

std::string_view to_string(ConvergenceMode mode) {
  switch (mode) {
    case ConvergenceMode::Usual: return "usual";
    case ConvergenceMode::Symmetric: return "symmetric";
    case ConvergenceMode::Cauchy: return "cauchy";
  }
  return "?";
}

ConvergenceMode parse_convergence_mode(std::string_view text) {
  if (text == "usual") return ConvergenceMode::Usual;
  if (text == "symmetric") return ConvergenceMode::Symmetric;
  if (text == "cauchy") return ConvergenceMode::Cauchy;
  throw Error(Errc::UsageError, "unknown convergence mode '" + std::string(text) + "'");
}

std::vector<std::uint64_t> sample_indices(std::uint64_t tail_n) {
  return {tail_n, 2 * tail_n, 4 * tail_n, 8 * tail_n};
}

namespace {

void check_sampling(const TailSampling& sampling) {
  if (sampling.tail_n < 1) throw Error(Errc::InvalidArgument, "tail index must be at least 1");
  if (sampling.tail_n > (std::uint64_t{1} << 58)) throw Error(Errc::InvalidArgument, "tail index too large");
  if (sampling.tolerance <= 0) throw Error(Errc::InvalidArgument, "tolerance must be positive");
}

Rational term(const SequenceSpec& seq, std::uint64_t n) {
  Rational v = seq.at(n);
  if (v < 0) {
    throw Error(Errc::CarrierViolation,
                "x_" + std::to_string(n) + " = " + to_string(v) + " lies outside the carrier");
  }
  return v;
}

Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace

ConvergenceVerdict convergence_verdict(const ParametricSpace& ps, const SequenceSpec& seq, const Rational& x,
                                       ConvergenceMode mode, const TailSampling& sampling) {
  if (mode == ConvergenceMode::Cauchy) return cauchy_verdict(ps, seq, sampling);
  check_sampling(sampling);
  if (x < 0) throw Error(Errc::CarrierViolation, "limit candidate " + to_string(x) + " lies outside the carrier");

  ConvergenceVerdict v{mode, true, sampling.tail_n, sampling.tolerance, {}};
  const Rational pxx = eval_parametric(ps, x, x);
  std::vector<Rational> self_gaps;
  for (std::uint64_t n : sample_indices(sampling.tail_n)) {
    const Rational xn = term(seq, n);
    Rational gap = abs(eval_parametric(ps, xn, x) - pxx);
    if (gap >= sampling.tolerance) v.holds = false;
    v.residuals.push_back(std::move(gap));
    if (mode == ConvergenceMode::Symmetric) {
      Rational self_gap = abs(eval_parametric(ps, xn, xn) - pxx);
      if (self_gap >= sampling.tolerance) v.holds = false;
      self_gaps.push_back(std::move(self_gap));
    }
  }
  for (auto& g : self_gaps) v.residuals.push_back(std::move(g));
  return v;
}

ConvergenceVerdict cauchy_verdict(const ParametricSpace& ps, const SequenceSpec& seq, const TailSampling& sampling) {
  check_sampling(sampling);
  std::vector<Rational> xs;
  for (std::uint64_t n : sample_indices(sampling.tail_n)) xs.push_back(term(seq, n));
  std::vector<Rational> values;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i; j < xs.size(); ++j) values.push_back(eval_parametric(ps, xs[i], xs[j]));
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  ConvergenceVerdict v{ConvergenceMode::Cauchy, *hi - *lo < sampling.tolerance, sampling.tail_n,
                       sampling.tolerance, {}};
  const Rational floor = *lo;
  for (const auto& value : values) v.residuals.push_back(value - floor);
  return v;
}

std::vector<Rational> limit_set(const ParametricSpace& ps, const SequenceSpec& seq,
                                const std::vector<Rational>& candidates, ConvergenceMode mode,
                                const TailSampling& sampling) {
  if (mode == ConvergenceMode::Cauchy) throw Error(Errc::InvalidArgument, "limit sets need usual or symmetric mode");
  std::vector<Rational> out;
  for (const auto& x : candidates) {
    if (convergence_verdict(ps, seq, x, mode, sampling).holds) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view to_string(ContinuityMode mode) {
  switch (mode) {
    case ContinuityMode::UU: return "uu";
    case ContinuityMode::SU: return "su";
    case ContinuityMode::US: return "us";
    case ContinuityMode::SS: return "ss";
  }
  return "?";
}

ContinuityMode parse_continuity_mode(std::string_view text) {
  if (text == "uu") return ContinuityMode::UU;
  if (text == "su") return ContinuityMode::SU;
  if (text == "us") return ContinuityMode::US;
  if (text == "ss") return ContinuityMode::SS;
  throw Error(Errc::UsageError, "unknown continuity mode '" + std::string(text) + "'");
}

ContinuityResult continuity_check(const ContinuityQuery& q) {
  const FiniteSpace& X = q.source;
  const FiniteSpace& Y = q.target;

  std::vector<PointId> f(X.size());
  for (PointId x = 0; x < X.size(); ++x) {
    auto it = q.map_f.find(X.label(x));
    if (it == q.map_f.end()) throw Error(Errc::NonTotalMap, "map has no image for '" + X.label(x) + "'");
    f[x] = Y.index_of(it->second);
  }
  for (const auto& [from, to] : q.map_f) X.index_of(from);
  const PointId a = X.index_of(q.point_a);

  const bool symmetric_hypothesis = q.mode == ContinuityMode::SU || q.mode == ContinuityMode::SS;
  const bool symmetric_conclusion = q.mode == ContinuityMode::US || q.mode == ContinuityMode::SS;

  auto admitted = [&](PointId x, const Rational& delta) {
    if (!(ball_gap(X, a, x, BallKind::POpen) < delta)) return false;
    return !symmetric_hypothesis || ball_gap(X, x, a, BallKind::POpen) < delta;
  };
  auto lands = [&](PointId x, const Rational& eps) {
    if (!(ball_gap(Y, f[a], f[x], BallKind::POpen) < eps)) return false;
    return !symmetric_conclusion || ball_gap(Y, f[x], f[a], BallKind::POpen) < eps;
  };

  const auto deltas = representative_radii(X, BallKind::POpen);
  for (const Rational& eps : representative_radii(Y, BallKind::POpen)) {
    ContinuityWitness witness{eps, {}};
    bool some_delta_works = false;
    for (const Rational& delta : deltas) {
      std::optional<PointId> offender;
      for (PointId x = 0; x < X.size() && !offender; ++x) {
        if (admitted(x, delta) && !lands(x, eps)) offender = x;
      }
      if (!offender) {
        some_delta_works = true;
        break;
      }
      witness.failures.push_back({delta, X.label(*offender)});
    }
    if (!some_delta_works) return {false, std::move(witness)};
  }
  return {true, std::nullopt};
}

}  // namespace gmetric
