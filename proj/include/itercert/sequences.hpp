#pragma once

#include <cstddef>
#include <functional>

#include "itercert/errors.hpp"

namespace itercert {

// Guard bands for the sampled limit verdicts: the underlying statements are
// exact limits, so finite probes need explicit slack.
inline constexpr double ratio_margin = 0.02;
inline constexpr double ratio_stability_tol = 1e-3;
inline constexpr double limit_stability_tol = 1e-9;

// Sampled stand-in for an epsilon-N limit claim: a scalar sequence, the
// number of terms to look at, and the width of the trailing window used for
// the verdict.
struct SequenceProbe {
  std::function<double(std::size_t)> generator;
  std::size_t horizon = 5000;
  std::size_t tail_window = 100;
};

struct RatioTestResult {
  bool converges_to_zero = false;
  double ratio_limit = 0.0;  // estimated L, reported for both verdicts
};

// Ratio test over the trailing window: estimates L = lim a_{n+1}/a_n and
// returns a ConvergesToZero verdict when L < 1 - ratio_margin and the tail
// ratios are stable. Positive sequences that underflow to exact zero inside
// the horizon are probed on their last all-positive stretch instead.
RatioTestResult ratio_test(const SequenceProbe& probe);

// (m+1)^k * x^(m+1). The limit claim needs x in (0,1); raw evaluation outside
// that interval is allowed only when requested.
double powk_geometric_term(unsigned long k, double x, unsigned long m,
                           bool allow_any_x = false);

// C(m,k) via the multiplicative formula, in floating point.
double binom_float(unsigned long m, unsigned long k);

// C(m,k) <= m^k/k!, with a 1e-9 relative slack on the right-hand side.
bool binom_bound_check(unsigned long m, unsigned long k);

struct TailEstimate {
  double estimate = 0.0;
  bool converged = false;
};

// Mean of the last tail_window samples; converged when the window variation
// is below limit_stability_tol relative to 1 + |estimate|.
TailEstimate tail_limit_estimate(const SequenceProbe& probe);

}  // namespace itercert
