#include "itercert/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace itercert {

namespace {

void require_probe(const SequenceProbe& probe) {
  if (!probe.generator) {
    throw Error(errc::domain_error, "sequence probe has no generator");
  }
  if (!(probe.horizon > probe.tail_window && probe.tail_window >= 2)) {
    throw Error(errc::domain_error, "probe needs horizon > tail_window >= 2");
  }
}

}  // namespace

RatioTestResult ratio_test(const SequenceProbe& probe) {
  require_probe(probe);

  // Scan for the first unusable term. A negative term violates the
  // positivity precondition outright; a zero or denormal value is treated as
  // gradual underflow of a positive sequence (ratios of denormals lose
  // precision) and truncates the probe just before it.
  std::size_t end = probe.horizon;  // exclusive end of the usable prefix
  for (std::size_t n = 0; n <= probe.horizon; ++n) {
    const double a = probe.generator(n);
    if (a < 0.0) {
      throw Error(errc::non_positive_term,
                  "negative term a(" + std::to_string(n) + ") in ratio test");
    }
    if (a < std::numeric_limits<double>::min()) {
      if (n <= probe.tail_window + 1) {
        throw Error(errc::non_positive_term,
                    "sequence vanished at n=" + std::to_string(n) +
                        " before a full ratio window");
      }
      end = n - 1;
      break;
    }
  }
  if (end < probe.tail_window + 1) {
    throw Error(errc::non_positive_term, "sequence too short for the ratio window");
  }

  // Ratios a_{n+1}/a_n for the last tail_window steps of the usable prefix.
  double sum = 0.0;
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < probe.tail_window; ++i) {
    const std::size_t n = end - probe.tail_window + i;
    const double r = probe.generator(n + 1) / probe.generator(n);
    sum += r;
    lo = (i == 0) ? r : std::min(lo, r);
    hi = (i == 0) ? r : std::max(hi, r);
  }
  RatioTestResult result;
  result.ratio_limit = sum / static_cast<double>(probe.tail_window);
  result.converges_to_zero =
      result.ratio_limit < 1.0 - ratio_margin && (hi - lo) < ratio_stability_tol;
  return result;
}

double powk_geometric_term(unsigned long k, double x, unsigned long m,
                           bool allow_any_x) {
  if (!allow_any_x && !(x > 0.0 && x < 1.0)) {
    throw Error(errc::domain_error, "powk term needs x in (0,1)");
  }
  const double mp1 = static_cast<double>(m) + 1.0;
  return std::pow(mp1, static_cast<double>(k)) * std::pow(x, mp1);
}

double binom_float(unsigned long m, unsigned long k) {
  if (k > m) {
    throw Error(errc::domain_error, "binomial needs k <= m");
  }
  if (k > m - k) k = m - k;
  double acc = 1.0;
  for (unsigned long i = 1; i <= k; ++i) {
    acc *= static_cast<double>(m - k + i) / static_cast<double>(i);
  }
  return acc;
}

bool binom_bound_check(unsigned long m, unsigned long k) {
  if (k > m) {
    throw Error(errc::domain_error, "binomial bound needs k <= m");
  }
  // m^k/k! accumulated as a product of m/i factors to stay inside double
  // range for m, k up to a few hundred.
  double bound = 1.0;
  for (unsigned long i = 1; i <= k; ++i) {
    bound *= static_cast<double>(m) / static_cast<double>(i);
  }
  return binom_float(m, k) <= bound + 1e-9 * bound;
}

TailEstimate tail_limit_estimate(const SequenceProbe& probe) {
  require_probe(probe);
  double sum = 0.0;
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < probe.tail_window; ++i) {
    const std::size_t n = probe.horizon - probe.tail_window + 1 + i;
    const double a = probe.generator(n);
    sum += a;
    lo = (i == 0) ? a : std::min(lo, a);
    hi = (i == 0) ? a : std::max(hi, a);
  }
  TailEstimate est;
  est.estimate = sum / static_cast<double>(probe.tail_window);
  est.converged = (hi - lo) < limit_stability_tol * (1.0 + std::abs(est.estimate));
  return est;
}

}  // namespace itercert
