#ifndef LOGNASH_LAMBERT_W_HPP
#define LOGNASH_LAMBERT_W_HPP

namespace lognash {

/// Result of a principal-branch Lambert-W evaluation.
struct WResult {
  double value = 0.0;     // w with w*exp(w) = x
  double residual = 0.0;  // |w*exp(w) - x|
  int iterations = 0;     // Halley steps taken
};

/// Principal branch W0 of the Lambert-W (product log) function: the inverse
/// of w -> w*exp(w) on [-1, inf).
///
/// Halley's iteration from a piecewise initial guess: a branch-point series
/// in p = sqrt(2*(e*x + 1)) near x = -1/e, a Taylor polynomial for small |x|,
/// and the log - log log asymptote for large x. The residual satisfies
/// |w*exp(w) - x| <= 1e-12 * max(1, |x|).
///
/// Throws DomainError for x < -1/e (below the branch point).
WResult lambert_w0(double x);

}  // namespace lognash

#endif  // LOGNASH_LAMBERT_W_HPP
