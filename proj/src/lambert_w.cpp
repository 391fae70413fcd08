#include "lognash/lambert_w.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lognash/errors.hpp"

namespace lognash {

namespace {

constexpr double kE = 2.718281828459045;

// Branch-point series in p = sqrt(2*(e*x + 1)):
// w = -1 + p - p^2/3 + 11 p^3/72 - 43 p^4/540 + 769 p^5/17280 - 221 p^6/8505.
double branch_series(double p) {
  const double c2 = -1.0 / 3.0;
  const double c3 = 11.0 / 72.0;
  const double c4 = -43.0 / 540.0;
  const double c5 = 769.0 / 17280.0;
  const double c6 = -221.0 / 8505.0;
  return -1.0 + p * (1.0 + p * (c2 + p * (c3 + p * (c4 + p * (c5 + p * c6)))));
}

double initial_guess(double x) {
  if (x < -0.25) {
    // e*x + 1 can round a hair below zero right at the branch point.
    const double q = std::max(0.0, 2.0 * (kE * x + 1.0));
    return branch_series(std::sqrt(q));
  }
  if (x < 0.25) {
    // Taylor series of W0 around 0.
    return x * (1.0 + x * (-1.0 + x * (1.5 - 8.0 / 3.0 * x)));
  }
  if (x < kE) {
    // Secant through (1/4, W(1/4)) and (e, 1); good enough to seed Halley.
    const double w_quarter = 0.20388835470224018;
    return w_quarter + (x - 0.25) * (1.0 - w_quarter) / (kE - 0.25);
  }
  const double l = std::log(x);
  const double ll = std::log(l);
  return l - ll + ll / l;
}

}  // namespace

WResult lambert_w0(double x) {
  static const double kBranchPoint = -std::exp(-1.0);
  if (!(x >= kBranchPoint)) {
    throw DomainError("lambert_w0: x = " + std::to_string(x) +
                      " lies below the branch point -1/e");
  }

  const double tol = 1e-13 * std::max(1.0, std::abs(x));

  if (x == 0.0) return WResult{0.0, 0.0, 0};
  if (x == kBranchPoint) {
    return WResult{-1.0, std::abs(-std::exp(-1.0) - x), 0};
  }

  constexpr int kMaxIter = 50;

  if (x > 1e15) {
    // w e^w overflows long before x does; iterate on the log form
    // g(w) = ln w + w - ln x instead. Newton: dg/dw = (w+1)/w.
    const double lx = std::log(x);
    double w = initial_guess(x);
    int iter = 0;
    for (; iter < kMaxIter; ++iter) {
      const double g = std::log(w) + w - lx;
      const double step = g * w / (w + 1.0);
      w -= step;
      if (std::abs(step) <= 1e-16 * w) break;
    }
    const double g = std::log(w) + w - lx;
    return WResult{w, std::abs(std::expm1(g)) * x, iter};
  }

  double w = initial_guess(x);
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= tol) return WResult{w, std::abs(f), iter - 1};
    // Halley step for f(w) = w e^w - x; f' = e^w (w+1), f'' = e^w (w+2).
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    const double w_next = w - step;
    // An undershoot below w = -1 would leave the principal branch; pull the
    // iterate back to the midpoint instead.
    w = (w_next < -1.0) ? (w - 1.0) * 0.5 : w_next;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) {
      return WResult{w, std::abs(w * std::exp(w) - x), iter};
    }
  }
  return WResult{w, std::abs(w * std::exp(w) - x), kMaxIter};
}

}  // namespace lognash
