#include "dshell/lambert_w.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "dshell/errors.hpp"

namespace dshell {

namespace {

constexpr double kInvE = 0.36787944117144232159552377016146;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Inside this radius around -1/e the truncated series is the answer.
constexpr double kSeriesRadius = 1e-4;
// Inside this radius the series is used as a Halley seed.
constexpr double kSeriesSeedRadius = 0.3;

constexpr int kMaxIterations = 64;
constexpr double kStepTolerance = 1e-15;

// Series of W around the branch point in p = +-sqrt(2(ez + 1)).
constexpr std::array<double, 10> kBranchPointSeries = {
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
    680863.0 / 43545600.0,
    -1963.0 / 204120.0,
    226287557.0 / 37623398400.0,
};

cplx branch_point_series(cplx p) {
  cplx acc = 0.0;
  for (auto it = kBranchPointSeries.rbegin(); it != kBranchPointSeries.rend(); ++it) {
    acc = acc * p + *it;
  }
  return acc;
}

// Which sign of p (if any) the branch takes near -1/e. W_0 owns +p everywhere;
// the -p sheet belongs to W_{-1} above the real axis (closure included) and to
// W_1 below it.
int branch_point_sign(int n, cplx z) {
  if (n == 0) return 1;
  if (n == -1 && z.imag() >= 0.0) return -1;
  if (n == 1 && z.imag() < 0.0) return -1;
  return 0;
}

bool in_pade_region(cplx z) {
  return z.real() > -1.0 && z.real() < 1.5 && std::abs(z.imag()) < 1.0 &&
         -2.5 * std::abs(z.imag()) - 0.2 < z.real();
}

cplx asymptotic_seed(int n, cplx z) {
  const cplx l1 = std::log(z) + cplx(0.0, kTwoPi * n);
  const cplx l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

cplx initial_guess(int n, cplx z) {
  const double x = z.real();
  if (n == 0 && in_pade_region(z)) {
    return z * (3.0 + z * (6.0 + z)) / (3.0 + z * (9.0 + 5.0 * z));
  }
  if (n == -1 && z.imag() == 0.0 && x < 0.0 && x > -kInvE) {
    // Real segment of W_{-1}; a complex seed could land on W_{-2}.
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    return l1 - l2 + l2 / l1;
  }
  return asymptotic_seed(n, z);
}

// Newton on w + log w = log z + 2 pi i n, used when e^w would overflow.
cplx refine_logarithmic(int n, cplx z, cplx w) {
  const cplx target = std::log(z) + cplx(0.0, kTwoPi * n);
  for (int it = 0; it < kMaxIterations; ++it) {
    const cplx g = w + std::log(w) - target;
    const cplx dw = g / (1.0 + 1.0 / w);
    w -= dw;
    if (std::abs(dw) <= kStepTolerance * std::abs(w)) return w;
  }
  return w;
}

cplx refine_halley(cplx z, cplx w, bool& converged) {
  converged = false;
  for (int it = 0; it < kMaxIterations; ++it) {
    const cplx ew = std::exp(w);
    const cplx f = w * ew - z;
    const cplx wp1 = w + 1.0;
    const cplx denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const cplx dw = f / denom;
    if (!std::isfinite(dw.real()) || !std::isfinite(dw.imag())) return w;
    w -= dw;
    if (std::abs(dw) <= kStepTolerance * std::abs(w)) {
      converged = true;
      return w;
    }
  }
  return w;
}

}  // namespace

double lambert_w_residual(cplx w, cplx z) { return std::abs(w * std::exp(w) - z); }

cplx lambert_w(WBranch branch, cplx z) {
  const int n = branch.n;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    raise(ErrorKind::InvalidInput, "lambert_w: argument is not finite");
  }
  if (z == cplx(0.0, 0.0)) {
    if (n == 0) return 0.0;
    raise(ErrorKind::InvalidInput, "lambert_w: z = 0 is singular on branch " + std::to_string(n));
  }

  const double dist_branch_point = std::abs(z + kInvE);
  const int sign = branch_point_sign(n, z);
  cplx w;
  if (sign != 0 && dist_branch_point < kSeriesSeedRadius) {
    // The series handles the -1/e endpoint of the real segment exactly.
    const cplx arg = 2.0 * (std::numbers::e * z + 1.0);
    const cplx p = (z.imag() == 0.0 && arg.real() >= 0.0)
                       ? cplx(std::sqrt(std::max(arg.real(), 0.0)), 0.0)
                       : std::sqrt(arg);
    w = branch_point_series(static_cast<double>(sign) * p);
    if (dist_branch_point < kSeriesRadius) return w;
  } else {
    w = initial_guess(n, z);
  }

  if (w.real() > 600.0) {
    w = refine_logarithmic(n, z, w);
    return w;
  }

  bool converged = false;
  w = refine_halley(z, w, converged);
  if (!converged) {
    // A stalled step can still sit on the root to round-off.
    const double scale = std::max(1.0, std::abs(z));
    if (!(lambert_w_residual(w, z) <= 1e-13 * scale)) {
      raise(ErrorKind::NonConvergence,
            "lambert_w: Halley iteration did not converge on branch " + std::to_string(n));
    }
  }
  return w;
}

}  // namespace dshell
