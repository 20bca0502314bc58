#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "dshell/parallel.hpp"

namespace dshell {

/// A Lorentzian-like feature of the integrand that deserves panel edges.
struct Peak {
  double center = 0.0;
  double halfwidth = 1.0;
};

/// Layout hints and tolerances for integrate_semi_infinite.
///
/// The integrand is assumed to combine peaks in E with a sin^2(k a)
/// modulation, k = sqrt(E), whose zeros are spaced by `oscillation_wavenumber`
/// in k.
struct QuadratureRequest {
  double peak_center = 0.0;
  double peak_halfwidth = 1.0;
  double oscillation_wavenumber = std::numbers::pi;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  std::vector<Peak> extra_peaks;
  Execution exec = kDefaultExecution;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;  ///< false: error_estimate exceeds the requested tolerance
  std::size_t evaluations = 0;
  std::size_t panels = 0;
};

using Integrand = std::function<double(double)>;

/// Integral of f over (0, inf).
///
/// Works in k = sqrt(E) so the E^{1/2} threshold behaviour becomes smooth.
/// Panel edges sit on the sin^2 zero lattice and at E_R + s*halfwidth for
/// s in {0, +-1, +-2, ... , +-32}; beyond the energy where the peak envelope
/// drops below abs_tol of its maximum the tail is mapped onto [0, 1) by
/// k = k_cut / (1 - t). Each panel gets a 21-point Gauss-Kronrod rule and the
/// worst panel is bisected until the summed error estimate is below
/// max(rel_tol |value|, abs_tol). Panels are evaluated in parallel on the
/// first pass; f must be safe to call concurrently.
///
/// Does not throw on a missed tolerance; check `converged`.
QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureRequest& req);

}  // namespace dshell
