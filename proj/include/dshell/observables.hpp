#pragma once

#include <optional>
#include <vector>

#include "dshell/parallel.hpp"
#include "dshell/poles.hpp"
#include "dshell/potential.hpp"
#include "dshell/quadrature.hpp"
#include "dshell/scattering.hpp"

namespace dshell {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  Execution exec = kDefaultExecution;
};

/// Quadrature layout for integrands built from one pole: the Lorentzian peak
/// of a resonance, or for zero-width poles a peak of width |E_pole| at E_pole.
QuadratureRequest pole_quadrature_request(const Pole& pole, const QuadratureOptions& opts);

/// A quadrature value with its estimated error.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// dGamma_bar/dE = Gamma_R / ((E - E_R)^2 + (Gamma_R/2)^2) |<E|V|z_R>|^2.
double decay_width_differential(const ResonantState& state, double energy);
double decay_width_differential(const PotentialSpec& spec, const Pole& pole, double energy);

/// dGamma/dE = |<E|V|z>|^2 / ((E - E_R)^2 + (Gamma_R/2)^2); for zero-width
/// poles the Lorentzian degenerates to 1/(E - E_pole)^2.
double decay_constant_differential(const ResonantState& state, double energy);
double decay_constant_differential(const PotentialSpec& spec, const Pole& pole, double energy);

struct DecayWidth {
  double gamma_bar = 0.0;  ///< total decay width
  double c_value = 0.0;    ///< the integral C of Lorentzian times sin^2(k)/k
  double error = 0.0;      ///< error estimate on gamma_bar
};

/// Gamma_bar = 2 lambda^2 |N_R|^2 e^{2 beta_R} C. Zero for bound and
/// virtual poles. Throws Error(ToleranceNotMet) if the quadrature misses.
DecayWidth decay_width_total(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts = {});

/// Gamma = Gamma_bar / Gamma_R for resonances; direct quadrature of the
/// degenerate Lorentzian for bound and virtual poles.
Estimate decay_constant_total(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts = {});

struct SharpApproximation {
  double gamma_bar_sharp = 0.0;
  double gamma_sharp = 0.0;
};

/// Golden Rule of a resonant state: the Lorentzian replaced by a delta
/// function at E_R. Requires E_R > 0.
SharpApproximation golden_rule_sharp(const PotentialSpec& spec, const Pole& pole);

/// Right-hand side of the continuum second-order perturbation formula,
/// integral of Gamma_R / ((E_R - E)^2 + (Gamma_R/2)^2) |<E|V|z_R>|^2, assembled
/// directly from the matrix element (independently of C). If perturbation
/// theory held this would equal Gamma_R; it equals Gamma_bar.
Estimate perturbation_rhs(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts = {});

/// One row of a resonance table.
struct ObservablesRecord {
  double lambda = 0.0;
  PoleKind kind = PoleKind::resonance;
  int index = 0;
  int branch = 0;
  cplx k;
  cplx z;
  double gamma_r = 0.0;
  double gamma_bar = 0.0;
  double gamma = 0.0;
  std::optional<double> gamma_bar_sharp;  ///< resonances only
  std::optional<double> gamma_sharp;      ///< resonances only
  double c_value = 0.0;
  double quadrature_error = 0.0;

  bool operator==(const ObservablesRecord&) const = default;
};

ObservablesRecord compute_observables(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts = {});

/// Bound or virtual row (if any) followed by `count` resonance rows.
std::vector<ObservablesRecord> compute_table(const PotentialSpec& spec, int count, const QuadratureOptions& opts = {});

}  // namespace dshell
