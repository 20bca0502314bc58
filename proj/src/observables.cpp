#include "dshell/observables.hpp"

#include <cmath>
#include <numbers>

#include "dshell/errors.hpp"

namespace dshell {

namespace {

void require_kind(const Pole& pole, bool allow_zero_width, const char* what) {
  const bool ok = pole.kind == PoleKind::resonance ||
                  (allow_zero_width && (pole.kind == PoleKind::bound || pole.kind == PoleKind::virtual_state));
  if (!ok) raise(ErrorKind::InvalidInput, std::string(what) + ": unsupported pole kind " + to_string(pole.kind));
}

Estimate checked(const QuadratureResult& r, const char* what) {
  if (!r.converged) {
    raise(ErrorKind::ToleranceNotMet, std::string(what) + ": quadrature missed tolerance (value " +
                                          std::to_string(r.value) + ", error " + std::to_string(r.error_estimate) +
                                          ")");
  }
  return {r.value, r.error_estimate};
}

}  // namespace

QuadratureRequest pole_quadrature_request(const Pole& pole, const QuadratureOptions& opts) {
  QuadratureRequest req;
  if (pole.gamma_r > 0.0) {
    req.peak_center = pole.e_r;
    req.peak_halfwidth = 0.5 * pole.gamma_r;
  } else {
    req.peak_center = pole.e_r;
    req.peak_halfwidth = std::max(std::abs(pole.e_r), 1e-12);
  }
  req.oscillation_wavenumber = std::numbers::pi;
  req.rel_tol = opts.rel_tol;
  req.abs_tol = opts.abs_tol;
  req.exec = opts.exec;
  return req;
}

double decay_width_differential(const ResonantState& state, double energy) {
  return state.pole().gamma_r / state.lorentzian_denominator(energy) * state.matrix_element_squared(energy);
}

double decay_width_differential(const PotentialSpec& spec, const Pole& pole, double energy) {
  require_kind(pole, false, "decay_width_differential");
  return decay_width_differential(ResonantState(spec, pole), energy);
}

double decay_constant_differential(const ResonantState& state, double energy) {
  return state.matrix_element_squared(energy) / state.lorentzian_denominator(energy);
}

double decay_constant_differential(const PotentialSpec& spec, const Pole& pole, double energy) {
  require_kind(pole, true, "decay_constant_differential");
  return decay_constant_differential(ResonantState(spec, pole), energy);
}

DecayWidth decay_width_total(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts) {
  require_kind(pole, true, "decay_width_total");
  if (pole.kind != PoleKind::resonance) return {};

  const double half = 0.5 * pole.gamma_r;
  const double e_r = pole.e_r;
  const Integrand c_integrand = [half, e_r](double energy) {
    const double k = std::sqrt(energy);
    const double s = std::sin(k);
    const double d = energy - e_r;
    return std::numbers::inv_pi * half / (d * d + half * half) * s * s / k;
  };
  const Estimate c = checked(integrate_semi_infinite(c_integrand, pole_quadrature_request(pole, opts)),
                             "decay_width_total");

  const NormalizationData norm = zeldovich_norm(spec, pole);
  const double prefactor = 2.0 * spec.lambda * spec.lambda * norm.abs_n_r_squared * std::exp(2.0 * pole.beta_r);
  return {prefactor * c.value, c.value, prefactor * c.error};
}

Estimate decay_constant_total(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts) {
  require_kind(pole, true, "decay_constant_total");
  if (pole.kind == PoleKind::resonance) {
    const DecayWidth w = decay_width_total(spec, pole, opts);
    return {w.gamma_bar / pole.gamma_r, w.error / pole.gamma_r};
  }
  const ResonantState state(spec, pole);
  const Integrand f = [&state](double energy) { return decay_constant_differential(state, energy); };
  return checked(integrate_semi_infinite(f, pole_quadrature_request(pole, opts)), "decay_constant_total");
}

SharpApproximation golden_rule_sharp(const PotentialSpec& spec, const Pole& pole) {
  require_kind(pole, false, "golden_rule_sharp");
  if (!(pole.e_r > 0.0)) {
    raise(ErrorKind::InvalidInput, "golden_rule_sharp: needs E_R > 0, got " + std::to_string(pole.e_r));
  }
  const ResonantState state(spec, pole);
  const double gamma_bar_sharp = 2.0 * std::numbers::pi * state.matrix_element_squared(pole.e_r);
  return {gamma_bar_sharp, gamma_bar_sharp / pole.gamma_r};
}

Estimate perturbation_rhs(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts) {
  require_kind(pole, false, "perturbation_rhs");
  const ResonantState state(spec, pole);
  const double gamma_r = pole.gamma_r;
  const double e_r = pole.e_r;
  const Integrand f = [&state, gamma_r, e_r](double energy) {
    const double d = e_r - energy;
    return gamma_r / (d * d + 0.25 * gamma_r * gamma_r) * state.matrix_element_squared(energy);
  };
  return checked(integrate_semi_infinite(f, pole_quadrature_request(pole, opts)), "perturbation_rhs");
}

ObservablesRecord compute_observables(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts) {
  require_kind(pole, true, "compute_observables");
  ObservablesRecord row;
  row.lambda = spec.lambda;
  row.kind = pole.kind;
  row.index = pole.index;
  row.branch = pole.branch;
  row.k = pole.k;
  row.z = pole.z;
  row.gamma_r = pole.gamma_r;
  if (pole.kind == PoleKind::resonance) {
    const DecayWidth w = decay_width_total(spec, pole, opts);
    row.gamma_bar = w.gamma_bar;
    row.gamma = w.gamma_bar / pole.gamma_r;
    row.c_value = w.c_value;
    row.quadrature_error = w.error;
    if (pole.e_r > 0.0) {
      const SharpApproximation sharp = golden_rule_sharp(spec, pole);
      row.gamma_bar_sharp = sharp.gamma_bar_sharp;
      row.gamma_sharp = sharp.gamma_sharp;
    }
  } else {
    const Estimate g = decay_constant_total(spec, pole, opts);
    row.gamma = g.value;
    row.quadrature_error = g.error;
  }
  return row;
}

std::vector<ObservablesRecord> compute_table(const PotentialSpec& spec, int count, const QuadratureOptions& opts) {
  std::vector<ObservablesRecord> rows;
  for (const Pole& pole : enumerate_poles(spec, count)) rows.push_back(compute_observables(spec, pole, opts));
  return rows;
}

}  // namespace dshell
