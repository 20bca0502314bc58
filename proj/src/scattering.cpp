#include "dshell/scattering.hpp"

#include <cmath>
#include <numbers>

#include "dshell/errors.hpp"

namespace dshell {

namespace {

constexpr double kPoleHitTolerance = 1e-13;
constexpr double kDegenerateTolerance = 1e-13;

constexpr cplx kI{0.0, 1.0};

void require_positive_energy(double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    raise(ErrorKind::InvalidInput, "energy must be positive and finite");
  }
}

}  // namespace

JostPair jost(const PotentialSpec& spec, cplx k) {
  if (k == cplx(0.0, 0.0)) raise(ErrorKind::InvalidInput, "jost: k = 0");
  const double lambda = spec.lambda;
  const cplx two_ik = 2.0 * kI * k;
  const cplx inv4k = 1.0 / (4.0 * k);
  const cplx em = std::exp(-two_ik) - 1.0;
  const cplx ep = std::exp(two_ik) - 1.0;
  return {inv4k * (-two_ik + lambda * em), inv4k * (two_ik + lambda * ep)};
}

cplx s_matrix(const PotentialSpec& spec, cplx k) {
  const JostPair j = jost(spec, k);
  if (std::abs(j.j2) <= kPoleHitTolerance) {
    raise(ErrorKind::PoleHit, "s_matrix evaluated at a pole");
  }
  return -j.j1 / j.j2;
}

cplx jost2_derivative_on_pole(double lambda, cplx k) {
  return kI / (2.0 * k) * (1.0 + lambda * std::exp(2.0 * kI * k));
}

NormalizationData zeldovich_norm(const PotentialSpec& spec, const Pole& pole) {
  const cplx dj2 = jost2_derivative_on_pole(spec.lambda, pole.k);
  if (std::abs(dj2) < kDegenerateTolerance) {
    raise(ErrorKind::DegeneratePole, "zeldovich_norm: j2'(k_R) vanishes (double pole)");
  }
  const JostPair j = jost(spec, pole.k);
  NormalizationData out;
  out.residue_k = -j.j1 / dj2;
  out.n_r_squared = kI * out.residue_k;
  out.abs_n_r_squared = std::abs(out.n_r_squared);
  out.residue_e = 2.0 * pole.k * out.residue_k;
  return out;
}

cplx resonant_wavefunction(const PotentialSpec& spec, const Pole& pole, double r) {
  if (!(r >= 0.0)) raise(ErrorKind::InvalidInput, "resonant_wavefunction: r must be >= 0");
  const NormalizationData norm = zeldovich_norm(spec, pole);
  const cplx n_r = std::sqrt(norm.n_r_squared);
  if (r < 1.0) {
    return n_r * std::sin(pole.k * r) / jost(spec, pole.k).j1;
  }
  return n_r * std::exp(kI * pole.k * r);
}

double matrix_element_squared(const PotentialSpec& spec, const Pole& pole, double energy) {
  return ResonantState(spec, pole).matrix_element_squared(energy);
}

ResonantState::ResonantState(const PotentialSpec& spec, const Pole& pole)
    : spec_(spec), pole_(pole), norm_(zeldovich_norm(spec, pole)) {
  const double lambda = spec.lambda;
  m2_prefactor_ = lambda * lambda / std::numbers::pi * norm_.abs_n_r_squared * std::exp(2.0 * pole.beta_r);
  vertex_factor_ = lambda * std::numbers::inv_sqrtpi * std::sqrt(norm_.n_r_squared) * std::exp(kI * pole.k);
}

double ResonantState::matrix_element_squared(double energy) const {
  require_positive_energy(energy);
  const double k = std::sqrt(energy);
  const double s = std::sin(k);
  return m2_prefactor_ * s * s / k;
}

cplx ResonantState::matrix_element(double energy) const {
  require_positive_energy(energy);
  const double k = std::sqrt(energy);
  return vertex_factor_ * (std::sin(k) / std::sqrt(k));
}

double ResonantState::lorentzian_denominator(double energy) const {
  const double d = energy - pole_.e_r;
  const double h = 0.5 * pole_.gamma_r;
  return d * d + h * h;
}

}  // namespace dshell
