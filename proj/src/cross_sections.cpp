#include "dshell/cross_sections.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dshell/errors.hpp"
#include "dshell/scattering.hpp"

namespace dshell {

namespace {

void require_energy(double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    raise(ErrorKind::InvalidInput, "cross section needs finite E > 0, got " + std::to_string(energy));
  }
}

void require_resonance(const Pole& pole) {
  if (pole.kind != PoleKind::resonance) {
    raise(ErrorKind::InvalidInput, std::string("cross-section approximant needs a resonance, got ") +
                                       to_string(pole.kind));
  }
}

double lorentzian(const Pole& pole, double energy) {
  const double d = energy - pole.e_r;
  const double h = 0.5 * pole.gamma_r;
  return d * d + h * h;
}

}  // namespace

double cross_section_exact(const PotentialSpec& spec, double energy) {
  require_energy(energy);
  const double k = std::sqrt(energy);
  const cplx s = s_matrix(spec, cplx(k, 0.0));
  return std::numbers::pi / energy * std::norm(s - 1.0);
}

double cross_section_laurent(const PotentialSpec& spec, const Pole& pole, double energy) {
  require_energy(energy);
  require_resonance(pole);
  const cplx r = zeldovich_norm(spec, pole).residue_e;
  return std::numbers::pi / energy * std::norm(r) / lorentzian(pole, energy);
}

double cross_section_e_unitarized(const Pole& pole, double energy) {
  require_energy(energy);
  require_resonance(pole);
  return std::numbers::pi / energy * pole.gamma_r * pole.gamma_r / lorentzian(pole, energy);
}

double cross_section_k_unitarized(const Pole& pole, double energy) {
  require_energy(energy);
  require_resonance(pole);
  const double k = std::sqrt(energy);
  const double d = k - pole.alpha_r;
  const double b = pole.beta_r;
  return std::numbers::pi / energy * 4.0 * b * b / (d * d + b * b);
}

double unitarized_ratio(const Pole& pole, double energy) {
  const double quotient = cross_section_e_unitarized(pole, energy) / cross_section_k_unitarized(pole, energy);
  const double k = std::sqrt(energy);
  const double a = pole.alpha_r;
  const double b = pole.beta_r;
  const double s = k + a;
  const double ratio = 4.0 * a * a / (s * s + b * b);
  if (!(std::abs(ratio - quotient) <= 1e-12)) {
    raise(ErrorKind::ToleranceNotMet, "unitarized ratio identity violated at E = " + std::to_string(energy));
  }
  return ratio;
}

double cross_section_two_pole(double energy, cplx z1, cplx r1, cplx z2, cplx r2) {
  require_energy(energy);
  const cplx b1 = r1 / (energy - z1);
  const cplx b2 = r2 / (energy - z2);
  const double direct = std::norm(r1) / std::norm(energy - z1) + std::norm(r2) / std::norm(energy - z2);
  const double cross = 2.0 * (b1.real() * b2.real() + b1.imag() * b2.imag());
  return std::numbers::pi / energy * (direct + cross);
}

double cross_section_two_pole(const PotentialSpec& spec, const Pole& first, const Pole& second, double energy) {
  require_resonance(first);
  require_resonance(second);
  return cross_section_two_pole(energy, first.z, zeldovich_norm(spec, first).residue_e, second.z,
                                zeldovich_norm(spec, second).residue_e);
}

CrossSectionBundle cross_section_bundle(const PotentialSpec& spec, const Pole& pole, const std::vector<double>& grid,
                                        const std::optional<Pole>& second, Execution exec) {
  require_resonance(pole);
  if (second) require_resonance(*second);
  for (double e : grid) require_energy(e);

  const cplx r1 = zeldovich_norm(spec, pole).residue_e;
  const double r1_sq = std::norm(r1);
  CrossSectionBundle out;
  out.grid = grid;
  out.exact = map_grid(exec, grid, [&](double e) { return cross_section_exact(spec, e); });
  out.laurent = map_grid(exec, grid, [&](double e) {
    return std::numbers::pi / e * r1_sq / lorentzian(pole, e);
  });
  out.e_unitarized = map_grid(exec, grid, [&](double e) { return cross_section_e_unitarized(pole, e); });
  out.k_unitarized = map_grid(exec, grid, [&](double e) { return cross_section_k_unitarized(pole, e); });
  if (second) {
    const cplx r2 = zeldovich_norm(spec, *second).residue_e;
    const cplx z1 = pole.z;
    const cplx z2 = second->z;
    out.two_pole = map_grid(exec, grid, [&](double e) { return cross_section_two_pole(e, z1, r1, z2, r2); });
  }
  return out;
}

}  // namespace dshell
