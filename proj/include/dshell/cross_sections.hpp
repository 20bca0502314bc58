#pragma once

#include <optional>
#include <vector>

#include "dshell/parallel.hpp"
#include "dshell/poles.hpp"
#include "dshell/potential.hpp"

namespace dshell {

/// s-wave cross section sampled on an energy grid, with its pole approximants.
struct CrossSectionBundle {
  std::vector<double> grid;
  std::vector<double> exact;
  std::vector<double> laurent;
  std::vector<double> e_unitarized;
  std::vector<double> k_unitarized;
  std::optional<std::vector<double>> two_pole;
};

/// sigma(E) = (pi/k^2) |S(k) - 1|^2, k = sqrt(E).
double cross_section_exact(const PotentialSpec& spec, double energy);

/// Breit-Wigner form (pi/k^2) |r|^2 / ((E-E_R)^2 + (Gamma_R/2)^2) with the
/// energy-plane residue r of S at the pole.
double cross_section_laurent(const PotentialSpec& spec, const Pole& pole, double energy);

/// From S ~ (E - z*)/(E - z): (pi/k^2) Gamma_R^2 / ((E-E_R)^2 + (Gamma_R/2)^2).
double cross_section_e_unitarized(const Pole& pole, double energy);

/// From S ~ (k - k_R*)/(k - k_R) in the wave number:
/// (pi/k^2) (2 beta_R)^2 / ((k - alpha_R)^2 + beta_R^2).
double cross_section_k_unitarized(const Pole& pole, double energy);

/// 4 alpha^2 / ((k + alpha)^2 + beta^2), checked against the quotient of the
/// two unitarized forms. Throws Error(ToleranceNotMet) if they disagree by
/// more than 1e-12.
double unitarized_ratio(const Pole& pole, double energy);

/// Two-pole Mittag-Leffler form of sigma from explicit energy-plane poles and
/// residues.
double cross_section_two_pole(double energy, cplx z1, cplx r1, cplx z2, cplx r2);
double cross_section_two_pole(const PotentialSpec& spec, const Pole& first, const Pole& second, double energy);

/// All columns on the given grid; two_pole is filled when `second` is set.
CrossSectionBundle cross_section_bundle(const PotentialSpec& spec, const Pole& pole, const std::vector<double>& grid,
                                        const std::optional<Pole>& second = std::nullopt,
                                        Execution exec = kDefaultExecution);

}  // namespace dshell
