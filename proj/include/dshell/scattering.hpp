#pragma once

#include "dshell/lambert_w.hpp"
#include "dshell/poles.hpp"
#include "dshell/potential.hpp"

namespace dshell {

/// Coefficients of the outgoing (j1) and incoming (j2) waves outside the shell.
struct JostPair {
  cplx j1;
  cplx j2;
};

/// Jost functions at complex wave number k (model units). k = 0 is rejected.
JostPair jost(const PotentialSpec& spec, cplx k);

/// S(k) = -j1/j2. Throws Error(PoleHit) when |j2| <= 1e-13.
cplx s_matrix(const PotentialSpec& spec, cplx k);

/// Closed form of dj2/dk at a zero of j2: (i / 2k)(1 + lambda e^{2ik}).
cplx jost2_derivative_on_pole(double lambda, cplx k);

/// Zeldovich normalization and the S-matrix residues at one pole.
struct NormalizationData {
  cplx n_r_squared;        ///< N_R^2 = i res_k S
  double abs_n_r_squared;  ///< |N_R|^2
  cplx residue_k;          ///< residue of S in the k plane
  cplx residue_e;          ///< residue of S in the E plane, 2 k_R residue_k
};

NormalizationData zeldovich_norm(const PotentialSpec& spec, const Pole& pole);

/// u(r; z_R) with N_R taken as the principal square root of N_R^2.
cplx resonant_wavefunction(const PotentialSpec& spec, const Pole& pole, double r);

/// |<E|V|z_R>|^2 = (lambda^2/pi) sin^2(k)/k |N_R|^2 e^{2 beta_R}, k = sqrt(E).
double matrix_element_squared(const PotentialSpec& spec, const Pole& pole, double energy);

/// A pole with its normalization and matrix-element prefactor cached, for
/// evaluating energy-dependent quantities many times.
class ResonantState {
public:
  ResonantState(const PotentialSpec& spec, const Pole& pole);

  const PotentialSpec& spec() const { return spec_; }
  const Pole& pole() const { return pole_; }
  const NormalizationData& norm() const { return norm_; }

  /// |<E|V|z>|^2 for E > 0.
  double matrix_element_squared(double energy) const;

  /// <E|V|z> = g chi(a;E) u(a;z) with the real scattering factor
  /// chi(a;E) = pi^{-1/2} E^{-1/4} sin(sqrt(E)); the phase comes from
  /// u(a;z) = N_R e^{i k_R}.
  cplx matrix_element(double energy) const;

  /// (E - E_R)^2 + (Gamma_R/2)^2.
  double lorentzian_denominator(double energy) const;

private:
  PotentialSpec spec_;
  Pole pole_;
  NormalizationData norm_;
  double m2_prefactor_;      // lambda^2/pi |N_R|^2 e^{2 beta_R}
  cplx vertex_factor_;       // lambda pi^{-1/2} N_R e^{i k_R}
};

}  // namespace dshell
