#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "dshell/observables.hpp"
#include "dshell/scattering.hpp"

namespace dshell {

/// Sampled decay energy spectrum with its companion curves.
struct SpectrumCurve {
  std::vector<double> grid;
  std::vector<double> dp_de;
  std::vector<double> breit_wigner;    ///< (1/pi)(Gamma_R/2)/((E-E_R)^2 + (Gamma_R/2)^2)
  std::vector<double> matrix_element;  ///< |<E|V|z>|^2
  double normalization_used = 1.0;     ///< the decay constant Gamma
};

/// dP/dE = (1/Gamma) |<E|V|z>|^2 / ((E-E_R)^2 + (Gamma_R/2)^2) for one pole,
/// with the decay constant computed once on construction.
class DecaySpectrum {
public:
  DecaySpectrum(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts = {});

  double operator()(double energy) const;
  double normalized_breit_wigner(double energy) const;
  double decay_constant() const { return gamma_; }
  const ResonantState& state() const { return state_; }

private:
  ResonantState state_;
  double gamma_;
};

/// Single-point convenience; recomputes Gamma on every call.
double decay_energy_spectrum(const PotentialSpec& spec, const Pole& pole, double energy);

/// Uniform grid on [e_min, e_max]; 0 < e_min < e_max, points >= 2.
SpectrumCurve spectrum_curve(const PotentialSpec& spec, const Pole& pole, double e_min, double e_max,
                             std::size_t points, const QuadratureOptions& opts = {});

/// Resonant-expansion weights of |phi> ~ c1|z1> + c2|z2>.
struct InterferenceConfig {
  cplx c1{std::numbers::sqrt2 / 2.0, 0.0};
  cplx c2{std::numbers::sqrt2 / 2.0, 0.0};
  bool renormalize = true;

  void validate() const;
};

/// Decay energy spectrum of two interfering resonances,
///
///   |c1|^2 M1^2/D1 + |c2|^2 M2^2/D2 + 2 Re[c1 c2* <E|z1><E|z2>*],
///   <E|z> = <E|V|z> / (z - E),
///
/// optionally divided by its integral over (0, inf).
class InterferenceSpectrum {
public:
  InterferenceSpectrum(const PotentialSpec& spec, const Pole& first, const Pole& second,
                       const InterferenceConfig& cfg, const QuadratureOptions& opts = {});

  struct Terms {
    double direct = 0.0;  ///< the two single-pole terms
    double cross = 0.0;   ///< the interference term
    double total() const { return direct + cross; }
  };

  /// Unnormalized terms at E.
  Terms terms(double energy) const;

  /// Spectrum at E, renormalized when the config asks for it.
  double operator()(double energy) const { return terms(energy).total() / normalization_; }

  double normalization() const { return normalization_; }

private:
  ResonantState first_;
  ResonantState second_;
  InterferenceConfig cfg_;
  double normalization_ = 1.0;
};

double interference_spectrum(const PotentialSpec& spec, const Pole& first, const Pole& second,
                             const InterferenceConfig& cfg, double energy);

struct InterferenceCurve {
  std::vector<double> grid;
  std::vector<double> dp_de;
  std::vector<double> direct;  ///< single-pole terms, same scaling as dp_de
  std::vector<double> cross;   ///< interference term, same scaling as dp_de
  double normalization_used = 1.0;
};

InterferenceCurve interference_curve(const PotentialSpec& spec, const Pole& first, const Pole& second,
                                     const InterferenceConfig& cfg, double e_min, double e_max, std::size_t points,
                                     const QuadratureOptions& opts = {});

/// One spectrum_curve per resonance index, on a shared grid.
std::vector<SpectrumCurve> multi_spectrum(const PotentialSpec& spec, const std::vector<int>& indices, double e_min,
                                          double e_max, std::size_t points, const QuadratureOptions& opts = {});

}  // namespace dshell
