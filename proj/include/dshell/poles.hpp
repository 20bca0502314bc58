#pragma once

#include <vector>

#include "dshell/lambert_w.hpp"
#include "dshell/potential.hpp"

namespace dshell {

enum class PoleKind { resonance, anti_resonance, bound, virtual_state };

const char* to_string(PoleKind kind) noexcept;

/// One S-matrix pole in model units (k in 1/a, z in hbar^2/2ma^2).
struct Pole {
  PoleKind kind = PoleKind::resonance;
  int branch = 0;  ///< Lambert W branch that produced k
  int index = 0;   ///< 1-based resonance order; 0 for bound/virtual states
  cplx k;
  cplx z;
  double e_r = 0.0;      ///< Re z
  double gamma_r = 0.0;  ///< -2 Im z, exactly 0 for bound and virtual states
  double alpha_r = 0.0;  ///< Re k
  double beta_r = 0.0;   ///< -Im k

  bool has_width() const { return kind == PoleKind::resonance || kind == PoleKind::anti_resonance; }
};

/// |2ik + lambda (e^{2ik} - 1)|: the pole condition evaluated directly.
double pole_residual(double lambda, cplx k);

/// n-th resonance (fourth quadrant), n >= 1 ordered by Re k.
Pole find_resonance(const PotentialSpec& spec, int n);

/// Mirror of the n-th resonance in the third quadrant, -conj(k_n).
Pole find_anti_resonance(const PotentialSpec& spec, int n);

/// Bound state on the positive imaginary k axis; requires lambda < -1.
Pole find_bound_state(const PotentialSpec& spec);

/// Virtual state on the negative imaginary k axis; requires -1 < lambda < 0.
Pole find_virtual_state(const PotentialSpec& spec);

/// Bound or virtual pole when one exists, followed by resonances 1..count.
std::vector<Pole> enumerate_poles(const PotentialSpec& spec, int count);

/// Half-width of the band around lambda = -1 where no bound or virtual state
/// is reported.
inline constexpr double kThresholdGuard = 1e-10;

}  // namespace dshell
