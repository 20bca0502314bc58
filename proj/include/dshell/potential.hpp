#pragma once

namespace dshell {

enum class UnitSystem {
  reduced,   ///< hbar^2/2m = 1; lengths in the caller's unit, so E = k^2.
  physical,  ///< explicit hbar and m; E = (hbar^2/2m) k^2.
};

/// Strength and geometry of V(r) = g delta(r - a).
///
/// The library computes in model units (a = 1, hbar^2/2m = 1) where g = lambda,
/// wave numbers are k a and energies are E / (hbar^2 / 2 m a^2). The scale
/// helpers convert model quantities to the caller's unit system.
struct PotentialSpec {
  double lambda = 0.0;  ///< 2 m g a / hbar^2
  double radius = 1.0;  ///< a
  UnitSystem units = UnitSystem::reduced;
  double mass = 0.5;  ///< physical mode only
  double hbar = 1.0;  ///< physical mode only

  /// Throws Error(InvalidInput) if lambda = 0 or the scales are not positive.
  void validate() const;

  /// Multiply a model wave number by this to get 1/length.
  double wave_number_scale() const { return 1.0 / radius; }

  /// Multiply a model energy by this to get the caller's energy unit.
  double energy_scale() const;

  /// Coupling g in the caller's units.
  double coupling() const;
};

}  // namespace dshell
