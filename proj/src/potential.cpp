#include "dshell/potential.hpp"

#include <cmath>

#include "dshell/errors.hpp"

namespace dshell {

void PotentialSpec::validate() const {
  if (!std::isfinite(lambda) || lambda == 0.0) {
    raise(ErrorKind::InvalidInput, "lambda must be finite and nonzero");
  }
  if (!std::isfinite(radius) || radius <= 0.0) {
    raise(ErrorKind::InvalidInput, "radius must be positive");
  }
  if (units == UnitSystem::physical) {
    if (!std::isfinite(mass) || mass <= 0.0) raise(ErrorKind::InvalidInput, "mass must be positive");
    if (!std::isfinite(hbar) || hbar <= 0.0) raise(ErrorKind::InvalidInput, "hbar must be positive");
  }
}

double PotentialSpec::energy_scale() const {
  const double kinetic = units == UnitSystem::physical ? hbar * hbar / (2.0 * mass) : 1.0;
  return kinetic / (radius * radius);
}

double PotentialSpec::coupling() const {
  const double kinetic = units == UnitSystem::physical ? hbar * hbar / (2.0 * mass) : 1.0;
  return lambda * kinetic / radius;
}

}  // namespace dshell
