#include "dshell/poles.hpp"

#include <cmath>
#include <string>

#include "dshell/errors.hpp"

namespace dshell {

namespace {

// lambda e^lambda, the common Lambert W argument of every pole.
cplx pole_argument(double lambda) {
  const double z = lambda * std::exp(lambda);
  if (!std::isfinite(z)) {
    raise(ErrorKind::InvalidInput, "lambda e^lambda overflows for lambda = " + std::to_string(lambda));
  }
  return {z, 0.0};
}

// k = (lambda - W) / 2i in model units.
cplx wave_number_from_w(double lambda, cplx w) { return cplx(0.0, 0.5) * (w - lambda); }

Pole make_pole(PoleKind kind, int branch, int index, cplx k) {
  Pole p;
  p.kind = kind;
  p.branch = branch;
  p.index = index;
  if (kind == PoleKind::bound || kind == PoleKind::virtual_state) {
    k = cplx(0.0, k.imag());
    p.z = cplx(-k.imag() * k.imag(), 0.0);
    p.gamma_r = 0.0;
  } else {
    p.z = k * k;
    p.gamma_r = -2.0 * p.z.imag();
  }
  p.k = k;
  p.e_r = p.z.real();
  p.alpha_r = k.real();
  p.beta_r = -k.imag();
  return p;
}

void require_index(int n) {
  if (n < 1) raise(ErrorKind::InvalidInput, "resonance index must be >= 1, got " + std::to_string(n));
}

// Branch of the n-th resonance. For lambda < 0 branch -1 carries the trivial
// or virtual root, so resonances start one branch lower.
int resonance_branch(double lambda, int n) { return lambda > 0.0 ? -n : -(n + 1); }

// On the negative real axis W_{-(n+1)} = conj(W_n), so the mirror of the n-th
// resonance sits on branch +n for either sign of lambda.
int anti_resonance_branch(int n) { return n; }

}  // namespace

const char* to_string(PoleKind kind) noexcept {
  switch (kind) {
    case PoleKind::resonance: return "resonance";
    case PoleKind::anti_resonance: return "anti_resonance";
    case PoleKind::bound: return "bound";
    case PoleKind::virtual_state: return "virtual";
  }
  return "unknown";
}

double pole_residual(double lambda, cplx k) {
  const cplx two_ik = cplx(0.0, 2.0) * k;
  return std::abs(two_ik + lambda * (std::exp(two_ik) - 1.0));
}

Pole find_resonance(const PotentialSpec& spec, int n) {
  spec.validate();
  require_index(n);
  const int branch = resonance_branch(spec.lambda, n);
  const cplx w = lambert_w(branch, pole_argument(spec.lambda));
  return make_pole(PoleKind::resonance, branch, n, wave_number_from_w(spec.lambda, w));
}

Pole find_anti_resonance(const PotentialSpec& spec, int n) {
  spec.validate();
  require_index(n);
  const int branch = anti_resonance_branch(n);
  const cplx w = lambert_w(branch, pole_argument(spec.lambda));
  return make_pole(PoleKind::anti_resonance, branch, n, wave_number_from_w(spec.lambda, w));
}

Pole find_bound_state(const PotentialSpec& spec) {
  spec.validate();
  if (!(spec.lambda < -1.0 - kThresholdGuard)) {
    raise(ErrorKind::NoSuchPole, "a bound state requires lambda < -1, got " + std::to_string(spec.lambda));
  }
  const cplx w = lambert_w(0, pole_argument(spec.lambda));
  return make_pole(PoleKind::bound, 0, 0, wave_number_from_w(spec.lambda, cplx(w.real(), 0.0)));
}

Pole find_virtual_state(const PotentialSpec& spec) {
  spec.validate();
  if (!(spec.lambda > -1.0 + kThresholdGuard && spec.lambda < 0.0)) {
    raise(ErrorKind::NoSuchPole,
          "a virtual state requires -1 < lambda < 0, got " + std::to_string(spec.lambda));
  }
  const cplx w = lambert_w(-1, pole_argument(spec.lambda));
  return make_pole(PoleKind::virtual_state, -1, 0, wave_number_from_w(spec.lambda, cplx(w.real(), 0.0)));
}

std::vector<Pole> enumerate_poles(const PotentialSpec& spec, int count) {
  spec.validate();
  if (count < 1) raise(ErrorKind::InvalidInput, "pole count must be >= 1");
  std::vector<Pole> poles;
  poles.reserve(static_cast<std::size_t>(count) + 1);
  if (spec.lambda < -1.0 - kThresholdGuard) {
    poles.push_back(find_bound_state(spec));
  } else if (spec.lambda < 0.0 && spec.lambda > -1.0 + kThresholdGuard) {
    poles.push_back(find_virtual_state(spec));
  }
  for (int n = 1; n <= count; ++n) poles.push_back(find_resonance(spec, n));
  return poles;
}

}  // namespace dshell
