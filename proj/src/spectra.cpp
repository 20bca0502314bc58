#include "dshell/spectra.hpp"

#include <cmath>
#include <string>

#include "dshell/errors.hpp"

namespace dshell {

namespace {

void require_window(double e_min, double e_max, std::size_t points) {
  if (!(e_min > 0.0)) raise(ErrorKind::InvalidInput, "spectrum window needs e_min > 0");
  if (!(e_max > e_min)) raise(ErrorKind::InvalidInput, "spectrum window needs e_min < e_max");
  if (points < 2) raise(ErrorKind::InvalidInput, "spectrum needs at least 2 points");
}

void require_resonance(const Pole& pole, const char* what) {
  if (pole.kind != PoleKind::resonance) {
    raise(ErrorKind::InvalidInput, std::string(what) + ": pole must be a resonance, got " + to_string(pole.kind));
  }
}

}  // namespace

DecaySpectrum::DecaySpectrum(const PotentialSpec& spec, const Pole& pole, const QuadratureOptions& opts)
    : state_(spec, pole), gamma_(decay_constant_total(spec, pole, opts).value) {}

double DecaySpectrum::operator()(double energy) const {
  return decay_constant_differential(state_, energy) / gamma_;
}

double DecaySpectrum::normalized_breit_wigner(double energy) const {
  const double half = 0.5 * state_.pole().gamma_r;
  return std::numbers::inv_pi * half / state_.lorentzian_denominator(energy);
}

double decay_energy_spectrum(const PotentialSpec& spec, const Pole& pole, double energy) {
  return DecaySpectrum(spec, pole)(energy);
}

SpectrumCurve spectrum_curve(const PotentialSpec& spec, const Pole& pole, double e_min, double e_max,
                             std::size_t points, const QuadratureOptions& opts) {
  require_window(e_min, e_max, points);
  const DecaySpectrum spectrum(spec, pole, opts);
  SpectrumCurve curve;
  curve.grid = uniform_grid(e_min, e_max, points);
  curve.dp_de = map_grid(opts.exec, curve.grid, [&](double e) { return spectrum(e); });
  curve.breit_wigner = map_grid(opts.exec, curve.grid, [&](double e) { return spectrum.normalized_breit_wigner(e); });
  curve.matrix_element =
      map_grid(opts.exec, curve.grid, [&](double e) { return spectrum.state().matrix_element_squared(e); });
  curve.normalization_used = spectrum.decay_constant();
  return curve;
}

void InterferenceConfig::validate() const {
  if (c1 == cplx(0.0, 0.0) && c2 == cplx(0.0, 0.0)) {
    raise(ErrorKind::InvalidInput, "interference needs at least one nonzero coefficient");
  }
  for (cplx c : {c1, c2}) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      raise(ErrorKind::InvalidInput, "interference coefficients must be finite");
    }
  }
}

InterferenceSpectrum::InterferenceSpectrum(const PotentialSpec& spec, const Pole& first, const Pole& second,
                                           const InterferenceConfig& cfg, const QuadratureOptions& opts)
    : first_((require_resonance(first, "interference_spectrum"), ResonantState(spec, first))),
      second_((require_resonance(second, "interference_spectrum"), ResonantState(spec, second))),
      cfg_(cfg) {
  cfg_.validate();
  if (cfg_.renormalize) {
    // Order the peaks by energy so swapping the poles gives the same panels.
    const bool in_order = first.e_r <= second.e_r;
    const Pole& lower = in_order ? first : second;
    const Pole& upper = in_order ? second : first;
    QuadratureRequest req = pole_quadrature_request(lower, opts);
    req.extra_peaks.push_back({upper.e_r, 0.5 * upper.gamma_r});
    const Integrand f = [this](double e) { return terms(e).total(); };
    const QuadratureResult r = integrate_semi_infinite(f, req);
    if (!r.converged) raise(ErrorKind::ToleranceNotMet, "interference normalization missed tolerance");
    if (!(r.value > 0.0)) raise(ErrorKind::InvalidInput, "interference spectrum integrates to zero");
    normalization_ = r.value;
  }
}

InterferenceSpectrum::Terms InterferenceSpectrum::terms(double energy) const {
  const double w1 = std::norm(cfg_.c1);
  const double w2 = std::norm(cfg_.c2);
  const double direct = w1 * decay_constant_differential(first_, energy) +
                        w2 * decay_constant_differential(second_, energy);
  // c <E|V|z> / (z - E); the cross term is 2 Re(a1 conj(a2)).
  const cplx a1 = cfg_.c1 * first_.matrix_element(energy) / (first_.pole().z - energy);
  const cplx a2 = cfg_.c2 * second_.matrix_element(energy) / (second_.pole().z - energy);
  const double cross = 2.0 * (a1.real() * a2.real() + a1.imag() * a2.imag());
  return {direct, cross};
}

double interference_spectrum(const PotentialSpec& spec, const Pole& first, const Pole& second,
                             const InterferenceConfig& cfg, double energy) {
  return InterferenceSpectrum(spec, first, second, cfg)(energy);
}

InterferenceCurve interference_curve(const PotentialSpec& spec, const Pole& first, const Pole& second,
                                     const InterferenceConfig& cfg, double e_min, double e_max, std::size_t points,
                                     const QuadratureOptions& opts) {
  require_window(e_min, e_max, points);
  const InterferenceSpectrum spectrum(spec, first, second, cfg, opts);
  InterferenceCurve curve;
  curve.grid = uniform_grid(e_min, e_max, points);
  curve.dp_de.resize(points);
  curve.direct.resize(points);
  curve.cross.resize(points);
  const double norm = spectrum.normalization();
  for_each_index(opts.exec, points, [&](std::size_t i) {
    const auto t = spectrum.terms(curve.grid[i]);
    curve.dp_de[i] = t.total() / norm;
    curve.direct[i] = t.direct / norm;
    curve.cross[i] = t.cross / norm;
  });
  curve.normalization_used = norm;
  return curve;
}

std::vector<SpectrumCurve> multi_spectrum(const PotentialSpec& spec, const std::vector<int>& indices, double e_min,
                                          double e_max, std::size_t points, const QuadratureOptions& opts) {
  std::vector<SpectrumCurve> curves;
  curves.reserve(indices.size());
  for (int n : indices) curves.push_back(spectrum_curve(spec, find_resonance(spec, n), e_min, e_max, points, opts));
  return curves;
}

}  // namespace dshell
