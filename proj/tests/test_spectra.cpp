#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dshell/errors.hpp"
#include "dshell/spectra.hpp"
#include "oracles.hpp"

using namespace dshell;

namespace {

PotentialSpec spec_of(double lambda) {
  PotentialSpec s;
  s.lambda = lambda;
  return s;
}

template <typename F>
double oracle_integral(F&& f) {
  return oracle::brute_force_mapped(f, 200.0, 800000, 20000);
}

}  // namespace

TEST_CASE("single-pole spectrum integrates to one") {
  for (double lam : {100.0, 10.0, 0.5, -10.0, -100.0}) {
    for (int n : {1, 8}) {
      const PotentialSpec s = spec_of(lam);
      const DecaySpectrum d(s, find_resonance(s, n));
      INFO("lambda " << lam << " n " << n);
      CHECK(std::abs(oracle_integral([&](double e) { return d(e); }) - 1.0) <= 1e-6);
    }
  }
  const PotentialSpec v = spec_of(-0.5);
  const DecaySpectrum dv(v, find_virtual_state(v));
  CHECK(std::abs(oracle_integral([&](double e) { return dv(e); }) - 1.0) <= 1e-6);
}

TEST_CASE("lineshape of a sharp resonance") {
  const PotentialSpec s = spec_of(100.0);
  const Pole p = find_resonance(s, 3);
  const SpectrumCurve c = spectrum_curve(s, p, p.e_r - 3.0 * p.gamma_r, p.e_r + 3.0 * p.gamma_r, 6001);
  const double e_peak = c.grid[oracle::argmax(c.dp_de)];
  CHECK(e_peak >= p.e_r - p.gamma_r);
  CHECK(e_peak <= p.e_r + p.gamma_r);
  CHECK(e_peak != p.e_r);

  const DecaySpectrum d(s, p);
  for (double delta : {0.1, 0.5, 1.0, 2.0}) {
    const double lo = d(p.e_r - delta * p.gamma_r);
    const double hi = d(p.e_r + delta * p.gamma_r);
    CHECK(std::abs(hi - lo) > 1e-3 * std::max(hi, lo));
  }

  // Breit-Wigner companion is the normalized Lorentzian, and the peak ratio
  // of the two curves is Gamma_sharp / Gamma.
  CHECK(oracle_integral([&](double e) { return d.normalized_breit_wigner(e); }) ==
        doctest::Approx(0.5 + std::numbers::inv_pi * std::atan(2.0 * p.e_r / p.gamma_r)).epsilon(1e-8));
  const double gamma_sharp = 2.0 * std::numbers::pi * d.state().matrix_element_squared(p.e_r) / p.gamma_r;
  CHECK(d(p.e_r) / d.normalized_breit_wigner(p.e_r) == doctest::Approx(gamma_sharp / d.decay_constant()));
  for (std::size_t i = 0; i < c.grid.size(); i += 500) {
    CHECK(c.breit_wigner[i] == d.normalized_breit_wigner(c.grid[i]));
    CHECK(c.matrix_element[i] == d.state().matrix_element_squared(c.grid[i]));
    CHECK(c.dp_de[i] == d(c.grid[i]));
  }
  CHECK(c.normalization_used == d.decay_constant());
}

TEST_CASE("low-energy bump of a broad resonance") {
  const PotentialSpec s = spec_of(10.0);
  const Pole p = find_resonance(s, 3);
  const DecaySpectrum d(s, p);
  const double first_zero = std::numbers::pi * std::numbers::pi;
  const SpectrumCurve c = spectrum_curve(s, p, 1e-4, first_zero, 4000);
  const std::size_t top = oracle::argmax(c.dp_de);
  const double e_top = c.grid[top];
  CHECK(e_top > 0.0);
  CHECK(e_top < 0.5 * first_zero);
  // Rises like sqrt(E) from threshold, then falls to the first zero.
  CHECK(d(1e-6) / d(1e-8) == doctest::Approx(10.0).epsilon(1e-3));
  for (std::size_t i = top + 1; i < c.grid.size(); ++i) CHECK(c.dp_de[i] < c.dp_de[i - 1]);
  CHECK(c.dp_de[top] > 1e-3 * d(p.e_r));
}

TEST_CASE("virtual-state spectrum is a threshold peak") {
  const PotentialSpec s = spec_of(-0.5);
  const Pole v = find_virtual_state(s);
  // sqrt(E)/(E - E_v)^2 peaks at |E_v|/3; the sin^2(k)/k curvature pulls the
  // maximum of the full spectrum lower.
  const double e_top = std::abs(v.e_r) / 3.0;
  const SpectrumCurve c = spectrum_curve(s, v, 1e-4, 2.0, 20000);
  const std::size_t top = oracle::argmax(c.dp_de);
  CHECK(c.grid[top] < e_top);
  CHECK(c.grid[top] > 0.85 * e_top);
  for (std::size_t i = 1; i <= top; ++i) CHECK(c.dp_de[i] > c.dp_de[i - 1]);
  for (std::size_t i = top + 1; i < c.grid.size(); ++i) CHECK(c.dp_de[i] < c.dp_de[i - 1]);
  CHECK(c.breit_wigner.front() == 0.0);
}

TEST_CASE("multi-spectrum") {
  const PotentialSpec s = spec_of(100.0);
  const std::vector<SpectrumCurve> curves = multi_spectrum(s, {1, 2, 3}, 1.0, 120.0, 60001);
  REQUIRE(curves.size() == 3);
  double last = std::numeric_limits<double>::infinity();
  for (const SpectrumCurve& c : curves) {
    const double peak = c.dp_de[oracle::argmax(c.dp_de)];
    CHECK(peak < last);
    last = peak;
    CHECK(c.grid == curves.front().grid);
  }
  CHECK(multi_spectrum(s, {}, 1.0, 2.0, 10).empty());
  CHECK_THROWS_AS(multi_spectrum(s, {0}, 1.0, 2.0, 10), Error);
}

TEST_CASE("spectrum argument checks") {
  const PotentialSpec s = spec_of(100.0);
  const Pole p = find_resonance(s, 1);
  CHECK_THROWS_AS(spectrum_curve(s, p, 0.0, 1.0, 10), Error);
  CHECK_THROWS_AS(spectrum_curve(s, p, 2.0, 1.0, 10), Error);
  CHECK_THROWS_AS(spectrum_curve(s, p, 1.0, 2.0, 1), Error);
  CHECK_THROWS_AS(DecaySpectrum(s, p)(-1.0), Error);
  CHECK(decay_energy_spectrum(s, p, p.e_r) == DecaySpectrum(s, p)(p.e_r));
}

TEST_CASE("interference reduces to a single pole when c2 = 0") {
  const PotentialSpec s = spec_of(100.0);
  const Pole p1 = find_resonance(s, 1);
  const Pole p2 = find_resonance(s, 2);
  InterferenceConfig cfg;
  cfg.c1 = {1.0, 0.0};
  cfg.c2 = {0.0, 0.0};
  cfg.renormalize = false;
  const InterferenceSpectrum spec(s, p1, p2, cfg);
  const DecaySpectrum single(s, p1);
  for (double e : {0.5, 5.0, p1.e_r, 20.0, p2.e_r, 300.0}) {
    const double want = single(e) * single.decay_constant();
    CHECK(spec.terms(e).cross == 0.0);
    CHECK(spec(e) == doctest::Approx(want).epsilon(1e-14));
  }
  cfg.renormalize = true;
  const InterferenceSpectrum norm(s, p1, p2, cfg);
  CHECK(norm.normalization() == doctest::Approx(single.decay_constant()).epsilon(1e-8));
  for (double e : {5.0, p1.e_r, 20.0}) CHECK(norm(e) == doctest::Approx(single(e)).epsilon(1e-8));
}

TEST_CASE("interference is symmetric under swapping the poles") {
  const PotentialSpec s = spec_of(10.0);
  const Pole p1 = find_resonance(s, 1);
  const Pole p3 = find_resonance(s, 3);
  InterferenceConfig a;
  a.c1 = {0.6, 0.2};
  a.c2 = {-0.3, 0.7};
  InterferenceConfig b = a;
  std::swap(b.c1, b.c2);
  const InterferenceSpectrum x(s, p1, p3, a);
  const InterferenceSpectrum y(s, p3, p1, b);
  CHECK(x.normalization() == doctest::Approx(y.normalization()).epsilon(1e-12));
  for (double e : {0.2, 3.0, p1.e_r, 40.0, p3.e_r, 200.0}) {
    CHECK(x.terms(e).direct == doctest::Approx(y.terms(e).direct).epsilon(1e-14));
    CHECK(x.terms(e).cross == doctest::Approx(y.terms(e).cross).epsilon(1e-13));
    CHECK(x(e) == doctest::Approx(y(e)).epsilon(1e-12));
  }
}

TEST_CASE("interference cross term from first principles") {
  const PotentialSpec s = spec_of(100.0);
  const Pole p1 = find_resonance(s, 1);
  const Pole p2 = find_resonance(s, 2);
  const InterferenceConfig cfg{{0.8, 0.1}, {0.2, -0.5}, false};
  const InterferenceSpectrum sp(s, p1, p2, cfg);
  const ResonantState s1(s, p1);
  const ResonantState s2(s, p2);
  for (double e : {2.0, p1.e_r, 0.5 * (p1.e_r + p2.e_r), p2.e_r, 90.0}) {
    const cplx a1 = cfg.c1 * s1.matrix_element(e) / (p1.z - e);
    const cplx a2 = cfg.c2 * s2.matrix_element(e) / (p2.z - e);
    CHECK(sp.terms(e).direct == doctest::Approx(std::norm(a1) + std::norm(a2)).epsilon(1e-12));
    CHECK(sp.terms(e).cross == doctest::Approx(2.0 * (a1 * std::conj(a2)).real()).epsilon(1e-12));
  }
  // Midway between the peaks the cross term is present but below both peaks.
  const double mid = 0.5 * (p1.e_r + p2.e_r);
  const double cross = std::abs(sp.terms(mid).cross);
  CHECK(cross > 0.0);
  CHECK(cross < sp.terms(p1.e_r).direct);
  CHECK(cross < sp.terms(p2.e_r).direct);
}

TEST_CASE("renormalized interference curve integrates to one") {
  const PotentialSpec s = spec_of(100.0);
  const Pole p1 = find_resonance(s, 1);
  const Pole p2 = find_resonance(s, 2);
  const InterferenceSpectrum sp(s, p1, p2, InterferenceConfig{});
  CHECK(std::abs(oracle_integral([&](double e) { return sp(e); }) - 1.0) <= 1e-6);

  const InterferenceCurve c = interference_curve(s, p1, p2, InterferenceConfig{}, 1.0, 60.0, 501);
  for (std::size_t i = 0; i < c.grid.size(); i += 50) {
    CHECK(c.dp_de[i] == doctest::Approx(c.direct[i] + c.cross[i]).epsilon(1e-14));
    CHECK(c.dp_de[i] == sp(c.grid[i]));
  }
  CHECK(c.normalization_used == sp.normalization());
}

TEST_CASE("interference argument checks") {
  const PotentialSpec s = spec_of(100.0);
  const Pole p1 = find_resonance(s, 1);
  InterferenceConfig zero;
  zero.c1 = zero.c2 = {0.0, 0.0};
  CHECK_THROWS_AS(InterferenceSpectrum(s, p1, find_resonance(s, 2), zero), Error);
  CHECK_THROWS_AS(InterferenceSpectrum(spec_of(-10.0), find_bound_state(spec_of(-10.0)),
                                       find_resonance(spec_of(-10.0), 1), InterferenceConfig{}),
                  Error);
}
