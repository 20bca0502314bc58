#include "dshell/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "dshell/errors.hpp"

namespace dshell {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452604, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr std::array<int, 6> kPeakOffsets = {1, 2, 4, 8, 16, 32};
constexpr std::size_t kMaxLatticePanels = 400000;
constexpr std::size_t kMaxBisections = 200000;

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  bool tail = false;
  double value = 0.0;
  double error = 0.0;
};

class PanelIntegrator {
public:
  PanelIntegrator(const Integrand& f, double k_cut) : f_(f), k_cut_(k_cut) {}

  // Integrand in the panel variable: 2k f(k^2) on finite panels, and the same
  // times dk/dt under k = k_cut/(1-t) on the tail.
  double operator()(double x, bool tail) const {
    double k = x;
    double jac = 1.0;
    if (tail) {
      const double s = 1.0 - x;
      k = k_cut_ / s;
      jac = k_cut_ / (s * s);
    }
    const double v = f_(k * k);
    if (!std::isfinite(v)) raise(ErrorKind::InvalidInput, "integrand is not finite");
    return 2.0 * k * v * jac;
  }

  void evaluate(Panel& p) const {
    const double center = 0.5 * (p.lo + p.hi);
    const double half = 0.5 * (p.hi - p.lo);
    const double fc = (*this)(center, p.tail);
    double resk = fc * kWgk[10];
    double resg = 0.0;
    double resabs = std::abs(resk);
    std::array<double, 10> fv1{};
    std::array<double, 10> fv2{};
    for (std::size_t j = 0; j < 10; ++j) {
      const double dx = half * kXgk[j];
      fv1[j] = (*this)(center - dx, p.tail);
      fv2[j] = (*this)(center + dx, p.tail);
      const double sum = fv1[j] + fv2[j];
      resk += kWgk[j] * sum;
      resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
      if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 10; ++j) {
      resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    }
    resk *= half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg * half));
    if (resasc != 0.0 && err != 0.0) {
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
      err = std::max(50.0 * kEps * resabs, err);
    }
    p.value = resk;
    p.error = err;
  }

private:
  const Integrand& f_;
  double k_cut_;
};

// Compensated sum in index order, so the result is independent of how the
// panels were produced.
double neumaier_sum(const std::vector<Panel>& panels, double Panel::*field) {
  double sum = 0.0;
  double c = 0.0;
  for (const Panel& p : panels) {
    const double v = p.*field;
    const double t = sum + v;
    c += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + c;
}

void add_peak_breakpoints(std::vector<double>& ks, const Peak& peak) {
  if (!(peak.halfwidth > 0.0)) return;
  if (peak.center > 0.0) ks.push_back(std::sqrt(peak.center));
  for (int s : kPeakOffsets) {
    for (double sign : {-1.0, 1.0}) {
      const double e = peak.center + sign * s * peak.halfwidth;
      if (e > 0.0) ks.push_back(std::sqrt(e));
    }
  }
}

}  // namespace

void QuadratureRequest::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) raise(ErrorKind::InvalidInput, "quadrature tolerances must be > 0");
  if (!(peak_halfwidth > 0.0) || !std::isfinite(peak_halfwidth)) {
    raise(ErrorKind::InvalidInput, "peak_halfwidth must be positive");
  }
  if (!(oscillation_wavenumber > 0.0) || !std::isfinite(oscillation_wavenumber)) {
    raise(ErrorKind::InvalidInput, "oscillation_wavenumber must be positive");
  }
  if (!std::isfinite(peak_center)) raise(ErrorKind::InvalidInput, "peak_center must be finite");
  for (const Peak& p : extra_peaks) {
    if (!(p.halfwidth > 0.0) || !std::isfinite(p.center)) {
      raise(ErrorKind::InvalidInput, "extra peak needs finite center and positive halfwidth");
    }
  }
}

QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureRequest& req) {
  req.validate();

  std::vector<Peak> peaks{{req.peak_center, req.peak_halfwidth}};
  peaks.insert(peaks.end(), req.extra_peaks.begin(), req.extra_peaks.end());

  // Beyond e_cut every envelope hw^2/((E-c)^2+hw^2) is below abs_tol (floored
  // at 1e-16; the mapped tail panel picks up the rest).
  const double spacing = req.oscillation_wavenumber;
  const double envelope_floor = std::max(req.abs_tol, 1e-16);
  double e_cut = 16.0 * spacing * spacing;
  for (const Peak& p : peaks) {
    e_cut = std::max(e_cut, std::max(p.center, 0.0) + p.halfwidth / std::sqrt(envelope_floor));
  }
  const double k_cut = std::sqrt(e_cut);

  std::vector<double> ks{0.0, k_cut};
  for (const Peak& p : peaks) add_peak_breakpoints(ks, p);
  const double lattice_count = std::floor(k_cut / spacing);
  const double stride =
      lattice_count > static_cast<double>(kMaxLatticePanels) ? std::ceil(lattice_count / kMaxLatticePanels) : 1.0;
  for (double m = stride; m * spacing < k_cut; m += stride) ks.push_back(m * spacing);
  std::sort(ks.begin(), ks.end());
  std::vector<double> edges;
  edges.reserve(ks.size());
  for (double k : ks) {
    if (k > k_cut) continue;
    if (edges.empty() || k - edges.back() > 1e-13 * std::max(1.0, k)) edges.push_back(k);
  }
  if (edges.back() != k_cut) edges.back() = k_cut;

  std::vector<Panel> panels;
  panels.reserve(edges.size());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) panels.push_back({edges[i], edges[i + 1], false});
  panels.push_back({0.0, 1.0, true});

  const PanelIntegrator integrator(f, k_cut);
  for_each_index(req.exec, panels.size(), [&](std::size_t i) { integrator.evaluate(panels[i]); });

  QuadratureResult out;
  std::size_t evaluations = 21 * panels.size();

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry> worst;
  for (std::size_t i = 0; i < panels.size(); ++i) worst.emplace(panels[i].error, i);

  double total = neumaier_sum(panels, &Panel::value);
  double error = neumaier_sum(panels, &Panel::error);
  std::size_t bisections = 0;
  while (error > std::max(req.rel_tol * std::abs(total), req.abs_tol) && bisections < kMaxBisections &&
         !worst.empty()) {
    const std::size_t i = worst.top().second;
    worst.pop();
    Panel& p = panels[i];
    const double mid = 0.5 * (p.lo + p.hi);
    if (!(mid > p.lo && mid < p.hi)) continue;  // cannot split further
    Panel right{mid, p.hi, p.tail};
    Panel left{p.lo, mid, p.tail};
    integrator.evaluate(left);
    integrator.evaluate(right);
    evaluations += 42;
    ++bisections;
    total += left.value + right.value - p.value;
    error += left.error + right.error - p.error;
    p = left;
    panels.push_back(right);
    worst.emplace(panels[i].error, i);
    worst.emplace(panels.back().error, panels.size() - 1);
  }

  std::sort(panels.begin(), panels.end(), [](const Panel& a, const Panel& b) {
    return a.tail != b.tail ? b.tail : a.lo < b.lo;
  });
  out.value = neumaier_sum(panels, &Panel::value);
  out.error_estimate = neumaier_sum(panels, &Panel::error);
  out.converged = out.error_estimate <= std::max(req.rel_tol * std::abs(out.value), req.abs_tol);
  out.evaluations = evaluations;
  out.panels = panels.size();
  return out;
}

}  // namespace dshell
