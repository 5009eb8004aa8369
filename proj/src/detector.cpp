#include "dgshock/detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dgshock {

double pp_indicator(std::span<const double> modal) {
  if (modal.size() < 2) throw std::invalid_argument("pp_indicator: need at least two modes");
  double total = 0.0;
  for (double q : modal) total += q * q;
  if (total == 0.0) throw DegenerateElementError("pp_indicator: all modal coefficients are zero");
  return modal.back() * modal.back() / total;
}

std::vector<double> baseline_weights(int degree, bool normalize) {
  if (degree < 1) throw std::invalid_argument("baseline_weights: degree must be >= 1");
  std::vector<double> b(degree);
  double sum_sq = 0.0;
  for (int n = 1; n <= degree; ++n) {
    b[n - 1] = std::pow(static_cast<double>(n), -static_cast<double>(degree));
    sum_sq += b[n - 1] * b[n - 1];
  }
  if (normalize) {
    const double scale = 1.0 / std::sqrt(sum_sq);
    for (double& v : b) v *= scale;
  }
  return b;
}

std::vector<double> apply_baseline(std::span<const double> modal, double norm, int degree,
                                   bool normalize) {
  if (static_cast<int>(modal.size()) != degree + 1)
    throw std::invalid_argument("apply_baseline: expected N+1 modal coefficients");
  const std::vector<double> b = baseline_weights(degree, normalize);
  std::vector<double> out(degree);
  for (int n = 1; n <= degree; ++n)
    out[n - 1] = std::sqrt(modal[n] * modal[n] + norm * norm * b[n - 1] * b[n - 1]);
  return out;
}

std::vector<double> skyline(std::span<const double> mags) {
  const int m = static_cast<int>(mags.size());  // m = Np - 1
  std::vector<double> out(m);
  if (m == 0) return out;
  // Running max from the top; the last two modes share the same window.
  double running = mags[m - 1];
  out[m - 1] = running;
  for (int idx = m - 2; idx >= 0; --idx) {
    running = std::max(running, mags[idx]);
    out[idx] = running;
  }
  if (m >= 2) out[m - 1] = out[m - 2];
  return out;
}

DecayFit fit_decay(std::span<const double> mags) {
  const int m = static_cast<int>(mags.size());
  if (m < 2) throw UnderdeterminedFitError("fit_decay: need at least two distinct abscissae");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int n = 1; n <= m; ++n) {
    const double x = std::log10(static_cast<double>(n));
    const double y = std::log10(mags[n - 1]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = m * sxx - sx * sx;
  const double slope = (m * sxy - sx * sy) / det;
  const double intercept = (sy - slope * sx) / m;
  return {-slope, intercept};
}

SmoothnessReport estimate_smoothness(const ReferenceElement& elem, std::span<const double> nodal,
                                     double h, const DetectorOptions& options) {
  const int degree = elem.degree();
  if (degree < 2) throw std::invalid_argument("estimate_smoothness: needs N >= 2");

  SmoothnessReport report;
  const Eigen::VectorXd modal_ref = elem.nodal_to_modal(nodal);
  const double scale = std::sqrt(0.5 * h);
  std::vector<double> modal(degree + 1);
  for (int n = 0; n <= degree; ++n) modal[n] = scale * modal_ref(n);

  double sum_sq = 0.0;
  for (double q : modal) sum_sq += q * q;
  report.norm = std::sqrt(sum_sq);
  report.raw.resize(degree + 1);
  for (int n = 0; n <= degree; ++n) report.raw[n] = std::abs(modal[n]);

  if (report.norm == 0.0) {
    report.baselined.assign(degree, 0.0);
    report.skylined.assign(degree, 0.0);
    report.exponent = options.s_max;
    report.log10_c = 0.0;
    return report;
  }

  if (options.baseline) {
    report.baselined = apply_baseline(modal, std::max(report.norm, options.norm_floor), degree,
                                      options.normalize_baseline);
  } else {
    report.baselined.assign(report.raw.begin() + 1, report.raw.end());
  }
  report.skylined = options.skyline ? skyline(report.baselined) : report.baselined;

  // Only reachable without baseline decay: exact zeros would make the log-fit
  // undefined.
  std::vector<double> fit_input = report.skylined;
  const double floor = report.norm * std::numeric_limits<double>::epsilon() * 1e-4;
  for (double& v : fit_input) v = std::max(v, floor);

  const DecayFit fit = fit_decay(fit_input);
  report.exponent = fit.exponent;
  report.log10_c = fit.log10_c;
  return report;
}

}  // namespace dgshock
