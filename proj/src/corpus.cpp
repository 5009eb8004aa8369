#include "dgshock/corpus.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dgshock/detector.hpp"

namespace dgshock {

namespace {

double heaviside(double r) { return r >= 0.0 ? 1.0 : 0.0; }

std::vector<double> sample(const ReferenceElement& elem, const std::function<double(double)>& f) {
  std::vector<double> out(elem.num_nodes());
  for (int i = 0; i < elem.num_nodes(); ++i) out[i] = f(elem.nodes()(i));
  return out;
}

std::vector<double> noise(int n, double amplitude) {
  std::mt19937_64 rng(20120101);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> out(n);
  for (double& v : out) v = amplitude * dist(rng);
  return out;
}

nlohmann::json report_json(const SmoothnessReport& r) {
  return {{"exponent", r.exponent},
          {"log10_c", r.log10_c},
          {"norm", r.norm},
          {"raw", r.raw},
          {"baselined", r.baselined},
          {"skylined", r.skylined}};
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"jump",     "offset-jump", "kink",     "offset-kink", "trunc-square", "offset-spline",
          "top-mode", "smooth-1",    "smooth-2", "noise",       "const-plus-noise"};
}

double corpus_offset(const ReferenceElement& elem) {
  const int n = elem.degree();
  if (n < 2) return 0.0;
  return 0.5 * (elem.nodes()(n - 2) + elem.nodes()(n - 1));
}

std::vector<double> corpus_nodal(const std::string& name, const ReferenceElement& elem) {
  const double x0 = corpus_offset(elem);
  if (name == "jump") return sample(elem, heaviside);
  if (name == "offset-jump") return sample(elem, [x0](double r) { return heaviside(r - x0); });
  if (name == "kink") return sample(elem, [](double r) { return r * heaviside(r); });
  if (name == "offset-kink")
    return sample(elem, [x0](double r) { return (r - x0) * heaviside(r - x0); });
  if (name == "trunc-square") return sample(elem, [](double r) { return r * r * heaviside(r); });
  if (name == "offset-spline")
    return sample(elem, [x0](double r) { return (r - x0) * (r - x0) * heaviside(r - x0); });
  if (name == "top-mode") {
    const int n = elem.degree();
    return sample(elem, [n](double r) { return legendre_eval(n, r); });
  }
  if (name == "smooth-1") return sample(elem, [](double r) { return std::cos(3.0 + std::sin(1.3 * r)); });
  if (name == "smooth-2")
    return sample(elem, [](double r) { return std::sin(std::numbers::pi * r); });
  if (name == "noise") return noise(elem.num_nodes(), 1.0);
  if (name == "const-plus-noise") {
    std::vector<double> v = noise(elem.num_nodes(), 1e-8);
    for (double& x : v) x += 1.0;
    return v;
  }
  throw std::invalid_argument("unknown detector sample function '" + name + "'");
}

nlohmann::json detect_report(const std::string& name, int degree) {
  const ReferenceElement elem(degree);
  const std::vector<double> nodal = corpus_nodal(name, elem);
  const double h = 2.0;

  DetectorOptions raw_opts;
  raw_opts.baseline = false;
  raw_opts.skyline = false;
  DetectorOptions sl_opts;
  sl_opts.baseline = false;
  const DetectorOptions full_opts;

  const SmoothnessReport raw = estimate_smoothness(elem, nodal, h, raw_opts);
  const SmoothnessReport sl = estimate_smoothness(elem, nodal, h, sl_opts);
  const SmoothnessReport full = estimate_smoothness(elem, nodal, h, full_opts);

  nlohmann::json out;
  out["function"] = name;
  out["N"] = degree;
  out["nodes"] = std::vector<double>(elem.nodes().data(), elem.nodes().data() + elem.num_nodes());
  out["nodal"] = nodal;
  out["exponents"] = {{"raw", raw.exponent}, {"SL", sl.exponent}, {"BD+SL", full.exponent}};
  out["report"] = report_json(full);
  const Eigen::VectorXd modal = elem.nodal_to_modal(nodal);
  try {
    out["pp_indicator"] = pp_indicator(std::span<const double>(modal.data(), modal.size()));
  } catch (const DegenerateElementError&) {
    out["pp_indicator"] = nullptr;
  }
  if (name.rfind("offset-", 0) == 0) out["offset"] = corpus_offset(elem);
  return out;
}

}  // namespace dgshock
