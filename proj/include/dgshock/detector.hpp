#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "dgshock/reference_element.hpp"

namespace dgshock {

class DegenerateElementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnderdeterminedFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Persson-Peraire indicator: fraction of the squared modal mass held by the
/// highest mode. Throws DegenerateElementError for an all-zero expansion.
double pp_indicator(std::span<const double> modal);

/// Perfect-decay profile |b_n| ~ n^{-N}, n = 1..N. Normalized to unit l2 norm
/// unless `normalize` is false.
std::vector<double> baseline_weights(int degree, bool normalize = true);

/// |q~_n| = sqrt(q_n^2 + norm^2 b_n^2) for n = 1..Np-1 (mode 0 dropped).
std::vector<double> apply_baseline(std::span<const double> modal, double norm, int degree,
                                   bool normalize = true);

/// Skyline pessimization. Input and output are indexed n = 1..Np-1:
///   out_n = max_{i >= min(n, Np-2)} in_i
std::vector<double> skyline(std::span<const double> mags);

struct DecayFit {
  double exponent = 0.0;  // s in |q_n| ~ c n^{-s}
  double log10_c = 0.0;
};

/// Least-squares fit of log10 mags_n against log10 n for n = 1..size.
/// Entries must be positive. Throws UnderdeterminedFitError with fewer than two
/// magnitudes.
DecayFit fit_decay(std::span<const double> mags);

struct DetectorOptions {
  bool baseline = true;
  bool skyline = true;
  bool normalize_baseline = true;
  /// Exponent reported for an element whose solution norm vanishes.
  double s_max = 10.0;
  /// Lower bound on the norm that scales the baseline profile. With zero the
  /// baseline uses the element norm alone.
  double norm_floor = 0.0;
};

struct SmoothnessReport {
  std::vector<double> raw;        // |q_n|, n = 0..Np-1
  std::vector<double> baselined;  // n = 1..Np-1
  std::vector<double> skylined;   // n = 1..Np-1
  double exponent = 0.0;
  double log10_c = 0.0;
  double norm = 0.0;  // ||q_N||_{L2(D_k)}
};

/// Full smoothness estimate on one element of size h. Modal coefficients are
/// taken with respect to the basis orthonormal on the physical element, so the
/// result does not depend on h.
SmoothnessReport estimate_smoothness(const ReferenceElement& elem, std::span<const double> nodal,
                                     double h, const DetectorOptions& options = {});

}  // namespace dgshock
