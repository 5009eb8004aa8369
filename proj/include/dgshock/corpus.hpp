#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dgshock/reference_element.hpp"

namespace dgshock {

/// Names of the sample functions used to probe the detector on a single
/// reference element [-1, 1].
std::vector<std::string> corpus_names();

/// Nodal values of a corpus function on the element's nodes. Offset variants
/// put the non-smoothness midway between the second- and third-to-last
/// nodes. Throws std::invalid_argument for unknown names.
std::vector<double> corpus_nodal(const std::string& name, const ReferenceElement& elem);

/// Location of the non-smoothness used by the offset variants.
double corpus_offset(const ReferenceElement& elem);

/// Detector report for a corpus function: raw, SL and BD+SL exponents plus
/// the spectra and the Persson-Peraire indicator.
nlohmann::json detect_report(const std::string& name, int degree);

}  // namespace dgshock
