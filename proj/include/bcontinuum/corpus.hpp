#pragma once

// The shipped series corpus. Additional series can be registered at runtime
// or defined through the expression grammar (series_expr.hpp).

#include "bcontinuum/sumtheorem.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bcontinuum {

// Labels in registration order (stable across runs).
std::vector<std::string> corpus_labels();

// Throws UnsupportedSeries for unknown labels.
const Series& corpus_series(const std::string& label);

std::vector<std::pair<std::string, std::string>> corpus_listing(); // (label, description)

// Runtime extension point; rejects duplicate labels.
void register_series(Series series, std::string description);

} // namespace bcontinuum
