#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "clonewt/weights.hpp"

namespace clonewt::cli {

enum ExitCode : int { ok = 0, invalid = 1, violations = 2 };

// Runs one command line (without the program name). Documents go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// {"alpha": a, "rule": r, "nu": d, "exact": b, "weights": {label: value}}.
// Exact values are "p/q" strings, floating values are numbers.
nlohmann::ordered_json weights_document(double alpha, const std::string& rule, const std::string& nu,
                                        const std::vector<std::string>& labels, const WeightVector& w);

struct WeightsDocument {
  double alpha = 0.0;
  std::string rule;
  std::vector<std::string> labels;
  WeightVector weights;
};
WeightsDocument parse_weights_document(const nlohmann::ordered_json& doc);

}  // namespace clonewt::cli
