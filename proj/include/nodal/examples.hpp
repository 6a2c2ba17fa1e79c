#pragma once

#include "nodal/graph_curve.hpp"
#include "nodal/report.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace nodal {

// One realized instance of the example corpus. Components of positive genus are
// replaced by projective lines carrying that many loops.
struct ExampleInstance {
  std::string label;
  std::string summary;
  CurvePtr curve;
  std::vector<std::pair<std::string, LineBundle>> bundles;
};

// Fixed order: ct2 Pr Pr2 ctcc P1 P2 cl2no cl3no cl3n cl5no.
std::vector<ExampleInstance> example_corpus();
std::vector<std::string> example_labels();

// The curve-file text for one instance; parsing it gives back the same curve and
// bundles.
std::string example_file_text(const ExampleInstance& instance);
// Writes <dir>/<label>.curve for every instance.
void export_example_corpus(const std::filesystem::path& dir);

// Expected against computed for every instance; `only` restricts to one label.
// Throws std::invalid_argument on an unknown label.
Report counterexample_suite(const std::string& only = {});

}  // namespace nodal
