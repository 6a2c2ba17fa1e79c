#pragma once

#include "nodal/graph_curve.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nodal {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Parsed contents of a curve description. `curve` is set when every edge end
// carries a branch coordinate; bundles and divisors need that realization.
struct CurveFile {
  DualGraph graph;
  CurvePtr curve;
  std::vector<std::pair<std::string, LineBundle>> bundles;
  std::vector<std::pair<std::string, PointDivisor>> divisors;

  const LineBundle* find_bundle(std::string_view name) const;
  const PointDivisor* find_divisor(std::string_view name) const;
};

CurveFile parse_curve_file(std::string_view text);
CurveFile read_curve_file(const std::filesystem::path& path);

struct NamedBundle {
  std::string name;
  const LineBundle* bundle;
};
struct NamedDivisor {
  std::string name;
  const PointDivisor* divisor;
};

// Serializes with explicit edges, branch coordinates and glue constants so that
// parsing the output reproduces the same graph, curve and bundles.
std::string write_curve_file(const DualGraph& graph, const GraphCurve* curve,
                             const std::vector<NamedBundle>& bundles = {},
                             const std::vector<NamedDivisor>& divisors = {},
                             const std::vector<std::string>& comments = {});

}  // namespace nodal
