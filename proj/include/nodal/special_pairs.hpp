#pragma once

#include "nodal/graph_curve.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace nodal {

// Ordered marked points on the two lines of a B-pair: shared nodes first (edge
// order), then one point per connected piece of the rest (pieces ordered by
// their smallest vertex).
struct MarkedTuples {
  std::vector<Rational> first, second;
  std::vector<int> shared_edges;
  std::vector<std::pair<int, int>> connector_edges;  // (edge on first, edge on second) per piece
  std::vector<VertexSet> connectors;
};
MarkedTuples marked_tuples(const GraphCurve& curve, std::pair<int, int> pair);

// z -> (a z + b) / (c z + d)
struct Mobius {
  Rational a, b, c, d;
  std::optional<Rational> apply(const Rational& z) const;  // nullopt at the pole
};
// The unique map sending from[k] to to[k]; entries of each triple must be distinct.
Mobius mobius_through(const std::array<Rational, 3>& from, const std::array<Rational, 3>& to);

// ((x - a)(b - c)) / ((x - c)(b - a)); invariant under Mobius maps.
Rational cross_ratio(const Rational& a, const Rational& b, const Rational& c, const Rational& x);
bool projectively_equivalent(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs);

bool is_special_b_pair(const GraphCurve& curve, std::pair<int, int> pair);

}  // namespace nodal
