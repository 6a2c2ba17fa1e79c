#pragma once

#include "nodal/graph_curve.hpp"
#include "nodal/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nodal {

struct SweepOptions {
  std::vector<std::uint64_t> seeds{1, 2, 3};
  int random_per_seed = 1;
  // The first `special_seeds` seeds also draw a divisor bundle and a greedy-neutral
  // bundle; these hit the special loci but cost far more than random gluing.
  int special_seeds = 3;
  int subcurve_cap = default_subcurve_cap;
  long long box_cap = default_box_cap;
  bool keep_passes = true;
};

struct Sample {
  std::string label;
  LineBundle bundle;
};

// Unit gluing first, then per seed: random bundles, and for the first
// special_seeds seeds one divisor bundle and one greedy-neutral bundle.
std::vector<Sample> sample_bundles(const CurvePtr& curve, const Multidegree& degrees, const SweepOptions& options);
// Every gluing constant equal to `constant`.
LineBundle bundle_with_constant_gluing(const CurvePtr& curve, const Multidegree& degrees, const Rational& constant);

// Compact space-free description such as "g=2,C1-C2x3".
std::string describe_graph(const DualGraph& graph);
std::string format_gluing(const LineBundle& bundle);
std::string format_base_points(const LineBundle& bundle, const BasePointLocus& locus);

// Sections equal d - g + 1 at every balanced multidegree of total d >= 2g - 1;
// no base points when d >= 2g without separating nodes, or when d >= 5(g - 1).
Report verify_riemann(const CurvePtr& curve, int degree, const SweepOptions& options, const std::string& name = {});
Report verify_riemann_sweep(const CurvePtr& curve, const SweepOptions& options, const std::string& name = {});

// Bound h0 <= |d|/2 + 1 when 0 <= d_i <= 2 g_i, the base-point clause on equality,
// and the consequences of a Clifford-index-0 bundle on irreducible pieces.
Report verify_clifford_uniform(const CurvePtr& curve, const Multidegree& degrees, const SweepOptions& options,
                               const std::string& name = {});
// Every multidegree of the box 0 <= d_i <= 2 g_i.
Report verify_clifford_uniform_sweep(const CurvePtr& curve, const SweepOptions& options, const std::string& name = {});

// Two components, balanced, 0 <= d <= 2g; plus the sharper bound through the
// component section counts when the components meet at least twice.
Report verify_clifford_two_component(const CurvePtr& curve, int degree, const SweepOptions& options,
                                     const std::string& name = {});
Report verify_clifford_two_component_sweep(const CurvePtr& curve, const SweepOptions& options,
                                           const std::string& name = {});

// Degree 2g - 2 and degree 0 bounds with their equality clauses, plus vanishing
// for nonpositive balanced and nonpositive multidegrees.
Report verify_degree_extremes(const CurvePtr& curve, const SweepOptions& options, const std::string& name = {});

// Subcurve on which every section of a bundle of multidegree d vanishes: start from
// the negative components and repeatedly add C with d_C <= h and C.V > d_C.
VertexSet support_subcurve(const DualGraph& graph, const Multidegree& degrees);

// Balanced degrees 1..4; also the structural dichotomies for nonnegative degree 1
// and 2 on any curve and the nonnegative degree 3, 4 bound.
Report verify_clifford_low_degree(const CurvePtr& curve, const SweepOptions& options, const std::string& name = {});

struct CliffordDatum {
  int degree = 0;
  int h0 = 0;
  int h1 = 0;
  int cliff = 0;
};
CliffordDatum clifford_index_bundle(const LineBundle& bundle);
// Index 0 means no base points and index 1 at most one (irreducible curves with
// 0 <= deg <= 2g).
bool clifford_consequences_hold(const LineBundle& bundle, const CliffordDatum& datum);

struct CurveCliffordBound {
  std::optional<int> bound;  // absent when no sampled bundle has h0 >= 2 and h1 >= 2
  std::optional<LineBundle> witness;
  std::string witness_label;
  int examined = 0;
};
// Minimum over sampled bundles; an upper bound for the true index only.
CurveCliffordBound clifford_index_curve(const CurvePtr& curve, const SweepOptions& options);

// Gluing one node, the component-versus-rest bound, sections above 2g_Z - 1 on
// every connected subcurve, triviality in degree 0, and Serre duality. Samples
// are the constant gluings in {1, 2, 3, -1} plus one random bundle per seed.
Report verify_gluing_lemmas(const CurvePtr& curve, const std::vector<Multidegree>& degrees,
                            const SweepOptions& options, const std::string& name = {});
Report verify_gluing_lemmas_sweep(const CurvePtr& curve, int low, int high, const SweepOptions& options,
                                  const std::string& name = {});

// Two components meeting in delta nodes; keep `kept` of them and normalize the rest.
// Whenever kept < d_i < delta for some i, every gluing of the normalized nodes must
// lose sections.
Report verify_partial_normalization_strictness(const CurvePtr& curve, int kept, const SweepOptions& options,
                                               const std::string& name = {});

}  // namespace nodal
