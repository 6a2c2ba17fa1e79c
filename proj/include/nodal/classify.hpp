#pragma once

#include "nodal/graph_curve.hpp"
#include "nodal/verifiers.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nodal {

// Degree-2 pencils: which multidegrees of total 2 can carry a bundle with two
// sections, by the B-pair pattern (1,1,0..0) or the hub pattern (2,0,..,0).
enum class PencilPattern { none, special_pair, hub };
enum class PencilStatus {
  certified,     // bundle constructed on the realization and h0 = 2 checked
  undetermined,  // pattern holds on the graph; no realization to decide the rest
  fails,
};
std::string to_string(PencilPattern p);
std::string to_string(PencilStatus s);

struct PencilCandidate {
  Multidegree degrees;
  bool balanced = false;
  PencilPattern pattern = PencilPattern::none;
  PencilStatus status = PencilStatus::fails;
  std::string detail;
  std::optional<LineBundle> bundle;  // set when certified
};

struct PencilClassification {
  bool applicable = false;
  std::string reason;  // when not applicable
  // "weakly-hyperelliptic", "not-weakly-hyperelliptic", "undetermined", "not-applicable"
  std::string verdict;
  std::vector<PencilCandidate> candidates;
  const PencilCandidate* witness() const;
};

// Semistable curves without separating nodes go through the two patterns; a
// two-component curve with a single node goes through the compact-type rule.
PencilClassification weakly_hyperelliptic_classify(const DualGraph& graph, const CurvePtr& curve = nullptr,
                                                   int cap = default_subcurve_cap);

// Candidate bundles for the two patterns; nullopt when the construction breaks.
std::optional<LineBundle> special_pair_pencil(const CurvePtr& curve, std::pair<int, int> pair);
std::optional<LineBundle> hub_pencil(const CurvePtr& curve, int hub, std::string* why = nullptr);

struct HypcombPair {
  VertexSet first = 0, second = 0;
  int meet = 0;
  std::optional<int> first_h0, second_h0;  // h0(A, O_A(A meet B)) when realized
  bool ok = true;
};

struct HypcombResult {
  bool applicable = false;
  std::string reason;
  std::vector<VertexSet> pieces;
  std::vector<HypcombPair> pairs;  // pieces that meet, plus the failing ones
  bool passes = false;
  std::optional<std::pair<VertexSet, VertexSet>> witness;
};
// Necessary conditions for hyperellipticity on the B-decomposition of a stable
// curve without separating nodes.
HypcombResult hypcomb_check(const DualGraph& graph, const CurvePtr& curve = nullptr, int cap = default_subcurve_cap);

// Sampled Clifford index, replaced by 0 when a degree-2 pencil is certified and
// its h1 is at least 2.
struct CertifiedCliffordIndex {
  CurveCliffordBound bound;
  bool exact = false;
};
CertifiedCliffordIndex clifford_index_certified(const CurvePtr& curve, const SweepOptions& options);

}  // namespace nodal
