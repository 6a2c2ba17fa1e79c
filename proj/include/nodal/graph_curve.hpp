#pragma once

#include "nodal/balance.hpp"
#include "nodal/dual_graph.hpp"
#include "nodal/linalg.hpp"
#include "nodal/polynomial.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nodal {

struct CurvePoint {
  int component = 0;
  Rational coordinate;
};

struct DivisorTerm {
  int component = 0;
  Rational coordinate;
  int multiplicity = 1;
};
using PointDivisor = std::vector<DivisorTerm>;

// A dual graph whose components are all projective lines: every edge end has a
// finite rational coordinate on its component, distinct per component. Marked
// points are former branches kept after a partial normalization.
class GraphCurve {
 public:
  GraphCurve(DualGraph graph, std::vector<std::array<Rational, 2>> branches,
             std::vector<std::vector<Rational>> marked = {});

  const DualGraph& graph() const { return graph_; }
  int genus() const { return graph_.genus(); }
  // end 0 lies on edge.u, end 1 on edge.v.
  const Rational& branch(int edge, int end) const {
    return branches_[static_cast<std::size_t>(edge)][static_cast<std::size_t>(end)];
  }
  const std::vector<std::array<Rational, 2>>& branches() const { return branches_; }
  // Every branch coordinate on component v (a loop contributes both ends).
  const std::vector<Rational>& branch_points(int v) const { return points_[static_cast<std::size_t>(v)]; }
  const std::vector<Rational>& marked_points(int v) const { return marked_[static_cast<std::size_t>(v)]; }
  bool is_branch_point(int v, const Rational& x) const;

 private:
  DualGraph graph_;
  std::vector<std::array<Rational, 2>> branches_;
  std::vector<std::vector<Rational>> marked_;
  std::vector<std::vector<Rational>> points_;
};

using CurvePtr = std::shared_ptr<const GraphCurve>;

CurvePtr make_curve(DualGraph graph, std::vector<std::array<Rational, 2>> branches,
                    std::vector<std::vector<Rational>> marked = {});
bool same_curve(const GraphCurve& a, const GraphCurve& b);

// Multidegree plus one nonzero gluing constant per edge. An edge from (u, a) to
// (v, b) imposes f_u(a) = lambda * f_v(b) on the polynomial sections.
class LineBundle {
 public:
  LineBundle(CurvePtr curve, Multidegree degrees, std::vector<Rational> gluing);

  const GraphCurve& curve() const { return *curve_; }
  const CurvePtr& curve_ptr() const { return curve_; }
  const Multidegree& degrees() const { return degrees_; }
  int degree() const { return total(degrees_); }
  const std::vector<Rational>& gluing() const { return gluing_; }
  const Rational& gluing(int e) const { return gluing_[static_cast<std::size_t>(e)]; }

 private:
  CurvePtr curve_;
  Multidegree degrees_;
  std::vector<Rational> gluing_;
};

LineBundle trivial_bundle(const CurvePtr& curve);
// All gluing constants equal to 1.
LineBundle bundle_with_unit_gluing(const CurvePtr& curve, Multidegree degrees);
LineBundle tensor(const LineBundle& a, const LineBundle& b);
LineBundle inverse(const LineBundle& a);
LineBundle canonical_bundle(const CurvePtr& curve);
LineBundle bundle_from_divisor(const CurvePtr& curve, const PointDivisor& divisor);
// L(-D) for an effective or signed node-avoiding D.
LineBundle twist(const LineBundle& bundle, const PointDivisor& divisor, int sign = -1);

int h0(const LineBundle& bundle);
// Same dimension, always through fraction-free elimination over the integers.
int h0_exact(const LineBundle& bundle);
// Sections vanishing to the given orders along an effective divisor.
int h0_vanishing(const LineBundle& bundle, const PointDivisor& divisor);
int h1(const LineBundle& bundle);
int h1_by_duality(const LineBundle& bundle);
// Same, reusing a canonical bundle of the same curve across many calls.
int h1_by_duality(const LineBundle& bundle, const LineBundle& canonical);

// Exact basis of the section space. Row block v of each column holds the
// coefficients of f_v (absent when d_v < 0).
struct SectionSpace {
  std::vector<int> offset;  // first coefficient row per component, -1 when d_v < 0
  Matrix<Rational> basis;   // unknowns x h0
  Polynomial<Rational> restriction(int component, Eigen::Index k, int degree) const;
};
SectionSpace sections(const LineBundle& bundle);

struct ComponentBaseLocus {
  int component = 0;
  bool entire = false;                 // every section vanishes on the component
  Polynomial<Rational> fixed_part;     // monic, node factors removed; {1} when trivial
  std::vector<Rational> rational_points;
  bool at_infinity = false;
};

struct BasePointLocus {
  std::vector<ComponentBaseLocus> components;  // only components carrying base points
  std::vector<int> nodes;                      // edges whose node is a base point
  bool empty() const { return components.empty() && nodes.empty(); }
  bool has_nonsingular() const { return !components.empty(); }
};

BasePointLocus base_points(const LineBundle& bundle);
bool is_base_point(const LineBundle& bundle, const CurvePoint& p);
bool neutral_pair(const LineBundle& bundle, const CurvePoint& p, const CurvePoint& q);

// Gluing p to q with constant lambda keeps h0 for exactly one lambda when p, q are a
// neutral pair and not base points, for every lambda when both are base points.
struct NeutralGluing {
  bool neutral = false;
  bool every_constant = false;
  std::optional<Rational> constant;
};
NeutralGluing neutral_gluing_constant(const LineBundle& bundle, const CurvePoint& p, const CurvePoint& q);

// Triviality via h0 = 1 and via cycle products; both are computed and must agree.
bool is_trivial(const LineBundle& bundle);
bool is_trivial_by_cycles(const LineBundle& bundle);
bool is_trivial_by_sections(const LineBundle& bundle);
bool is_isomorphic(const LineBundle& a, const LineBundle& b);

struct Normalization {
  CurvePtr curve;
  std::vector<int> kept_edges;  // index in the original curve of each remaining edge
  LineBundle pullback(const LineBundle& bundle) const;
};
Normalization normalize_at(const CurvePtr& curve, const std::vector<int>& edges);

// The induced subcurve on z; boundary branches become marked points.
struct Restriction {
  CurvePtr curve;
  std::vector<int> vertex_map;  // new index -> old index
  std::vector<int> edge_map;    // new edge -> old edge
  LineBundle restrict(const LineBundle& bundle) const;
};
Restriction restrict_to(const CurvePtr& curve, VertexSet z);

// Adds a node joining p (end 0) and q (end 1).
struct Gluing {
  CurvePtr curve;
  int new_edge = -1;
  LineBundle extend(const LineBundle& bundle, const Rational& constant) const;
};
Gluing glue(const CurvePtr& curve, const CurvePoint& p, const CurvePoint& q, std::string label = {});

}  // namespace nodal
