#pragma once

#include "nodal/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nodal {

// Bit i set <=> vertex i is a member. Graphs have at most 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }
inline constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
inline int cardinality(VertexSet s) { return __builtin_popcountll(s); }
std::vector<int> members(VertexSet s);

inline constexpr int default_subcurve_cap = 12;

struct Vertex {
  std::string id;
  int weight = 0;  // geometric genus of the component's normalization
};

struct Edge {
  int u = 0;
  int v = 0;
  std::string label;
  bool is_loop() const { return u == v; }
};

// Genus-weighted multigraph with loops. Connectivity is not enforced here because
// partial normalizations are represented with the same type; callers that need a
// connected curve check is_connected().
class DualGraph {
 public:
  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  int size() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::optional<int> find_vertex(std::string_view id) const;
  std::optional<int> find_edge(std::string_view label) const;

  int weight(int v) const { return vertex(v).weight; }
  int loops(int v) const { return loops_[static_cast<std::size_t>(v)]; }
  int nonloop_degree(int v) const { return nonloop_degree_[static_cast<std::size_t>(v)]; }
  // Branch count at v: loops contribute two.
  int valence(int v) const { return nonloop_degree(v) + 2 * loops(v); }
  int component_genus(int v) const { return weight(v) + loops(v); }
  VertexSet neighbours(int v) const { return neighbours_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& incident_edges(int v) const { return incident_[static_cast<std::size_t>(v)]; }
  int edges_between(int a, int b) const;

  VertexSet all() const { return size() == 64 ? ~VertexSet{0} : (VertexSet{1} << size()) - 1; }
  int genus() const;
  bool is_connected() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> loops_, nonloop_degree_;
  std::vector<VertexSet> neighbours_;
  std::vector<std::vector<int>> incident_;
};

// Orders ids with embedded numbers numerically: C2 < C10.
bool natural_less(std::string_view a, std::string_view b);

struct SubcurveInvariants {
  int genus = 0;
  int delta = 0;
  int canonical_degree = 0;  // 2 genus - 2 + delta
};

int arithmetic_genus(const DualGraph& g, VertexSet z);
int boundary_count(const DualGraph& g, VertexSet z);
// Number of edges with one end in a and the other in b (a, b disjoint).
int intersection_number(const DualGraph& g, VertexSet a, VertexSet b);
SubcurveInvariants subcurve_invariants(const DualGraph& g, VertexSet z);

bool is_connected(const DualGraph& g, VertexSet z);
std::vector<VertexSet> connected_components(const DualGraph& g, VertexSet z);
// Every nonempty vertex set inducing a connected subgraph, ordered
// lexicographically by sorted member list. Refuses graphs above the cap.
std::vector<VertexSet> connected_subcurves(const DualGraph& g, int cap = default_subcurve_cap);

enum class Stability { stable, strictly_semistable, unstable };
std::string to_string(Stability s);

struct StabilityResult {
  Stability kind = Stability::stable;
  std::optional<VertexSet> witness;  // set when unstable
};
StabilityResult classify_stability(const DualGraph& g, int cap = default_subcurve_cap);
// Same classification from valences alone.
Stability classify_stability_local(const DualGraph& g);

bool is_exceptional(const DualGraph& g, int v);
std::vector<int> exceptional_components(const DualGraph& g);

std::vector<int> separating_nodes(const DualGraph& g);

struct Tail {
  VertexSet members = 0;
  int node = -1;
};
std::vector<Tail> tails(const DualGraph& g);

// v is a separating line of the subcurve `within` (v must belong to it).
bool is_separating_line(const DualGraph& g, int v, VertexSet within);
std::vector<int> separating_lines(const DualGraph& g);

struct ComponentOrder {
  std::vector<int> order;
  int non_disconnecting = -1;
};
ComponentOrder non_disconnecting_order(const DualGraph& g);

std::vector<std::pair<int, int>> b_pairs(const DualGraph& g);
std::vector<VertexSet> b_decomposition(const DualGraph& g, int cap = default_subcurve_cap);

struct StructureReport {
  std::vector<int> separating_nodes;
  std::vector<Tail> tails;
  std::vector<int> separating_lines;
  std::vector<int> exceptional_components;
  std::optional<ComponentOrder> order;
  std::optional<std::vector<std::pair<int, int>>> b_pairs;       // only when no separating nodes
  std::optional<std::vector<VertexSet>> b_decomposition;         // only when also stable
};
StructureReport analyze_structure(const DualGraph& g, int cap = default_subcurve_cap);

std::string format_set(const DualGraph& g, VertexSet s);

}  // namespace nodal
