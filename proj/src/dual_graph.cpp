#include "nodal/dual_graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace nodal {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw std::invalid_argument("dual graph needs at least one vertex");
  if (vertices_.size() > 64) throw std::invalid_argument("dual graph limited to 64 vertices");
  std::set<std::string, std::less<>> ids;
  for (const auto& v : vertices_) {
    if (v.weight < 0) throw std::invalid_argument("negative weight on vertex " + v.id);
    if (!ids.insert(v.id).second) throw std::invalid_argument("duplicate vertex id " + v.id);
  }
  const int n = size();
  loops_.assign(static_cast<std::size_t>(n), 0);
  nonloop_degree_.assign(static_cast<std::size_t>(n), 0);
  neighbours_.assign(static_cast<std::size_t>(n), 0);
  incident_.assign(static_cast<std::size_t>(n), {});
  std::set<std::string, std::less<>> labels;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (edge.label.empty()) edge.label = "e" + std::to_string(e + 1);
    if (!labels.insert(edge.label).second) throw std::invalid_argument("duplicate edge label " + edge.label);
    const int ei = static_cast<int>(e);
    if (edge.is_loop()) {
      ++loops_[static_cast<std::size_t>(edge.u)];
      incident_[static_cast<std::size_t>(edge.u)].push_back(ei);
    } else {
      ++nonloop_degree_[static_cast<std::size_t>(edge.u)];
      ++nonloop_degree_[static_cast<std::size_t>(edge.v)];
      neighbours_[static_cast<std::size_t>(edge.u)] |= singleton(edge.v);
      neighbours_[static_cast<std::size_t>(edge.v)] |= singleton(edge.u);
      incident_[static_cast<std::size_t>(edge.u)].push_back(ei);
      incident_[static_cast<std::size_t>(edge.v)].push_back(ei);
    }
  }
}

std::optional<int> DualGraph::find_vertex(std::string_view id) const {
  for (int v = 0; v < size(); ++v)
    if (vertex(v).id == id) return v;
  return std::nullopt;
}

std::optional<int> DualGraph::find_edge(std::string_view label) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edge(e).label == label) return e;
  return std::nullopt;
}

int DualGraph::edges_between(int a, int b) const {
  int count = 0;
  for (int e : incident_edges(a)) {
    const auto& ed = edge(e);
    if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) ++count;
  }
  return count;
}

int DualGraph::genus() const { return arithmetic_genus(*this, all()); }

bool DualGraph::is_connected() const { return nodal::is_connected(*this, all()); }

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na[0] == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb[0] == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

int arithmetic_genus(const DualGraph& g, VertexSet z) {
  int genus = 1 - cardinality(z);
  for (int v : members(z)) genus += g.component_genus(v);
  for (const auto& e : g.edges())
    if (!e.is_loop() && contains(z, e.u) && contains(z, e.v)) ++genus;
  return genus;
}

int intersection_number(const DualGraph& g, VertexSet a, VertexSet b) {
  int count = 0;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if ((contains(a, e.u) && contains(b, e.v)) || (contains(a, e.v) && contains(b, e.u))) ++count;
  }
  return count;
}

int boundary_count(const DualGraph& g, VertexSet z) { return intersection_number(g, z, g.all() & ~z); }

SubcurveInvariants subcurve_invariants(const DualGraph& g, VertexSet z) {
  SubcurveInvariants inv;
  inv.genus = arithmetic_genus(g, z);
  inv.delta = boundary_count(g, z);
  inv.canonical_degree = 2 * inv.genus - 2 + inv.delta;
  return inv;
}

namespace {

VertexSet reach(const DualGraph& g, int start, VertexSet within) {
  VertexSet seen = singleton(start), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (int v : members(frontier)) next |= g.neighbours(v);
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Reachability that ignores one edge index (parallel copies still count).
bool connected_without_edge(const DualGraph& g, int skip) {
  const auto& s = g.edge(skip);
  VertexSet seen = singleton(s.u), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (int v : members(frontier))
      for (int e : g.incident_edges(v)) {
        if (e == skip) continue;
        const auto& ed = g.edge(e);
        next |= singleton(ed.u) | singleton(ed.v);
      }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return contains(seen, s.v);
}

VertexSet side_without_edge(const DualGraph& g, int skip, int start) {
  VertexSet seen = singleton(start), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (int v : members(frontier))
      for (int e : g.incident_edges(v)) {
        if (e == skip) continue;
        const auto& ed = g.edge(e);
        next |= singleton(ed.u) | singleton(ed.v);
      }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected(const DualGraph& g, VertexSet z) {
  if (z == 0) return false;
  return reach(g, __builtin_ctzll(z), z) == z;
}

std::vector<VertexSet> connected_components(const DualGraph& g, VertexSet z) {
  std::vector<VertexSet> out;
  while (z) {
    VertexSet c = reach(g, __builtin_ctzll(z), z);
    out.push_back(c);
    z &= ~c;
  }
  return out;
}

std::vector<VertexSet> connected_subcurves(const DualGraph& g, int cap) {
  if (g.size() > cap)
    throw PreconditionError("subcurve enumeration refused: " + std::to_string(g.size()) +
                            " components exceed the cap of " + std::to_string(cap));
  std::vector<VertexSet> out;
  for (VertexSet z = 1; z <= g.all(); ++z)
    if (is_connected(g, z)) out.push_back(z);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    auto ma = members(a), mb = members(b);
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  });
  return out;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::strictly_semistable: return "strictly_semistable";
    case Stability::unstable: return "unstable";
  }
  return "?";
}

bool is_exceptional(const DualGraph& g, int v) {
  return g.weight(v) == 0 && g.loops(v) == 0 && g.nonloop_degree(v) == 2;
}

std::vector<int> exceptional_components(const DualGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (is_exceptional(g, v)) out.push_back(v);
  return out;
}

StabilityResult classify_stability(const DualGraph& g, int cap) {
  const int genus = g.genus();
  if (genus < 2) throw PreconditionError("genus below 2");
  const int w = 2 * genus - 2;
  StabilityResult result;
  for (VertexSet z : connected_subcurves(g, cap)) {
    if (z == g.all()) continue;
    const int wz = subcurve_invariants(g, z).canonical_degree;
    if (wz < 0 || wz > w) return {Stability::unstable, z};
    if (wz == 0 || wz == w) {
      // w_Z = w means the complement has degree 0; its components are checked on their own.
      if (wz == 0) {
        for (int v : members(z))
          if (!is_exceptional(g, v)) return {Stability::unstable, z};
      }
      result.kind = Stability::strictly_semistable;
    }
  }
  return result;
}

Stability classify_stability_local(const DualGraph& g) {
  if (g.genus() < 2) throw PreconditionError("genus below 2");
  Stability kind = Stability::stable;
  if (g.size() == 1) return kind;
  for (int v = 0; v < g.size(); ++v) {
    if (g.weight(v) > 0) continue;
    if (g.valence(v) < 2) return Stability::unstable;
    if (g.valence(v) == 2) kind = Stability::strictly_semistable;
  }
  return kind;
}

std::vector<int> separating_nodes(const DualGraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!g.edge(e).is_loop() && !connected_without_edge(g, e)) out.push_back(e);
  return out;
}

std::vector<Tail> tails(const DualGraph& g) {
  std::vector<Tail> out;
  for (int e : separating_nodes(g)) {
    const auto& ed = g.edge(e);
    out.push_back({side_without_edge(g, e, ed.u), e});
    out.push_back({side_without_edge(g, e, ed.v), e});
  }
  return out;
}

bool is_separating_line(const DualGraph& g, int v, VertexSet within) {
  if (!contains(within, v)) throw std::invalid_argument("vertex outside the subcurve");
  if (g.weight(v) != 0 || g.loops(v) != 0) return false;
  const VertexSet block = reach(g, v, within);
  const VertexSet rest = block & ~singleton(v);
  const int edges_into_rest = intersection_number(g, singleton(v), rest);
  return static_cast<int>(connected_components(g, rest).size()) == edges_into_rest;
}

std::vector<int> separating_lines(const DualGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (is_separating_line(g, v, g.all())) out.push_back(v);
  return out;
}

ComponentOrder non_disconnecting_order(const DualGraph& g) {
  if (g.size() < 2) throw PreconditionError("trivial order");
  if (!g.is_connected()) throw PreconditionError("graph is not connected");
  ComponentOrder result;
  VertexSet remaining = g.all();
  while (remaining) {
    int best = -1;
    for (int v : members(remaining)) {
      const VertexSet rest = remaining & ~singleton(v);
      if (rest && !is_connected(g, rest)) continue;
      if (best < 0 || g.nonloop_degree(v) < g.nonloop_degree(best)) best = v;
    }
    result.order.push_back(best);
    remaining &= ~singleton(best);
  }
  result.non_disconnecting = result.order.front();
  return result;
}

std::vector<std::pair<int, int>> b_pairs(const DualGraph& g) {
  if (!separating_nodes(g).empty()) throw PreconditionError("separating nodes present");
  std::vector<std::pair<int, int>> out;
  auto eligible = [&](int v) { return g.weight(v) == 0 && g.loops(v) == 0; };
  for (int c = 0; c < g.size(); ++c) {
    if (!eligible(c)) continue;
    for (int d = c + 1; d < g.size(); ++d) {
      if (!eligible(d)) continue;
      if (is_separating_line(g, c, g.all() & ~singleton(d)) && is_separating_line(g, d, g.all() & ~singleton(c)))
        out.emplace_back(c, d);
    }
  }
  return out;
}

std::vector<VertexSet> b_decomposition(const DualGraph& g, int cap) {
  if (classify_stability(g, cap).kind != Stability::stable)
    throw PreconditionError("B-decomposition needs a stable curve");
  const auto pairs = b_pairs(g);
  VertexSet used = 0;
  std::vector<VertexSet> pieces;
  for (auto [c, d] : pairs) {
    const VertexSet piece = singleton(c) | singleton(d);
    if (used & piece) throw std::logic_error("a component lies in two B-pairs of a stable curve");
    used |= piece;
    pieces.push_back(piece);
  }
  for (int v = 0; v < g.size(); ++v)
    if (!contains(used, v)) pieces.push_back(singleton(v));
  std::sort(pieces.begin(), pieces.end(),
            [](VertexSet a, VertexSet b) { return __builtin_ctzll(a) < __builtin_ctzll(b); });
  return pieces;
}

StructureReport analyze_structure(const DualGraph& g, int cap) {
  StructureReport r;
  r.separating_nodes = separating_nodes(g);
  r.tails = tails(g);
  r.separating_lines = separating_lines(g);
  r.exceptional_components = exceptional_components(g);
  if (g.size() >= 2) r.order = non_disconnecting_order(g);
  if (r.separating_nodes.empty()) {
    r.b_pairs = b_pairs(g);
    if (g.genus() >= 2 && classify_stability(g, cap).kind == Stability::stable) r.b_decomposition = b_decomposition(g, cap);
  }
  return r;
}

std::string format_set(const DualGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : members(s)) {
    if (!first) out += ",";
    out += g.vertex(v).id;
    first = false;
  }
  return out + "}";
}

}  // namespace nodal
