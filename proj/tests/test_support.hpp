#pragma once

// Oracles written against the definitions directly, without the library's
// subcurve machinery, plus small curve builders shared by the unit tests.

#include "nodal/balance.hpp"
#include "nodal/graph_curve.hpp"
#include "nodal/sampling.hpp"

#include <set>
#include <string>
#include <vector>

namespace testing_support {

using namespace nodal;

inline int vertex_w(const DualGraph& g, int v) { return 2 * g.weight(v) - 2 + g.valence(v); }

// The canonical degree is additive over components, so w_Z needs no genus.
inline int subset_w(const DualGraph& g, VertexSet z) {
  int w = 0;
  for (int v = 0; v < g.size(); ++v)
    if (contains(z, v)) w += vertex_w(g, v);
  return w;
}

inline int subset_delta(const DualGraph& g, VertexSet z) {
  int n = 0;
  for (const auto& e : g.edges())
    if (contains(z, e.u) != contains(z, e.v)) ++n;
  return n;
}

// Exceptional: weight 0, no loops, meets the rest in exactly two points.
inline bool naive_exceptional(const DualGraph& g, int v) {
  return g.weight(v) == 0 && g.loops(v) == 0 && g.nonloop_degree(v) == 2;
}

// The basic inequality on every nonempty subset, cleared of denominators:
// |2 w d_Z - 2 d w_Z| <= w delta_Z, and degree one on exceptional components.
inline bool naive_balanced(const DualGraph& g, const Multidegree& d) {
  const int w = subset_w(g, g.all());
  const int deg = total(d);
  for (VertexSet z = 1; z <= g.all(); ++z) {
    int dz = 0;
    for (int v = 0; v < g.size(); ++v)
      if (contains(z, v)) dz += d[static_cast<std::size_t>(v)];
    const long long lhs = 2LL * w * dz - 2LL * deg * subset_w(g, z);
    if ((lhs < 0 ? -lhs : lhs) > 1LL * w * subset_delta(g, z)) return false;
  }
  for (int v = 0; v < g.size(); ++v)
    if (naive_exceptional(g, v) && d[static_cast<std::size_t>(v)] != 1) return false;
  return true;
}

// Every multidegree of total `deg` with entries in [-reach, deg + reach] passing
// the naive test.
inline std::set<Multidegree> naive_balanced_set(const DualGraph& g, int deg, int reach) {
  std::set<Multidegree> out;
  Multidegree d(static_cast<std::size_t>(g.size()), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == g.size() - 1) {
      d[static_cast<std::size_t>(i)] = left;
      if (left >= -reach && left <= deg + reach && naive_balanced(g, d)) out.insert(d);
      return;
    }
    for (int x = -reach; x <= deg + reach; ++x) {
      d[static_cast<std::size_t>(i)] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, deg);
  return out;
}

// Sections written out by hand: one unknown per coefficient of each f_v, one
// equation f_u(a) = lambda f_v(b) per node, rank by plain rational elimination.
inline int naive_h0(const LineBundle& L) {
  const auto& c = L.curve();
  const auto& g = c.graph();
  std::vector<int> offset(static_cast<std::size_t>(g.size()), -1);
  int unknowns = 0;
  for (int v = 0; v < g.size(); ++v) {
    const int d = L.degrees()[static_cast<std::size_t>(v)];
    if (d < 0) continue;
    offset[static_cast<std::size_t>(v)] = unknowns;
    unknowns += d + 1;
  }
  std::vector<std::vector<Rational>> rows;
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<Rational> row(static_cast<std::size_t>(unknowns), Rational(0));
    const auto& ed = g.edge(e);
    auto add = [&](int v, const Rational& x, const Rational& scale) {
      const int off = offset[static_cast<std::size_t>(v)];
      if (off < 0) return;
      Rational p(1);
      for (int k = 0; k <= L.degrees()[static_cast<std::size_t>(v)]; ++k, p *= x)
        row[static_cast<std::size_t>(off + k)] += scale * p;
    };
    add(ed.u, c.branch(e, 0), Rational(1));
    add(ed.v, c.branch(e, 1), -L.gluing(e));
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < unknowns && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& top = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
      const Rational f = rows[i][static_cast<std::size_t>(col)] / top[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j < unknowns; ++j)
        rows[i][static_cast<std::size_t>(j)] -= f * top[static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  return unknowns - rank;
}

// Two lines meeting in n points with the given coordinates.
inline CurvePtr binary_curve(const std::vector<std::pair<int, int>>& coordinates) {
  std::vector<Edge> edges;
  std::vector<std::array<Rational, 2>> branches;
  int k = 0;
  for (const auto& [a, b] : coordinates) {
    edges.push_back({0, 1, "n" + std::to_string(++k)});
    branches.push_back({Rational(a), Rational(b)});
  }
  return make_curve(DualGraph({{"C1", 0}, {"C2", 0}}, std::move(edges)), std::move(branches));
}

// A line with `loops` nodes; loop k joins 2k+1 and 2k+2.
inline CurvePtr looped_line(int loops) {
  std::vector<Edge> edges;
  std::vector<std::array<Rational, 2>> branches;
  for (int k = 0; k < loops; ++k) {
    edges.push_back({0, 0, ""});
    branches.push_back({Rational(2 * k + 1), Rational(2 * k + 2)});
  }
  return make_curve(DualGraph({{"C1", 0}}, std::move(edges)), std::move(branches));
}

// Graph from an adjacency list of (u, v) pairs on n weight-0 vertices C1..Cn.
inline DualGraph graph_of(int n, const std::vector<std::pair<int, int>>& pairs, std::vector<int> weights = {}) {
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i)
    vs.push_back({"C" + std::to_string(i + 1), weights.empty() ? 0 : weights[static_cast<std::size_t>(i)]});
  std::vector<Edge> es;
  for (const auto& [u, v] : pairs) es.push_back({u, v, ""});
  return DualGraph(std::move(vs), std::move(es));
}

}  // namespace testing_support
