#include "nodal/special_pairs.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodal {

MarkedTuples marked_tuples(const GraphCurve& curve, std::pair<int, int> pair) {
  const auto& g = curve.graph();
  const auto pairs = b_pairs(g);
  const auto [c, d] = pair;
  const bool listed = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
    return (p.first == c && p.second == d) || (p.first == d && p.second == c);
  });
  if (!listed) throw PreconditionError("not a B-pair");

  MarkedTuples t;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.u == c && ed.v == d) {
      t.first.push_back(curve.branch(e, 0));
      t.second.push_back(curve.branch(e, 1));
      t.shared_edges.push_back(e);
    } else if (ed.u == d && ed.v == c) {
      t.first.push_back(curve.branch(e, 1));
      t.second.push_back(curve.branch(e, 0));
      t.shared_edges.push_back(e);
    }
  }
  const VertexSet rest = g.all() & ~singleton(c) & ~singleton(d);
  auto pieces = connected_components(g, rest);
  std::sort(pieces.begin(), pieces.end(), [](VertexSet a, VertexSet b) { return members(a).front() < members(b).front(); });
  for (VertexSet piece : pieces) {
    int on_first = -1, on_second = -1;
    Rational x, y;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      for (int end = 0; end < 2; ++end) {
        const int here = end == 0 ? ed.u : ed.v, there = end == 0 ? ed.v : ed.u;
        if (!contains(piece, there)) continue;
        if (here == c) {
          if (on_first >= 0) throw PreconditionError("piece meets the first line twice");
          on_first = e;
          x = curve.branch(e, end);
        } else if (here == d) {
          if (on_second >= 0) throw PreconditionError("piece meets the second line twice");
          on_second = e;
          y = curve.branch(e, end);
        }
      }
    }
    if (on_first < 0 || on_second < 0) throw PreconditionError("piece misses one line of the pair");
    t.first.push_back(x);
    t.second.push_back(y);
    t.connector_edges.emplace_back(on_first, on_second);
    t.connectors.push_back(piece);
  }
  return t;
}

std::optional<Rational> Mobius::apply(const Rational& z) const {
  const Rational den = c * z + d;
  if (den == 0) return std::nullopt;
  return (a * z + b) / den;
}

namespace {

// Sends x0 -> 0, x1 -> infinity, x2 -> 1.
std::array<Rational, 4> normalizing_matrix(const std::array<Rational, 3>& x) {
  return {x[2] - x[1], -x[0] * (x[2] - x[1]), x[2] - x[0], -x[1] * (x[2] - x[0])};
}

void require_distinct(const std::array<Rational, 3>& x) {
  if (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]) throw std::invalid_argument("points must be distinct");
}

}  // namespace

Mobius mobius_through(const std::array<Rational, 3>& from, const std::array<Rational, 3>& to) {
  require_distinct(from);
  require_distinct(to);
  const auto s = normalizing_matrix(from);
  const auto t = normalizing_matrix(to);
  // adjugate of t, then compose
  const std::array<Rational, 4> inv{t[3], -t[1], -t[2], t[0]};
  return {inv[0] * s[0] + inv[1] * s[2], inv[0] * s[1] + inv[1] * s[3], inv[2] * s[0] + inv[3] * s[2],
          inv[2] * s[1] + inv[3] * s[3]};
}

Rational cross_ratio(const Rational& a, const Rational& b, const Rational& c, const Rational& x) {
  return ((x - a) * (b - c)) / ((x - c) * (b - a));
}

bool projectively_equivalent(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t k = 3; k < lhs.size(); ++k)
    if (cross_ratio(lhs[0], lhs[1], lhs[2], lhs[k]) != cross_ratio(rhs[0], rhs[1], rhs[2], rhs[k])) return false;
  return true;
}

bool is_special_b_pair(const GraphCurve& curve, std::pair<int, int> pair) {
  const auto t = marked_tuples(curve, pair);
  return projectively_equivalent(t.first, t.second);
}

}  // namespace nodal
