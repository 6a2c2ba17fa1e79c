#include "nodal/classify.hpp"

#include "nodal/special_pairs.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace nodal {

std::string to_string(PencilPattern p) {
  switch (p) {
    case PencilPattern::none: return "none";
    case PencilPattern::special_pair: return "special-b-pair";
    case PencilPattern::hub: return "hub";
  }
  return "?";
}

std::string to_string(PencilStatus s) {
  switch (s) {
    case PencilStatus::certified: return "certified";
    case PencilStatus::undetermined: return "undetermined";
    case PencilStatus::fails: return "fails";
  }
  return "?";
}

const PencilCandidate* PencilClassification::witness() const {
  for (const auto& c : candidates)
    if (c.balanced && c.status == PencilStatus::certified) return &c;
  return nullptr;
}

namespace {

using Vec3 = std::array<Rational, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Coefficients (alpha, beta) with target = alpha x + beta y, when they exist.
std::optional<std::pair<Rational, Rational>> solve_in_span(const Vec3& target, const Vec3& x, const Vec3& y) {
  if (dot(cross(x, y), target) != 0) return std::nullopt;
  for (int r = 0; r < 3; ++r)
    for (int s = r + 1; s < 3; ++s) {
      const Rational det = x[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(s)] -
                           x[static_cast<std::size_t>(s)] * y[static_cast<std::size_t>(r)];
      if (det == 0) continue;
      const Rational a = (target[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(s)] -
                          target[static_cast<std::size_t>(s)] * y[static_cast<std::size_t>(r)]) /
                         det;
      const Rational b = (x[static_cast<std::size_t>(r)] * target[static_cast<std::size_t>(s)] -
                          x[static_cast<std::size_t>(s)] * target[static_cast<std::size_t>(r)]) /
                         det;
      return std::make_pair(a, b);
    }
  return std::nullopt;
}

// Value at x of every basis section of a one-component bundle.
std::vector<Rational> evaluations(const SectionSpace& space, int degree, const Rational& x) {
  std::vector<Rational> out;
  for (Eigen::Index k = 0; k < space.basis.cols(); ++k) {
    Rational value = 0, power = 1;
    for (int j = 0; j <= degree; ++j) {
      value += space.basis(space.offset[0] + j, k) * power;
      power *= x;
    }
    out.push_back(value);
  }
  return out;
}

Rational fresh_point(const GraphCurve& curve, int v, const std::vector<Rational>& avoid) {
  for (int k = 0;; ++k) {
    const Rational x((k % 2 == 0) ? k / 2 : -(k + 1) / 2);
    if (curve.is_branch_point(v, x)) continue;
    if (std::find(avoid.begin(), avoid.end(), x) != avoid.end()) continue;
    return x;
  }
}

void set_why(std::string* why, const std::string& text) {
  if (why) *why = text;
}

std::vector<Multidegree> nonnegative_total_two(int n) {
  std::vector<Multidegree> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Multidegree d(static_cast<std::size_t>(n), 0);
      ++d[static_cast<std::size_t>(i)];
      ++d[static_cast<std::size_t>(j)];
      out.push_back(d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

void classify_candidate(const DualGraph& g, const CurvePtr& curve, const std::vector<std::pair<int, int>>& pairs,
                        PencilCandidate& cand) {
  std::vector<int> ones, twos;
  bool other = false;
  for (int v = 0; v < g.size(); ++v) {
    const int x = cand.degrees[static_cast<std::size_t>(v)];
    if (x == 1)
      ones.push_back(v);
    else if (x == 2)
      twos.push_back(v);
    else if (x != 0)
      other = true;
  }
  if (!other && ones.size() == 2 && twos.empty()) {
    const std::pair<int, int> pair{ones[0], ones[1]};
    if (std::find(pairs.begin(), pairs.end(), pair) == pairs.end()) {
      cand.detail = "not a B-pair";
      return;
    }
    cand.pattern = PencilPattern::special_pair;
    if (!curve) {
      cand.status = PencilStatus::undetermined;
      cand.detail = "B-pair; specialness needs a realization";
      return;
    }
    auto bundle = special_pair_pencil(curve, pair);
    if (!bundle) {
      cand.detail = "marked lines not isomorphic";
      return;
    }
    const int h = h0(*bundle);
    if (h != 2) {
      cand.detail = "constructed bundle has h0=" + std::to_string(h);
      return;
    }
    cand.status = PencilStatus::certified;
    cand.detail = "special B-pair, h0=2";
    cand.bundle = std::move(bundle);
    return;
  }
  if (!other && ones.empty() && twos.size() == 1) {
    const int hub = twos[0];
    for (VertexSet z : connected_components(g, g.all() & ~singleton(hub)))
      if (intersection_number(g, singleton(hub), z) != 2) {
        cand.detail = "piece " + format_set(g, z) + " meets the hub " +
                      std::to_string(intersection_number(g, singleton(hub), z)) + " times";
        return;
      }
    cand.pattern = PencilPattern::hub;
    if (!curve) {
      cand.status = PencilStatus::undetermined;
      cand.detail = "every piece meets the hub twice; bundle conditions need a realization";
      return;
    }
    std::string why;
    auto bundle = hub_pencil(curve, hub, &why);
    if (!bundle) {
      cand.detail = why;
      return;
    }
    const int h = h0(*bundle);
    if (h != 2) {
      cand.detail = "constructed bundle has h0=" + std::to_string(h);
      return;
    }
    cand.status = PencilStatus::certified;
    cand.detail = "hub pencil, h0=2";
    cand.bundle = std::move(bundle);
    return;
  }
  cand.detail = "neither (1,1,0..0) nor (2,0..0)";
}

// Two components joined by one node: (1,1) works once the smaller genus is at
// least (g + 1) / 4; otherwise it hinges on the larger component.
PencilClassification compact_type_rule(const DualGraph& g, const CurvePtr& curve, int cap) {
  PencilClassification out;
  out.applicable = true;
  const int g0 = arithmetic_genus(g, singleton(0)), g1 = arithmetic_genus(g, singleton(1));
  const int small = g0 <= g1 ? 0 : 1, large = 1 - small;
  const int gs = std::min(g0, g1);
  const int genus = g.genus();
  const auto balanced = enumerate_balanced(g, 2, cap);
  for (const auto& d : balanced) {
    PencilCandidate cand;
    cand.degrees = d;
    cand.balanced = true;
    if (d[0] == 1 && d[1] == 1 && 4 * gs >= genus + 1) {
      cand.pattern = PencilPattern::special_pair;
      if (!curve) {
        cand.status = PencilStatus::undetermined;
        cand.detail = "compact type, (1,1) balanced; sections of O(q1)+O(q2) need a realization";
      } else {
        // O(q) on each side, q the branch of the node.
        int node = -1;
        for (int e = 0; e < g.edge_count(); ++e)
          if (!g.edge(e).is_loop()) node = e;
        std::vector<Rational> l;
        for (int e = 0; e < g.edge_count(); ++e) {
          const auto& ed = g.edge(e);
          if (e == node) {
            l.push_back(1);
            continue;
          }
          const Rational q = curve->branch(node, ed.u == g.edge(node).u ? 0 : 1);
          l.push_back((curve->branch(e, 0) - q) / (curve->branch(e, 1) - q));
        }
        LineBundle bundle(curve, d, std::move(l));
        const int h = h0(bundle);
        if (h == 2) {
          cand.status = PencilStatus::certified;
          cand.detail = "O(q1)+O(q2), h0=2";
          cand.bundle = bundle;
        } else {
          cand.detail = "O(q1)+O(q2) has h0=" + std::to_string(h);
        }
      }
    } else if (d[static_cast<std::size_t>(small)] == 0 && d[static_cast<std::size_t>(large)] == 2) {
      cand.pattern = PencilPattern::hub;
      cand.status = PencilStatus::undetermined;
      cand.detail = "holds iff " + g.vertex(large).id + " carries a degree-2 pencil";
    } else {
      cand.detail = "no pencil in this multidegree";
    }
    out.candidates.push_back(std::move(cand));
  }
  return out;
}

std::string overall(const PencilClassification& c) {
  bool undetermined = false;
  for (const auto& cand : c.candidates) {
    if (!cand.balanced) continue;
    if (cand.status == PencilStatus::certified) return "weakly-hyperelliptic";
    if (cand.status == PencilStatus::undetermined) undetermined = true;
  }
  return undetermined ? "undetermined" : "not-weakly-hyperelliptic";
}

}  // namespace

std::optional<LineBundle> special_pair_pencil(const CurvePtr& curve, std::pair<int, int> pair) {
  const auto& g = curve->graph();
  const auto t = marked_tuples(*curve, pair);
  if (!projectively_equivalent(t.first, t.second)) return std::nullopt;
  const auto [c, d] = pair;
  std::vector<Rational> from = t.first, to = t.second;
  while (from.size() < 3) {
    from.push_back(fresh_point(*curve, c, from));
    to.push_back(fresh_point(*curve, d, to));
  }
  const Mobius mu = mobius_through({from[0], from[1], from[2]}, {to[0], to[1], to[2]});
  // f_c(z) = (mu.c z + mu.d) l(mu(z)) and f_d(w) = l(w); constants elsewhere.
  auto scale = [&](int v, const Rational& x) -> Rational { return v == c ? mu.c * x + mu.d : Rational(1); };
  Multidegree degrees(static_cast<std::size_t>(g.size()), 0);
  degrees[static_cast<std::size_t>(c)] = 1;
  degrees[static_cast<std::size_t>(d)] = 1;
  std::vector<Rational> l;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const Rational su = scale(ed.u, curve->branch(e, 0)), sv = scale(ed.v, curve->branch(e, 1));
    if (su == 0 || sv == 0) return std::nullopt;
    l.push_back(su / sv);
  }
  return LineBundle(curve, std::move(degrees), std::move(l));
}

std::optional<LineBundle> hub_pencil(const CurvePtr& curve, int hub, std::string* why) {
  const auto& g = curve->graph();
  struct Piece {
    std::array<int, 2> edges{-1, -1};
    std::array<Rational, 2> at;
    Rational ratio = 1;  // f(first) = ratio * f(second) on the pencil
  };
  std::vector<Piece> pieces;
  for (VertexSet z : connected_components(g, g.all() & ~singleton(hub))) {
    Piece p;
    int found = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      int end = -1;
      if (ed.u == hub && contains(z, ed.v)) end = 0;
      if (ed.v == hub && contains(z, ed.u)) end = 1;
      if (end < 0) continue;
      if (found == 2) {
        set_why(why, "a piece meets the hub more than twice");
        return std::nullopt;
      }
      p.edges[static_cast<std::size_t>(found)] = e;
      p.at[static_cast<std::size_t>(found)] = curve->branch(e, end);
      ++found;
    }
    if (found != 2) {
      set_why(why, "a piece meets the hub " + std::to_string(found) + " times");
      return std::nullopt;
    }
    pieces.push_back(p);
  }
  if (pieces.empty()) {
    set_why(why, "hub is the whole curve");
    return std::nullopt;
  }

  const Restriction r = restrict_to(curve, singleton(hub));
  auto pair_bundle = [&](const Piece& p) {
    return bundle_from_divisor(r.curve, {{0, p.at[0], 1}, {0, p.at[1], 1}});
  };
  const LineBundle on_hub = pair_bundle(pieces[0]);
  for (std::size_t i = 1; i < pieces.size(); ++i)
    if (!is_isomorphic(pair_bundle(pieces[i]), on_hub)) {
      set_why(why, "O(p+q) classes on the hub differ");
      return std::nullopt;
    }
  const SectionSpace space = sections(on_hub);
  const auto dim = space.basis.cols();
  if (dim == 2) {
    for (auto& p : pieces) {
      const auto a = evaluations(space, 2, p.at[0]), b = evaluations(space, 2, p.at[1]);
      if ((a[0] == 0 && a[1] == 0) || (b[0] == 0 && b[1] == 0) || a[0] * b[1] != a[1] * b[0]) {
        set_why(why, "hub points of a piece are not a neutral pair");
        return std::nullopt;
      }
      p.ratio = b[0] != 0 ? a[0] / b[0] : a[1] / b[1];
    }
  } else if (dim == 3) {
    // The pencil is the annihilator of one functional lying in every span(ev_p, ev_q).
    auto vec = [&](const Rational& x) {
      const auto v = evaluations(space, 2, x);
      return Vec3{v[0], v[1], v[2]};
    };
    std::vector<std::pair<Vec3, Vec3>> ev;
    for (const auto& p : pieces) ev.emplace_back(vec(p.at[0]), vec(p.at[1]));
    Vec3 functional{Rational(0), Rational(0), Rational(0)};
    const Vec3 normal0 = cross(ev[0].first, ev[0].second);
    for (std::size_t i = 1; i < ev.size() && is_zero(functional); ++i)
      functional = cross(normal0, cross(ev[i].first, ev[i].second));
    if (is_zero(functional))
      for (int k = 0; k < 3; ++k)
        functional[static_cast<std::size_t>(k)] =
            ev[0].first[static_cast<std::size_t>(k)] + ev[0].second[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < ev.size(); ++i) {
      const auto coeff = solve_in_span(functional, ev[i].first, ev[i].second);
      if (!coeff || coeff->first == 0 || coeff->second == 0) {
        set_why(why, "the point pairs are not exchanged by one involution of the hub");
        return std::nullopt;
      }
      pieces[i].ratio = -coeff->second / coeff->first;
    }
  } else {
    set_why(why, "h0 on the hub is " + std::to_string(dim));
    return std::nullopt;
  }

  std::map<int, int> hub_loop;  // original edge -> edge of the restriction
  for (std::size_t k = 0; k < r.edge_map.size(); ++k) hub_loop[r.edge_map[k]] = static_cast<int>(k);
  Multidegree degrees(static_cast<std::size_t>(g.size()), 0);
  degrees[static_cast<std::size_t>(hub)] = 2;
  std::vector<Rational> l(static_cast<std::size_t>(g.edge_count()), Rational(1));
  for (const auto& [e, k] : hub_loop) l[static_cast<std::size_t>(e)] = on_hub.gluing(k);
  for (const auto& p : pieces) {
    const int e = p.edges[0];
    l[static_cast<std::size_t>(e)] = g.edge(e).u == hub ? p.ratio : 1 / p.ratio;
  }
  return LineBundle(curve, std::move(degrees), std::move(l));
}

PencilClassification weakly_hyperelliptic_classify(const DualGraph& graph, const CurvePtr& curve, int cap) {
  const DualGraph& g = curve ? curve->graph() : graph;
  PencilClassification out;
  auto refuse = [&](std::string why) {
    out.applicable = false;
    out.reason = std::move(why);
    out.verdict = "not-applicable";
    return out;
  };
  if (!g.is_connected()) return refuse("curve is not connected");
  const auto stability = classify_stability(g, cap).kind;
  if (stability == Stability::unstable) return refuse("curve is not semistable");
  if (!separating_nodes(g).empty()) {
    if (g.size() == 2 && intersection_number(g, singleton(0), singleton(1)) == 1) {
      out = compact_type_rule(g, curve, cap);
      out.verdict = overall(out);
      return out;
    }
    return refuse("separating nodes present");
  }
  out.applicable = true;
  const auto pairs = b_pairs(g);
  const auto balanced = enumerate_balanced(g, 2, cap);
  for (const auto& d : balanced) {
    PencilCandidate cand;
    cand.degrees = d;
    cand.balanced = true;
    classify_candidate(g, curve, pairs, cand);
    out.candidates.push_back(std::move(cand));
  }
  if (stability == Stability::stable)
    for (const auto& d : nonnegative_total_two(g.size())) {
      if (std::find(balanced.begin(), balanced.end(), d) != balanced.end()) continue;
      PencilCandidate cand;
      cand.degrees = d;
      classify_candidate(g, curve, pairs, cand);
      out.candidates.push_back(std::move(cand));
    }
  out.verdict = overall(out);
  return out;
}

HypcombResult hypcomb_check(const DualGraph& graph, const CurvePtr& curve, int cap) {
  const DualGraph& g = curve ? curve->graph() : graph;
  HypcombResult out;
  if (!g.is_connected()) {
    out.reason = "curve is not connected";
    return out;
  }
  if (classify_stability(g, cap).kind != Stability::stable) {
    out.reason = "curve is not stable";
    return out;
  }
  if (!separating_nodes(g).empty()) {
    out.reason = "separating nodes present";
    return out;
  }
  out.applicable = true;
  out.pieces = b_decomposition(g, cap);
  auto boundary_h0 = [&](VertexSet a, VertexSet b) {
    const Restriction r = restrict_to(curve, a);
    std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t k = 0; k < r.vertex_map.size(); ++k) local[static_cast<std::size_t>(r.vertex_map[k])] = static_cast<int>(k);
    PointDivisor divisor;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      if (contains(a, ed.u) && contains(b, ed.v)) divisor.push_back({local[static_cast<std::size_t>(ed.u)], curve->branch(e, 0), 1});
      if (contains(a, ed.v) && contains(b, ed.u)) divisor.push_back({local[static_cast<std::size_t>(ed.v)], curve->branch(e, 1), 1});
    }
    return h0(bundle_from_divisor(r.curve, divisor));
  };
  out.passes = true;
  for (std::size_t i = 0; i < out.pieces.size(); ++i)
    for (std::size_t j = i + 1; j < out.pieces.size(); ++j) {
      HypcombPair p;
      p.first = out.pieces[i];
      p.second = out.pieces[j];
      p.meet = intersection_number(g, p.first, p.second);
      if (p.meet == 0) continue;
      if (p.meet != 2) {
        p.ok = false;
      } else if (curve) {
        p.first_h0 = boundary_h0(p.first, p.second);
        p.second_h0 = boundary_h0(p.second, p.first);
        p.ok = *p.first_h0 >= 2 && *p.second_h0 >= 2;
      }
      if (!p.ok && out.passes) {
        out.passes = false;
        out.witness = std::make_pair(p.first, p.second);
      }
      out.pairs.push_back(p);
    }
  return out;
}

CertifiedCliffordIndex clifford_index_certified(const CurvePtr& curve, const SweepOptions& options) {
  CertifiedCliffordIndex out;
  out.bound = clifford_index_curve(curve, options);
  const auto cls = weakly_hyperelliptic_classify(curve->graph(), curve, options.subcurve_cap);
  if (const auto* w = cls.witness(); w && w->bundle && h1(*w->bundle) >= 2) {
    out.bound.bound = 0;
    out.bound.witness = *w->bundle;
    out.bound.witness_label = "pencil:" + to_string(w->pattern);
    out.exact = curve->graph().size() == 2;
  }
  return out;
}

}  // namespace nodal
