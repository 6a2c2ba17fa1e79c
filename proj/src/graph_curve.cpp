#include "nodal/graph_curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodal {

GraphCurve::GraphCurve(DualGraph graph, std::vector<std::array<Rational, 2>> branches,
                       std::vector<std::vector<Rational>> marked)
    : graph_(std::move(graph)), branches_(std::move(branches)), marked_(std::move(marked)) {
  const int n = graph_.size();
  if (static_cast<int>(branches_.size()) != graph_.edge_count())
    throw std::invalid_argument("one coordinate pair per edge is required");
  if (marked_.empty()) marked_.assign(static_cast<std::size_t>(n), {});
  if (static_cast<int>(marked_.size()) != n) throw std::invalid_argument("marked points per component mismatch");
  for (int v = 0; v < n; ++v)
    if (graph_.weight(v) != 0) throw std::invalid_argument("graph curve components must have weight 0");
  points_.assign(static_cast<std::size_t>(n), {});
  for (int e = 0; e < graph_.edge_count(); ++e) {
    const auto& ed = graph_.edge(e);
    points_[static_cast<std::size_t>(ed.u)].push_back(branch(e, 0));
    points_[static_cast<std::size_t>(ed.v)].push_back(branch(e, 1));
  }
  for (int v = 0; v < n; ++v) {
    std::vector<Rational> all = points_[static_cast<std::size_t>(v)];
    all.insert(all.end(), marked_[static_cast<std::size_t>(v)].begin(), marked_[static_cast<std::size_t>(v)].end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw std::invalid_argument("coincident branch coordinates on component " + graph_.vertex(v).id);
  }
}

bool GraphCurve::is_branch_point(int v, const Rational& x) const {
  const auto& pts = branch_points(v);
  return std::find(pts.begin(), pts.end(), x) != pts.end();
}

CurvePtr make_curve(DualGraph graph, std::vector<std::array<Rational, 2>> branches,
                    std::vector<std::vector<Rational>> marked) {
  return std::make_shared<const GraphCurve>(std::move(graph), std::move(branches), std::move(marked));
}

bool same_curve(const GraphCurve& a, const GraphCurve& b) {
  if (&a == &b) return true;
  const auto &ga = a.graph(), &gb = b.graph();
  if (ga.size() != gb.size() || ga.edge_count() != gb.edge_count()) return false;
  for (int e = 0; e < ga.edge_count(); ++e) {
    if (ga.edge(e).u != gb.edge(e).u || ga.edge(e).v != gb.edge(e).v) return false;
    if (a.branches()[static_cast<std::size_t>(e)] != b.branches()[static_cast<std::size_t>(e)]) return false;
  }
  return true;
}

LineBundle::LineBundle(CurvePtr curve, Multidegree degrees, std::vector<Rational> gluing)
    : curve_(std::move(curve)), degrees_(std::move(degrees)), gluing_(std::move(gluing)) {
  if (!curve_) throw std::invalid_argument("line bundle without a curve");
  if (static_cast<int>(degrees_.size()) != curve_->graph().size())
    throw std::invalid_argument("multidegree length does not match the component count");
  if (static_cast<int>(gluing_.size()) != curve_->graph().edge_count())
    throw std::invalid_argument("one gluing constant per node is required");
  for (const auto& l : gluing_)
    if (l == 0) throw std::invalid_argument("gluing constants must be nonzero");
}

LineBundle trivial_bundle(const CurvePtr& curve) {
  return bundle_with_unit_gluing(curve, Multidegree(static_cast<std::size_t>(curve->graph().size()), 0));
}

LineBundle bundle_with_unit_gluing(const CurvePtr& curve, Multidegree degrees) {
  return LineBundle(curve, std::move(degrees),
                    std::vector<Rational>(static_cast<std::size_t>(curve->graph().edge_count()), Rational(1)));
}

namespace {

void require_same_curve(const LineBundle& a, const LineBundle& b) {
  if (!same_curve(a.curve(), b.curve())) throw std::invalid_argument("line bundles live on different curves");
}

}  // namespace

LineBundle tensor(const LineBundle& a, const LineBundle& b) {
  require_same_curve(a, b);
  Multidegree d = a.degrees();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.degrees()[i];
  std::vector<Rational> l = a.gluing();
  for (std::size_t i = 0; i < l.size(); ++i) l[i] *= b.gluing()[i];
  return LineBundle(a.curve_ptr(), std::move(d), std::move(l));
}

LineBundle inverse(const LineBundle& a) {
  Multidegree d = a.degrees();
  for (auto& x : d) x = -x;
  std::vector<Rational> l = a.gluing();
  for (auto& x : l) x = Rational(1) / x;
  return LineBundle(a.curve_ptr(), std::move(d), std::move(l));
}

LineBundle canonical_bundle(const CurvePtr& curve) {
  const auto& g = curve->graph();
  Multidegree d(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) d[static_cast<std::size_t>(v)] = g.valence(v) - 2;
  auto derivative_at = [&](int v, const Rational& x) {
    Rational p = 1;
    for (const auto& y : curve->branch_points(v))
      if (y != x) p *= x - y;
    return p;
  };
  std::vector<Rational> l;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    l.push_back(-derivative_at(ed.u, curve->branch(e, 0)) / derivative_at(ed.v, curve->branch(e, 1)));
  }
  return LineBundle(curve, std::move(d), std::move(l));
}

namespace {

void require_off_nodes(const GraphCurve& c, const PointDivisor& divisor) {
  for (const auto& t : divisor) {
    if (t.component < 0 || t.component >= c.graph().size()) throw std::invalid_argument("divisor component out of range");
    if (c.is_branch_point(t.component, t.coordinate))
      throw PreconditionError("divisor hits node at " + to_string(t.coordinate) + " on " +
                              c.graph().vertex(t.component).id);
  }
}

}  // namespace

LineBundle bundle_from_divisor(const CurvePtr& curve, const PointDivisor& divisor) {
  require_off_nodes(*curve, divisor);
  const auto& g = curve->graph();
  Multidegree d(static_cast<std::size_t>(g.size()), 0);
  for (const auto& t : divisor) d[static_cast<std::size_t>(t.component)] += t.multiplicity;
  auto pole_value = [&](int v, const Rational& x) {
    Rational p = 1;
    for (const auto& t : divisor)
      if (t.component == v) p *= power(x - t.coordinate, t.multiplicity);
    return p;
  };
  std::vector<Rational> l;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    l.push_back(pole_value(ed.u, curve->branch(e, 0)) / pole_value(ed.v, curve->branch(e, 1)));
  }
  return LineBundle(curve, std::move(d), std::move(l));
}

LineBundle twist(const LineBundle& bundle, const PointDivisor& divisor, int sign) {
  PointDivisor signed_divisor = divisor;
  for (auto& t : signed_divisor) t.multiplicity *= sign;
  return tensor(bundle, bundle_from_divisor(bundle.curve_ptr(), signed_divisor));
}

namespace {

struct Layout {
  std::vector<int> offset;
  int cols = 0;
};

Layout layout_of(const Multidegree& d) {
  Layout lay;
  for (int x : d) {
    lay.offset.push_back(x >= 0 ? lay.cols : -1);
    if (x >= 0) lay.cols += x + 1;
  }
  return lay;
}

int vanishing_rows(const Multidegree& d, const PointDivisor& divisor) {
  int rows = 0;
  for (const auto& t : divisor)
    if (d[static_cast<std::size_t>(t.component)] >= 0) rows += t.multiplicity;
  return rows;
}

struct ToModPrime {
  std::optional<ModPrime> operator()(const Rational& r) const { return ModPrime::from_rational(r); }
};
struct ToRational {
  std::optional<Rational> operator()(const Rational& r) const { return r; }
};

// Rows: one gluing equation per edge, then the vanishing conditions.
template <class Field, class Convert>
std::optional<Matrix<Field>> section_matrix(const LineBundle& bundle, const PointDivisor& divisor, const Layout& lay,
                                            Convert convert) {
  const auto& c = bundle.curve();
  const auto& g = c.graph();
  const auto& d = bundle.degrees();
  const int rows = g.edge_count() + vanishing_rows(d, divisor);
  Matrix<Field> m(rows, lay.cols);
  m.setConstant(Field(0));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const int ou = lay.offset[static_cast<std::size_t>(ed.u)], ov = lay.offset[static_cast<std::size_t>(ed.v)];
    if (ou >= 0) {
      auto a = convert(c.branch(e, 0));
      if (!a) return std::nullopt;
      Field pw(1);
      for (int k = 0; k <= d[static_cast<std::size_t>(ed.u)]; ++k) {
        m(e, ou + k) += pw;
        pw *= *a;
      }
    }
    if (ov >= 0) {
      auto b = convert(c.branch(e, 1));
      auto lambda = convert(bundle.gluing(e));
      if (!b || !lambda) return std::nullopt;
      Field pw = *lambda;
      for (int k = 0; k <= d[static_cast<std::size_t>(ed.v)]; ++k) {
        m(e, ov + k) -= pw;
        pw *= *b;
      }
    }
  }
  int r = g.edge_count();
  for (const auto& t : divisor) {
    const int deg = d[static_cast<std::size_t>(t.component)];
    if (deg < 0) continue;
    const int off = lay.offset[static_cast<std::size_t>(t.component)];
    auto x = convert(t.coordinate);
    if (!x) return std::nullopt;
    for (int order = 0; order < t.multiplicity; ++order, ++r) {
      // d^order/dx^order of x^j at the point: j!/(j-order)! x^(j-order).
      for (int j = order; j <= deg; ++j) {
        Field coeff(1);
        for (int f = j; f > j - order; --f) coeff *= Field(f);
        for (int p = 0; p < j - order; ++p) coeff *= *x;
        m(r, off + j) = coeff;
      }
    }
  }
  return m;
}

int section_rank(const LineBundle& bundle, const PointDivisor& divisor, const Layout& lay, bool allow_modular) {
  if (lay.cols == 0) return 0;
  if (allow_modular) {
    if (auto mp = section_matrix<ModPrime>(bundle, divisor, lay, ToModPrime{})) {
      const auto r = rank(*mp);
      if (r == std::min(mp->rows(), mp->cols())) return static_cast<int>(r);
    }
  }
  auto mq = section_matrix<Rational>(bundle, divisor, lay, ToRational{});
  return static_cast<int>(exact_rank(*mq));
}

void require_effective(const PointDivisor& divisor) {
  for (const auto& t : divisor)
    if (t.multiplicity <= 0) throw PreconditionError("vanishing divisor must be effective");
}

}  // namespace

int h0(const LineBundle& bundle) {
  const Layout lay = layout_of(bundle.degrees());
  return lay.cols - section_rank(bundle, {}, lay, true);
}

int h0_exact(const LineBundle& bundle) {
  const Layout lay = layout_of(bundle.degrees());
  return lay.cols - section_rank(bundle, {}, lay, false);
}

int h0_vanishing(const LineBundle& bundle, const PointDivisor& divisor) {
  require_effective(divisor);
  require_off_nodes(bundle.curve(), divisor);
  const Layout lay = layout_of(bundle.degrees());
  return lay.cols - section_rank(bundle, divisor, lay, true);
}

int h1(const LineBundle& bundle) { return h0(bundle) - bundle.degree() + bundle.curve().genus() - 1; }

int h1_by_duality(const LineBundle& bundle) { return h1_by_duality(bundle, canonical_bundle(bundle.curve_ptr())); }

int h1_by_duality(const LineBundle& bundle, const LineBundle& canonical) {
  return h0(tensor(canonical, inverse(bundle)));
}

Polynomial<Rational> SectionSpace::restriction(int component, Eigen::Index k, int degree) const {
  Polynomial<Rational> p;
  const int off = offset[static_cast<std::size_t>(component)];
  if (off < 0) return p;
  for (int j = 0; j <= degree; ++j) p.push_back(basis(off + j, k));
  trim(p);
  return p;
}

SectionSpace sections(const LineBundle& bundle) {
  const Layout lay = layout_of(bundle.degrees());
  SectionSpace s;
  s.offset = lay.offset;
  if (lay.cols == 0) {
    s.basis = Matrix<Rational>(0, 0);
    return s;
  }
  s.basis = kernel_basis(*section_matrix<Rational>(bundle, {}, lay, ToRational{}));
  return s;
}

namespace {

// True when the prime-field computation proves that L has no base points at all.
bool certified_base_point_free(const LineBundle& bundle, const Layout& lay) {
  auto mp = section_matrix<ModPrime>(bundle, {}, lay, ToModPrime{});
  if (!mp) return false;
  const auto r = rank(*mp);
  if (r != std::min(mp->rows(), mp->cols())) return false;
  const Matrix<ModPrime> k = kernel_basis(*mp);
  const auto& c = bundle.curve();
  const auto& g = c.graph();
  const auto& d = bundle.degrees();
  for (int v = 0; v < g.size(); ++v) {
    const int off = lay.offset[static_cast<std::size_t>(v)];
    if (off < 0) return false;
    const int deg = d[static_cast<std::size_t>(v)];
    bool top_seen = false;
    Polynomial<ModPrime> common;
    for (Eigen::Index col = 0; col < k.cols(); ++col) {
      Polynomial<ModPrime> p;
      for (int j = 0; j <= deg; ++j) p.push_back(k(off + j, col));
      if (p.back() != ModPrime(0)) top_seen = true;
      common = gcd(common, p);
    }
    if (!top_seen || degree(common) != 0) return false;
    for (const auto& x : c.branch_points(v)) {
      auto xm = ModPrime::from_rational(x);
      if (!xm) return false;
      bool nonzero = false;
      for (Eigen::Index col = 0; col < k.cols() && !nonzero; ++col) {
        ModPrime acc(0);
        for (int j = deg; j >= 0; --j) acc = acc * *xm + k(off + j, col);
        nonzero = acc != ModPrime(0);
      }
      if (!nonzero) return false;
    }
  }
  return true;
}

}  // namespace

BasePointLocus base_points(const LineBundle& bundle) {
  const Layout lay = layout_of(bundle.degrees());
  BasePointLocus locus;
  if (h0(bundle) == 0) throw PreconditionError("no sections");
  if (certified_base_point_free(bundle, lay)) return locus;
  const SectionSpace s = sections(bundle);
  const auto& c = bundle.curve();
  const auto& g = c.graph();
  const auto& d = bundle.degrees();
  auto value_at = [&](int v, const Rational& x, Eigen::Index col) {
    return evaluate(s.restriction(v, col, d[static_cast<std::size_t>(v)]), x);
  };
  for (int v = 0; v < g.size(); ++v) {
    ComponentBaseLocus cl;
    cl.component = v;
    const int deg = d[static_cast<std::size_t>(v)];
    Polynomial<Rational> common;
    bool top_seen = false;
    if (deg >= 0) {
      for (Eigen::Index col = 0; col < s.basis.cols(); ++col) {
        auto p = s.restriction(v, col, deg);
        if (degree(p) == deg) top_seen = true;
        common = gcd(common, p);
      }
    }
    if (common.empty()) {
      cl.entire = true;
      locus.components.push_back(cl);
      continue;
    }
    Rational rem;
    for (const auto& x : c.branch_points(v)) {
      for (;;) {
        auto q = divide_by_root(common, x, rem);
        if (rem != 0) break;
        common = std::move(q);
      }
    }
    cl.at_infinity = !top_seen;
    if (degree(common) > 0 || cl.at_infinity) {
      cl.fixed_part = common;
      cl.rational_points = rational_roots(common);
      locus.components.push_back(cl);
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    bool vanishes = true;
    if (d[static_cast<std::size_t>(ed.u)] >= 0)
      for (Eigen::Index col = 0; col < s.basis.cols() && vanishes; ++col)
        vanishes = value_at(ed.u, c.branch(e, 0), col) == 0;
    if (vanishes && d[static_cast<std::size_t>(ed.v)] >= 0)
      for (Eigen::Index col = 0; col < s.basis.cols() && vanishes; ++col)
        vanishes = value_at(ed.v, c.branch(e, 1), col) == 0;
    if (vanishes) locus.nodes.push_back(e);
  }
  return locus;
}

bool is_base_point(const LineBundle& bundle, const CurvePoint& p) {
  return h0_vanishing(bundle, {{p.component, p.coordinate, 1}}) == h0(bundle);
}

namespace {

void require_distinct(const CurvePoint& p, const CurvePoint& q) {
  if (p.component == q.component && p.coordinate == q.coordinate) throw PreconditionError("points must be distinct");
}

}  // namespace

bool neutral_pair(const LineBundle& bundle, const CurvePoint& p, const CurvePoint& q) {
  require_distinct(p, q);
  const int hp = h0_vanishing(bundle, {{p.component, p.coordinate, 1}});
  const int hq = h0_vanishing(bundle, {{q.component, q.coordinate, 1}});
  if (hp != hq) return false;
  return hp == h0_vanishing(bundle, {{p.component, p.coordinate, 1}, {q.component, q.coordinate, 1}});
}

NeutralGluing neutral_gluing_constant(const LineBundle& bundle, const CurvePoint& p, const CurvePoint& q) {
  require_distinct(p, q);
  NeutralGluing out;
  const int hp = h0_vanishing(bundle, {{p.component, p.coordinate, 1}});
  const int hq = h0_vanishing(bundle, {{q.component, q.coordinate, 1}});
  if (hp != hq) return out;
  out.neutral = hp == h0_vanishing(bundle, {{p.component, p.coordinate, 1}, {q.component, q.coordinate, 1}});
  if (!out.neutral) return out;
  // Neutral points are base points together or not at all.
  if (hp == h0(bundle)) {
    out.every_constant = true;
    return out;
  }
  const SectionSpace s = sections(bundle);
  const auto& d = bundle.degrees();
  for (Eigen::Index col = 0; col < s.basis.cols(); ++col) {
    const Rational beta = evaluate(s.restriction(q.component, col, d[static_cast<std::size_t>(q.component)]), q.coordinate);
    if (beta == 0) continue;
    const Rational alpha = evaluate(s.restriction(p.component, col, d[static_cast<std::size_t>(p.component)]), p.coordinate);
    out.constant = alpha / beta;
    return out;
  }
  throw std::logic_error("neutral pair without a section nonzero at q");
}

bool is_trivial_by_sections(const LineBundle& bundle) {
  for (int x : bundle.degrees())
    if (x != 0) throw PreconditionError("triviality test needs multidegree 0");
  if (!bundle.curve().graph().is_connected()) throw PreconditionError("triviality test needs a connected curve");
  return h0(bundle) == 1;
}

bool is_trivial_by_cycles(const LineBundle& bundle) {
  for (int x : bundle.degrees())
    if (x != 0) throw PreconditionError("triviality test needs multidegree 0");
  const auto& g = bundle.curve().graph();
  if (!g.is_connected()) throw PreconditionError("triviality test needs a connected curve");
  // Constants c_v with c_u = lambda_e c_v on every edge, propagated along a spanning tree.
  std::vector<std::optional<Rational>> value(static_cast<std::size_t>(g.size()));
  std::vector<bool> tree_edge(static_cast<std::size_t>(g.edge_count()), false);
  value[0] = Rational(1);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : g.incident_edges(v)) {
      const auto& ed = g.edge(e);
      if (ed.is_loop()) continue;
      const int w = ed.u == v ? ed.v : ed.u;
      if (value[static_cast<std::size_t>(w)]) continue;
      const Rational& cv = *value[static_cast<std::size_t>(v)];
      value[static_cast<std::size_t>(w)] = ed.u == v ? cv / bundle.gluing(e) : cv * bundle.gluing(e);
      tree_edge[static_cast<std::size_t>(e)] = true;
      stack.push_back(w);
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[static_cast<std::size_t>(e)]) continue;
    const auto& ed = g.edge(e);
    if (*value[static_cast<std::size_t>(ed.u)] != bundle.gluing(e) * *value[static_cast<std::size_t>(ed.v)]) return false;
  }
  return true;
}

bool is_trivial(const LineBundle& bundle) {
  const bool by_sections = is_trivial_by_sections(bundle);
  if (by_sections != is_trivial_by_cycles(bundle))
    throw std::logic_error("triviality tests disagree");
  return by_sections;
}

bool is_isomorphic(const LineBundle& a, const LineBundle& b) {
  require_same_curve(a, b);
  if (a.degrees() != b.degrees()) return false;
  return is_trivial(tensor(a, inverse(b)));
}

LineBundle Normalization::pullback(const LineBundle& bundle) const {
  std::vector<Rational> l;
  for (int e : kept_edges) l.push_back(bundle.gluing(e));
  return LineBundle(curve, bundle.degrees(), std::move(l));
}

Normalization normalize_at(const CurvePtr& curve, const std::vector<int>& edges) {
  if (edges.empty()) throw PreconditionError("no nodes to normalize");
  const auto& g = curve->graph();
  std::vector<bool> drop(static_cast<std::size_t>(g.edge_count()), false);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("unknown edge");
    drop[static_cast<std::size_t>(e)] = true;
  }
  std::vector<Edge> kept;
  std::vector<std::array<Rational, 2>> branches;
  std::vector<std::vector<Rational>> marked;
  for (int v = 0; v < g.size(); ++v) marked.push_back(curve->marked_points(v));
  Normalization n;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (drop[static_cast<std::size_t>(e)]) {
      marked[static_cast<std::size_t>(ed.u)].push_back(curve->branch(e, 0));
      marked[static_cast<std::size_t>(ed.v)].push_back(curve->branch(e, 1));
    } else {
      kept.push_back(ed);
      branches.push_back(curve->branches()[static_cast<std::size_t>(e)]);
      n.kept_edges.push_back(e);
    }
  }
  n.curve = make_curve(DualGraph(g.vertices(), std::move(kept)), std::move(branches), std::move(marked));
  return n;
}

LineBundle Restriction::restrict(const LineBundle& bundle) const {
  Multidegree d;
  for (int v : vertex_map) d.push_back(bundle.degrees()[static_cast<std::size_t>(v)]);
  std::vector<Rational> l;
  for (int e : edge_map) l.push_back(bundle.gluing(e));
  return LineBundle(curve, std::move(d), std::move(l));
}

Restriction restrict_to(const CurvePtr& curve, VertexSet z) {
  const auto& g = curve->graph();
  if (z == 0 || (z & ~g.all())) throw std::invalid_argument("bad subcurve");
  Restriction r;
  std::vector<int> new_index(static_cast<std::size_t>(g.size()), -1);
  std::vector<Vertex> vertices;
  std::vector<std::vector<Rational>> marked;
  for (int v : members(z)) {
    new_index[static_cast<std::size_t>(v)] = static_cast<int>(vertices.size());
    vertices.push_back(g.vertex(v));
    marked.push_back(curve->marked_points(v));
    r.vertex_map.push_back(v);
  }
  std::vector<Edge> edges;
  std::vector<std::array<Rational, 2>> branches;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const bool in_u = contains(z, ed.u), in_v = contains(z, ed.v);
    if (in_u && in_v) {
      edges.push_back({new_index[static_cast<std::size_t>(ed.u)], new_index[static_cast<std::size_t>(ed.v)], ed.label});
      branches.push_back(curve->branches()[static_cast<std::size_t>(e)]);
      r.edge_map.push_back(e);
    } else if (in_u) {
      marked[static_cast<std::size_t>(new_index[static_cast<std::size_t>(ed.u)])].push_back(curve->branch(e, 0));
    } else if (in_v) {
      marked[static_cast<std::size_t>(new_index[static_cast<std::size_t>(ed.v)])].push_back(curve->branch(e, 1));
    }
  }
  r.curve = make_curve(DualGraph(std::move(vertices), std::move(edges)), std::move(branches), std::move(marked));
  return r;
}

LineBundle Gluing::extend(const LineBundle& bundle, const Rational& constant) const {
  std::vector<Rational> l = bundle.gluing();
  l.push_back(constant);
  return LineBundle(curve, bundle.degrees(), std::move(l));
}

Gluing glue(const CurvePtr& curve, const CurvePoint& p, const CurvePoint& q, std::string label) {
  require_distinct(p, q);
  const auto& g = curve->graph();
  for (const auto* pt : {&p, &q}) {
    if (pt->component < 0 || pt->component >= g.size()) throw std::invalid_argument("point component out of range");
    if (curve->is_branch_point(pt->component, pt->coordinate)) throw PreconditionError("gluing point is already a node");
  }
  std::vector<Edge> edges = g.edges();
  if (label.empty()) label = "glued" + std::to_string(g.edge_count() + 1);
  edges.push_back({p.component, q.component, label});
  auto branches = curve->branches();
  branches.push_back({p.coordinate, q.coordinate});
  std::vector<std::vector<Rational>> marked;
  for (int v = 0; v < g.size(); ++v) {
    auto m = curve->marked_points(v);
    for (const auto* pt : {&p, &q})
      if (pt->component == v) m.erase(std::remove(m.begin(), m.end(), pt->coordinate), m.end());
    marked.push_back(std::move(m));
  }
  Gluing out;
  out.curve = make_curve(DualGraph(g.vertices(), std::move(edges)), std::move(branches), std::move(marked));
  out.new_edge = g.edge_count();
  return out;
}

}  // namespace nodal
