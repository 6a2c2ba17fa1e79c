#include "nodal/verifiers.hpp"

#include "nodal/sampling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nodal {

namespace {

std::string num(int x) { return std::to_string(x); }

std::string ids_of(const DualGraph& g, const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) out += (out.empty() ? "" : ",") + g.vertex(v).id;
  return out;
}

std::string labels_of(const DualGraph& g, const std::vector<int>& es) {
  std::string out;
  for (int e : es) out += (out.empty() ? "" : ",") + g.edge(e).label;
  return out;
}

// Iterates integer vectors with lo <= x <= hi and entries summing to `sum`.
// Returns false without iterating when the box exceeds the cap.
bool for_each_in_box(const std::vector<int>& lo, const std::vector<int>& hi, int sum, long long cap,
                     const std::function<void(const Multidegree&)>& fn) {
  long long cells = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return true;
    cells *= hi[i] - lo[i] + 1;
    if (cells > cap) return false;
  }
  const std::size_t n = lo.size();
  Multidegree cur(n);
  std::vector<int> min_rest(n + 1, 0), max_rest(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    min_rest[i] = min_rest[i + 1] + lo[i];
    max_rest[i] = max_rest[i + 1] + hi[i];
  }
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      if (left == 0) fn(cur);
      return;
    }
    for (int x = lo[i]; x <= hi[i]; ++x) {
      const int rest = left - x;
      if (rest < min_rest[i + 1] || rest > max_rest[i + 1]) continue;
      cur[i] = x;
      self(self, i + 1, rest);
    }
  };
  rec(rec, 0, sum);
  return true;
}

std::vector<Multidegree> nonnegative_of_total(int size, int sum) {
  std::vector<Multidegree> out;
  for_each_in_box(std::vector<int>(static_cast<std::size_t>(size), 0),
                  std::vector<int>(static_cast<std::size_t>(size), sum), sum, default_box_cap,
                  [&](const Multidegree& d) { out.push_back(d); });
  return out;
}

std::vector<Multidegree> nonpositive_of_total(int size, int sum) {
  std::vector<Multidegree> out;
  for_each_in_box(std::vector<int>(static_cast<std::size_t>(size), sum),
                  std::vector<int>(static_cast<std::size_t>(size), 0), sum, default_box_cap,
                  [&](const Multidegree& d) { out.push_back(d); });
  return out;
}

// Boundary branches of z as a divisor on the restricted curve.
PointDivisor boundary_divisor(const GraphCurve& curve, const Restriction& r, VertexSet z) {
  std::map<int, int> local;
  for (std::size_t k = 0; k < r.vertex_map.size(); ++k) local[r.vertex_map[k]] = static_cast<int>(k);
  PointDivisor out;
  const auto& g = curve.graph();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const bool in_u = contains(z, ed.u), in_v = contains(z, ed.v);
    if (in_u == in_v) continue;
    const int end = in_u ? 0 : 1;
    out.push_back({local.at(in_u ? ed.u : ed.v), curve.branch(e, end), 1});
  }
  return out;
}

int cliff_of(int degree, int sections) { return degree - 2 * sections + 2; }

struct Context {
  const CurvePtr& curve;
  const SweepOptions& options;
  std::string name;
  Report report;

  Context(const CurvePtr& c, const SweepOptions& o, const std::string& n)
      : curve(c), options(o), name(n.empty() ? describe_graph(c->graph()) : n), report(o.keep_passes) {}

  const DualGraph& graph() const { return curve->graph(); }

  void check(bool ok, const std::string& theorem, const Multidegree& d, const std::string& sample,
             const std::function<std::string()>& claim, const std::function<std::string()>& computed,
             const std::function<std::string()>& witness = {}) {
    report.record(ok ? Verdict::pass : Verdict::fail, [&] {
      ReportEntry e;
      e.theorem = theorem;
      e.curve = name;
      e.multidegree = d.empty() ? std::string() : format_multidegree(d);
      e.sample = sample;
      e.claim = claim();
      e.computed = computed();
      if (witness) e.witness = witness();
      return e;
    });
  }

  void not_applicable(const std::string& theorem, const Multidegree& d, const std::string& why,
                      const std::string& computed = "-") {
    ReportEntry e;
    e.theorem = theorem;
    e.curve = name;
    e.multidegree = d.empty() ? std::string() : format_multidegree(d);
    e.claim = "hypotheses";
    e.computed = computed;
    e.verdict = Verdict::not_applicable;
    e.witness = why;
    report.add(std::move(e));
  }
};

std::string failing_gluing(const LineBundle& b) { return "gluing=" + format_gluing(b); }

}  // namespace

std::string describe_graph(const DualGraph& graph) {
  std::map<std::pair<int, int>, int> mult;
  for (const auto& e : graph.edges()) ++mult[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  std::string out = "g=" + num(graph.genus());
  if (graph.edge_count() == 0)
    for (int v = 0; v < graph.size(); ++v) out += "," + graph.vertex(v).id;
  for (const auto& [key, m] : mult)
    out += "," + graph.vertex(key.first).id + "-" + graph.vertex(key.second).id + (m > 1 ? "x" + num(m) : "");
  return out;
}

std::string format_gluing(const LineBundle& bundle) {
  std::string out = "(";
  for (std::size_t e = 0; e < bundle.gluing().size(); ++e)
    out += (e ? "," : "") + to_string(bundle.gluing()[e]);
  return out + ")";
}

std::string format_base_points(const LineBundle& bundle, const BasePointLocus& locus) {
  if (locus.empty()) return "none";
  const auto& g = bundle.curve().graph();
  std::string out;
  for (const auto& c : locus.components) {
    out += (out.empty() ? "" : ";") + g.vertex(c.component).id + ":";
    if (c.entire) {
      out += "entire";
      continue;
    }
    std::string pts;
    for (const auto& x : c.rational_points) pts += (pts.empty() ? "" : ",") + to_string(x);
    if (c.at_infinity) pts += (pts.empty() ? "" : ",") + std::string("inf");
    if (degree(c.fixed_part) > static_cast<int>(c.rational_points.size()))
      pts += (pts.empty() ? "" : ",") + std::string("roots-of(") + format_polynomial(c.fixed_part) + ")";
    out += pts;
  }
  if (!locus.nodes.empty()) {
    std::vector<int> nodes(locus.nodes.begin(), locus.nodes.end());
    out += (out.empty() ? "" : ";") + std::string("nodes:") + labels_of(g, nodes);
  }
  return out;
}

LineBundle bundle_with_constant_gluing(const CurvePtr& curve, const Multidegree& degrees, const Rational& constant) {
  return LineBundle(curve, degrees, std::vector<Rational>(static_cast<std::size_t>(curve->graph().edge_count()), constant));
}

std::vector<Sample> sample_bundles(const CurvePtr& curve, const Multidegree& degrees, const SweepOptions& options) {
  std::vector<Sample> out;
  out.push_back({"unit", bundle_with_unit_gluing(curve, degrees)});
  if (curve->graph().edge_count() == 0) return out;  // nothing to glue
  for (std::size_t i = 0; i < options.seeds.size(); ++i) {
    const auto seed = options.seeds[i];
    Engine rng = make_engine(seed, 17);
    const std::string tag = ":s=" + std::to_string(seed);
    for (int k = 0; k < options.random_per_seed; ++k)
      out.push_back({"random" + tag + (k ? "#" + num(k) : ""), random_bundle(curve, degrees, rng)});
    if (static_cast<int>(i) < options.special_seeds) {
      out.push_back({"divisor" + tag, random_divisor_bundle(curve, degrees, rng)});
      out.push_back({"greedy" + tag, greedy_neutral_bundle(curve, degrees, rng)});
    }
  }
  return out;
}

// ---------------------------------------------------------------- Riemann

Report verify_riemann(const CurvePtr& curve, int degree, const SweepOptions& options, const std::string& name) {
  Context ctx(curve, options, name);
  const auto& g = ctx.graph();
  const int genus = g.genus();
  if (genus < 2) {
    ctx.not_applicable("riemann", {}, "genus " + num(genus) + " below 2");
    return ctx.report;
  }
  const auto stab = classify_stability(g, options.subcurve_cap);
  if (stab.kind == Stability::unstable) {
    ctx.not_applicable("riemann", {}, "unstable at " + format_set(g, *stab.witness));
    return ctx.report;
  }
  if (degree < 2 * genus - 1) {
    ctx.not_applicable("riemann", {}, "d=" + num(degree) + " below 2g-1");
    return ctx.report;
  }
  const auto sep = separating_nodes(g);
  const bool free_ii = degree >= 2 * genus && sep.empty();
  const bool free_iii = degree >= 5 * (genus - 1);
  if (degree >= 2 * genus && !sep.empty() && !free_iii)
    ctx.not_applicable("riemann(ii)", {}, "separating nodes " + labels_of(g, sep));
  const int expected = degree - genus + 1;
  for (const auto& d : enumerate_balanced(g, degree, options.subcurve_cap, options.box_cap)) {
    for (const auto& s : sample_bundles(curve, d, options)) {
      const int h = h0(s.bundle);
      ctx.check(h == expected, "riemann(i)", d, s.label, [&] { return "h0=" + num(expected); },
                [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
      if (!(free_ii || free_iii) || h == 0) continue;
      const auto locus = base_points(s.bundle);
      ctx.check(locus.empty(), free_ii ? "riemann(ii)" : "riemann(iii)", d, s.label,
                [] { return std::string("no base points"); },
                [&] { return "base points " + format_base_points(s.bundle, locus); },
                [&] { return failing_gluing(s.bundle); });
    }
  }
  return ctx.report;
}

Report verify_riemann_sweep(const CurvePtr& curve, const SweepOptions& options, const std::string& name) {
  Report out(options.keep_passes);
  const int genus = curve->graph().genus();
  if (genus < 2) return verify_riemann(curve, 0, options, name);
  for (int d = 2 * genus - 1; d <= 2 * genus + 2; ++d) out.merge(verify_riemann(curve, d, options, name));
  return out;
}

// ---------------------------------------------------------------- uniform Clifford

namespace {

// Consequences of a Clifford-index-0 bundle for each irreducible Z2 with connected complement.
void check_index_zero_consequences(Context& ctx, const Sample& s, const Multidegree& d) {
  const auto& g = ctx.graph();
  const LineBundle& bundle = s.bundle;
  if (g.size() < 2) return;
  for (int v = 0; v < g.size(); ++v) {
    const VertexSet z2 = singleton(v), z1 = g.all() & ~z2;
    if (!is_connected(g, z1)) continue;
    const int meet = intersection_number(g, z1, z2);
    const std::string where = "Z2=" + g.vertex(v).id;
    ctx.check(meet <= 2, "clifford-index0(a)", d, s.label, [&] { return where + " Z1.Z2<=2"; },
              [&] { return "Z1.Z2=" + num(meet); }, [&] { return failing_gluing(bundle); });
    const int d1 = degree_on(d, z1), d2 = degree_on(d, z2);
    const bool even = d1 % 2 == 0 && d2 % 2 == 0;
    const bool odd = d1 % 2 != 0 && d2 % 2 != 0;
    if (odd)
      ctx.check(meet == 1, "clifford-index0(c)", d, s.label, [&] { return where + " Z1.Z2=1"; },
                [&] { return "Z1.Z2=" + num(meet); }, [&] { return failing_gluing(bundle); });
    if (!even && !odd) continue;
    for (VertexSet z : {z1, z2}) {
      const Restriction r = restrict_to(ctx.curve, z);
      const LineBundle lz = r.restrict(bundle);
      const PointDivisor meet_points = boundary_divisor(*ctx.curve, r, z);
      const int hz = h0(lz), hz_twisted = h0_vanishing(lz, meet_points);
      const int dz = degree_on(d, z);
      const std::string part = "Z=" + format_set(g, z);
      if (even) {
        const int c = cliff_of(dz, hz);
        ctx.check(c == 0 && hz_twisted == hz - 1, "clifford-index0(b)", d, s.label,
                  [&] { return part + " Cliff(L_Z)=0,h0(L_Z(-meet))=h0(L_Z)-1"; },
                  [&] { return "Cliff=" + num(c) + ",h0=" + num(hz) + ",h0(-meet)=" + num(hz_twisted); },
                  [&] { return failing_gluing(bundle); });
      } else {
        const int c = cliff_of(dz - meet, hz_twisted);
        ctx.check(c == 0, "clifford-index0(c)", d, s.label, [&] { return part + " Cliff(L_Z(-meet))=0"; },
                  [&] { return "Cliff=" + num(c); }, [&] { return failing_gluing(bundle); });
      }
    }
  }
}

}  // namespace

Report verify_clifford_uniform(const CurvePtr& curve, const Multidegree& degrees, const SweepOptions& options,
                               const std::string& name) {
  Context ctx(curve, options, name);
  const auto& g = ctx.graph();
  for (int v = 0; v < g.size(); ++v) {
    const int dv = degrees[static_cast<std::size_t>(v)], gv = g.component_genus(v);
    if (dv < 0 || dv > 2 * gv) {
      ctx.not_applicable("clifford-uniform", degrees,
                         "d_" + g.vertex(v).id + "=" + num(dv) + " outside [0," + num(2 * gv) + "]");
      return ctx.report;
    }
  }
  const int d = total(degrees), genus = g.genus();
  for (const auto& s : sample_bundles(curve, degrees, options)) {
    const int h = h0(s.bundle);
    ctx.check(2 * h <= d + 2, "clifford-uniform", degrees, s.label, [&] { return "h0<=" + num(d / 2 + 1); },
              [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
    if (2 * h != d + 2) continue;
    if (d <= 2 * genus - 2) {
      const auto locus = base_points(s.bundle);
      ctx.check(!locus.has_nonsingular(), "clifford-uniform(ii)", degrees, s.label,
                [] { return std::string("no nonsingular base points"); },
                [&] { return "base points " + format_base_points(s.bundle, locus); },
                [&] { return failing_gluing(s.bundle); });
    }
    if (d > 0 && d < 2 * genus - 2) check_index_zero_consequences(ctx, s, degrees);
  }
  return ctx.report;
}

Report verify_clifford_uniform_sweep(const CurvePtr& curve, const SweepOptions& options, const std::string& name) {
  Report out(options.keep_passes);
  const auto& g = curve->graph();
  std::vector<int> lo(static_cast<std::size_t>(g.size()), 0), hi;
  int top = 0;
  for (int v = 0; v < g.size(); ++v) {
    hi.push_back(2 * g.component_genus(v));
    top += hi.back();
  }
  for (int t = 0; t <= top; ++t) {
    const bool ok = for_each_in_box(lo, hi, t, options.box_cap, [&](const Multidegree& d) {
      out.merge(verify_clifford_uniform(curve, d, options, name));
    });
    if (!ok) throw PreconditionError("box above cap " + std::to_string(options.box_cap));
  }
  return out;
}

// ---------------------------------------------------------------- two components

Report verify_clifford_two_component(const CurvePtr& curve, int degree, const SweepOptions& options,
                                     const std::string& name) {
  Context ctx(curve, options, name);
  const auto& g = ctx.graph();
  const int genus = g.genus();
  if (g.size() != 2) {
    ctx.not_applicable("clifford-2c", {}, num(g.size()) + " components");
    return ctx.report;
  }
  if (genus < 2) {
    ctx.not_applicable("clifford-2c", {}, "genus " + num(genus) + " below 2");
    return ctx.report;
  }
  if (classify_stability(g, options.subcurve_cap).kind == Stability::unstable) {
    ctx.not_applicable("clifford-2c", {}, "unstable");
    return ctx.report;
  }
  if (degree < 0 || degree > 2 * genus) {
    ctx.not_applicable("clifford-2c", {}, "d=" + num(degree) + " outside [0,2g]");
    return ctx.report;
  }
  const int meet = g.edges_between(0, 1);
  std::vector<Restriction> parts{restrict_to(curve, singleton(0)), restrict_to(curve, singleton(1))};
  for (const auto& d : enumerate_balanced(g, degree, options.subcurve_cap, options.box_cap)) {
    for (const auto& s : sample_bundles(curve, d, options)) {
      const int h = h0(s.bundle);
      ctx.check(2 * h <= degree + 2, "clifford-2c", d, s.label, [&] { return "h0<=" + num(degree / 2 + 1); },
                [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
      if (meet < 2) continue;
      const int l1 = h0(parts[0].restrict(s.bundle)), l2 = h0(parts[1].restrict(s.bundle));
      const int eps = 1 + std::max({d[0] - 2 * g.component_genus(0), d[1] - 2 * g.component_genus(1), 0});
      const int beta = std::min(meet, eps);
      const int sharp = l1 + l2 - beta;
      ctx.check(h <= sharp && 2 * sharp <= degree + 2, "clifford-2c-sharp", d, s.label,
                [&] { return "h0<=l1+l2-beta<=" + num(degree / 2 + 1); },
                [&] {
                  return "h0=" + num(h) + ",l1=" + num(l1) + ",l2=" + num(l2) + ",beta=" + num(beta);
                },
                [&] { return failing_gluing(s.bundle); });
    }
  }
  return ctx.report;
}

Report verify_clifford_two_component_sweep(const CurvePtr& curve, const SweepOptions& options,
                                           const std::string& name) {
  Report out(options.keep_passes);
  const int genus = curve->graph().genus();
  if (curve->graph().size() != 2 || genus < 2) return verify_clifford_two_component(curve, 0, options, name);
  for (int d = 0; d <= 2 * genus; ++d) out.merge(verify_clifford_two_component(curve, d, options, name));
  return out;
}

// ---------------------------------------------------------------- degree extremes

namespace {

std::vector<VertexSet> proper_subsets(const DualGraph& g, int cap) {
  if (g.size() > cap) throw PreconditionError("subcurve cap " + std::to_string(cap) + " exceeded");
  std::vector<VertexSet> out;
  for (VertexSet z = 1; z < g.all(); ++z) out.push_back(z);
  return out;
}

std::string hypotheses_label(bool h1, bool h2, bool h3) {
  std::string out;
  if (h1) out += "(1)";
  if (h2) out += "(2)";
  if (h3) out += "(3)";
  return out.empty() ? "none" : out;
}

}  // namespace

Report verify_degree_extremes(const CurvePtr& curve, const SweepOptions& options, const std::string& name) {
  Context ctx(curve, options, name);
  const auto& g = ctx.graph();
  const int genus = g.genus(), n = g.size();
  if (genus < 2) {
    ctx.not_applicable("extremes", {}, "genus " + num(genus) + " below 2");
    return ctx.report;
  }
  const bool semistable = classify_stability(g, options.subcurve_cap).kind != Stability::unstable;
  const bool no_sep = separating_nodes(g).empty();
  const auto subsets = proper_subsets(g, options.subcurve_cap);
  std::optional<BalanceTester> tester;
  if (semistable) tester.emplace(g, options.subcurve_cap);
  const LineBundle omega = canonical_bundle(curve);
  const Multidegree wdeg = omega.degrees();
  {
    const int h = h0(omega);
    ctx.check(h == genus, "canonical", wdeg, "omega", [&] { return "h0=" + num(genus); },
              [&] { return "h0=" + num(h); });
  }
  auto collect = [&](std::set<Multidegree>& into, const std::vector<int>& lo, const std::vector<int>& hi, int sum) {
    if (!for_each_in_box(lo, hi, sum, options.box_cap, [&](const Multidegree& d) { into.insert(d); }))
      ctx.not_applicable("extremes", {}, "box above cap " + std::to_string(options.box_cap));
  };

  // Degree 2g - 2.
  {
    const int top = 2 * genus - 2;
    std::set<Multidegree> pool;
    if (semistable)
      for (auto& d : enumerate_balanced(g, top, options.subcurve_cap, options.box_cap)) pool.insert(d);
    std::vector<int> lo3(static_cast<std::size_t>(n), 0), hi3, lo1, hi1;
    int low_sum = 0;
    for (int v = 0; v < n; ++v) {
      hi3.push_back(2 * g.component_genus(v));
      lo1.push_back(2 * g.component_genus(v) - 1);
      low_sum += lo1.back();
    }
    for (int v = 0; v < n; ++v) hi1.push_back(n == 1 ? top : top - (low_sum - lo1[static_cast<std::size_t>(v)]));
    if (n == 1) lo1[0] = top;
    collect(pool, lo3, hi3, top);
    collect(pool, lo1, hi1, top);
    for (const auto& d : pool) {
      bool h1 = true;
      for (VertexSet z : subsets) h1 = h1 && degree_on(d, z) >= 2 * arithmetic_genus(g, z) - 1;
      const bool h2 = semistable && tester->balanced(d);
      bool h3 = true;
      for (int v = 0; v < n; ++v)
        h3 = h3 && d[static_cast<std::size_t>(v)] >= 0 && d[static_cast<std::size_t>(v)] <= 2 * g.component_genus(v);
      if (!h1 && !h2 && !h3) continue;
      const bool equality_clause = h1 || h2 || (h3 && no_sep);
      auto samples = sample_bundles(curve, d, options);
      if (d == wdeg) {
        samples.push_back({"omega", omega});
        if (g.edge_count() > 0) {
          auto l = omega.gluing();
          l[0] *= Rational(2);
          samples.push_back({"omega-perturbed", LineBundle(curve, d, l)});
        }
      }
      const std::string hyp = hypotheses_label(h1, h2, h3);
      for (const auto& s : samples) {
        const int h = h0(s.bundle);
        ctx.check(h <= genus, "extremes-2g-2", d, s.label, [&] { return hyp + " h0<=" + num(genus); },
                  [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
        if (h != genus) continue;
        if (!equality_clause) {
          ctx.not_applicable("extremes-2g-2-equality", d, "only (3) with separating nodes", "h0=" + num(h));
          continue;
        }
        const bool iso = d == wdeg && is_trivial(tensor(omega, inverse(s.bundle)));
        ctx.check(iso, "extremes-2g-2-equality", d, s.label, [&] { return hyp + " h0=g => L=omega"; },
                  [&] { return iso ? std::string("L=omega") : std::string("L!=omega"); },
                  [&] { return failing_gluing(s.bundle); });
      }
    }
  }

  // Degree 0, the dual statement.
  {
    std::set<Multidegree> pool;
    if (semistable)
      for (auto& d : enumerate_balanced(g, 0, options.subcurve_cap, options.box_cap)) pool.insert(d);
    std::vector<int> lo1, hi1, lo3, hi3;
    for (int v = 0; v < n; ++v) {
      const int dv = g.nonloop_degree(v);
      lo1.push_back(n == 1 ? 0 : 1 - dv);
      hi1.push_back(n == 1 ? 0 : dv - 1);
      lo3.push_back(dv - 2);
      hi3.push_back(2 * g.component_genus(v) - 2 + dv);
    }
    collect(pool, lo1, hi1, 0);
    collect(pool, lo3, hi3, 0);
    for (const auto& d : pool) {
      bool h1 = true;
      for (VertexSet z : subsets) h1 = h1 && degree_on(d, z) <= boundary_count(g, z) - 1;
      const bool h2 = semistable && tester->balanced(d);
      bool h3 = true;
      for (int v = 0; v < n; ++v)
        h3 = h3 && d[static_cast<std::size_t>(v)] >= lo3[static_cast<std::size_t>(v)] &&
             d[static_cast<std::size_t>(v)] <= hi3[static_cast<std::size_t>(v)];
      if (!h1 && !h2 && !h3) continue;
      const bool equality_clause = h1 || h2 || (h3 && no_sep);
      auto samples = sample_bundles(curve, d, options);
      const bool zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
      if (zero) samples.push_back({"trivial", trivial_bundle(curve)});
      const std::string hyp = hypotheses_label(h1, h2, h3);
      for (const auto& s : samples) {
        const int h = h0(s.bundle);
        ctx.check(h <= 1, "extremes-0", d, s.label, [&] { return hyp + " h0<=1"; }, [&] { return "h0=" + num(h); },
                  [&] { return failing_gluing(s.bundle); });
        if (h != 1) continue;
        if (!equality_clause) {
          ctx.not_applicable("extremes-0-equality", d, "only (3) with separating nodes", "h0=1");
          continue;
        }
        const bool trivial = zero && is_trivial(s.bundle);
        ctx.check(trivial, "extremes-0-equality", d, s.label, [&] { return hyp + " h0=1 => L=O"; },
                  [&] { return trivial ? std::string("L=O") : std::string("L!=O"); },
                  [&] { return failing_gluing(s.bundle); });
      }
    }
  }

  // Balanced of nonpositive total degree, nontrivial bundles.
  if (semistable) {
    for (int t = -2; t <= 0; ++t)
      for (const auto& d : enumerate_balanced(g, t, options.subcurve_cap, options.box_cap)) {
        const bool zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
        for (const auto& s : sample_bundles(curve, d, options)) {
          if (zero && is_trivial(s.bundle)) continue;
          const int h = h0(s.bundle);
          ctx.check(h == 0, "balanced-nonpositive", d, s.label, [] { return std::string("h0=0"); },
                    [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
        }
      }
  } else {
    ctx.not_applicable("balanced-nonpositive", {}, "unstable");
  }

  // Every entry <= 0 with negative total.
  for (int t = -2; t <= -1; ++t)
    for (const auto& d : nonpositive_of_total(n, t))
      for (const auto& s : sample_bundles(curve, d, options)) {
        const int h = h0(s.bundle);
        ctx.check(h == 0, "nonpositive", d, s.label, [] { return std::string("h0=0"); },
                  [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
      }
  return ctx.report;
}

// ---------------------------------------------------------------- low degree

VertexSet support_subcurve(const DualGraph& graph, const Multidegree& degrees) {
  VertexSet current = 0;
  int top = 0;
  for (int v = 0; v < graph.size(); ++v) {
    if (degrees[static_cast<std::size_t>(v)] < 0) current |= singleton(v);
    top = std::max(top, degrees[static_cast<std::size_t>(v)]);
  }
  if (current == 0) return 0;
  for (int h = 0;; ++h) {
    VertexSet next = current;
    for (int v = 0; v < graph.size(); ++v) {
      if (contains(current, v)) continue;
      const int dv = degrees[static_cast<std::size_t>(v)];
      if (dv <= h && intersection_number(graph, singleton(v), current) > dv) next |= singleton(v);
    }
    if (next == current && h >= top) return current;
    current = next;
  }
}

namespace {

bool trivial_off(const CurvePtr& curve, const LineBundle& bundle, VertexSet outside) {
  const auto& g = curve->graph();
  for (VertexSet piece : connected_components(g, g.all() & ~outside))
    if (!is_trivial(restrict_to(curve, piece).restrict(bundle))) return false;
  return true;
}

}  // namespace

Report verify_clifford_low_degree(const CurvePtr& curve, const SweepOptions& options, const std::string& name) {
  Context ctx(curve, options, name);
  const auto& g = ctx.graph();
  const int n = g.size();
  const auto stab = classify_stability(g, options.subcurve_cap).kind;
  const auto sep_nodes = separating_nodes(g);
  const auto sep_lines = separating_lines(g);
  const bool semistable = stab != Stability::unstable;
  const bool main_hyp = stab == Stability::stable && sep_nodes.empty();
  auto is_line = [&](int v) { return std::find(sep_lines.begin(), sep_lines.end(), v) != sep_lines.end(); };
  std::string broken;
  if (stab != Stability::stable) broken = to_string(stab);
  if (!sep_nodes.empty()) broken += (broken.empty() ? "" : ";") + std::string("separating nodes ") + labels_of(g, sep_nodes);
  if (!sep_lines.empty()) broken += ";separating lines " + ids_of(g, sep_lines);

  for (int t = 1; t <= 4; ++t) {
    const bool relaxed = (t == 1 && semistable && sep_lines.empty()) || (t == 2 && semistable && sep_nodes.empty());
    const bool applicable = main_hyp || relaxed;
    if (!semistable) {
      ctx.not_applicable("cl4", {}, "unstable: balanced undefined");
      break;
    }
    for (const auto& d : enumerate_balanced(g, t, options.subcurve_cap, options.box_cap)) {
      const VertexSet support = support_subcurve(g, d);
      for (const auto& s : sample_bundles(curve, d, options)) {
        const int h = h0(s.bundle);
        const bool bound = 2 * h <= t + 2;
        const bool sign = !((t == 1 || t == 2) && h == t) || is_nonnegative(d);
        if (!applicable) {
          ctx.not_applicable("cl4", d, broken,
                             "h0=" + num(h) + (bound ? "" : ",exceeds_" + num(t / 2 + 1)));
        } else {
          ctx.check(bound, "cl4", d, s.label, [&] { return "h0<=" + num(t / 2 + 1); },
                    [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
          if (t <= 2)
            ctx.check(sign, "cl4(ii)", d, s.label, [&] { return "h0=" + num(t) + " => d>=0"; },
                      [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
        }
        if (support != 0 && h > 0) {
          const SectionSpace sp = sections(s.bundle);
          bool vanish = true;
          for (int v : members(support)) {
            const int dv = d[static_cast<std::size_t>(v)];
            if (dv < 0) continue;
            for (Eigen::Index c = 0; c < sp.basis.cols() && vanish; ++c)
              vanish = sp.restriction(v, c, dv).empty();
          }
          ctx.check(vanish, "support", d, s.label, [&] { return "sections vanish on " + format_set(g, support); },
                    [&] { return vanish ? std::string("vanish") : std::string("nonzero section"); },
                    [&] { return failing_gluing(s.bundle); });
        }
      }
    }
  }

  // Nonnegative degree 1 and 2 on any curve.
  for (int t = 1; t <= 2; ++t)
    for (const auto& d : nonnegative_of_total(n, t)) {
      std::vector<int> carriers;
      for (int v = 0; v < n; ++v)
        for (int k = 0; k < d[static_cast<std::size_t>(v)]; ++k) carriers.push_back(v);
      for (const auto& s : sample_bundles(curve, d, options)) {
        const int h = h0(s.bundle);
        if (t == 1) {
          const int c = carriers[0];
          bool ok = h <= 1;
          if (!ok) ok = is_line(c) && h == 2 && trivial_off(curve, s.bundle, singleton(c));
          ctx.check(ok, "low-degree-one", d, s.label,
                    [] { return std::string("h0<=1 or (separating line,h0=2,trivial off it)"); },
                    [&] { return "h0=" + num(h) + (is_line(c) ? ",line" : ",not-line"); },
                    [&] { return failing_gluing(s.bundle); });
        } else {
          bool ok = h <= 2;
          if (!ok)
            ok = h == 3 && (carriers[0] == carriers[1] ? is_line(carriers[0]) : is_line(carriers[0]) && is_line(carriers[1]));
          ctx.check(ok, "low-degree-two", d, s.label,
                    [] { return std::string("h0<=2 or (h0=3 on separating lines)"); },
                    [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
        }
      }
    }

  // Nonnegative degree 3 and 4 on stable curves without separating nodes.
  if (main_hyp) {
    for (int t = 3; t <= 4; ++t)
      for (const auto& d : nonnegative_of_total(n, t))
        for (const auto& s : sample_bundles(curve, d, options)) {
          const int h = h0(s.bundle);
          ctx.check(2 * h <= t + 2, "low-degree-nonnegative", d, s.label, [&] { return "h0<=" + num(t / 2 + 1); },
                    [&] { return "h0=" + num(h); }, [&] { return failing_gluing(s.bundle); });
        }
  }
  return ctx.report;
}

// ---------------------------------------------------------------- Clifford index

CliffordDatum clifford_index_bundle(const LineBundle& bundle) {
  CliffordDatum out;
  out.degree = bundle.degree();
  out.h0 = h0(bundle);
  out.h1 = out.h0 - out.degree + bundle.curve().genus() - 1;
  out.cliff = cliff_of(out.degree, out.h0);
  return out;
}

bool clifford_consequences_hold(const LineBundle& bundle, const CliffordDatum& datum) {
  if (datum.h0 == 0 || datum.cliff > 1) return true;
  const auto locus = base_points(bundle);
  if (datum.cliff == 0) return locus.empty();
  int count = static_cast<int>(locus.nodes.size());
  for (const auto& c : locus.components) {
    if (c.entire) return false;
    count += degree(c.fixed_part) + (c.at_infinity ? 1 : 0);
  }
  return count <= 1;
}

CurveCliffordBound clifford_index_curve(const CurvePtr& curve, const SweepOptions& options) {
  const auto& g = curve->graph();
  const int genus = g.genus();
  if (genus < 2) throw PreconditionError("genus below 2");
  CurveCliffordBound out;
  const LineBundle omega = canonical_bundle(curve);
  const Multidegree wdeg = omega.degrees();
  auto consider = [&](const std::string& label, const LineBundle& b) {
    ++out.examined;
    const CliffordDatum c = clifford_index_bundle(b);
    if (c.h0 < 2 || c.h1 < 2) return;
    if (!out.bound || c.cliff < *out.bound) {
      out.bound = c.cliff;
      out.witness = b;
      out.witness_label = label + " d=" + format_multidegree(b.degrees());
    }
  };
  for (int t = 0; t <= 2 * genus - 2; ++t)
    for (const auto& d : enumerate_balanced(g, t, options.subcurve_cap, options.box_cap)) {
      for (const auto& s : sample_bundles(curve, d, options)) consider(s.label, s.bundle);
      bool effective = true;
      for (std::size_t v = 0; v < d.size(); ++v) effective = effective && wdeg[v] >= d[v];
      if (!effective) continue;
      for (auto seed : options.seeds) {
        // omega(-D) with D of multidegree deg(omega) - d
        Engine rng = make_engine(seed, 29);
        PointDivisor divisor;
        for (int v = 0; v < g.size(); ++v)
          for (int k = 0; k < wdeg[static_cast<std::size_t>(v)] - d[static_cast<std::size_t>(v)]; ++k) {
            Rational x;
            do {
              x = random_free_coordinate(rng, *curve, v);
            } while (std::any_of(divisor.begin(), divisor.end(),
                                 [&](const DivisorTerm& t) { return t.component == v && t.coordinate == x; }));
            divisor.push_back({v, x, 1});
          }
        consider("omega-twist:s=" + std::to_string(seed), twist(omega, divisor));
      }
    }
  return out;
}

// ---------------------------------------------------------------- gluing lemmas

namespace {

void check_single_node(Context& ctx, const Sample& s, const Multidegree& d, const std::vector<Rational>& generic) {
  const auto& g = ctx.graph();
  const int hx = h0(s.bundle);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Normalization nz = normalize_at(ctx.curve, {e});
    const LineBundle m = nz.pullback(s.bundle);
    const int hy = h0(m);
    const auto& ed = g.edge(e);
    const CurvePoint p{ed.u, ctx.curve->branch(e, 0)}, q{ed.v, ctx.curve->branch(e, 1)};
    const std::string where = "node " + ed.label;
    auto with_constant = [&](const Rational& lambda) {
      auto l = s.bundle.gluing();
      l[static_cast<std::size_t>(e)] = lambda;
      return h0(LineBundle(ctx.curve, d, l));
    };
    const int drop = hy - hx;
    ctx.check(drop == 0 || drop == 1, "gluing-one-node", d, s.label, [&] { return where + " drop in {0,1}"; },
              [&] { return "drop=" + num(drop); }, [&] { return failing_gluing(s.bundle); });
    if (hy == 0) continue;
    const NeutralGluing ng = neutral_gluing_constant(m, p, q);
    std::vector<Rational> sweep{Rational(1), Rational(2), Rational(3), Rational(-1)};
    sweep.insert(sweep.end(), generic.begin(), generic.end());
    if (ng.constant) sweep.push_back(*ng.constant);
    int keeps = 0, keeps_off_special = 0;
    bool dichotomy = true;
    for (const auto& lambda : sweep) {
      const int dr = hy - with_constant(lambda);
      dichotomy = dichotomy && (dr == 0 || dr == 1);
      if (dr == 0) {
        ++keeps;
        if (!ng.constant || lambda != *ng.constant) ++keeps_off_special;
      }
    }
    ctx.check(dichotomy, "gluing-one-node", d, s.label, [&] { return where + " drop in {0,1} for every constant"; },
              [&] { return dichotomy ? std::string("ok") : std::string("drop outside {0,1}"); },
              [&] { return failing_gluing(s.bundle); });
    const bool some_keep = keeps > 0;
    ctx.check(some_keep == ng.neutral, "gluing-neutral", d, s.label,
              [&] { return where + " some constant keeps h0 <=> neutral pair"; },
              [&] { return std::string(ng.neutral ? "neutral" : "not-neutral") + ",keeps=" + num(keeps); },
              [&] { return failing_gluing(s.bundle); });
    if (!ng.neutral || !nz.curve->graph().is_connected()) continue;
    const bool unique_ok = ng.every_constant ? keeps == static_cast<int>(sweep.size()) : keeps_off_special == 0;
    ctx.check(unique_ok, "gluing-neutral-unique", d, s.label,
              [&] {
                return where + (ng.every_constant ? " base points: every constant keeps h0"
                                                  : " exactly one constant keeps h0");
              },
              [&] { return "keeps=" + num(keeps) + "/" + num(static_cast<int>(sweep.size())); },
              [&] { return failing_gluing(s.bundle); });
  }
}

void check_component_bound(Context& ctx, const Sample& s, const Multidegree& d) {
  const auto& g = ctx.graph();
  if (g.size() < 2) return;
  const int hx = h0(s.bundle);
  for (int v = 0; v < g.size(); ++v) {
    const int e_c = d[static_cast<std::size_t>(v)] - 2 * g.component_genus(v);
    if (e_c < 0) continue;
    const VertexSet c = singleton(v), z = g.all() & ~c;
    const int hc = h0(restrict_to(ctx.curve, c).restrict(s.bundle));
    const int hz = h0(restrict_to(ctx.curve, z).restrict(s.bundle));
    const int delta = g.nonloop_degree(v);
    const int bound = hc + hz - std::min(delta, e_c + 1);
    const bool exact_case = e_c >= delta - 1;
    const bool ok = exact_case ? hx == hc + hz - delta : hx <= bound;
    ctx.check(ok, "component-bound", d, s.label,
              [&] {
                return "C=" + g.vertex(v).id + (exact_case ? " h0=" : " h0<=") + num(exact_case ? hc + hz - delta : bound);
              },
              [&] { return "h0=" + num(hx) + ",h0(C)=" + num(hc) + ",h0(Z)=" + num(hz); },
              [&] { return failing_gluing(s.bundle); });
  }
}

}  // namespace

Report verify_gluing_lemmas(const CurvePtr& curve, const std::vector<Multidegree>& degrees,
                            const SweepOptions& options, const std::string& name) {
  Context ctx(curve, options, name);
  const auto& g = ctx.graph();
  const int genus = g.genus();
  if (!g.is_connected()) {
    ctx.not_applicable("gluing-lemmas", {}, "disconnected");
    return ctx.report;
  }
  const auto connected = connected_subcurves(g, options.subcurve_cap);
  const LineBundle omega = canonical_bundle(curve);
  std::vector<Rational> generic;  // random constants for the one-node sweep
  for (auto seed : options.seeds) {
    Engine rng = make_engine(seed, 41);
    generic.push_back(random_gluing_constant(rng));
  }
  for (const auto& d : degrees) {
    std::vector<Sample> samples;
    for (int c : {1, 2, 3, -1})
      samples.push_back({"constant=" + num(c), bundle_with_constant_gluing(curve, d, Rational(c))});
    if (g.edge_count() > 0)
      for (auto seed : options.seeds) {
        Engine rng = make_engine(seed, 23);
        samples.push_back({"random:s=" + std::to_string(seed), random_bundle(curve, d, rng)});
      }
    bool above = true;
    for (VertexSet z : connected) above = above && degree_on(d, z) >= 2 * arithmetic_genus(g, z) - 1;
    const bool zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
    for (const auto& s : samples) {
      const int h = h0(s.bundle);
      const int dual = h0(tensor(omega, inverse(s.bundle)));
      const int by_rr = h - total(d) + genus - 1;
      ctx.check(dual == by_rr, "serre-duality", d, s.label, [&] { return "h1=" + num(by_rr); },
                [&] { return "h0(omega-L)=" + num(dual); }, [&] { return failing_gluing(s.bundle); });
      if (above)
        ctx.check(h == total(d) - genus + 1, "high-degree-exact", d, s.label,
                  [&] { return "h0=" + num(total(d) - genus + 1); }, [&] { return "h0=" + num(h); },
                  [&] { return failing_gluing(s.bundle); });
      if (zero) {
        bool agree = true, trivial = false;
        try {
          trivial = is_trivial(s.bundle);
        } catch (const std::logic_error&) {
          agree = false;
        }
        ctx.check(agree && h <= 1 && (h == 1) == trivial, "degree-zero-triviality", d, s.label,
                  [] { return std::string("h0<=1, h0=1 <=> cycle products 1"); },
                  [&] {
                    return "h0=" + num(h) + (agree ? (trivial ? ",trivial" : ",nontrivial") : ",tests-disagree");
                  },
                  [&] { return failing_gluing(s.bundle); });
      }
      check_single_node(ctx, s, d, generic);
      check_component_bound(ctx, s, d);
    }
  }
  return ctx.report;
}

Report verify_gluing_lemmas_sweep(const CurvePtr& curve, int low, int high, const SweepOptions& options,
                                  const std::string& name) {
  const int n = curve->graph().size();
  std::vector<Multidegree> degrees;
  std::vector<int> lo(static_cast<std::size_t>(n), low), hi(static_cast<std::size_t>(n), high);
  for (int t = n * low; t <= n * high; ++t)
    for_each_in_box(lo, hi, t, options.box_cap, [&](const Multidegree& d) { degrees.push_back(d); });
  return verify_gluing_lemmas(curve, degrees, options, name);
}

// ---------------------------------------------------------------- partial normalization

Report verify_partial_normalization_strictness(const CurvePtr& curve, int kept, const SweepOptions& options,
                                               const std::string& name) {
  Context ctx(curve, options, name);
  const auto& g = ctx.graph();
  if (g.size() != 2) {
    ctx.not_applicable("partial-normalization", {}, num(g.size()) + " components");
    return ctx.report;
  }
  std::vector<int> between;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!g.edge(e).is_loop()) between.push_back(e);
  const int delta = static_cast<int>(between.size());
  if (kept < 1 || kept >= delta) {
    ctx.not_applicable("partial-normalization", {}, "need 0<beta<delta, beta=" + num(kept) + ",delta=" + num(delta));
    return ctx.report;
  }
  const std::vector<int> removed(between.begin() + kept, between.end());
  const Normalization nz = normalize_at(curve, removed);
  for (int d1 = 0; d1 <= delta; ++d1)
    for (int d2 = 0; d2 <= delta; ++d2) {
      const Multidegree d{d1, d2};
      const bool window = (kept < d1 && d1 < delta) || (kept < d2 && d2 < delta);
      if (!window) continue;
      std::vector<Sample> bases;
      bases.push_back({"M=unit", bundle_with_unit_gluing(nz.curve, d)});
      for (std::size_t i = 0; i < options.seeds.size(); ++i) {
        const auto seed = options.seeds[i];
        Engine rng = make_engine(seed, 31);
        bases.push_back({"M=random:s=" + std::to_string(seed), random_bundle(nz.curve, d, rng)});
        if (static_cast<int>(i) < options.special_seeds)
          bases.push_back({"M=greedy:s=" + std::to_string(seed), greedy_neutral_bundle(nz.curve, d, rng)});
      }
      for (const auto& base : bases) {
        const int hm = h0(base.bundle);
        if (hm == 0) {
          ctx.not_applicable("partial-normalization", d, "h0(X',M)=0 (" + base.label + ")", "h0=0");
          continue;
        }
        // Full gluing vector on X from M plus constants for the normalized nodes.
        auto lift = [&](const std::function<Rational(int)>& constant) {
          std::vector<Rational> l(static_cast<std::size_t>(g.edge_count()));
          for (std::size_t k = 0; k < nz.kept_edges.size(); ++k)
            l[static_cast<std::size_t>(nz.kept_edges[k])] = base.bundle.gluing(static_cast<int>(k));
          for (int e : removed) l[static_cast<std::size_t>(e)] = constant(e);
          return l;
        };
        std::vector<std::pair<std::string, std::vector<Rational>>> fibre;
        fibre.push_back({"unit", lift([](int) { return Rational(1); })});
        for (auto seed : options.seeds) {
          Engine rng = make_engine(seed, 37);
          fibre.push_back({"random:s=" + std::to_string(seed), lift([&](int) { return random_gluing_constant(rng); })});
        }
        {
          // Re-glue one node at a time, keeping h0 whenever a neutral constant exists.
          auto l = lift([](int) { return Rational(1); });
          for (std::size_t k = 0; k < removed.size(); ++k) {
            const std::vector<int> still(removed.begin() + static_cast<long>(k), removed.end());
            const Normalization part = normalize_at(curve, still);
            const LineBundle m = part.pullback(LineBundle(curve, d, l));
            const int e = removed[k];
            const CurvePoint p{g.edge(e).u, curve->branch(e, 0)}, q{g.edge(e).v, curve->branch(e, 1)};
            if (h0(m) == 0) break;
            const NeutralGluing ng = neutral_gluing_constant(m, p, q);
            if (ng.constant) l[static_cast<std::size_t>(e)] = *ng.constant;
          }
          fibre.push_back({"greedy", l});
        }
        for (const auto& [label, l] : fibre) {
          const LineBundle bundle(curve, d, l);
          const int h = h0(bundle);
          ctx.check(h < hm, "partial-normalization", d, base.label + ",L=" + label,
                    [&] { return "h0(X,L)<h0(X',M)=" + num(hm) + ",beta=" + num(kept); },
                    [&] { return "h0=" + num(h); }, [&] { return failing_gluing(bundle); });
        }
      }
    }
  return ctx.report;
}

}  // namespace nodal
