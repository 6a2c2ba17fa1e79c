#include "nodal/examples.hpp"

#include "nodal/balance.hpp"
#include "nodal/curve_file.hpp"
#include "nodal/generator.hpp"
#include "nodal/verifiers.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace nodal {

namespace {

struct Link {
  int u, v, count;
};

// Components C1..Cn of weight 0; loops[v] loops on v, then the links.
DualGraph build_graph(const std::vector<int>& loops, const std::vector<Link>& links) {
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < loops.size(); ++v) vertices.push_back({"C" + std::to_string(v + 1), 0});
  std::vector<Edge> edges;
  int node = 0;
  for (const auto& l : links)
    for (int k = 0; k < l.count; ++k) edges.push_back({l.u, l.v, "n" + std::to_string(++node)});
  for (std::size_t v = 0; v < loops.size(); ++v)
    for (int k = 0; k < loops[v]; ++k)
      edges.push_back({static_cast<int>(v), static_cast<int>(v), "C" + std::to_string(v + 1) + ".L" + std::to_string(k + 1)});
  return DualGraph(std::move(vertices), std::move(edges));
}

CurvePtr realized(const std::vector<int>& loops, const std::vector<Link>& links) {
  return realize(build_graph(loops, links), 1);
}

Rational frac(int num, int den = 1) { return Rational(num) / Rational(den); }

// Loop constants on v making the restriction O_v(points): the section 1 of O(D)
// is the polynomial vanishing on D.
void twist_loops(const GraphCurve& curve, int v, const std::vector<Rational>& points, std::vector<Rational>& gluing) {
  auto value = [&](const Rational& x) {
    Rational r = 1;
    for (const auto& p : points) r *= x - p;
    return r;
  };
  const auto& g = curve.graph();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (!ed.is_loop() || ed.u != v) continue;
    gluing[static_cast<std::size_t>(e)] = value(curve.branch(e, 0)) / value(curve.branch(e, 1));
  }
}

void set_loops(const DualGraph& g, int v, const Rational& constant, std::vector<Rational>& gluing) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).is_loop() && g.edge(e).u == v) gluing[static_cast<std::size_t>(e)] = constant;
}

// Branch coordinate on v of every non-loop edge between v and w.
std::vector<Rational> branches_towards(const GraphCurve& curve, int v, int w) {
  std::vector<Rational> out;
  const auto& g = curve.graph();
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.u == v && ed.v == w) out.push_back(curve.branch(e, 0));
    if (ed.v == v && ed.u == w) out.push_back(curve.branch(e, 1));
  }
  return out;
}

std::vector<Rational> node_constants(const DualGraph& g, std::vector<Rational> values) {
  std::vector<Rational> out(static_cast<std::size_t>(g.edge_count()), Rational(1));
  std::size_t k = 0;
  for (int e = 0; e < g.edge_count() && k < values.size(); ++e)
    if (!g.edge(e).is_loop()) out[static_cast<std::size_t>(e)] = values[k++];
  return out;
}

const std::array<std::pair<int, int>, 3> two_tail_genera{{{1, 5}, {1, 2}, {2, 3}}};

ExampleInstance make_ct2() {
  return {"ct2", "two components with one node; degree 2 balanced sets depend on g1 against (g+1)/4",
          realized({1, 2}, {{0, 1, 1}}), {}};
}

ExampleInstance make_pr() {
  auto curve = realized({1, 1}, {{0, 1, 2}});
  const auto& g = curve->graph();
  auto l = node_constants(g, {frac(5), frac(7)});
  set_loops(g, 0, frac(2), l);
  set_loops(g, 1, frac(3), l);
  return {"Pr", "degree 5 concentrated on one component; far from balanced, h0 exceeds d-g+1",
          curve, {{"L", LineBundle(curve, {9, -4}, l)}}};
}

const Rational pr2_point = frac(1, 2);

ExampleInstance make_pr2() {
  auto curve = realized({1, 2}, {{0, 1, 1}});
  const auto& g = curve->graph();
  auto l = node_constants(g, {frac(1)});
  twist_loops(*curve, 0, {pr2_point}, l);
  const std::array<Rational, 2> c2{frac(3), frac(-5, 2)};
  int k = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).is_loop() && g.edge(e).u == 1) l[static_cast<std::size_t>(e)] = c2[static_cast<std::size_t>(k++)];
  return {"Pr2", "compact type, degree 2g with O(p) on the elliptic side; p is a base point",
          curve, {{"L", LineBundle(curve, {1, 5}, l)}}};
}

ExampleInstance make_ctcc() {
  auto curve = realized({2, 1}, {{0, 1, 1}});
  const auto& g = curve->graph();
  auto l = node_constants(g, {frac(2)});
  const Restriction r = restrict_to(curve, singleton(0));
  const LineBundle omega1 = canonical_bundle(r.curve);
  for (std::size_t k = 0; k < r.edge_map.size(); ++k)
    l[static_cast<std::size_t>(r.edge_map[k])] = omega1.gluing(static_cast<int>(k));
  set_loops(g, 1, frac(5, 3), l);
  return {"ctcc", "compact type, dualizing sheaf on one side and degree 2g2 on the other; h0 = g without being canonical",
          curve, {{"L", LineBundle(curve, {2, 2}, l)}}};
}

ExampleInstance make_p1() {
  auto curve = realized({0, 1, 1, 1}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  const auto& g = curve->graph();
  auto l = node_constants(g, {frac(2), frac(3), frac(5)});
  return {"P1", "line meeting three elliptic tails; degree (1,0,0,0) has two sections",
          curve, {{"L", LineBundle(curve, {1, 0, 0, 0}, l)}}};
}

ExampleInstance make_p2() {
  auto curve = realized({1, 1, 4}, {{0, 1, 2}, {1, 2, 1}});
  const auto& g = curve->graph();
  auto l = node_constants(g, {frac(5), frac(7), frac(1)});
  set_loops(g, 0, frac(2), l);
  set_loops(g, 1, frac(3), l);
  twist_loops(*curve, 2, branches_towards(*curve, 2, 1), l);
  return {"P2", "degree (1,-1,1) with O(q) on the genus-4 tail; Clifford index 0 with a negative entry",
          curve, {{"L", LineBundle(curve, {1, -1, 1}, l)}}};
}

ExampleInstance make_cl2no() {
  auto curve = realized({1, 3, 3, 3}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  const auto& g = curve->graph();
  auto l = node_constants(g, {frac(1), frac(1), frac(1)});
  set_loops(g, 0, frac(2), l);
  for (int v = 1; v <= 3; ++v) twist_loops(*curve, v, branches_towards(*curve, v, 0), l);
  return {"cl2no", "elliptic center with three genus-3 tails; O(q) on every tail gives three sections in degree 2",
          curve, {{"L", LineBundle(curve, {-1, 1, 1, 1}, l)}}};
}

ExampleInstance make_cl3no() {
  auto curve = realized({0, 1, 0, 1, 0, 1}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 0, 1}});
  const auto& g = curve->graph();
  auto l = node_constants(g, {frac(2), frac(3), frac(5), frac(7), frac(11), frac(13)});
  return {"cl3no", "cycle of six alternating lines and elliptic components; degree 3 with three sections",
          curve, {{"L", LineBundle(curve, {1, 0, 1, 0, 1, 0}, l)}}};
}

ExampleInstance make_cl3n() {
  auto curve = realized({1, 1, 1}, {{0, 1, 1}, {0, 2, 1}});
  const auto& g = curve->graph();
  auto l = node_constants(g, {frac(1), frac(1)});
  set_loops(g, 0, frac(3, 2), l);
  return {"cl3n", "elliptic center with two tails, all degree on the center; h0 = d",
          curve, {{"L", LineBundle(curve, {3, 0, 0}, l)}}};
}

ExampleInstance make_cl5no() {
  auto curve = realized({0, 3, 3, 3, 3}, {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {0, 4, 2}});
  const auto& g = curve->graph();
  auto l = node_constants(g, {frac(2), frac(3), frac(5), frac(7), frac(11), frac(13), frac(17), frac(19)});
  for (int v = 1; v <= 4; ++v) twist_loops(*curve, v, branches_towards(*curve, v, 0), l);
  return {"cl5no", "rational hub meeting four genus-3 components twice; degree (-3,2,2,2,2) has four sections",
          curve, {{"L", LineBundle(curve, {-3, 2, 2, 2, 2}, l)}}};
}

using Maker = ExampleInstance (*)();
const std::vector<std::pair<std::string, Maker>>& makers() {
  static const std::vector<std::pair<std::string, Maker>> m{
      {"ct2", make_ct2},     {"Pr", make_pr},       {"Pr2", make_pr2},     {"ctcc", make_ctcc}, {"P1", make_p1},
      {"P2", make_p2},       {"cl2no", make_cl2no}, {"cl3no", make_cl3no}, {"cl3n", make_cl3n}, {"cl5no", make_cl5no},
  };
  return m;
}

std::string format_multidegree_set(const std::vector<Multidegree>& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) out += (k ? ";" : "") + format_multidegree(set[k]);
  return out + "}";
}

class Checker {
 public:
  Checker(Report& report, const ExampleInstance& instance)
      : report_(report), label_(instance.label), curve_(describe_graph(instance.curve->graph())) {}

  void check(bool ok, const std::string& degrees, const std::string& claim, const std::string& computed,
             const std::string& witness = {}) {
    report_.add({label_, curve_, degrees, "L", claim, computed, ok ? Verdict::pass : Verdict::fail,
                 ok ? std::string{} : (witness.empty() ? computed : witness)});
  }

 private:
  Report& report_;
  std::string label_, curve_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void run_ct2(Report& report, const ExampleInstance& inst) {
  for (const auto& [g1, g2] : two_tail_genera) {
    const int g = g1 + g2;
    std::vector<Multidegree> expected;
    if (4 * g1 <= g + 1) expected.push_back({0, 2});
    if (4 * g1 >= g + 1) expected.push_back({1, 1});
    const DualGraph weighted({{"C1", g1}, {"C2", g2}}, {{0, 1, "n1"}});
    const auto on_weights = enumerate_balanced(weighted, 2);
    const auto on_loops = enumerate_balanced(build_graph({g1, g2}, {{0, 1, 1}}), 2);
    const bool ok = on_weights == expected && on_loops == expected;
    report.add({inst.label, "g=(" + std::to_string(g1) + "," + std::to_string(g2) + "),C1-C2", "-", "B_2",
                "B_2=" + format_multidegree_set(expected),
                "weights:" + format_multidegree_set(on_weights) + " loops:" + format_multidegree_set(on_loops),
                ok ? Verdict::pass : Verdict::fail, ok ? "" : format_multidegree_set(on_loops)});
  }
}

void run_pr(Report& report, const ExampleInstance& inst) {
  Checker c(report, inst);
  const LineBundle& L = inst.bundles.front().second;
  const auto& g = inst.curve->graph();
  const int d = L.degree();
  const std::string dm = format_multidegree(L.degrees());
  c.check(!is_balanced(g, L.degrees()).balanced, dm, "not balanced", "balanced=" + yes_no(is_balanced(g, L.degrees()).balanced));
  const int h = h0(L);
  c.check(h >= d + 2, dm, "h0>=d+2=" + std::to_string(d + 2) + " (riemann value " + std::to_string(d - g.genus() + 1) + ")",
          "h0=" + std::to_string(h));
}

void run_pr2(Report& report, const ExampleInstance& inst) {
  Checker c(report, inst);
  const LineBundle& L = inst.bundles.front().second;
  const auto& g = inst.curve->graph();
  const std::string dm = format_multidegree(L.degrees());
  const bool bal = is_balanced(g, L.degrees()).balanced;
  const bool sep = !separating_nodes(g).empty();
  c.check(bal && sep && L.degree() >= 2 * g.genus(), dm, "balanced, separating node, d>=2g",
          "balanced=" + yes_no(bal) + " separating=" + yes_no(sep) + " d=" + std::to_string(L.degree()));
  const bool bp = is_base_point(L, {0, pr2_point});
  c.check(bp, dm, "base point at p=" + to_string(pr2_point), "base_point=" + yes_no(bp),
          format_base_points(L, base_points(L)));
}

void run_ctcc(Report& report, const ExampleInstance& inst) {
  Checker c(report, inst);
  const LineBundle& L = inst.bundles.front().second;
  const int g = inst.curve->genus();
  const std::string dm = format_multidegree(L.degrees());
  const int h = h0(L);
  const bool canonical = is_isomorphic(L, canonical_bundle(inst.curve));
  c.check(h == g && !canonical, dm, "h0=g=" + std::to_string(g) + " and L not isomorphic to omega",
          "h0=" + std::to_string(h) + " isomorphic=" + yes_no(canonical));
}

void run_h0(Report& report, const ExampleInstance& inst, int expected, bool balanced_claim,
            const std::function<void(Checker&, const LineBundle&)>& extra = {}) {
  Checker c(report, inst);
  const LineBundle& L = inst.bundles.front().second;
  const auto& g = inst.curve->graph();
  const std::string dm = format_multidegree(L.degrees());
  if (balanced_claim) {
    const auto verdict = is_balanced(g, L.degrees());
    c.check(verdict.balanced, dm, "balanced", "balanced=" + yes_no(verdict.balanced), verdict.reason);
  }
  if (extra) extra(c, L);
  const int h = h0(L);
  const int bound = L.degree() >= 0 ? L.degree() / 2 + 1 : 0;
  c.check(h == expected, dm, "h0=" + std::to_string(expected),
          "h0=" + std::to_string(h) + (h > bound ? " exceeds_floor(d/2)+1=" + std::to_string(bound) : ""));
}

void run_instance(Report& report, const ExampleInstance& inst) {
  const auto& g = inst.curve->graph();
  if (inst.label == "ct2") return run_ct2(report, inst);
  if (inst.label == "Pr") return run_pr(report, inst);
  if (inst.label == "Pr2") return run_pr2(report, inst);
  if (inst.label == "ctcc") return run_ctcc(report, inst);
  if (inst.label == "P1")
    return run_h0(report, inst, 2, true, [&](Checker& c, const LineBundle& L) {
      const auto lines = separating_lines(g);
      const bool c1 = std::find(lines.begin(), lines.end(), 0) != lines.end();
      c.check(c1, format_multidegree(L.degrees()), "C1 is a separating line", "separating_line=" + yes_no(c1));
    });
  if (inst.label == "P2")
    return run_h0(report, inst, 1, true, [&](Checker& c, const LineBundle& L) {
      const bool sep = !separating_nodes(g).empty();
      c.check(sep, format_multidegree(L.degrees()), "separating node present", "separating=" + yes_no(sep));
    });
  if (inst.label == "cl2no")
    return run_h0(report, inst, 3, false, [&](Checker& c, const LineBundle& L) {
      const auto set = enumerate_balanced(g, 2);
      const bool unique = set == std::vector<Multidegree>{L.degrees()};
      c.check(unique, format_multidegree(L.degrees()), "unique balanced multidegree of degree 2",
              "B_2=" + format_multidegree_set(set));
    });
  if (inst.label == "cl3no")
    return run_h0(report, inst, 3, true, [&](Checker& c, const LineBundle& L) {
      const bool sep = separating_nodes(g).empty();
      const auto kind = classify_stability(g).kind;
      c.check(sep && kind == Stability::strictly_semistable, format_multidegree(L.degrees()),
              "no separating node, strictly semistable",
              "separating=" + yes_no(!sep) + " stability=" + to_string(kind));
    });
  if (inst.label == "cl3n") return run_h0(report, inst, 3, false);
  if (inst.label == "cl5no")
    return run_h0(report, inst, 4, true, [&](Checker& c, const LineBundle& L) {
      const bool sep = separating_nodes(g).empty();
      const VertexSet v = support_subcurve(g, L.degrees());
      c.check(sep && v == singleton(0), format_multidegree(L.degrees()), "no separating node; sections vanish on {C1}",
              "separating=" + yes_no(!sep) + " support=" + format_set(g, v));
    });
  throw std::logic_error("no check for example " + inst.label);
}

}  // namespace

std::vector<std::string> example_labels() {
  std::vector<std::string> out;
  for (const auto& [label, make] : makers()) out.push_back(label);
  return out;
}

std::vector<ExampleInstance> example_corpus() {
  std::vector<ExampleInstance> out;
  for (const auto& [label, make] : makers()) out.push_back(make());
  return out;
}

std::string example_file_text(const ExampleInstance& instance) {
  std::vector<NamedBundle> named;
  for (const auto& [name, bundle] : instance.bundles) named.push_back({name, &bundle});
  return write_curve_file(instance.curve->graph(), instance.curve.get(), named, {},
                          {instance.label + ": " + instance.summary});
}

void export_example_corpus(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& inst : example_corpus()) {
    std::ofstream out(dir / (inst.label + ".curve"), std::ios::binary);
    out << example_file_text(inst);
    if (!out) throw std::runtime_error("cannot write " + (dir / (inst.label + ".curve")).string());
  }
}

Report counterexample_suite(const std::string& only) {
  const auto labels = example_labels();
  if (!only.empty() && std::find(labels.begin(), labels.end(), only) == labels.end())
    throw std::invalid_argument("unknown example label '" + only + "'");
  Report report;
  for (const auto& [label, make] : makers()) {
    if (!only.empty() && label != only) continue;
    run_instance(report, make());
  }
  return report;
}

}  // namespace nodal
