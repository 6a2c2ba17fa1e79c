#include "nodal/g25.hpp"

#include "nodal/sampling.hpp"
#include "nodal/verifiers.hpp"

#include <algorithm>
#include <sstream>

namespace nodal {

namespace {

struct TableRow {
  int delta;
  std::vector<std::pair<int, int>> genera;
  Multidegree degrees;
  const char* id;
  const char* conditions;
};

// Admissible rows; every other balanced profile is excluded.
const std::vector<TableRow>& admissible_rows() {
  static const std::vector<TableRow> rows{
      {1, {{1, 5}}, {0, 5}, "I.a", "C2 not hyperelliptic; L1=O_C1; h0(L2)=3"},
      {1, {{2, 4}, {3, 3}}, {2, 3}, "I.b", "C2 not hyperelliptic; h0(L1)=h0(L2)=2"},
      {2, {{0, 5}}, {1, 4}, "II.a", "C2 hyperelliptic; L2=H_C2^2"},
      {2, {{1, 4}}, {0, 5}, "II.b", "C2 not hyperelliptic; L1=O_C1; h0(L2)=3"},
      {2, {{2, 3}}, {2, 3}, "II.c", "C2 not hyperelliptic; L1=H_C1=O_C1(G1); L2=O_C2(G2+q); h0(L2)=2"},
      {2, {{1, 4}, {2, 3}}, {2, 3}, "II.d", "C2 not hyperelliptic; L1=O_C1(G1); L2=O_C2(G2+q); h0(L1)=h0(L2)=2"},
      {3, {{1, 3}}, {3, 2}, "III.a", "C2 hyperelliptic; L1=O_C1(G1); L2=H_C2"},
      {3, {{1, 3}}, {0, 5}, "III.b", "L1=O_C1; h0(L2)=3"},
      {4, {{0, 3}}, {1, 4}, "IV", "L2=K_C2=O_C2(G2)"},
      {6, {{0, 1}}, {2, 3}, "V", "no further condition"},
  };
  return rows;
}

void require_profile(int g1, int g2, int delta) {
  if (g1 < 0 || g2 < 0 || delta < 1) throw PreconditionError("genera must be nonnegative and delta positive");
  if (g1 + g2 + delta - 1 != 6) throw PreconditionError("g1 + g2 + delta - 1 must equal 6");
  if (g1 > g2) throw PreconditionError("expected g1 <= g2");
}

}  // namespace

DualGraph two_component_graph(int g1, int g2, int delta) {
  std::vector<Edge> edges;
  for (int k = 0; k < delta; ++k) edges.push_back({0, 1, "n" + std::to_string(k + 1)});
  return DualGraph({{"C1", g1}, {"C2", g2}}, std::move(edges));
}

G25Profile g25_classify(int g1, int g2, int delta, const Multidegree& degrees) {
  require_profile(g1, g2, delta);
  if (degrees.size() != 2 || total(degrees) != 5) throw PreconditionError("expected a multidegree (d1,d2) of total 5");
  const DualGraph graph = two_component_graph(g1, g2, delta);
  if (classify_stability(graph).kind == Stability::unstable) throw PreconditionError("profile is not semistable");
  if (!is_balanced(graph, degrees).balanced) throw PreconditionError("multidegree is not balanced");
  G25Profile p{g1, g2, delta, degrees, false, {}, {}};
  for (const auto& row : admissible_rows()) {
    if (row.delta != delta || row.degrees != degrees) continue;
    if (std::find(row.genera.begin(), row.genera.end(), std::make_pair(g1, g2)) == row.genera.end()) continue;
    p.admissible = true;
    p.cases.push_back(row.id);
    p.conditions.push_back(row.conditions);
  }
  return p;
}

std::string g25_table_text() {
  std::ostringstream out;
  int profiles = 0, semistable = 0, lines = 0, admissible = 0;
  for (int delta = 1; delta <= 7; ++delta)
    for (int g1 = 0; 2 * g1 <= 7 - delta; ++g1) {
      const int g2 = 7 - delta - g1;
      ++profiles;
      const std::string head =
          "g1=" + std::to_string(g1) + " g2=" + std::to_string(g2) + " delta=" + std::to_string(delta);
      const DualGraph graph = two_component_graph(g1, g2, delta);
      if (classify_stability(graph).kind == Stability::unstable) {
        out << head << " not-semistable\n";
        continue;
      }
      ++semistable;
      for (const auto& d : enumerate_balanced(graph, 5)) {
        const auto p = g25_classify(g1, g2, delta, d);
        ++lines;
        out << head << " d=" << format_multidegree(d);
        if (!p.admissible) {
          out << " excluded\n";
          continue;
        }
        ++admissible;
        out << " admissible";
        for (std::size_t k = 0; k < p.cases.size(); ++k) out << " [" << p.cases[k] << ": " << p.conditions[k] << "]";
        out << "\n";
      }
    }
  out << "profiles=" << profiles << " semistable=" << semistable << " rows=" << lines << " admissible=" << admissible
      << "\n";
  return out.str();
}

Report verify_g25(const CurvePtr& curve, int samples, std::uint64_t seed, const std::string& name, bool keep_passes) {
  Report report(keep_passes);
  const auto& g = curve->graph();
  const std::string label = name.empty() ? describe_graph(g) : name;
  const bool binary = g.size() == 2 && g.genus() == 6 && g.loops(0) == 0 && g.loops(1) == 0 && g.weight(0) == 0 &&
                      g.weight(1) == 0;
  if (!binary) {
    report.add({"g25-binary", label, "-", "-", "binary curve of genus 6", "g=" + std::to_string(g.genus()),
                Verdict::not_applicable, "needs two smooth rational components meeting 7 times"});
    return report;
  }
  const auto degrees = enumerate_balanced(g, 5);
  Engine rng = make_engine(seed, 53);
  for (int k = 0; k < samples; ++k) {
    const Multidegree& d = degrees[static_cast<std::size_t>((k / 3) % static_cast<int>(degrees.size()))];
    const int kind = k % 3;
    const LineBundle bundle = kind == 0   ? random_bundle(curve, d, rng)
                              : kind == 1 ? random_divisor_bundle(curve, d, rng)
                                          : greedy_neutral_bundle(curve, d, rng);
    const int h = h0(bundle);
    const bool generated = h >= 3 && base_points(bundle).empty();
    const char* kind_name = kind == 0 ? "random" : kind == 1 ? "divisor" : "greedy";
    report.record(generated ? Verdict::fail : Verdict::pass, [&] {
      return ReportEntry{"g25-binary",
                         label,
                         format_multidegree(d),
                         std::string(kind_name) + ":s=" + std::to_string(seed) + ":k=" + std::to_string(k),
                         "not (globally generated and h0>=3)",
                         "h0=" + std::to_string(h) + (h >= 3 ? (generated ? " no-base-points" : " has-base-points") : ""),
                         generated ? Verdict::fail : Verdict::pass,
                         generated ? format_gluing(bundle) : ""};
    });
  }
  return report;
}

}  // namespace nodal
