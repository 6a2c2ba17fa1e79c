#include "nodal/balance.hpp"
#include "nodal/classify.hpp"
#include "nodal/curve_file.hpp"
#include "nodal/examples.hpp"
#include "nodal/g25.hpp"
#include "nodal/verifiers.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace nodal;

namespace {

constexpr int exit_failures = 1;
constexpr int exit_error = 2;

struct Settings {
  std::uint64_t seed = 1;
  int cap_subcurves = default_subcurve_cap;
  long long cap_box = default_box_cap;
  int samples = -1;  // per-command default
  std::string format = "text";
  std::string only;
};

SweepOptions sweep_options(const Settings& s) {
  SweepOptions o;
  o.seeds = {s.seed, s.seed + 1, s.seed + 2};
  if (s.samples >= 0) o.random_per_seed = s.samples;
  o.subcurve_cap = s.cap_subcurves;
  o.box_cap = s.cap_box;
  return o;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

CurvePtr realized_curve(const CurveFile& file, const std::string& path) {
  if (!file.curve) throw PreconditionError(path + ": unrealized curve (branch coordinates required)");
  return file.curve;
}

int emit(const Report& report, const Settings& s) {
  std::cout << (s.format == "records" ? format_records(report) : format_text(report));
  return report.has_failures() ? exit_failures : 0;
}

std::string join_ids(const DualGraph& g, const std::vector<int>& vs) {
  if (vs.empty()) return "none";
  std::string out;
  for (int v : vs) out += (out.empty() ? "" : ", ") + g.vertex(v).id;
  return out;
}

std::string join_edges(const DualGraph& g, const std::vector<int>& es) {
  if (es.empty()) return "none";
  std::string out;
  for (int e : es)
    out += (out.empty() ? "" : ", ") + g.edge(e).label + "(" + g.vertex(g.edge(e).u).id + "-" + g.vertex(g.edge(e).v).id + ")";
  return out;
}

int cmd_invariants(const std::string& path, const Settings& s) {
  const CurveFile file = read_curve_file(path);
  const DualGraph& g = file.graph;
  const auto stability = classify_stability(g, s.cap_subcurves);
  std::cout << "genus " << g.genus() << ", " << to_string(stability.kind);
  if (stability.witness) std::cout << " (witness " << format_set(g, *stability.witness) << ")";
  std::cout << ", components " << g.size() << ", nodes " << g.edge_count()
            << (g.is_connected() ? "" : ", disconnected") << "\n";
  for (int v = 0; v < g.size(); ++v) {
    const auto inv = subcurve_invariants(g, singleton(v));
    std::cout << "component " << g.vertex(v).id << ": g=" << inv.genus << " delta=" << inv.delta
              << " w=" << inv.canonical_degree << " weight=" << g.weight(v) << " loops=" << g.loops(v) << "\n";
  }
  const auto r = analyze_structure(g, s.cap_subcurves);
  std::cout << "separating nodes: " << join_edges(g, r.separating_nodes) << "\n";
  std::cout << "tails:";
  if (r.tails.empty()) std::cout << " none";
  for (const auto& t : r.tails) std::cout << " " << format_set(g, t.members) << "@" << g.edge(t.node).label;
  std::cout << "\n";
  std::cout << "separating lines: " << join_ids(g, r.separating_lines) << "\n";
  std::cout << "exceptional components: " << join_ids(g, r.exceptional_components) << "\n";
  if (r.b_pairs) {
    std::cout << "B-pairs:";
    if (r.b_pairs->empty()) std::cout << " none";
    for (auto [c, d] : *r.b_pairs) std::cout << " (" << g.vertex(c).id << "," << g.vertex(d).id << ")";
    std::cout << "\n";
  }
  if (r.b_decomposition) {
    std::cout << "B-decomposition:";
    for (VertexSet piece : *r.b_decomposition) std::cout << " " << format_set(g, piece);
    std::cout << "\n";
  }
  return 0;
}

int cmd_balanced(const std::string& path, int degree, const Settings& s) {
  const CurveFile file = read_curve_file(path);
  const auto set = enumerate_balanced(file.graph, degree, s.cap_subcurves, s.cap_box);
  std::cout << "B_" << degree << "={";
  for (std::size_t k = 0; k < set.size(); ++k) std::cout << (k ? ";" : "") << format_multidegree(set[k]);
  std::cout << "}\ncount=" << set.size() << "\n";
  return 0;
}

int cmd_h0(const std::string& path, const std::string& bundle_name) {
  const CurveFile file = read_curve_file(path);
  realized_curve(file, path);
  if (file.bundles.empty()) throw PreconditionError(path + ": no bundles defined");
  bool found = false;
  for (const auto& [name, bundle] : file.bundles) {
    if (!bundle_name.empty() && name != bundle_name) continue;
    found = true;
    std::cout << name << " d=" << format_multidegree(bundle.degrees()) << " h0=" << h0(bundle) << " h1=" << h1(bundle)
              << " base_points=" << format_base_points(bundle, base_points(bundle)) << "\n";
  }
  if (!found) throw PreconditionError("no bundle named " + bundle_name);
  return 0;
}

int cmd_verify(const std::string& theorem, const std::string& path, const Settings& s) {
  const CurveFile file = read_curve_file(path);
  const CurvePtr curve = realized_curve(file, path);
  const SweepOptions o = sweep_options(s);
  const std::string name = stem(path);
  Report report;
  if (theorem == "riemann") {
    report = verify_riemann_sweep(curve, o, name);
  } else if (theorem == "clifford-uniform") {
    report = verify_clifford_uniform_sweep(curve, o, name);
  } else if (theorem == "clifford-2c") {
    report = verify_clifford_two_component_sweep(curve, o, name);
  } else if (theorem == "extremes") {
    report = verify_degree_extremes(curve, o, name);
  } else if (theorem == "cl4") {
    report = verify_clifford_low_degree(curve, o, name);
  } else if (theorem == "g25") {
    report = verify_g25(curve, s.samples >= 0 ? s.samples : 500, s.seed, name, true);
  } else if (theorem == "lemmas") {
    report = verify_gluing_lemmas_sweep(curve, -2, 6, o, name);
    const auto& g = curve->graph();
    if (g.size() == 2) {
      const int delta = intersection_number(g, singleton(0), singleton(1));
      for (int kept = 1; kept < delta; ++kept) report.merge(verify_partial_normalization_strictness(curve, kept, o, name));
    }
  } else {
    throw CLI::ValidationError("theorem", "unknown theorem id '" + theorem + "'");
  }
  return emit(report, s);
}

int cmd_examples(const Settings& s, const std::string& export_dir) {
  if (!export_dir.empty()) {
    export_example_corpus(export_dir);
    std::cout << "wrote " << example_labels().size() << " curve files to " << export_dir << "\n";
    return 0;
  }
  return emit(counterexample_suite(s.only), s);
}

int cmd_classify_wh(const std::string& path, const Settings& s) {
  const CurveFile file = read_curve_file(path);
  const auto c = weakly_hyperelliptic_classify(file.graph, file.curve, s.cap_subcurves);
  std::cout << "verdict: " << c.verdict << (c.applicable ? "" : " (" + c.reason + ")") << "\n";
  for (const auto& cand : c.candidates) {
    std::cout << format_multidegree(cand.degrees) << (cand.balanced ? " balanced" : " nonnegative") << " pattern="
              << to_string(cand.pattern) << " status=" << to_string(cand.status) << " | " << cand.detail;
    if (cand.bundle) std::cout << " | gluing=" << format_gluing(*cand.bundle);
    std::cout << "\n";
  }
  return 0;
}

int cmd_classify_hypcomb(const std::string& path, const Settings& s) {
  const CurveFile file = read_curve_file(path);
  const auto r = hypcomb_check(file.graph, file.curve, s.cap_subcurves);
  const DualGraph& g = file.graph;
  if (!r.applicable) {
    std::cout << "verdict: not-applicable (" << r.reason << ")\n";
    return 0;
  }
  std::cout << "verdict: " << (r.passes ? "passes necessary conditions" : "not hyperelliptic");
  if (r.witness) std::cout << " (witness " << format_set(g, r.witness->first) << " " << format_set(g, r.witness->second) << ")";
  std::cout << "\npieces:";
  for (VertexSet p : r.pieces) std::cout << " " << format_set(g, p);
  std::cout << "\n";
  for (const auto& p : r.pairs) {
    std::cout << format_set(g, p.first) << " " << format_set(g, p.second) << " meet=" << p.meet;
    if (p.first_h0) std::cout << " h0_first=" << *p.first_h0 << " h0_second=" << *p.second_h0;
    std::cout << (p.ok ? " ok" : " violates") << "\n";
  }
  return 0;
}

int cmd_classify_g25(const std::string& path) {
  if (path.empty()) {
    std::cout << g25_table_text();
    return 0;
  }
  const CurveFile file = read_curve_file(path);
  const DualGraph& g = file.graph;
  if (g.size() != 2) throw PreconditionError("expected two components");
  const int g1 = g.component_genus(0), g2 = g.component_genus(1);
  const int delta = intersection_number(g, singleton(0), singleton(1));
  const bool swap = g1 > g2;
  for (auto d : enumerate_balanced(g, 5)) {
    if (swap) std::swap(d[0], d[1]);
    const auto p = g25_classify(std::min(g1, g2), std::max(g1, g2), delta, d);
    std::cout << "g1=" << p.g1 << " g2=" << p.g2 << " delta=" << p.delta << " d=" << format_multidegree(p.degrees)
              << (p.admissible ? " admissible" : " excluded");
    for (std::size_t k = 0; k < p.cases.size(); ++k) std::cout << " [" << p.cases[k] << ": " << p.conditions[k] << "]";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line bundles on nodal curves whose components are projective lines"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--seed", s.seed, "base seed; sweeps use seed, seed+1, seed+2");
  app.add_option("--cap-subcurves", s.cap_subcurves, "refuse subcurve enumeration above this many components");
  app.add_option("--cap-box", s.cap_box, "refuse multidegree boxes above this size");
  app.add_option("--samples", s.samples, "random bundles per seed (verify g25: total samples)");
  app.add_option("--format", s.format, "text or records")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--only", s.only, "examples: run one label");

  std::string path, theorem, bundle_name, export_dir;
  int degree = 0;

  auto* inv = app.add_subcommand("invariants", "numerical and structural invariants of the dual graph");
  inv->add_option("file", path)->required();
  auto* bal = app.add_subcommand("balanced", "balanced multidegrees of a total degree");
  bal->add_option("file", path)->required();
  bal->add_option("degree", degree)->required();
  auto* h0c = app.add_subcommand("h0", "sections, h1 and base points of the bundles in a file");
  h0c->add_option("file", path)->required();
  h0c->add_option("--bundle", bundle_name, "only this bundle");
  auto* ver = app.add_subcommand("verify", "run one verifier on a realized curve");
  ver->add_option("theorem", theorem, "riemann|clifford-uniform|clifford-2c|extremes|cl4|g25|lemmas")
      ->required()
      ->check(CLI::IsMember({"riemann", "clifford-uniform", "clifford-2c", "extremes", "cl4", "g25", "lemmas"}));
  ver->add_option("file", path)->required();
  auto* ex = app.add_subcommand("examples", "expected against computed on the example corpus");
  ex->add_option("--export", export_dir, "write the corpus as curve files into this directory");
  auto* cls = app.add_subcommand("classify", "degree-2 pencils, hyperelliptic combinatorics, genus-6 nets");
  cls->require_subcommand(1);
  auto* wh = cls->add_subcommand("wh", "weakly hyperelliptic classification");
  wh->add_option("file", path)->required();
  auto* hyp = cls->add_subcommand("hypcomb", "necessary conditions on the B-decomposition");
  hyp->add_option("file", path)->required();
  auto* g25c = cls->add_subcommand("g25", "genus-6 decision table (whole table without a file)");
  g25c->add_option("file", path);
  for (auto* sub : {inv, bal, h0c, ver, ex, cls}) sub->fallthrough();
  for (auto* sub : {wh, hyp, g25c}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version are "errors" with exit code 0
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_error;
  }

  try {
    if (*inv) return cmd_invariants(path, s);
    if (*bal) return cmd_balanced(path, degree, s);
    if (*h0c) return cmd_h0(path, bundle_name);
    if (*ver) return cmd_verify(theorem, path, s);
    if (*ex) return cmd_examples(s, export_dir);
    if (*wh) return cmd_classify_wh(path, s);
    if (*hyp) return cmd_classify_hypcomb(path, s);
    if (*g25c) return cmd_classify_g25(path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << path << ": " << e.what() << "\n";
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
