#pragma once

#include "nodal/graph_curve.hpp"
#include "nodal/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nodal {

// Two smooth components of genus g1 <= g2 meeting in delta points, total genus 6,
// and a balanced multidegree of total 5. The table says whether a globally
// generated bundle with three sections can live there, and on which conditions.
struct G25Profile {
  int g1 = 0, g2 = 0, delta = 0;
  Multidegree degrees;
  bool admissible = false;
  std::vector<std::string> cases;       // case ids, e.g. "II.c"
  std::vector<std::string> conditions;  // one text per case id
};

// Throws PreconditionError on g1 + g2 + delta != 7, g1 > g2, delta < 1, or a
// multidegree that is not balanced of total 5.
G25Profile g25_classify(int g1, int g2, int delta, const Multidegree& degrees);

// Two weighted components with delta edges between them.
DualGraph two_component_graph(int g1, int g2, int delta);

// Every profile with g1 <= g2, one line per balanced multidegree; profiles that
// are not semistable get a single line saying so. Ends with a count line.
std::string g25_table_text();

// Oracle side of the table on a binary curve of genus 6: no sampled balanced
// degree-5 bundle is globally generated with h0 >= 3. Samples cycle through the
// balanced multidegrees and through random, divisor and greedy-neutral bundles.
Report verify_g25(const CurvePtr& curve, int samples, std::uint64_t seed, const std::string& name = {},
                  bool keep_passes = false);

}  // namespace nodal
