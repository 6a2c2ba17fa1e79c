#pragma once

#include "nodal/dual_graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nodal {

// One integer per vertex, positional on the graph's vertex order.
using Multidegree = std::vector<int>;

inline constexpr long long default_box_cap = 10'000'000;

int total(const Multidegree& d);
int degree_on(const Multidegree& d, VertexSet z);
bool is_nonnegative(const Multidegree& d);
std::string format_multidegree(const Multidegree& d);
// Accepts "(2,3,-1)" or "d=(2,3,-1)".
Multidegree parse_multidegree(std::string_view text);

// Entries w_i = 2 g_i - 2 + delta_i, the multidegree of the dualizing sheaf.
Multidegree canonical_multidegree(const DualGraph& g);
Multidegree residual_multidegree(const DualGraph& g, const Multidegree& d);

struct BalanceVerdict {
  bool balanced = false;
  std::optional<VertexSet> violation;  // subcurve or exceptional component
  std::string reason;
};

// Precomputes the connected subcurves once so repeated tests are cheap.
class BalanceTester {
 public:
  explicit BalanceTester(const DualGraph& g, int cap = default_subcurve_cap);
  BalanceVerdict test(const Multidegree& d) const;
  bool balanced(const Multidegree& d) const { return test(d).balanced; }
  // Interval for d_i from the basic inequality at the single component i.
  std::pair<int, int> component_range(int v, int total_degree) const;

 private:
  struct Entry {
    VertexSet members;
    int w, delta;
  };
  const DualGraph& graph_;
  int w_;
  std::vector<Entry> subcurves_;
  std::vector<int> exceptional_;
};

BalanceVerdict is_balanced(const DualGraph& g, const Multidegree& d, int cap = default_subcurve_cap);

// B_d(X) in lexicographic order.
std::vector<Multidegree> enumerate_balanced(const DualGraph& g, int degree, int cap = default_subcurve_cap,
                                            long long box_cap = default_box_cap);

struct ExcessCheck {
  int excess = 0;   // a_Z in d_Z = 2 g_Z + delta_Z - 1 + a_Z
  Rational bound;   // delta_Z/2 - 1 (even) or (delta_Z - 1)/2 - 1 (odd)
  bool holds = false;
};
ExcessCheck excess_bound_check(const DualGraph& g, const Multidegree& d, VertexSet z,
                               int cap = default_subcurve_cap);

}  // namespace nodal
