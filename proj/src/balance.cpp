#include "nodal/balance.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace nodal {

int total(const Multidegree& d) { return std::accumulate(d.begin(), d.end(), 0); }

int degree_on(const Multidegree& d, VertexSet z) {
  int s = 0;
  for (int v : members(z)) s += d[static_cast<std::size_t>(v)];
  return s;
}

bool is_nonnegative(const Multidegree& d) {
  for (int x : d)
    if (x < 0) return false;
  return true;
}

std::string format_multidegree(const Multidegree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

Multidegree parse_multidegree(std::string_view text) {
  if (text.substr(0, 2) == "d=") text.remove_prefix(2);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("multidegree must look like (2,3,-1)");
  text = text.substr(1, text.size() - 2);
  Multidegree d;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(std::string(piece), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) throw std::invalid_argument("bad multidegree entry '" + std::string(piece) + "'");
    d.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("trailing comma in multidegree");
  }
  return d;
}

Multidegree canonical_multidegree(const DualGraph& g) {
  Multidegree w(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) w[static_cast<std::size_t>(v)] = subcurve_invariants(g, singleton(v)).canonical_degree;
  return w;
}

Multidegree residual_multidegree(const DualGraph& g, const Multidegree& d) {
  Multidegree w = canonical_multidegree(g);
  if (d.size() != w.size()) throw std::invalid_argument("multidegree length mismatch");
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= d[i];
  return w;
}

BalanceTester::BalanceTester(const DualGraph& g, int cap) : graph_(g) {
  const int genus = g.genus();
  if (genus < 2) throw PreconditionError("genus below 2");
  if (classify_stability(g, cap).kind == Stability::unstable) throw PreconditionError("curve is not semistable");
  w_ = 2 * genus - 2;
  for (VertexSet z : connected_subcurves(g, cap)) {
    const auto inv = subcurve_invariants(g, z);
    subcurves_.push_back({z, inv.canonical_degree, inv.delta});
  }
  exceptional_ = exceptional_components(g);
}

BalanceVerdict BalanceTester::test(const Multidegree& d) const {
  if (static_cast<int>(d.size()) != graph_.size()) throw std::invalid_argument("multidegree length mismatch");
  const long long deg = total(d);
  for (int e : exceptional_)
    if (d[static_cast<std::size_t>(e)] != 1) return {false, singleton(e), "exceptional component needs degree 1"};
  // d w_Z / w - delta_Z / 2 <= d_Z <= d w_Z / w + delta_Z / 2, scaled by 2w.
  for (const auto& s : subcurves_) {
    const long long dz = degree_on(d, s.members);
    const long long centre = 2 * deg * s.w, slack = static_cast<long long>(s.delta) * w_;
    const long long scaled = 2LL * w_ * dz;
    if (scaled < centre - slack) return {false, s.members, "below the basic inequality"};
    if (scaled > centre + slack) return {false, s.members, "above the basic inequality"};
  }
  return {true, std::nullopt, ""};
}

std::pair<int, int> BalanceTester::component_range(int v, int total_degree) const {
  for (int e : exceptional_)
    if (e == v) return {1, 1};
  const auto inv = subcurve_invariants(graph_, singleton(v));
  const long long num_lo = 2LL * total_degree * inv.canonical_degree - static_cast<long long>(inv.delta) * w_;
  const long long num_hi = 2LL * total_degree * inv.canonical_degree + static_cast<long long>(inv.delta) * w_;
  const long long den = 2LL * w_;
  auto floor_div = [](long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); };
  const long long lo = -floor_div(-num_lo, den);
  const long long hi = floor_div(num_hi, den);
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

BalanceVerdict is_balanced(const DualGraph& g, const Multidegree& d, int cap) { return BalanceTester(g, cap).test(d); }

std::vector<Multidegree> enumerate_balanced(const DualGraph& g, int degree, int cap, long long box_cap) {
  BalanceTester tester(g, cap);
  const int n = g.size();
  std::vector<std::pair<int, int>> ranges;
  long long cells = 1;
  for (int v = 0; v < n; ++v) {
    ranges.push_back(tester.component_range(v, degree));
    const long long width = ranges.back().second - ranges.back().first + 1;
    if (width <= 0) return {};
    // The last entry is fixed by the total, so it does not widen the box.
    if (v + 1 < n) {
      cells *= width;
      if (cells > box_cap)
        throw PreconditionError("balanced enumeration box exceeds the cap of " + std::to_string(box_cap) + " cells");
    }
  }
  std::vector<Multidegree> out;
  Multidegree d(static_cast<std::size_t>(n));
  for (int v = 0; v + 1 < n; ++v) d[static_cast<std::size_t>(v)] = ranges[static_cast<std::size_t>(v)].first;
  for (;;) {
    int partial = 0;
    for (int v = 0; v + 1 < n; ++v) partial += d[static_cast<std::size_t>(v)];
    const int last = degree - partial;
    const auto [lo, hi] = ranges.back();
    if (last >= lo && last <= hi) {
      d.back() = last;
      if (tester.balanced(d)) out.push_back(d);
    }
    int v = n - 2;
    while (v >= 0 && d[static_cast<std::size_t>(v)] == ranges[static_cast<std::size_t>(v)].second) {
      d[static_cast<std::size_t>(v)] = ranges[static_cast<std::size_t>(v)].first;
      --v;
    }
    if (v < 0) break;
    ++d[static_cast<std::size_t>(v)];
  }
  return out;
}

ExcessCheck excess_bound_check(const DualGraph& g, const Multidegree& d, VertexSet z, int cap) {
  if (!is_balanced(g, d, cap).balanced) throw PreconditionError("multidegree is not balanced");
  if (total(d) > 2 * g.genus() - 2) throw PreconditionError("total degree exceeds 2g - 2");
  const auto inv = subcurve_invariants(g, z);
  ExcessCheck r;
  r.excess = degree_on(d, z) - (2 * inv.genus + inv.delta - 1);
  r.bound = inv.delta % 2 == 0 ? Rational(inv.delta, 2) - 1 : Rational(inv.delta - 1, 2) - 1;
  r.holds = Rational(r.excess) <= r.bound;
  return r;
}

}  // namespace nodal
