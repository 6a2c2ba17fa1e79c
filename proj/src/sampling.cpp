#include "nodal/sampling.hpp"

#include <algorithm>

namespace nodal {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Engine make_engine(std::uint64_t seed, std::uint64_t stream) { return Engine(mix_seed(seed, stream)); }

// Own reduction instead of std::uniform_int_distribution so that streams agree
// across standard libraries.
int uniform_int(Engine& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Rational random_gluing_constant(Engine& rng) {
  int num = 0;
  while (num == 0) num = uniform_int(rng, -10000, 10000);
  const int den = uniform_int(rng, 1, 10000);
  return Rational(num) / Rational(den);
}

Rational random_free_coordinate(Engine& rng, const GraphCurve& curve, int v, int spread) {
  const auto& marked = curve.marked_points(v);
  for (;;) {
    Rational x(uniform_int(rng, -spread, spread));
    if (uniform_int(rng, 0, 1)) x /= Rational(uniform_int(rng, 2, 7));
    if (curve.is_branch_point(v, x)) continue;
    if (std::find(marked.begin(), marked.end(), x) != marked.end()) continue;
    return x;
  }
}

LineBundle random_bundle(const CurvePtr& curve, const Multidegree& degrees, Engine& rng) {
  std::vector<Rational> l;
  for (int e = 0; e < curve->graph().edge_count(); ++e) l.push_back(random_gluing_constant(rng));
  return LineBundle(curve, degrees, std::move(l));
}

LineBundle random_divisor_bundle(const CurvePtr& curve, const Multidegree& degrees, Engine& rng) {
  PointDivisor divisor;
  for (int v = 0; v < curve->graph().size(); ++v) {
    const int dv = degrees[static_cast<std::size_t>(v)];
    std::vector<Rational> used;
    for (int k = 0; k < std::abs(dv); ++k) {
      Rational x;
      do x = random_free_coordinate(rng, *curve, v);
      while (std::find(used.begin(), used.end(), x) != used.end());
      used.push_back(x);
      divisor.push_back({v, x, dv > 0 ? 1 : -1});
    }
  }
  return bundle_from_divisor(curve, divisor);
}

LineBundle greedy_neutral_bundle(const CurvePtr& curve, const Multidegree& degrees, Engine& rng) {
  const auto& g = curve->graph();
  if (g.edge_count() == 0) return LineBundle(curve, degrees, {});
  std::vector<int> all_edges(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) all_edges[static_cast<std::size_t>(e)] = e;
  // Fisher-Yates with our own draws; std::shuffle differs between standard libraries.
  for (int i = g.edge_count() - 1; i > 0; --i)
    std::swap(all_edges[static_cast<std::size_t>(i)], all_edges[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
  Normalization base = normalize_at(curve, all_edges);
  CurvePtr partial = base.curve;
  LineBundle bundle(partial, degrees, {});
  std::vector<int> order;  // original edge of each glued node
  bool no_sections = false;  // gluing only adds conditions, so this stays true
  for (int e : all_edges) {
    const auto& ed = g.edge(e);
    const CurvePoint p{ed.u, curve->branch(e, 0)}, q{ed.v, curve->branch(e, 1)};
    Rational constant = random_gluing_constant(rng);
    if (!no_sections) no_sections = h0(bundle) == 0;
    if (!no_sections) {
      const auto neutral = neutral_gluing_constant(bundle, p, q);
      if (neutral.neutral && neutral.constant) constant = *neutral.constant;
    }
    Gluing glued = glue(partial, p, q, ed.label);
    bundle = glued.extend(bundle, constant);
    partial = glued.curve;
    order.push_back(e);
  }
  std::vector<Rational> l(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t k = 0; k < order.size(); ++k) l[static_cast<std::size_t>(order[k])] = bundle.gluing(static_cast<int>(k));
  return LineBundle(curve, degrees, std::move(l));
}

std::vector<LineBundle> bundle_family(const CurvePtr& curve, const Multidegree& degrees, std::uint64_t seed,
                                      int random_count, bool include_special) {
  std::vector<LineBundle> out;
  out.push_back(bundle_with_unit_gluing(curve, degrees));
  Engine rng = make_engine(seed, 17);
  for (int k = 0; k < random_count; ++k) out.push_back(random_bundle(curve, degrees, rng));
  if (include_special) {
    out.push_back(random_divisor_bundle(curve, degrees, rng));
    out.push_back(greedy_neutral_bundle(curve, degrees, rng));
  }
  return out;
}

Multidegree random_multidegree(Engine& rng, int size, int lo, int hi) {
  Multidegree d(static_cast<std::size_t>(size));
  for (auto& x : d) x = uniform_int(rng, lo, hi);
  return d;
}

}  // namespace nodal
