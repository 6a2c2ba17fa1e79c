#pragma once

#include "nodal/graph_curve.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace nodal {

using Engine = std::mt19937_64;

// splitmix64 finalizer over the pair; stable across platforms.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
Engine make_engine(std::uint64_t seed, std::uint64_t stream = 0);

int uniform_int(Engine& rng, int lo, int hi);
// Numerator in [-10^4, 10^4] minus {0}, denominator in [1, 10^4].
Rational random_gluing_constant(Engine& rng);
// A coordinate on component v avoiding its branch and marked points.
Rational random_free_coordinate(Engine& rng, const GraphCurve& curve, int v, int spread = 50);

LineBundle random_bundle(const CurvePtr& curve, const Multidegree& degrees, Engine& rng);
// O(D) for a random node-avoiding D with the given multidegree (signed points).
LineBundle random_divisor_bundle(const CurvePtr& curve, const Multidegree& degrees, Engine& rng);
// Adds the nodes one at a time, choosing the gluing constant that keeps h0 when
// the two branches are a neutral pair and a random one otherwise. Lands on
// special bundles with large h0 far more often than random gluing.
LineBundle greedy_neutral_bundle(const CurvePtr& curve, const Multidegree& degrees, Engine& rng);

// Unit gluing, then `random_count` random bundles, then one divisor bundle and one
// greedy-neutral bundle per seed.
std::vector<LineBundle> bundle_family(const CurvePtr& curve, const Multidegree& degrees, std::uint64_t seed,
                                      int random_count, bool include_special = true);

// Random multidegree with entries in [lo, hi].
Multidegree random_multidegree(Engine& rng, int size, int lo, int hi);

}  // namespace nodal
