#pragma once

#include "nodal/graph_curve.hpp"
#include "nodal/sampling.hpp"

#include <cstdint>
#include <vector>

namespace nodal {

// `connected` drops the valence condition (any genus, any shape).
enum class Family { semistable, stable, connected };

// Connected graphs with weight-0 vertices C1..Cn and the given genus, one per
// isomorphism class, in a fixed order. Loops carry the component genus.
std::vector<DualGraph> realizable_graphs(int components, int genus, Family family);

// Union over 1 <= components <= max_components and 2 <= genus <= max_genus.
std::vector<DualGraph> realizable_graphs_upto(int max_components, int max_genus, Family family);

// One random graph of the family; rejection sampling on a random spanning tree
// plus extra edges and loops.
DualGraph random_realizable_graph(Engine& rng, int components, int genus, Family family);

// Distinct integer branch coordinates per component drawn from the seed.
CurvePtr realize(const DualGraph& graph, std::uint64_t seed);

// Canonical key under vertex relabeling (brute force over permutations).
std::vector<int> canonical_key(const DualGraph& graph);

}  // namespace nodal
