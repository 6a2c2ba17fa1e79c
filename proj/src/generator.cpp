#include "nodal/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nodal {

namespace {

struct Shape {
  int n = 0;
  std::vector<int> loops;
  std::vector<int> mult;  // row-major upper triangle, i < j
};

int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

std::vector<int> key_of(const Shape& s, const std::vector<int>& perm) {
  std::vector<int> key;
  key.reserve(s.loops.size() + s.mult.size());
  for (int i = 0; i < s.n; ++i) key.push_back(s.loops[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) {
      int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
      if (a > b) std::swap(a, b);
      key.push_back(s.mult[static_cast<std::size_t>(pair_index(s.n, a, b))]);
    }
  return key;
}

std::vector<int> canonical(const Shape& s) {
  std::vector<int> perm(static_cast<std::size_t>(s.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = key_of(s, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::max(best, key_of(s, perm));
  return best;
}

// True when no relabeling gives a larger key; compares lazily and stops at the
// first permutation that wins.
bool is_canonical(const Shape& s) {
  const std::vector<int> own = [&] {
    std::vector<int> id(static_cast<std::size_t>(s.n));
    std::iota(id.begin(), id.end(), 0);
    return key_of(s, id);
  }();
  std::vector<int> perm(static_cast<std::size_t>(s.n));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::size_t pos = 0;
    int cmp = 0;
    for (int i = 0; i < s.n && cmp == 0; ++i, ++pos) {
      const int x = s.loops[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      cmp = (x > own[pos]) - (x < own[pos]);
    }
    for (int i = 0; i < s.n && cmp == 0; ++i)
      for (int j = i + 1; j < s.n && cmp == 0; ++j, ++pos) {
        int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
        if (a > b) std::swap(a, b);
        const int x = s.mult[static_cast<std::size_t>(pair_index(s.n, a, b))];
        cmp = (x > own[pos]) - (x < own[pos]);
      }
    if (cmp > 0) return false;
  }
  return true;
}

bool acceptable(const Shape& s, Family family) {
  const int need = family == Family::stable ? 3 : family == Family::semistable ? 2 : 0;
  std::vector<int> valence(static_cast<std::size_t>(s.n));
  for (int i = 0; i < s.n; ++i) valence[static_cast<std::size_t>(i)] = 2 * s.loops[static_cast<std::size_t>(i)];
  std::vector<int> parent(static_cast<std::size_t>(s.n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int pieces = s.n;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) {
      const int m = s.mult[static_cast<std::size_t>(pair_index(s.n, i, j))];
      if (m == 0) continue;
      valence[static_cast<std::size_t>(i)] += m;
      valence[static_cast<std::size_t>(j)] += m;
      const int a = find(i), b = find(j);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --pieces;
      }
    }
  if (pieces != 1) return false;
  for (int v : valence)
    if (v < need) return false;
  return true;
}

DualGraph graph_of(const Shape& s) {
  std::vector<Vertex> vertices;
  for (int i = 0; i < s.n; ++i) vertices.push_back({"C" + std::to_string(i + 1), 0});
  std::vector<Edge> edges;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j)
      for (int k = 0; k < s.mult[static_cast<std::size_t>(pair_index(s.n, i, j))]; ++k) edges.push_back({i, j, ""});
  for (int i = 0; i < s.n; ++i)
    for (int k = 0; k < s.loops[static_cast<std::size_t>(i)]; ++k) edges.push_back({i, i, ""});
  return DualGraph(std::move(vertices), std::move(edges));
}

Shape shape_of(const DualGraph& g) {
  Shape s;
  s.n = g.size();
  s.loops.assign(static_cast<std::size_t>(s.n), 0);
  s.mult.assign(static_cast<std::size_t>(s.n * (s.n - 1) / 2), 0);
  for (const auto& e : g.edges()) {
    if (e.is_loop())
      ++s.loops[static_cast<std::size_t>(e.u)];
    else
      ++s.mult[static_cast<std::size_t>(pair_index(s.n, std::min(e.u, e.v), std::max(e.u, e.v)))];
  }
  return s;
}

}  // namespace

std::vector<int> canonical_key(const DualGraph& graph) { return canonical(shape_of(graph)); }

std::vector<DualGraph> realizable_graphs(int components, int genus, Family family) {
  if (components < 1 || genus < 0) throw std::invalid_argument("bad generator parameters");
  const int total_edges = genus + components - 1;
  Shape s;
  s.n = components;
  s.loops.assign(static_cast<std::size_t>(components), 0);
  s.mult.assign(static_cast<std::size_t>(components * (components - 1) / 2), 0);
  const int slots = static_cast<int>(s.loops.size() + s.mult.size());
  auto slot = [&](int k) -> int& {
    return k < static_cast<int>(s.loops.size()) ? s.loops[static_cast<std::size_t>(k)]
                                                : s.mult[static_cast<std::size_t>(k - static_cast<int>(s.loops.size()))];
  };
  std::vector<std::vector<int>> keys;
  // Distribute total_edges over the slots; every complete assignment is tested.
  auto recurse = [&](auto&& self, int k, int left) -> void {
    if (k == slots - 1) {
      slot(k) = left;
      // each class is kept once, through its maximal labeling
      if (is_canonical(s) && acceptable(s, family)) {
        std::vector<int> key(s.loops);
        key.insert(key.end(), s.mult.begin(), s.mult.end());
        keys.push_back(std::move(key));
      }
      slot(k) = 0;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      slot(k) = x;
      self(self, k + 1, left - x);
    }
    slot(k) = 0;
  };
  recurse(recurse, 0, total_edges);
  std::sort(keys.begin(), keys.end(), std::greater<>());
  std::vector<DualGraph> out;
  for (const auto& key : keys) {
    Shape c;
    c.n = components;
    c.loops.assign(key.begin(), key.begin() + components);
    c.mult.assign(key.begin() + components, key.end());
    out.push_back(graph_of(c));
  }
  return out;
}

std::vector<DualGraph> realizable_graphs_upto(int max_components, int max_genus, Family family) {
  std::vector<DualGraph> out;
  for (int n = 1; n <= max_components; ++n)
    for (int g = 2; g <= max_genus; ++g) {
      auto part = realizable_graphs(n, g, family);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  return out;
}

DualGraph random_realizable_graph(Engine& rng, int components, int genus, Family family) {
  const int extra = genus;  // edges beyond a spanning tree, each adds one to the genus
  for (;;) {
    Shape s;
    s.n = components;
    s.loops.assign(static_cast<std::size_t>(components), 0);
    s.mult.assign(static_cast<std::size_t>(components * (components - 1) / 2), 0);
    for (int v = 1; v < components; ++v) {
      const int u = uniform_int(rng, 0, v - 1);
      ++s.mult[static_cast<std::size_t>(pair_index(components, u, v))];
    }
    for (int k = 0; k < extra; ++k) {
      const int a = uniform_int(rng, 0, components - 1), b = uniform_int(rng, 0, components - 1);
      if (a == b)
        ++s.loops[static_cast<std::size_t>(a)];
      else
        ++s.mult[static_cast<std::size_t>(pair_index(components, std::min(a, b), std::max(a, b)))];
    }
    if (acceptable(s, family)) return graph_of(s);
  }
}

CurvePtr realize(const DualGraph& graph, std::uint64_t seed) {
  Engine rng = make_engine(seed, 0x5eed);
  std::vector<std::vector<Rational>> pool(static_cast<std::size_t>(graph.size()));
  for (int v = 0; v < graph.size(); ++v) {
    const int need = graph.valence(v);
    const int radius = 2 * need + 2;
    std::vector<int> values(static_cast<std::size_t>(2 * radius + 1));
    std::iota(values.begin(), values.end(), -radius);
    // Fisher-Yates with the portable draw
    for (int i = static_cast<int>(values.size()) - 1; i > 0; --i)
      std::swap(values[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
    for (int k = 0; k < need; ++k) pool[static_cast<std::size_t>(v)].push_back(Rational(values[static_cast<std::size_t>(k)]));
  }
  std::vector<std::size_t> next(static_cast<std::size_t>(graph.size()), 0);
  std::vector<std::array<Rational, 2>> branches;
  for (const auto& e : graph.edges()) {
    Rational a = pool[static_cast<std::size_t>(e.u)][next[static_cast<std::size_t>(e.u)]++];
    Rational b = pool[static_cast<std::size_t>(e.v)][next[static_cast<std::size_t>(e.v)]++];
    branches.push_back({a, b});
  }
  return make_curve(graph, std::move(branches));
}

}  // namespace nodal
