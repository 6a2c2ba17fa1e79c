#include "doctest.h"

#include "nodal/generator.hpp"
#include "nodal/verifiers.hpp"
#include "test_support.hpp"

using namespace nodal;
using testing_support::naive_h0;

TEST_SUITE("properties") {
  TEST_CASE("random graphs: generator contract") {
    Engine rng = make_engine(101, 0);
    for (int k = 0; k < 300; ++k) {
      const int n = uniform_int(rng, 1, 5), genus = uniform_int(rng, 2, 7);
      const Family fam = k % 2 ? Family::stable : Family::semistable;
      if (realizable_graphs(n, genus, fam).empty()) continue;
      const DualGraph g = random_realizable_graph(rng, n, genus, fam);
      CHECK(g.size() == n);
      CHECK(g.genus() == genus);
      CHECK(g.is_connected());
      const auto kind = classify_stability(g).kind;
      CHECK(kind != Stability::unstable);
      if (fam == Family::stable) CHECK(kind == Stability::stable);
      // the canonical key is a class invariant: it appears in the enumeration
      bool found = false;
      for (const auto& h : realizable_graphs(n, genus, fam)) found = found || canonical_key(h) == canonical_key(g);
      CHECK(found);
    }
  }

  TEST_CASE("generated classes are pairwise non-isomorphic") {
    for (int n = 1; n <= 4; ++n)
      for (int genus = 2; genus <= 5; ++genus) {
        std::set<std::vector<int>> keys;
        const auto graphs = realizable_graphs(n, genus, Family::semistable);
        for (const auto& g : graphs) keys.insert(canonical_key(g));
        CHECK(keys.size() == graphs.size());
      }
    // a few known counts
    CHECK(realizable_graphs(2, 2, Family::semistable).size() == 3);
    CHECK(realizable_graphs(1, 6, Family::semistable).size() == 1);
    CHECK(realizable_graphs(3, 2, Family::stable).empty());
  }

  TEST_CASE("realize is deterministic and valid") {
    for (const auto& g : realizable_graphs_upto(3, 4, Family::connected)) {
      const CurvePtr a = realize(g, 9), b = realize(g, 9);
      CHECK(same_curve(*a, *b));
      for (int v = 0; v < g.size(); ++v) {
        auto pts = a->branch_points(v);
        std::sort(pts.begin(), pts.end());
        CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
      }
    }
  }

  TEST_CASE("random bundles: Riemann-Roch bounds and twisting by a point") {
    Engine rng = make_engine(77, 1);
    for (int k = 0; k < 150; ++k) {
      const int n = uniform_int(rng, 1, 4), genus = uniform_int(rng, 2, 5);
      if (realizable_graphs(n, genus, Family::semistable).empty()) continue;
      const DualGraph g = random_realizable_graph(rng, n, genus, Family::semistable);
      const CurvePtr c = realize(g, static_cast<std::uint64_t>(k));
      const Multidegree d = random_multidegree(rng, n, -1, 2 * genus);
      const LineBundle L = random_bundle(c, d, rng);
      const int h = h0(L);
      CHECK(h == naive_h0(L));
      CHECK(h >= std::max(0, L.degree() - genus + 1));
      CHECK(h1(L) >= 0);
      // one more point adds at most one section
      const int v = uniform_int(rng, 0, n - 1);
      const PointDivisor p{{v, random_free_coordinate(rng, *c, v), 1}};
      const int up = h0(twist(L, p, +1));
      CHECK(up >= h);
      CHECK(up <= h + 1);
      CHECK(h0_vanishing(L, p) == h0(twist(L, p)));
      CHECK(h0_vanishing(L, p) >= h - 1);
    }
  }

  TEST_CASE("sections vanish on the support subcurve") {
    Engine rng = make_engine(55, 2);
    int nontrivial = 0;
    for (int k = 0; k < 200; ++k) {
      const int n = uniform_int(rng, 2, 4), genus = uniform_int(rng, 2, 5);
      if (realizable_graphs(n, genus, Family::connected).empty()) continue;
      const DualGraph g = random_realizable_graph(rng, n, genus, Family::connected);
      const CurvePtr c = realize(g, static_cast<std::uint64_t>(k) + 1);
      const Multidegree d = random_multidegree(rng, n, -2, 3);
      const VertexSet z = support_subcurve(g, d);
      if (z == 0) continue;
      const SectionSpace s = sections(random_bundle(c, d, rng));
      for (int v : members(z)) {
        const int off = s.offset[static_cast<std::size_t>(v)];
        if (off < 0) continue;
        ++nontrivial;
        for (Eigen::Index col = 0; col < s.basis.cols(); ++col)
          CHECK(degree(s.restriction(v, col, d[static_cast<std::size_t>(v)])) < 0);
      }
    }
    CHECK(nontrivial > 0);
  }

  TEST_CASE("section bases are sections") {
    Engine rng = make_engine(66, 3);
    for (const auto& g : realizable_graphs_upto(3, 3, Family::semistable)) {
      const CurvePtr c = realize(g, 2);
      const LineBundle L = random_divisor_bundle(c, random_multidegree(rng, g.size(), 0, 3), rng);
      const SectionSpace s = sections(L);
      CHECK(s.basis.cols() == h0(L));
      for (Eigen::Index col = 0; col < s.basis.cols(); ++col)
        for (int e = 0; e < g.edge_count(); ++e) {
          const auto& ed = g.edge(e);
          const auto fu = s.restriction(ed.u, col, L.degrees()[static_cast<std::size_t>(ed.u)]);
          const auto fv = s.restriction(ed.v, col, L.degrees()[static_cast<std::size_t>(ed.v)]);
          const Rational a = degree(fu) < 0 ? Rational(0) : evaluate(fu, c->branch(e, 0));
          const Rational b = degree(fv) < 0 ? Rational(0) : evaluate(fv, c->branch(e, 1));
          CHECK(a == L.gluing(e) * b);
        }
    }
  }

  TEST_CASE("balanced random multidegrees agree with the oracle") {
    Engine rng = make_engine(88, 4);
    for (int k = 0; k < 400; ++k) {
      const int n = uniform_int(rng, 1, 5), genus = uniform_int(rng, 2, 6);
      if (realizable_graphs(n, genus, Family::semistable).empty()) continue;
      const DualGraph g = random_realizable_graph(rng, n, genus, Family::semistable);
      const Multidegree d = random_multidegree(rng, n, -2, 4);
      CHECK(is_balanced(g, d).balanced == testing_support::naive_balanced(g, d));
    }
  }
}
