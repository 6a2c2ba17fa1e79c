#include "doctest.h"

#include "nodal/classify.hpp"
#include "nodal/generator.hpp"
#include "test_support.hpp"

using namespace nodal;
using testing_support::binary_curve;
using testing_support::graph_of;

namespace {

// Four nodes; (k, 2k+3) is an affine image, (k, k^2+1) is not.
CurvePtr affine_binary() { return binary_curve({{0, 3}, {1, 5}, {2, 7}, {3, 9}}); }
CurvePtr generic_binary() { return binary_curve({{0, 1}, {1, 2}, {2, 5}, {3, 10}}); }

// Line meeting four genus-3 components twice, at i and -i, symmetric under z -> -z.
CurvePtr symmetric_hub() {
  std::vector<Vertex> vs{{"C1", 0}};
  std::vector<Edge> es;
  std::vector<std::array<Rational, 2>> bs;
  for (int i = 1; i <= 4; ++i) {
    vs.push_back({"C" + std::to_string(i + 1), 0});
    es.push_back({0, i, ""});
    bs.push_back({Rational(i), Rational(0)});
    es.push_back({0, i, ""});
    bs.push_back({Rational(-i), Rational(1)});
    for (int l = 0; l < 3; ++l) {
      es.push_back({i, i, ""});
      bs.push_back({Rational(2 + 2 * l), Rational(3 + 2 * l)});
    }
  }
  return make_curve(DualGraph(vs, es), bs);
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("binary curves: special pair decides") {
    const auto yes = weakly_hyperelliptic_classify(affine_binary()->graph(), affine_binary());
    CHECK(yes.verdict == "weakly-hyperelliptic");
    REQUIRE(yes.witness() != nullptr);
    CHECK(yes.witness()->pattern == PencilPattern::special_pair);
    REQUIRE(yes.witness()->bundle.has_value());
    CHECK(h0(*yes.witness()->bundle) == 2);
    CHECK(testing_support::naive_h0(*yes.witness()->bundle) == 2);

    const auto no = weakly_hyperelliptic_classify(generic_binary()->graph(), generic_binary());
    CHECK(no.verdict == "not-weakly-hyperelliptic");
    const auto open = weakly_hyperelliptic_classify(affine_binary()->graph());
    CHECK(open.verdict == "undetermined");
  }

  TEST_CASE("hub pattern") {
    const CurvePtr hub = symmetric_hub();
    const auto c = weakly_hyperelliptic_classify(hub->graph(), hub);
    CHECK(c.verdict == "weakly-hyperelliptic");
    REQUIRE(c.witness() != nullptr);
    CHECK(c.witness()->pattern == PencilPattern::hub);
    CHECK(c.witness()->degrees == Multidegree{2, 0, 0, 0, 0});
    const auto pencil = hub_pencil(hub, 0);
    REQUIRE(pencil.has_value());
    CHECK(h0(*pencil) == 2);

    const CurvePtr random_hub = realize(hub->graph(), 3);
    std::string why;
    CHECK_FALSE(hub_pencil(random_hub, 0, &why).has_value());
    CHECK_FALSE(why.empty());
    CHECK(weakly_hyperelliptic_classify(random_hub->graph(), random_hub).verdict != "weakly-hyperelliptic");
  }

  TEST_CASE("compact type and refusals") {
    const auto ct = weakly_hyperelliptic_classify(graph_of(2, {{0, 1}}, {2, 3}));
    CHECK(ct.applicable);
    // (1,1) is balanced here, but its pencil is only checked on a realization
    CHECK(ct.verdict == "undetermined");
    const CurvePtr ct_curve = realize(graph_of(2, {{0, 1}, {0, 0}, {0, 0}, {1, 1}, {1, 1}, {1, 1}}), 1);
    CHECK(weakly_hyperelliptic_classify(ct_curve->graph(), ct_curve).verdict == "weakly-hyperelliptic");
    const auto ct05 = weakly_hyperelliptic_classify(graph_of(2, {{0, 1}}, {1, 5}));
    CHECK(ct05.verdict == "undetermined");
    const auto star = weakly_hyperelliptic_classify(graph_of(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 1, 1}));
    CHECK_FALSE(star.applicable);
    CHECK(star.verdict == "not-applicable");
    const auto unstable = weakly_hyperelliptic_classify(graph_of(2, {{0, 1}}, {0, 2}));
    CHECK_FALSE(unstable.applicable);
  }

  TEST_CASE("certified pencils really have two sections") {
    int certified = 0;
    for (const auto& g : realizable_graphs_upto(3, 4, Family::stable)) {
      if (!separating_nodes(g).empty()) continue;
      for (std::uint64_t seed : {1, 2}) {
        const CurvePtr c = realize(g, seed);
        const auto cls = weakly_hyperelliptic_classify(g, c);
        for (const auto& cand : cls.candidates) {
          if (cand.status != PencilStatus::certified) continue;
          REQUIRE(cand.bundle.has_value());
          CHECK(cand.bundle->degree() == 2);
          CHECK(testing_support::naive_h0(*cand.bundle) == 2);
          ++certified;
        }
        if (cls.verdict == "weakly-hyperelliptic") CHECK(cls.witness() != nullptr);
      }
    }
    CHECK(certified > 0);
  }

  TEST_CASE("hyperelliptic combinatorics") {
    const auto bin = hypcomb_check(affine_binary()->graph(), affine_binary());
    CHECK(bin.applicable);
    CHECK(bin.passes);
    CHECK(bin.pieces.size() == 1);
    const auto hub = hypcomb_check(symmetric_hub()->graph(), symmetric_hub());
    CHECK(hub.applicable);
    // a triangle of nodal cubics: pieces meet once
    const DualGraph tri = graph_of(3, {{0, 1}, {1, 2}, {0, 2}, {0, 0}, {1, 1}, {2, 2}});
    const auto t = hypcomb_check(tri);
    CHECK(t.applicable);
    CHECK_FALSE(t.passes);
    CHECK(t.witness.has_value());
    CHECK_FALSE(hypcomb_check(graph_of(2, {{0, 1}}, {2, 3})).applicable);
  }

  TEST_CASE("certified Clifford index") {
    SweepOptions o;
    o.seeds = {1};
    const auto affine = clifford_index_certified(affine_binary(), o);
    REQUIRE(affine.bound.bound.has_value());
    CHECK(*affine.bound.bound == 0);
    CHECK(affine.exact);
    CHECK(affine.bound.witness_label.rfind("pencil:", 0) == 0);
    const auto generic = clifford_index_certified(generic_binary(), o);
    if (generic.bound.bound) CHECK(*generic.bound.bound >= 0);
  }

  TEST_CASE("names") {
    CHECK(to_string(PencilPattern::special_pair) == "special-b-pair");
    CHECK(to_string(PencilStatus::undetermined) == "undetermined");
  }
}
