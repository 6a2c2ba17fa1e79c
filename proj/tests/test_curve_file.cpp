#include "doctest.h"

#include "nodal/curve_file.hpp"
#include "nodal/examples.hpp"
#include "nodal/generator.hpp"

#include <fstream>
#include <sstream>

using namespace nodal;

namespace {

int error_line(const std::string& text) {
  try {
    parse_curve_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("curve_file") {
  TEST_CASE("graph-only descriptions") {
    const CurveFile f = parse_curve_file(
        "# star\n"
        "vertex hub genus=0\n"
        "vertex a genus=1\n"
        "vertex b genus=1 loops=2\n"
        "edge hub a\n"
        "edge hub b n2\n");
    CHECK(f.curve == nullptr);
    CHECK(f.graph.size() == 3);
    CHECK(f.graph.genus() == 4);
    // ids are ordered: a, b, hub
    CHECK(f.graph.vertex(0).id == "a");
    CHECK(f.graph.vertex(2).id == "hub");
    CHECK(f.graph.find_edge("n2").has_value());
    CHECK(f.graph.find_edge("b.L2").has_value());
  }

  TEST_CASE("errors carry line numbers") {
    CHECK(error_line("") == 1);
    CHECK(error_line("vertex a\nedge a b\n") == 2);
    CHECK(error_line("vertex a genus=-1\n") == 1);
    CHECK(error_line("vertex a\nvertex a\n") == 2);
    CHECK(error_line("vertex a\nfrobnicate\n") == 2);
    CHECK(error_line("vertex a\nvertex b\nedge a b n\nbranch n 0 at 1\n") == 3);
    CHECK(error_line("vertex a\nvertex b\nedge a b n\nbranch n 2 at 1\n") == 4);
    CHECK(error_line("vertex a genus=1\nvertex b\nedge a b n\nbranch n 0 at 1\nbranch n 1 at 2\n") == 1);
  }

  TEST_CASE("realized files with bundles and divisors") {
    const CurveFile f = parse_curve_file(
        "vertex C1\nvertex C2\n"
        "edge C1 C2 n1\nedge C1 C2 n2\nedge C1 C2 n3\n"
        "branch n1 0 at 0\nbranch n1 1 at 0\n"
        "branch n2 0 at 1\nbranch n2 1 at 1\n"
        "branch n3 0 at 2\nbranch n3 1 at 2/3\n"
        "bundle L degree=(1,1) glue n1=2 n3=-1/2\n"
        "bundle W canonical\n"
        "divisor D C1 at 5\n"
        "divisor D C2 at 7 mult 2\n"
        "bundle OD from-divisor D\n");
    REQUIRE(f.curve != nullptr);
    const LineBundle* L = f.find_bundle("L");
    REQUIRE(L != nullptr);
    CHECK(L->gluing(0) == 2);
    CHECK(L->gluing(1) == 1);
    CHECK(L->gluing(2) == Rational(-1) / 2);
    CHECK(f.find_bundle("W")->degrees() == Multidegree{1, 1});
    CHECK(f.find_bundle("OD")->degrees() == Multidegree{1, 2});
    CHECK(f.find_divisor("D")->size() == 2);
    CHECK(f.find_bundle("missing") == nullptr);
  }

  TEST_CASE("write then parse reproduces curve and bundles") {
    Engine rng = make_engine(4, 9);
    for (const auto& g : realizable_graphs_upto(3, 4, Family::semistable)) {
      const CurvePtr c = realize(g, 5);
      const LineBundle L = random_bundle(c, random_multidegree(rng, g.size(), -1, 3), rng);
      const std::string text = write_curve_file(g, c.get(), {{"L", &L}}, {}, {"generated"});
      const CurveFile back = parse_curve_file(text);
      REQUIRE(back.curve != nullptr);
      CHECK(same_curve(*back.curve, *c));
      const LineBundle* M = back.find_bundle("L");
      REQUIRE(M != nullptr);
      CHECK(M->degrees() == L.degrees());
      CHECK(M->gluing() == L.gluing());
      CHECK(write_curve_file(back.graph, back.curve.get(), {{"L", M}}, {}, {"generated"}) == text);
    }
  }

  TEST_CASE("checked-in corpus matches the generator") {
    for (const auto& inst : example_corpus()) {
      const std::string path = std::string(NODAL_SOURCE_DIR) + "/data/examples/" + inst.label + ".curve";
      std::ifstream in(path);
      REQUIRE_MESSAGE(in.good(), path);
      std::stringstream text;
      text << in.rdbuf();
      CHECK_MESSAGE(text.str() == example_file_text(inst), inst.label);
      const CurveFile f = read_curve_file(path);
      REQUIRE(f.curve != nullptr);
      CHECK(same_curve(*f.curve, *inst.curve));
      CHECK(f.bundles.size() == inst.bundles.size());
    }
    CHECK_THROWS(read_curve_file(std::string(NODAL_SOURCE_DIR) + "/data/examples/no-such.curve"));
  }
}
