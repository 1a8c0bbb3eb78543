#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bandzeta;
using namespace testsupport;

namespace {

const Presentation& gp23() {
  static const Presentation p = prepared(kGelfandPonomarev23);
  return p;
}

const Presentation& kron() {
  static const Presentation p = prepared(kKronecker2);
  return p;
}

const Presentation& sb1() {
  static const Presentation p = prepared(kSpecialBiserial1);
  return p;
}

const StateGraph& gp23_graph() {
  static const StateGraph g = build_state_graph(gp23());
  return g;
}

IntegerPolynomial poly(std::vector<long long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return IntegerPolynomial(std::move(big));
}

StringWord drop_display_leftmost(const StringWord& w) {
  auto sy = w.syllables();
  sy.pop_back();
  return StringWord(std::move(sy));
}

StringWord drop_display_rightmost(const StringWord& w) {
  auto sy = w.syllables();
  sy.erase(sy.begin());
  return StringWord(std::move(sy));
}

}  // namespace

TEST_CASE("state graph vertices are the window-length strings") {
  const StateGraph& g = gp23_graph();
  CHECK(g.window == 2);
  CHECK(displays(g.vertices, g.quiver) ==
        std::vector<std::string>{"aB", "Ab", "bA", "bb", "Ba", "BB"});
  CHECK(g.arrows.size() == 8);
  CHECK(std::is_sorted(g.vertices.begin(), g.vertices.end(), DisplayOrder{}));
}

TEST_CASE("each graph arrow drops one display end of its label") {
  for (const StateGraph* g : {&gp23_graph()}) {
    for (const GraphArrow& a : g->arrows) {
      CHECK(a.label.length() == g->window + 1);
      CHECK(g->vertices[a.from] == drop_display_leftmost(a.label));
      CHECK(g->vertices[a.to] == drop_display_rightmost(a.label));
    }
  }
}

TEST_CASE("the cube-relation graph has the expected labeled arrows") {
  const StateGraph& g = gp23_graph();
  std::vector<std::string> edges;
  DisplayStyle up{true};
  for (const GraphArrow& a : g.arrows)
    edges.push_back(display(g.vertices[a.from], g.quiver, up) + "->" +
                    display(g.vertices[a.to], g.quiver, up) + ":" +
                    display(a.label, g.quiver, up));
  CHECK(edges == std::vector<std::string>{
                     "Ba->aB:aBa", "BB->aB:aBB", "bA->Ab:AbA", "bb->Ab:Abb",
                     "Ab->bA:bAb", "bA->bb:bbA", "aB->Ba:BaB", "Ba->BB:BBa"});
}

TEST_CASE("relation-free two-arrow quiver gives two two-cycles") {
  const StateGraph g = build_state_graph(kron());
  CHECK(g.window == 1);
  CHECK(displays(g.vertices, g.quiver) ==
        std::vector<std::string>{"a", "A", "b", "B"});
  CHECK(g.arrows.size() == 4);
  const SCCDecomposition scc = scc_decompose(g);
  REQUIRE(scc.components.size() == 2);
  for (const auto& c : scc.components) {
    CHECK(c.vertices.size() == 2);
    CHECK(c.simple_cycle);
    CHECK_FALSE(c.trivial);
    CHECK(c.period == 2);
    CHECK(c.branch_vertex == -1);
    CHECK(c.reciprocal_char_poly == poly({1, 0, -1}));
    CHECK(c.spectral_radius == 1.0);
  }
}

TEST_CASE("graph construction requires an admissible presentation") {
  const char* free_loop = R"({
    "vertices": ["v"],
    "arrows": [{"name": "a", "source": "v", "target": "v"}],
    "relations": []
  })";
  CHECK_THROWS_AS(build_state_graph(parse_presentation(free_loop)),
                  PreconditionError);
}

TEST_CASE("adjacency matrix in display order") {
  const AdjacencyMatrix a = adjacency(gp23_graph());
  CHECK(a.order() == 6);
  const std::vector<std::vector<std::int64_t>> expect{
      {0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0},
      {0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0}};
  CHECK(a.entries == expect);
}

TEST_CASE("strongly connected structure of the cube-relation graph") {
  const SCCDecomposition scc = scc_decompose(gp23_graph());
  REQUIRE(scc.components.size() == 2);
  CHECK(scc.components[0].vertices == std::vector<int>{0, 4, 5});
  CHECK(scc.components[1].vertices == std::vector<int>{1, 2, 3});
  for (const auto& c : scc.components) {
    CHECK_FALSE(c.trivial);
    CHECK_FALSE(c.simple_cycle);
    CHECK(c.period == 1);
    CHECK(c.branch_vertex >= 0);
    CHECK(c.reciprocal_char_poly == poly({1, 0, -1, -1}));
    CHECK(c.spectral_radius == doctest::Approx(1.3247179572447460).epsilon(1e-12));
  }
  CHECK(scc.components[0].branch_vertex == 4);  // Ba feeds aB and BB
  CHECK(scc.components[1].branch_vertex == 2);  // bA feeds Ab and bb
  for (int v = 0; v < 6; ++v)
    CHECK(scc.component_of[v] == (v == 0 || v > 3 ? 0 : 1));
}

TEST_CASE("canonical component layout block-diagonalizes twins") {
  const SCCDecomposition scc = scc_decompose(gp23_graph());
  const std::vector<int> order = scc.canonical_vertex_order();
  CHECK(order == std::vector<int>{4, 5, 0, 2, 3, 1});
  const AdjacencyMatrix a = adjacency_in_order(gp23_graph(), order);
  const std::vector<std::vector<std::int64_t>> expect{
      {0, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0}};
  CHECK(a.entries == expect);

  CHECK_THROWS_AS(adjacency_in_order(gp23_graph(), {0, 0, 1, 2, 3, 4}),
                  PreconditionError);
}

TEST_CASE("nilpotent graph from a single arrow") {
  const char* line = R"({
    "vertices": ["v1", "v2"],
    "arrows": [{"name": "a", "source": "v1", "target": "v2"}],
    "relations": []
  })";
  const Presentation p = prepared(line);
  const StateGraph g = build_state_graph(p);
  CHECK(g.window == 1);
  CHECK(g.vertices.size() == 2);
  CHECK(g.arrows.empty());
  const SCCDecomposition scc = scc_decompose(g);
  REQUIRE(scc.components.size() == 2);
  for (const auto& c : scc.components) {
    CHECK(c.trivial);
    CHECK(c.spectral_radius == 0.0);
    CHECK(c.reciprocal_char_poly == IntegerPolynomial::one());
  }
  CHECK(reciprocal_char_poly(adjacency(g)) == IntegerPolynomial::one());
  const BigIntSequence n = trace_powers(adjacency(g), 6);
  for (int m = 1; m <= 6; ++m) CHECK(n.N(m) == 0);
}

TEST_CASE("reciprocal characteristic polynomials") {
  CHECK(reciprocal_char_poly(adjacency(gp23_graph())) ==
        poly({1, 0, -2, -2, 1, 2, 1}));
  CHECK(reciprocal_char_poly(adjacency(build_state_graph(kron()))) ==
        poly({1, 0, -2, 0, 1}));
  CHECK(reciprocal_char_poly(adjacency(build_state_graph(sb1()))) ==
        poly({1, 0, -2, 0, 1}));

  // Product over components recovers the whole-matrix polynomial.
  const SCCDecomposition scc = scc_decompose(gp23_graph());
  IntegerPolynomial product = IntegerPolynomial::one();
  for (const auto& c : scc.components) product = product * c.reciprocal_char_poly;
  CHECK(product == poly({1, 0, -2, -2, 1, 2, 1}));
}

TEST_CASE("power traces match exact matrix powers") {
  for (const Presentation* p : {&gp23(), &kron(), &sb1()}) {
    const AdjacencyMatrix a = adjacency(build_state_graph(*p));
    const BigIntSequence n = trace_powers(a, 20);
    const std::vector<BigInt> expect = naive_traces(a, 20);
    REQUIRE(n.limit() == 20);
    for (int m = 1; m <= 20; ++m) {
      CAPTURE(m);
      CHECK(n.N(m) == expect[m - 1]);
    }
    // The tail beyond the traced prefix comes from the recurrence.
    CHECK(n.traced < 20);
  }
}

TEST_CASE("trace sequence of the cube-relation graph") {
  const BigIntSequence n = trace_powers(adjacency(gp23_graph()), 30);
  const std::vector<long long> first{0, 4, 6, 4, 10, 10, 14, 20, 24, 34, 44, 58};
  for (int m = 1; m <= 12; ++m) CHECK(n.N(m) == first[m - 1]);
  // det(I - tA) = (1 - t^2 - t^3)^2 forces N_{m+3} = N_{m+1} + N_m.
  for (int m = 1; m + 3 <= 30; ++m) CHECK(n.N(m + 3) == n.N(m + 1) + n.N(m));
  CHECK_THROWS_AS(n.N(0), PreconditionError);
  CHECK_THROWS_AS(n.N(31), PreconditionError);
}

TEST_CASE("brute-force closed walks agree with traces") {
  const StateGraph& g = gp23_graph();
  const BigIntSequence n = trace_powers(adjacency(g), 8);
  for (int m = 1; m <= 8; ++m) {
    CAPTURE(m);
    CHECK(BigInt(closed_walks_bruteforce(g, m)) == n.N(m));
  }
  const StateGraph k = build_state_graph(kron());
  CHECK(closed_walks_bruteforce(k, 3) == 0);
  CHECK(closed_walks_bruteforce(k, 2) == 4);

  Limits tight;
  tight.max_walk_steps = 1;
  CHECK_THROWS_AS(closed_walks_bruteforce(g, 6, tight), ResourceLimitError);
}

TEST_CASE("dot export is deterministic and labeled") {
  const std::string dot = export_dot(gp23_graph(), {true});
  CHECK(dot == export_dot(gp23_graph(), {true}));
  CHECK(dot.rfind("digraph state_graph {", 0) == 0);
  CHECK(dot.find("s2 -> s3 [label=\"bbA\"]") != std::string::npos);
  CHECK(dot.find("s0 [label=\"aB\"]") != std::string::npos);
  CHECK(dot.back() == '\n');
}
