#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bandzeta/polynomial.hpp"
#include "bandzeta/strings.hpp"

namespace bandzeta {

struct GraphArrow {
  int from = 0;
  int to = 0;
  StringWord label;  // string of length N + 1
  bool operator==(const GraphArrow&) const = default;
};

// Finite directed graph with vertex set the strings of length N
// (N the presentation window) and one arrow per string w of length
// N + 1, from the length-N string obtained by dropping the leftmost
// display letter of w to the one obtained by dropping the rightmost.
// Closed walks of length m are then in bijection with the cyclic
// strings of length m that power into bands.  Vertices are sorted in
// display order; arrows are sorted by label.
struct StateGraph {
  Quiver quiver;
  int window = 0;
  std::vector<StringWord> vertices;
  std::vector<GraphArrow> arrows;
};

// Entry (i, j) counts arrows i -> j.  Counts stay tiny (bounded by the
// arrows of the quiver); powers of the matrix are taken in BigInt.
struct AdjacencyMatrix {
  std::vector<std::vector<std::int64_t>> entries;

  int order() const { return static_cast<int>(entries.size()); }
  bool operator==(const AdjacencyMatrix&) const = default;
};

struct SCCComponent {
  std::vector<int> vertices;         // ascending graph indices
  std::vector<int> canonical_order;  // same set, canonical layout (below)
  bool trivial = false;              // single vertex without a loop
  bool simple_cycle = false;
  int period = 1;                    // gcd of cycle lengths; 1 when trivial
  int branch_vertex = -1;            // a vertex with >= 2 in-component
                                     // successors, -1 when none
  IntegerPolynomial reciprocal_char_poly;  // det(I - t A_C)
  double spectral_radius = 0.0;
  double radius_certificate = 0.0;
};

// Strongly connected components in condensation-topological order
// (sources first; ties broken by smallest member vertex).  Inside a
// component the canonical layout sorts vertices by in-component
// out-degree descending, then in-component in-degree ascending, then
// index; under the induced permutation the adjacency of a disjoint
// union of isomorphic components becomes visibly block-diagonal with
// equal blocks.
struct SCCDecomposition {
  std::vector<SCCComponent> components;
  std::vector<int> component_of;  // graph vertex -> component position

  std::vector<int> canonical_vertex_order() const;
};

// Trace sequence: values[i] = N_{i+1} = tr(A^{i+1}).  The first
// `traced` entries are explicit matrix traces; the remainder extends
// them with the linear recurrence from det(I - tA), and the two
// methods are cross-checked on their overlap.
struct BigIntSequence {
  std::vector<BigInt> values;
  std::size_t traced = 0;

  const BigInt& N(int m) const;  // 1-based
  int limit() const { return static_cast<int>(values.size()); }
};

// Requires an admissible presentation (binomials already replaced).
StateGraph build_state_graph(const Presentation& p, const Limits& limits = {});

AdjacencyMatrix adjacency(const StateGraph& g);
// Adjacency written in a vertex order given as a permutation of 0..n-1.
AdjacencyMatrix adjacency_in_order(const StateGraph& g,
                                   const std::vector<int>& order);

SCCDecomposition scc_decompose(const StateGraph& g);

// det(I - t A), computed per strongly connected component by Newton's
// identities from exact power traces, then cross-checked against a
// fraction-free determinant evaluation/interpolation on the whole
// matrix.  A disagreement throws InternalConsistencyError.
IntegerPolynomial reciprocal_char_poly(const AdjacencyMatrix& a);

BigIntSequence trace_powers(const AdjacencyMatrix& a, int max_m);

// Counts closed walks of length m by enumerating them one at a time;
// exponential-time oracle used to validate trace_powers.
std::uint64_t closed_walks_bruteforce(const StateGraph& g, int m,
                                      const Limits& limits = {});

// Graphviz form; vertices labeled by display strings, arrows by their
// length-(N+1) labels.  Deterministic byte-for-byte.
std::string export_dot(const StateGraph& g, const DisplayStyle& style = {});

}  // namespace bandzeta
