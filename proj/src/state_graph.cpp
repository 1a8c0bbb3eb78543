#include "bandzeta/state_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace bandzeta {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix big_matrix(const AdjacencyMatrix& a) {
  Matrix m(a.order(), std::vector<BigInt>(a.order(), BigInt(0)));
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) m[i][j] = a.entries[i][j];
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix out(n, std::vector<BigInt>(n, BigInt(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

BigInt trace(const Matrix& m) {
  BigInt t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

// det(I - t B) from the power traces via Newton's identities; every
// division must be exact.
IntegerPolynomial newton_reciprocal(const Matrix& b) {
  const int n = static_cast<int>(b.size());
  std::vector<BigInt> power_sum(n + 1, BigInt(0));  // power_sum[m] = tr(B^m)
  Matrix power = b;
  for (int m = 1; m <= n; ++m) {
    power_sum[m] = trace(power);
    if (m < n) power = multiply(power, b);
  }
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int j = 1; j <= k; ++j) acc += power_sum[j] * c[k - j];
    if (acc % k != 0)
      throw InternalConsistencyError("Newton identity division is not exact");
    c[k] = -acc / k;
  }
  return IntegerPolynomial(std::move(c));
}

// Fraction-free (Bareiss) determinant of an integer matrix.
BigInt bareiss_determinant(Matrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (m[r][k] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BigInt value = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        if (value % previous != 0)
          throw InternalConsistencyError("Bareiss division is not exact");
        m[i][j] = value / previous;
      }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// det(I - t A) by evaluating the determinant at t = 0..n exactly and
// interpolating; used as an independent check on the Newton route.
IntegerPolynomial interpolated_reciprocal(const AdjacencyMatrix& a) {
  const int n = a.order();
  std::vector<BigRational> table;
  for (int k = 0; k <= n; ++k) {
    Matrix m(n, std::vector<BigInt>(n, BigInt(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m[i][j] = -BigInt(k) * a.entries[i][j];
        if (i == j) m[i][j] += 1;
      }
    table.emplace_back(bareiss_determinant(std::move(m)));
  }
  // Newton divided differences over the nodes 0..n.
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i)
      table[i] = (table[i] - table[i - 1]) / level;
  std::vector<BigRational> poly{table[0]};
  std::vector<BigRational> basis{1};
  for (int k = 1; k <= n; ++k) {
    // basis *= (t - (k - 1))
    basis.push_back(0);
    for (int j = static_cast<int>(basis.size()) - 1; j >= 1; --j)
      basis[j] = basis[j - 1] - basis[j] * (k - 1);
    basis[0] = -basis[0] * (k - 1);
    poly.resize(std::max(poly.size(), basis.size()), BigRational(0));
    for (std::size_t j = 0; j < basis.size(); ++j)
      poly[j] += table[k] * basis[j];
  }
  std::vector<BigInt> out;
  for (const BigRational& c : poly) {
    if (denominator(c) != 1)
      throw InternalConsistencyError("interpolated polynomial is not integral");
    out.push_back(numerator(c));
  }
  return IntegerPolynomial(std::move(out));
}

// Iterative Tarjan; components are returned with ascending vertex
// lists, in no particular component order.
std::vector<std::vector<int>> tarjan_components(
    const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int next_index = 0;

  struct Frame {
    int vertex;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call_stack{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const int v = frame.vertex;
      if (frame.child < adjacency[v].size()) {
        const int w = adjacency[v][frame.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::vector<int> component;
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component.push_back(w);
            if (w == v) break;
          }
          std::sort(component.begin(), component.end());
          components.push_back(std::move(component));
        }
        call_stack.pop_back();
        if (!call_stack.empty()) {
          const int parent = call_stack.back().vertex;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  return components;
}

std::vector<std::vector<int>> adjacency_lists(const StateGraph& g) {
  std::vector<std::vector<int>> adjacency(g.vertices.size());
  for (const GraphArrow& a : g.arrows) adjacency[a.from].push_back(a.to);
  return adjacency;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

const BigInt& BigIntSequence::N(int m) const {
  if (m < 1 || m > limit())
    throw PreconditionError("trace index out of tabulated range");
  return values[m - 1];
}

std::vector<int> SCCDecomposition::canonical_vertex_order() const {
  std::vector<int> order;
  for (const SCCComponent& c : components)
    order.insert(order.end(), c.canonical_order.begin(),
                 c.canonical_order.end());
  return order;
}

StateGraph build_state_graph(const Presentation& p, const Limits& limits) {
  int window = 0;
  if (p.window) {
    window = *p.window;
  } else {
    const ValidationReport report = validate_zero_relation(p);
    if (!report.admissible) {
      std::string why = "presentation is not admissible";
      if (!report.diagnostics.empty())
        why += ": " + report.diagnostics.front().message;
      throw PreconditionError(why);
    }
    window = *report.window_N;
  }

  StateGraph g;
  g.quiver = p.quiver;
  g.window = window;
  g.vertices = enumerate_strings(p, window, limits);

  std::map<StringWord, int, DisplayOrder> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    index.emplace(g.vertices[i], static_cast<int>(i));

  for (StringWord& w : enumerate_strings(p, window + 1, limits)) {
    const auto& s = w.syllables();
    const StringWord head(std::vector<Syllable>(s.begin(), s.end() - 1));
    const StringWord tail(std::vector<Syllable>(s.begin() + 1, s.end()));
    const auto from = index.find(head);  // drop leftmost display letter
    const auto to = index.find(tail);    // drop rightmost display letter
    if (from == index.end() || to == index.end())
      throw InternalConsistencyError(
          "substring of a string is missing from the vertex set");
    g.arrows.push_back({from->second, to->second, std::move(w)});
  }
  return g;
}

AdjacencyMatrix adjacency(const StateGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  AdjacencyMatrix a;
  a.entries.assign(n, std::vector<std::int64_t>(n, 0));
  for (const GraphArrow& arrow : g.arrows) ++a.entries[arrow.from][arrow.to];
  return a;
}

AdjacencyMatrix adjacency_in_order(const StateGraph& g,
                                   const std::vector<int>& order) {
  const int n = static_cast<int>(g.vertices.size());
  if (static_cast<int>(order.size()) != n)
    throw PreconditionError("order must be a permutation of the vertices");
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || position[order[i]] != -1)
      throw PreconditionError("order must be a permutation of the vertices");
    position[order[i]] = i;
  }
  AdjacencyMatrix a;
  a.entries.assign(n, std::vector<std::int64_t>(n, 0));
  for (const GraphArrow& arrow : g.arrows)
    ++a.entries[position[arrow.from]][position[arrow.to]];
  return a;
}

SCCDecomposition scc_decompose(const StateGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  const auto adjacency_list = adjacency_lists(g);
  const auto raw_components = tarjan_components(adjacency_list);
  const int count = static_cast<int>(raw_components.size());

  std::vector<int> raw_component_of(n, -1);
  for (int c = 0; c < count; ++c)
    for (int v : raw_components[c]) raw_component_of[v] = c;

  // Condensation, ordered sources-first with ties by smallest member.
  std::vector<std::set<int>> successors(count);
  std::vector<int> indegree(count, 0);
  for (const GraphArrow& a : g.arrows) {
    const int cu = raw_component_of[a.from];
    const int cv = raw_component_of[a.to];
    if (cu != cv && successors[cu].insert(cv).second) ++indegree[cv];
  }
  using HeapEntry = std::pair<int, int>;  // (smallest member, component)
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> ready;
  for (int c = 0; c < count; ++c)
    if (indegree[c] == 0) ready.push({raw_components[c].front(), c});
  std::vector<int> topological;
  while (!ready.empty()) {
    const int c = ready.top().second;
    ready.pop();
    topological.push_back(c);
    for (int d : successors[c])
      if (--indegree[d] == 0) ready.push({raw_components[d].front(), d});
  }
  if (static_cast<int>(topological.size()) != count)
    throw InternalConsistencyError("condensation is not acyclic");

  SCCDecomposition out;
  out.component_of.assign(n, -1);
  for (int position = 0; position < count; ++position) {
    const std::vector<int>& members = raw_components[topological[position]];
    const int size = static_cast<int>(members.size());
    std::map<int, int> local;  // graph vertex -> local index
    for (int i = 0; i < size; ++i) local.emplace(members[i], i);

    std::vector<std::pair<int, int>> internal_arrows;  // local indices
    for (const GraphArrow& a : g.arrows) {
      const auto from = local.find(a.from);
      const auto to = local.find(a.to);
      if (from != local.end() && to != local.end())
        internal_arrows.push_back({from->second, to->second});
    }

    SCCComponent component;
    component.vertices = members;
    component.trivial = size == 1 && internal_arrows.empty();

    std::vector<int> out_degree(size, 0), in_degree(size, 0);
    for (const auto& [u, v] : internal_arrows) {
      ++out_degree[u];
      ++in_degree[v];
    }
    for (int i = 0; i < size; ++i)
      if (out_degree[i] >= 2) {
        component.branch_vertex = members[i];
        break;
      }
    component.simple_cycle =
        !component.trivial &&
        *std::max_element(out_degree.begin(), out_degree.end()) == 1;
    if (component.simple_cycle &&
        *std::max_element(in_degree.begin(), in_degree.end()) != 1)
      throw InternalConsistencyError("degree-one component is not a cycle");

    if (component.trivial) {
      component.period = 1;
    } else {
      // gcd of cycle lengths via BFS leveling.
      std::vector<std::vector<int>> local_adjacency(size);
      for (const auto& [u, v] : internal_arrows)
        local_adjacency[u].push_back(v);
      std::vector<int> level(size, -1);
      std::queue<int> frontier;
      level[0] = 0;
      frontier.push(0);
      while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : local_adjacency[u])
          if (level[v] == -1) {
            level[v] = level[u] + 1;
            frontier.push(v);
          }
      }
      std::int64_t g_period = 0;
      for (const auto& [u, v] : internal_arrows)
        g_period = std::gcd(g_period,
                            static_cast<std::int64_t>(level[u] + 1 - level[v]));
      if (g_period <= 0)
        throw InternalConsistencyError("component period must be positive");
      component.period = static_cast<int>(g_period);
    }

    component.canonical_order = members;
    std::sort(component.canonical_order.begin(),
              component.canonical_order.end(), [&](int a, int b) {
                const int la = local.at(a), lb = local.at(b);
                if (out_degree[la] != out_degree[lb])
                  return out_degree[la] > out_degree[lb];
                if (in_degree[la] != in_degree[lb])
                  return in_degree[la] < in_degree[lb];
                return a < b;
              });

    AdjacencyMatrix sub;
    sub.entries.assign(size, std::vector<std::int64_t>(size, 0));
    for (const auto& [u, v] : internal_arrows) ++sub.entries[u][v];
    component.reciprocal_char_poly = reciprocal_char_poly(sub);

    if (component.trivial) {
      component.spectral_radius = 0.0;
      component.radius_certificate = 0.0;
    } else if (component.simple_cycle) {
      std::vector<BigInt> cycle_poly(size + 1, BigInt(0));
      cycle_poly[0] = 1;
      cycle_poly[size] = -1;
      if (component.reciprocal_char_poly != IntegerPolynomial(cycle_poly))
        throw InternalConsistencyError("simple cycle has unexpected polynomial");
      component.spectral_radius = 1.0;
      component.radius_certificate = 0.0;
    } else {
      const SpectralRadiusResult r =
          spectral_radius(component.reciprocal_char_poly);
      component.spectral_radius = r.value;
      component.radius_certificate = r.certificate;
    }

    for (int v : members) out.component_of[v] = position;
    out.components.push_back(std::move(component));
  }
  return out;
}

IntegerPolynomial reciprocal_char_poly(const AdjacencyMatrix& a) {
  const int n = a.order();
  std::vector<std::vector<int>> adjacency_list(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.entries[i][j] > 0) adjacency_list[i].push_back(j);

  IntegerPolynomial product = IntegerPolynomial::one();
  for (const std::vector<int>& component : tarjan_components(adjacency_list)) {
    Matrix sub(component.size(), std::vector<BigInt>(component.size()));
    for (std::size_t i = 0; i < component.size(); ++i)
      for (std::size_t j = 0; j < component.size(); ++j)
        sub[i][j] = a.entries[component[i]][component[j]];
    product = product * newton_reciprocal(sub);
  }
  if (product != interpolated_reciprocal(a))
    throw InternalConsistencyError(
        "Newton and interpolation char-poly routes disagree");
  return product;
}

BigIntSequence trace_powers(const AdjacencyMatrix& a, int max_m) {
  if (max_m < 0) throw PreconditionError("trace_powers expects max_m >= 0");
  const int n = a.order();
  BigIntSequence sequence;
  sequence.values.assign(max_m, BigInt(0));
  if (n == 0) {
    sequence.traced = max_m;
    return sequence;
  }

  const int direct = std::min(max_m, 2 * n);
  const Matrix base = big_matrix(a);
  Matrix power = base;
  for (int m = 1; m <= direct; ++m) {
    sequence.values[m - 1] = trace(power);
    if (m < direct) power = multiply(power, base);
  }
  sequence.traced = direct;

  const IntegerPolynomial poly = reciprocal_char_poly(a);
  const int d = poly.degree();
  const auto recurrence = [&](int m) {
    BigInt acc = 0;
    for (int k = 1; k <= d; ++k)
      acc += poly.coefficient(k) * sequence.values[m - 1 - k];
    return BigInt(-acc);
  };
  // Overlap check: traces beyond the degree must already satisfy the
  // linear recurrence of det(I - tA).
  for (int m = d + 1; m <= direct; ++m)
    if (recurrence(m) != sequence.values[m - 1])
      throw InternalConsistencyError(
          "trace sequence fails its characteristic recurrence");
  for (int m = direct + 1; m <= max_m; ++m)
    sequence.values[m - 1] = recurrence(m);
  return sequence;
}

std::uint64_t closed_walks_bruteforce(const StateGraph& g, int m,
                                      const Limits& limits) {
  if (m < 1) throw PreconditionError("walk length must be >= 1");
  const auto adjacency_list = adjacency_lists(g);
  std::uint64_t total = 0;
  std::uint64_t steps = 0;
  std::function<void(int, int, int)> walk = [&](int start, int vertex,
                                                int remaining) {
    if (remaining == 0) {
      if (vertex == start) ++total;
      return;
    }
    for (int next : adjacency_list[vertex]) {
      if (++steps > limits.max_walk_steps)
        throw ResourceLimitError("walk enumeration exceeded max_walk_steps");
      walk(start, next, remaining - 1);
    }
  };
  for (int start = 0; start < static_cast<int>(g.vertices.size()); ++start)
    walk(start, start, m);
  return total;
}

std::string export_dot(const StateGraph& g, const DisplayStyle& style) {
  std::ostringstream out;
  out << "digraph state_graph {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out << "  s" << i << " [label=\""
        << dot_escape(display(g.vertices[i], g.quiver, style)) << "\"];\n";
  for (const GraphArrow& a : g.arrows)
    out << "  s" << a.from << " -> s" << a.to << " [label=\""
        << dot_escape(display(a.label, g.quiver, style)) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace bandzeta
