#include "bandzeta/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bandzeta {

namespace {

using nlohmann::json;

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

[[noreturn]] void fail(const std::string& location, const std::string& what) {
  throw ParseError(location, what);
}

void expect_keys(const json& object, const std::set<std::string>& allowed,
                 const std::string& location) {
  for (const auto& item : object.items())
    if (!allowed.count(item.key()))
      fail(location, "unknown key \"" + item.key() + "\"");
}

Path parse_path(const json& names, const Quiver& q,
                const std::string& location) {
  if (!names.is_array() || names.empty())
    fail(location, "expected a non-empty array of arrow names");
  Path path;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!names[i].is_string())
      fail(location, "arrow names must be strings");
    const int a = q.arrow_index(names[i].get<std::string>());
    if (a < 0)
      fail(location, "unknown arrow \"" + names[i].get<std::string>() + "\"");
    path.arrows.push_back(a);
  }
  for (std::size_t i = 0; i + 1 < path.arrows.size(); ++i)
    if (q.arrows[path.arrows[i]].target != q.arrows[path.arrows[i + 1]].source)
      fail(location, "path is not composable at position " +
                         std::to_string(i + 1) + " (listed source-to-target)");
  return path;
}

// Rejects literals that denote zero ("0", "0.0", "-0", ...); any other
// non-empty literal is accepted verbatim.
void check_coefficient_nonzero(const std::string& text,
                               const std::string& location) {
  if (text.empty()) fail(location, "coefficient must be non-empty");
  const bool numeric_shape = std::all_of(
      text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c) || c == '+' || c == '-' || c == '.' ||
               c == 'e' || c == 'E';
      });
  if (numeric_shape &&
      std::none_of(text.begin(), text.end(),
                   [](char c) { return c >= '1' && c <= '9'; }))
    fail(location, "coefficient must be non-zero");
}

void sort_relations(std::vector<Path>& relations) {
  std::sort(relations.begin(), relations.end(),
            [](const Path& a, const Path& b) {
              if (a.length() != b.length()) return a.length() < b.length();
              return a.arrows < b.arrows;
            });
  relations.erase(std::unique(relations.begin(), relations.end()),
                  relations.end());
}

bool contains_subpath(const Path& haystack, const Path& needle) {
  return std::search(haystack.arrows.begin(), haystack.arrows.end(),
                     needle.arrows.begin(), needle.arrows.end()) !=
         haystack.arrows.end();
}

int path_source(const Path& p, const Quiver& q) {
  return q.arrows[p.arrows.front()].source;
}

int path_target(const Path& p, const Quiver& q) {
  return q.arrows[p.arrows.back()].target;
}

}  // namespace

int Quiver::vertex_index(const std::string& name) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
  if (it == vertices.end() || *it != name) return -1;
  return static_cast<int>(it - vertices.begin());
}

int Quiver::arrow_index(const std::string& name) const {
  const auto it = std::lower_bound(
      arrows.begin(), arrows.end(), name,
      [](const Arrow& a, const std::string& n) { return a.name < n; });
  if (it == arrows.end() || it->name != name) return -1;
  return static_cast<int>(it - arrows.begin());
}

bool Presentation::path_in_ideal(const Path& path) const {
  return std::any_of(relations.begin(), relations.end(),
                     [&](const Path& r) { return contains_subpath(path, r); });
}

int Presentation::max_relation_length() const {
  int m = 0;
  for (const Path& r : relations) m = std::max(m, r.length());
  return m;
}

Presentation parse_presentation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!j.is_object()) fail("top level", "expected an object");
  expect_keys(j, {"vertices", "arrows", "relations", "binomial_relations"},
              "top level");

  Presentation p;

  if (!j.contains("vertices") || !j["vertices"].is_array() ||
      j["vertices"].empty())
    fail("vertices", "expected a non-empty array of vertex names");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string() || !valid_identifier(v.get<std::string>()))
      fail("vertices", "vertex names must be identifiers");
    p.quiver.vertices.push_back(v.get<std::string>());
  }
  std::sort(p.quiver.vertices.begin(), p.quiver.vertices.end());
  if (std::adjacent_find(p.quiver.vertices.begin(), p.quiver.vertices.end()) !=
      p.quiver.vertices.end())
    fail("vertices", "duplicate vertex name");

  if (!j.contains("arrows") || !j["arrows"].is_array())
    fail("arrows", "expected an array of arrows");
  for (std::size_t i = 0; i < j["arrows"].size(); ++i) {
    const auto& a = j["arrows"][i];
    const std::string loc = "arrows[" + std::to_string(i) + "]";
    if (!a.is_object()) fail(loc, "expected an object");
    expect_keys(a, {"name", "source", "target"}, loc);
    for (const char* key : {"name", "source", "target"})
      if (!a.contains(key) || !a[key].is_string())
        fail(loc, std::string("missing string field \"") + key + "\"");
    Arrow arrow;
    arrow.name = a["name"].get<std::string>();
    if (!valid_identifier(arrow.name))
      fail(loc, "arrow names must be identifiers");
    arrow.source = p.quiver.vertex_index(a["source"].get<std::string>());
    arrow.target = p.quiver.vertex_index(a["target"].get<std::string>());
    if (arrow.source < 0)
      fail(loc, "unknown vertex \"" + a["source"].get<std::string>() + "\"");
    if (arrow.target < 0)
      fail(loc, "unknown vertex \"" + a["target"].get<std::string>() + "\"");
    p.quiver.arrows.push_back(arrow);
  }
  std::sort(p.quiver.arrows.begin(), p.quiver.arrows.end(),
            [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
  for (std::size_t i = 0; i + 1 < p.quiver.arrows.size(); ++i)
    if (p.quiver.arrows[i].name == p.quiver.arrows[i + 1].name)
      fail("arrows", "duplicate arrow name \"" + p.quiver.arrows[i].name + "\"");

  if (j.contains("relations")) {
    if (!j["relations"].is_array())
      fail("relations", "expected an array of paths");
    for (std::size_t i = 0; i < j["relations"].size(); ++i)
      p.relations.push_back(parse_path(
          j["relations"][i], p.quiver, "relations[" + std::to_string(i) + "]"));
    sort_relations(p.relations);
  }

  if (j.contains("binomial_relations")) {
    if (!j["binomial_relations"].is_array())
      fail("binomial_relations", "expected an array");
    for (std::size_t i = 0; i < j["binomial_relations"].size(); ++i) {
      const auto& b = j["binomial_relations"][i];
      const std::string loc = "binomial_relations[" + std::to_string(i) + "]";
      if (!b.is_object()) fail(loc, "expected an object");
      expect_keys(b, {"lhs", "rhs", "coefficient"}, loc);
      if (!b.contains("lhs") || !b.contains("rhs") ||
          !b.contains("coefficient"))
        fail(loc, "expected fields lhs, rhs, coefficient");
      BinomialRelation rel;
      rel.lhs = parse_path(b["lhs"], p.quiver, loc + ".lhs");
      rel.rhs = parse_path(b["rhs"], p.quiver, loc + ".rhs");
      const auto& c = b["coefficient"];
      if (c.is_string())
        rel.coefficient = c.get<std::string>();
      else if (c.is_number())
        rel.coefficient = c.dump();
      else
        fail(loc, "coefficient must be a string or a number");
      check_coefficient_nonzero(rel.coefficient, loc);
      p.binomials.push_back(rel);
    }
    std::sort(p.binomials.begin(), p.binomials.end(),
              [](const BinomialRelation& a, const BinomialRelation& b) {
                return std::tie(a.lhs, a.rhs, a.coefficient) <
                       std::tie(b.lhs, b.rhs, b.coefficient);
              });
    p.binomials.erase(std::unique(p.binomials.begin(), p.binomials.end()),
                      p.binomials.end());
  }

  return p;
}

Presentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open input file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

Presentation normalize_relations(const Presentation& p) {
  Presentation out = p;
  out.relations.clear();
  for (const Path& r : p.relations) {
    const bool redundant =
        std::any_of(p.relations.begin(), p.relations.end(), [&](const Path& s) {
          return s != r && contains_subpath(r, s);
        });
    if (!redundant) out.relations.push_back(r);
  }
  sort_relations(out.relations);
  out.window.reset();
  return out;
}

// Walks the deterministic "still relation-free" automaton whose states
// are the end vertex plus the last max_relation_length - 1 arrows.  A
// reachable cycle means arbitrarily long relation-free paths.
PathSurvey survey_relation_free_paths(const Presentation& p) {
  const Quiver& q = p.quiver;
  const int memory = std::max(0, p.max_relation_length() - 1);

  using State = std::pair<int, std::vector<int>>;  // (end vertex, suffix)
  std::map<State, int> ids;
  std::vector<State> states;
  std::vector<std::vector<int>> next;

  const auto intern = [&](const State& s) {
    const auto [it, inserted] = ids.emplace(s, static_cast<int>(states.size()));
    if (inserted) {
      states.push_back(s);
      next.emplace_back();
    }
    return it->second;
  };

  std::vector<int> starts;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v)
    starts.push_back(intern({v, {}}));

  const auto dies = [&](const std::vector<int>& candidate) {
    return std::any_of(
        p.relations.begin(), p.relations.end(), [&](const Path& r) {
          return r.arrows.size() <= candidate.size() &&
                 std::equal(r.arrows.rbegin(), r.arrows.rend(),
                            candidate.rbegin());
        });
  };

  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto [vertex, suffix] = states[s];
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
      if (q.arrows[a].source != vertex) continue;
      std::vector<int> candidate = suffix;
      candidate.push_back(a);
      if (dies(candidate)) continue;
      if (static_cast<int>(candidate.size()) > memory)
        candidate.erase(candidate.begin(),
                        candidate.end() - memory);
      const int target = intern({q.arrows[a].target, candidate});
      next[s].push_back(target);  // intern first: it may grow `next`
    }
  }

  // Kahn: a full topological order certifies acyclicity and yields the
  // longest-path DP; otherwise some reachable cycle survives.
  const int count = static_cast<int>(states.size());
  std::vector<int> indegree(count, 0);
  for (const auto& edges : next)
    for (int t : edges) ++indegree[t];
  std::queue<int> ready;
  for (int s = 0; s < count; ++s)
    if (indegree[s] == 0) ready.push(s);
  std::vector<int> topo;
  while (!ready.empty()) {
    const int s = ready.front();
    ready.pop();
    topo.push_back(s);
    for (int t : next[s])
      if (--indegree[t] == 0) ready.push(t);
  }
  if (static_cast<int>(topo.size()) != count) return {false, 0};

  std::vector<int> longest(count, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (int t : next[*it])
      longest[*it] = std::max(longest[*it], 1 + longest[t]);
  int best = 0;
  for (int s : starts) best = std::max(best, longest[s]);
  return {true, best};
}

ValidationReport validate_zero_relation(const Presentation& p) {
  ValidationReport report;
  if (!p.binomials.empty()) {
    report.diagnostics.push_back(
        {"binomials-present", "",
         "binomial relations present; replace them by their monomials first"});
    return report;
  }

  bool ok = true;
  for (const Path& r : p.relations)
    if (r.length() < 2) {
      report.diagnostics.push_back(
          {"short-relation", path_display(r, p.quiver),
           "relations must be paths of length >= 2"});
      ok = false;
    }

  const PathSurvey survey = survey_relation_free_paths(p);
  if (!survey.finite) {
    report.diagnostics.push_back(
        {"infinite-path-space", "",
         "arbitrarily long relation-free paths exist"});
    ok = false;
  }

  report.admissible = ok;
  if (ok)
    report.window_N =
        std::max({1, p.max_relation_length() - 1, survey.longest});
  return report;
}

ValidationReport validate_string_algebra(const Presentation& p) {
  ValidationReport report = validate_zero_relation(p);
  if (!p.binomials.empty()) return report;

  const Quiver& q = p.quiver;
  const int arrow_count = static_cast<int>(q.arrows.size());
  bool local_ok = true;

  std::vector<int> out_degree(q.vertices.size(), 0);
  std::vector<int> in_degree(q.vertices.size(), 0);
  for (const Arrow& a : q.arrows) {
    ++out_degree[a.source];
    ++in_degree[a.target];
  }
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    if (out_degree[v] > 2) {
      report.diagnostics.push_back(
          {"out-degree", q.vertices[v],
           "more than two arrows start at this vertex"});
      local_ok = false;
    }
    if (in_degree[v] > 2) {
      report.diagnostics.push_back(
          {"in-degree", q.vertices[v],
           "more than two arrows end at this vertex"});
      local_ok = false;
    }
  }

  const auto survives = [&](int first, int second) {
    return !p.path_in_ideal(Path{{first, second}});
  };
  for (int b = 0; b < arrow_count; ++b) {
    std::vector<std::string> left;   // arrows a with ab outside the ideal
    std::vector<std::string> right;  // arrows c with bc outside the ideal
    for (int a = 0; a < arrow_count; ++a)
      if (q.arrows[a].source == q.arrows[b].target && survives(b, a))
        left.push_back(q.arrows[a].name);
    for (int c = 0; c < arrow_count; ++c)
      if (q.arrows[c].target == q.arrows[b].source && survives(c, b))
        right.push_back(q.arrows[c].name);
    if (left.size() > 1) {
      std::string msg = "more than one arrow a with a" + q.arrows[b].name +
                        " outside the ideal:";
      for (const auto& n : left) msg += " " + n;
      report.diagnostics.push_back(
          {"left-continuations", q.arrows[b].name, msg});
      local_ok = false;
    }
    if (right.size() > 1) {
      std::string msg = "more than one arrow c with " + q.arrows[b].name +
                        "c outside the ideal:";
      for (const auto& n : right) msg += " " + n;
      report.diagnostics.push_back(
          {"right-continuations", q.arrows[b].name, msg});
      local_ok = false;
    }
  }

  report.string_algebra = report.admissible && local_ok;
  return report;
}

Presentation tilde_presentation(const Presentation& p) {
  if (p.binomials.empty()) return p;
  Presentation out = p;
  out.binomials.clear();
  for (const BinomialRelation& b : p.binomials) {
    if (path_source(b.lhs, p.quiver) != path_source(b.rhs, p.quiver) ||
        path_target(b.lhs, p.quiver) != path_target(b.rhs, p.quiver))
      fail("binomial_relations",
           "lhs and rhs are not parallel paths: " +
               path_display(b.lhs, p.quiver) + " vs " +
               path_display(b.rhs, p.quiver));
    out.relations.push_back(b.lhs);
    out.relations.push_back(b.rhs);
  }
  sort_relations(out.relations);
  out.window.reset();
  return normalize_relations(out);
}

std::string path_display(const Path& path, const Quiver& q) {
  const bool separate =
      std::any_of(q.arrows.begin(), q.arrows.end(),
                  [](const Arrow& a) { return a.name.size() > 1; });
  std::string out;
  for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it) {
    if (!out.empty() && separate) out += "·";
    out += q.arrows[*it].name;
  }
  return out;
}

}  // namespace bandzeta
