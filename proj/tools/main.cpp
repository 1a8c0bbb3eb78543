#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bandzeta/report.hpp"
#include "json.hpp"

namespace {

using namespace bandzeta;
using nlohmann::ordered_json;

// Raised after validation diagnostics have been printed; mapped to the
// validation-failure exit code at the edge.
struct GateFailure {};

Presentation load_presentation(const std::string& path, bool* had_binomials) {
  Presentation p = parse_presentation_file(path);
  if (had_binomials) *had_binomials = !p.binomials.empty();
  return normalize_relations(tilde_presentation(p));
}

void print_diagnostics(const ValidationReport& report, std::ostream& out) {
  for (const Diagnostic& d : report.diagnostics) {
    out << "  [" << d.code << "]";
    if (!d.subject.empty()) out << " " << d.subject << ":";
    out << " " << d.message << "\n";
  }
}

Presentation gated(const std::string& path, bool need_string_algebra) {
  Presentation p = load_presentation(path, nullptr);
  const ValidationReport report =
      need_string_algebra ? validate_string_algebra(p)
                          : validate_zero_relation(p);
  const bool ok =
      need_string_algebra ? report.string_algebra : report.admissible;
  if (!ok) {
    std::cerr << (need_string_algebra
                      ? "input is not an admissible string algebra presentation"
                      : "input is not admissible")
              << "\n";
    print_diagnostics(report, std::cerr);
    throw GateFailure{};
  }
  p.window = report.window_N;
  return p;
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(15) << v;
  return out.str();
}

ordered_json word_json(const StringWord& w, const Quiver& q,
                       const DisplayStyle& style) {
  ordered_json syllables = ordered_json::array();
  const auto& s = w.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it)  // display order
    syllables.push_back({{"arrow", q.arrows[it->arrow].name},
                         {"inverse", it->inverse}});
  return {{"display", display(w, q, style)}, {"syllables", syllables}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, "cannot open output file");
  out << text;
  std::cerr << "wrote " << path << "\n";
}

std::string mu_series_closed_form(const std::vector<MuSeriesTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const MuSeriesTerm& term : terms) {
    if (!out.empty()) out += " + ";
    if (term.pairs != 1) out += std::to_string(term.pairs) + " ";
    out += "t^" + std::to_string(term.length) + "/(1 - t^" +
           std::to_string(term.length) + ")";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact band combinatorics, zeta functions and growth classification\n"
      "for algebras presented by quivers with monomial relations"};
  app.require_subcommand(1);
  std::function<int()> run;

  struct {
    std::string input;
    bool require_string_algebra = false;
  } validate_opts;
  auto* validate_cmd = app.add_subcommand(
      "validate", "check admissibility and the string-algebra conditions");
  validate_cmd->add_option("input", validate_opts.input, "presentation file")
      ->required();
  validate_cmd->add_flag("--require-string-algebra",
                         validate_opts.require_string_algebra,
                         "fail unless all string-algebra conditions hold");
  validate_cmd->callback([&] {
    run = [&]() -> int {
      bool had_binomials = false;
      const Presentation p =
          load_presentation(validate_opts.input, &had_binomials);
      const ValidationReport report = validate_string_algebra(p);
      std::cout << "binomials replaced: " << (had_binomials ? "yes" : "no")
                << "\n";
      std::cout << "admissible: " << (report.admissible ? "yes" : "no") << "\n";
      std::cout << "string algebra: " << (report.string_algebra ? "yes" : "no")
                << "\n";
      std::cout << "window N: "
                << (report.window_N ? std::to_string(*report.window_N) : "-")
                << "\n";
      if (report.diagnostics.empty()) {
        std::cout << "diagnostics: none\n";
      } else {
        std::cout << "diagnostics:\n";
        print_diagnostics(report, std::cout);
      }
      const bool ok = validate_opts.require_string_algebra
                          ? report.string_algebra
                          : report.admissible;
      return ok ? 0 : 2;
    };
  });

  struct {
    std::string input;
    int length = 1;
    bool uppercase = false;
    bool json = false;
    std::size_t max_strings = Limits{}.max_strings;
  } strings_opts;
  auto* strings_cmd =
      app.add_subcommand("strings", "enumerate the strings of one length");
  strings_cmd->add_option("input", strings_opts.input, "presentation file")
      ->required();
  strings_cmd->add_option("--length", strings_opts.length, "string length")
      ->required()
      ->check(CLI::PositiveNumber);
  strings_cmd->add_flag("--uppercase", strings_opts.uppercase,
                        "render inverse letters as capitals");
  strings_cmd->add_flag("--json", strings_opts.json, "machine-readable output");
  strings_cmd->add_option("--max-strings", strings_opts.max_strings,
                          "enumeration budget per length");
  strings_cmd->callback([&] {
    run = [&]() -> int {
      const Presentation p = gated(strings_opts.input, false);
      Limits limits;
      limits.max_strings = strings_opts.max_strings;
      const DisplayStyle style{strings_opts.uppercase};
      const auto words = enumerate_strings(p, strings_opts.length, limits);
      if (strings_opts.json) {
        ordered_json out = ordered_json::array();
        for (const StringWord& w : words)
          out.push_back(word_json(w, p.quiver, style));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const StringWord& w : words)
          std::cout << display(w, p.quiver, style) << "\n";
      }
      return 0;
    };
  });

  struct {
    std::string input;
    int max_length = 1;
    bool uppercase = false;
    bool json = false;
    std::size_t max_strings = Limits{}.max_strings;
  } bands_opts;
  auto* bands_cmd = app.add_subcommand(
      "bands", "enumerate band rotation classes up to a length");
  bands_cmd->add_option("input", bands_opts.input, "presentation file")
      ->required();
  bands_cmd->add_option("--max-length", bands_opts.max_length, "largest length")
      ->required()
      ->check(CLI::PositiveNumber);
  bands_cmd->add_flag("--uppercase", bands_opts.uppercase,
                      "render inverse letters as capitals");
  bands_cmd->add_flag("--json", bands_opts.json, "machine-readable output");
  bands_cmd->add_option("--max-strings", bands_opts.max_strings,
                        "enumeration budget per length");
  bands_cmd->callback([&] {
    run = [&]() -> int {
      const Presentation p = gated(bands_opts.input, false);
      Limits limits;
      limits.max_strings = bands_opts.max_strings;
      const DisplayStyle style{bands_opts.uppercase};
      const auto bands = enumerate_bands(p, bands_opts.max_length, limits);
      if (bands_opts.json) {
        ordered_json out = ordered_json::array();
        for (const BandClass& b : bands)
          out.push_back(
              {{"length", b.length()},
               {"representative", word_json(b.representative, p.quiver, style)},
               {"pair_root", word_json(b.pair_root, p.quiver, style)}});
        std::cout << out.dump(2) << "\n";
      } else {
        for (const BandClass& b : bands)
          std::cout << b.length() << " "
                    << display(b.representative, p.quiver, style) << " "
                    << display(b.pair_root, p.quiver, style) << "\n";
      }
      return 0;
    };
  });

  struct {
    std::string input;
    std::string dot;
    bool matrix = false;
    bool canonical = false;
    bool uppercase = false;
    std::size_t max_strings = Limits{}.max_strings;
  } graph_opts;
  auto* graph_cmd =
      app.add_subcommand("graph", "build the state graph and its invariants");
  graph_cmd->add_option("input", graph_opts.input, "presentation file")
      ->required();
  graph_cmd->add_option("--dot", graph_opts.dot,
                        "write Graphviz output to a file ('-' for stdout)");
  graph_cmd->add_flag("--matrix", graph_opts.matrix,
                      "print the adjacency matrix as a JSON array");
  graph_cmd->add_flag("--canonical", graph_opts.canonical,
                      "use the canonical component-sorted vertex order");
  graph_cmd->add_flag("--uppercase", graph_opts.uppercase,
                      "render inverse letters as capitals");
  graph_cmd->add_option("--max-strings", graph_opts.max_strings,
                        "enumeration budget per length");
  graph_cmd->callback([&] {
    run = [&]() -> int {
      const Presentation p = gated(graph_opts.input, false);
      Limits limits;
      limits.max_strings = graph_opts.max_strings;
      const DisplayStyle style{graph_opts.uppercase};
      const StateGraph g = build_state_graph(p, limits);
      const SCCDecomposition scc = scc_decompose(g);
      std::cout << "window N: " << g.window << "\n";
      std::cout << "vertices: " << g.vertices.size() << "\n";
      std::cout << "arrows: " << g.arrows.size() << "\n";
      std::cout << "components: " << scc.components.size() << "\n";
      for (std::size_t i = 0; i < scc.components.size(); ++i) {
        const SCCComponent& c = scc.components[i];
        std::cout << "component " << i << ": size " << c.vertices.size()
                  << ", period " << c.period << ", "
                  << (c.trivial ? "trivial"
                                : (c.simple_cycle ? "simple cycle"
                                                  : "branching"))
                  << "\n";
      }
      if (graph_opts.matrix) {
        const std::vector<int> order = [&] {
          if (graph_opts.canonical) return scc.canonical_vertex_order();
          std::vector<int> identity(g.vertices.size());
          for (std::size_t i = 0; i < identity.size(); ++i)
            identity[i] = static_cast<int>(i);
          return identity;
        }();
        std::cout << "vertex order:";
        for (int v : order)
          std::cout << " " << display(g.vertices[v], g.quiver, style);
        std::cout << "\n";
        const AdjacencyMatrix a = adjacency_in_order(g, order);
        ordered_json rows = ordered_json::array();
        for (const auto& row : a.entries) rows.push_back(row);
        std::cout << rows.dump() << "\n";
      }
      if (!graph_opts.dot.empty())
        write_text(graph_opts.dot, export_dot(g, style));
      return 0;
    };
  });

  struct {
    std::string input;
    int terms = 20;
    std::size_t max_strings = Limits{}.max_strings;
  } zeta_opts;
  auto* zeta_cmd = app.add_subcommand(
      "zeta", "characteristic polynomial, zeta series and spectral radius");
  zeta_cmd->add_option("input", zeta_opts.input, "presentation file")
      ->required();
  zeta_cmd->add_option("--terms", zeta_opts.terms, "series truncation order")
      ->check(CLI::PositiveNumber);
  zeta_cmd->add_option("--max-strings", zeta_opts.max_strings,
                       "enumeration budget per length");
  zeta_cmd->callback([&] {
    run = [&]() -> int {
      const Presentation p = gated(zeta_opts.input, false);
      Limits limits;
      limits.max_strings = zeta_opts.max_strings;
      const StateGraph g = build_state_graph(p, limits);
      const AdjacencyMatrix a = adjacency(g);
      const IntegerPolynomial reciprocal = reciprocal_char_poly(a);
      const std::vector<BigInt> series =
          zeta_coefficients(reciprocal, zeta_opts.terms);
      const SpectralRadiusResult radius = spectral_radius(reciprocal);
      std::cout << "det(I - tA) = " << reciprocal.to_string() << "\n";
      std::cout << "zeta coefficients (t^0..t^" << zeta_opts.terms << "):";
      for (const BigInt& c : series) std::cout << " " << c.str();
      std::cout << "\n";
      std::cout << "spectral radius: " << format_double(radius.value) << "\n";
      std::cout << "radius certificate: " << format_double(radius.certificate)
                << "\n";
      return 0;
    };
  });

  struct {
    std::string input;
    int terms = 20;
    std::size_t max_strings = Limits{}.max_strings;
  } mu_opts;
  auto* mu_cmd = app.add_subcommand(
      "mu", "trace, band, and one-parameter family counts per length");
  mu_cmd->add_option("input", mu_opts.input, "presentation file")->required();
  mu_cmd->add_option("--terms", mu_opts.terms, "table length")
      ->check(CLI::PositiveNumber);
  mu_cmd->add_option("--max-strings", mu_opts.max_strings,
                     "enumeration budget per length");
  mu_cmd->callback([&] {
    run = [&]() -> int {
      const Presentation p = gated(mu_opts.input, true);
      Limits limits;
      limits.max_strings = mu_opts.max_strings;
      const StateGraph g = build_state_graph(p, limits);
      const BigIntSequence traces =
          trace_powers(adjacency(g), mu_opts.terms);
      const CountingReport counting = counting_report(traces, mu_opts.terms);
      std::cout << "m N pi mu\n";
      for (int m = 1; m <= mu_opts.terms; ++m)
        std::cout << m << " " << traces.N(m).str() << " "
                  << counting.pi[m - 1].str() << " "
                  << counting.mu[m - 1].str() << "\n";
      return 0;
    };
  });

  struct {
    std::string input;
    std::size_t max_strings = Limits{}.max_strings;
  } classify_opts;
  auto* classify_cmd =
      app.add_subcommand("classify", "tame growth dichotomy for the bands");
  classify_cmd->add_option("input", classify_opts.input, "presentation file")
      ->required();
  classify_cmd->add_option("--max-strings", classify_opts.max_strings,
                           "enumeration budget per length");
  classify_cmd->callback([&] {
    run = [&]() -> int {
      const Presentation p = gated(classify_opts.input, true);
      Limits limits;
      limits.max_strings = classify_opts.max_strings;
      const StateGraph g = build_state_graph(p, limits);
      const SCCDecomposition scc = scc_decompose(g);
      const Classification verdict =
          classify_growth(scc, [&](int max_length) {
            return enumerate_bands(p, max_length, limits);
          });
      std::cout << "verdict: "
                << (verdict.verdict == Verdict::Domestic ? "Domestic"
                                                         : "NonDomestic")
                << "\n";
      if (verdict.offending_component) {
        const SCCComponent& c = scc.components[*verdict.offending_component];
        std::cout << "evidence: component " << *verdict.offending_component
                  << " branches at vertex "
                  << display(g.vertices[c.branch_vertex], g.quiver) << "\n";
      }
      std::cout << "band classes: "
                << (verdict.band_class_count
                        ? std::to_string(*verdict.band_class_count)
                        : std::string("infinite"))
                << "\n";
      std::cout << "band growth: "
                << (verdict.exponential_band_growth ? "exponential"
                                                    : "bounded")
                << "\n";
      std::cout << "mu-series rational: "
                << (verdict.mu_series_rational ? "yes" : "no") << "\n";
      if (verdict.verdict == Verdict::Domestic)
        std::cout << "mu-series: " << mu_series_closed_form(verdict.mu_series)
                  << "\n";
      return 0;
    };
  });

  struct {
    std::string input;
    int from = 40;
    int to = 60;
    std::size_t max_strings = Limits{}.max_strings;
  } pnt_opts;
  auto* pnt_cmd = app.add_subcommand(
      "pnt", "asymptotic band-count ratios against C R^(mL) / (mL)");
  pnt_cmd->add_option("input", pnt_opts.input, "presentation file")->required();
  pnt_cmd->add_option("--from", pnt_opts.from, "first multiple of L")
      ->check(CLI::PositiveNumber);
  pnt_cmd->add_option("--to", pnt_opts.to, "last multiple of L")
      ->check(CLI::PositiveNumber);
  pnt_cmd->add_option("--max-strings", pnt_opts.max_strings,
                      "enumeration budget per length");
  pnt_cmd->callback([&] {
    run = [&]() -> int {
      const Presentation p = gated(pnt_opts.input, true);
      Limits limits;
      limits.max_strings = pnt_opts.max_strings;
      const StateGraph g = build_state_graph(p, limits);
      const SCCDecomposition scc = scc_decompose(g);
      const PNTConstants constants = pnt_constants(scc);
      if (!constants.applicable) {
        std::cerr << "asymptotic count not applicable: spectral radius <= 1\n";
        return 2;
      }
      const int top = static_cast<int>(pnt_opts.to * constants.period_lcm);
      const BigIntSequence traces = trace_powers(adjacency(g), top);
      const CountingReport counting = counting_report(traces, top);
      std::cout << "R = " << format_double(constants.radius) << "\n";
      std::cout << "C = " << constants.attaining_periods << "\n";
      std::cout << "L = " << constants.period_lcm << "\n";
      std::cout << "m pi(mL) ratio\n";
      for (const PNTRow& row : pnt_ratio_table(counting.pi, constants,
                                               pnt_opts.from, pnt_opts.to))
        std::cout << row.m << " " << row.pi_value.str() << " " << std::fixed
                  << std::setprecision(6) << row.ratio << "\n";
      return 0;
    };
  });

  struct {
    std::string input;
    std::string out = "-";
    int terms = 20;
    int from = 40;
    int to = 60;
    bool reemit = false;
    std::size_t max_strings = Limits{}.max_strings;
  } report_opts;
  auto* report_cmd = app.add_subcommand(
      "report", "full analysis as canonical JSON (deterministic bytes)");
  report_cmd->add_option("input", report_opts.input,
                         "presentation file (or report JSON with --reemit)")
      ->required();
  report_cmd->add_option("--out", report_opts.out,
                         "output path ('-' for stdout)");
  report_cmd->add_option("--terms", report_opts.terms,
                         "series truncation order")
      ->check(CLI::PositiveNumber);
  report_cmd->add_option("--from", report_opts.from, "ratio window start")
      ->check(CLI::PositiveNumber);
  report_cmd->add_option("--to", report_opts.to, "ratio window end")
      ->check(CLI::PositiveNumber);
  report_cmd->add_flag("--reemit", report_opts.reemit,
                       "parse a report and re-serialize it canonically");
  report_cmd->add_option("--max-strings", report_opts.max_strings,
                         "enumeration budget per length");
  report_cmd->callback([&] {
    run = [&]() -> int {
      if (report_opts.reemit) {
        std::ifstream in(report_opts.input, std::ios::binary);
        if (!in) throw ParseError(report_opts.input, "cannot open input file");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        write_text(report_opts.out,
                   report_to_json(report_from_json(buffer.str())));
        return 0;
      }
      const Presentation p = gated(report_opts.input, true);
      AnalyticsOptions options;
      options.terms = report_opts.terms;
      options.pnt_from = report_opts.from;
      options.pnt_to = report_opts.to;
      options.limits.max_strings = report_opts.max_strings;
      write_text(report_opts.out, report_to_json(analyze(p, options)));
      return 0;
    };
  });

  CLI11_PARSE(app, argc, argv);

  try {
    return run();
  } catch (const GateFailure&) {
    return static_cast<int>(ExitCode::ValidationFailure);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::ParseFailure);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return static_cast<int>(ExitCode::ResourceLimit);
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InternalConsistency);
  } catch (const ConvergenceError& e) {
    std::cerr << "numeric certification failure: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InternalConsistency);
  } catch (const PreconditionError& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return static_cast<int>(ExitCode::ValidationFailure);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
