#include "bandzeta/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace bandzeta {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<BigInt> truncated(const std::vector<BigInt>& values,
                              std::size_t count) {
  return {values.begin(),
          values.begin() + std::min(count, values.size())};
}

ordered_json big_array(const std::vector<BigInt>& values) {
  ordered_json out = ordered_json::array();
  for (const BigInt& v : values) out.push_back(v.str());
  return out;
}

std::vector<BigInt> parse_big_array(const ordered_json& array) {
  std::vector<BigInt> out;
  for (const auto& item : array) out.emplace_back(item.get<std::string>());
  return out;
}

}  // namespace

AnalyticsReport analyze(const Presentation& p, const AnalyticsOptions& options) {
  if (options.terms < 1)
    throw PreconditionError("analysis needs at least one term");
  if (options.pnt_from < 1 || options.pnt_from > options.pnt_to)
    throw PreconditionError("ratio window needs 1 <= from <= to");

  const ValidationReport validation = validate_string_algebra(p);
  if (!validation.string_algebra) {
    std::string why = "input is not an admissible string algebra presentation";
    if (!validation.diagnostics.empty())
      why += ": " + validation.diagnostics.front().message;
    throw PreconditionError(why);
  }

  Presentation presentation = p;
  presentation.window = validation.window_N;

  const StateGraph graph = build_state_graph(presentation, options.limits);
  const AdjacencyMatrix matrix = adjacency(graph);
  const SCCDecomposition scc = scc_decompose(graph);
  const IntegerPolynomial reciprocal = reciprocal_char_poly(matrix);

  IntegerPolynomial product = IntegerPolynomial::one();
  for (const SCCComponent& c : scc.components)
    product = product * c.reciprocal_char_poly;
  if (product != reciprocal)
    throw InternalConsistencyError(
        "component polynomials do not multiply to det(I - tA)");

  const PNTConstants constants = pnt_constants(scc);
  int tabulate = options.terms;
  if (constants.applicable)
    tabulate = std::max(
        tabulate, static_cast<int>(options.pnt_to * constants.period_lcm));

  const BigIntSequence traces = trace_powers(matrix, tabulate);
  const CountingReport counting = counting_report(traces, tabulate);
  const std::vector<BigInt> zeta = zeta_coefficients(reciprocal, options.terms);

  // At tabletop sizes, verify the Euler product over band classes too.
  if (options.terms <= 24) {
    const std::vector<BandClass> bands =
        enumerate_bands(presentation, options.terms, options.limits);
    if (euler_product_coefficients(bands, options.terms) != zeta)
      throw InternalConsistencyError(
          "Euler product over bands disagrees with the zeta series");
  }

  const SpectralRadiusResult radius = spectral_radius(reciprocal);
  double component_radius = 0.0;
  double component_certificate = 0.0;
  for (const SCCComponent& c : scc.components)
    if (c.spectral_radius > component_radius) {
      component_radius = c.spectral_radius;
      component_certificate = c.radius_certificate;
    }
  if (std::abs(radius.value - component_radius) >
      radius.certificate + component_certificate + 1e-12)
    throw InternalConsistencyError(
        "whole-graph and per-component spectral radii disagree");

  AnalyticsReport report;
  report.window = graph.window;
  report.graph_vertices = static_cast<int>(graph.vertices.size());
  report.graph_arrows = static_cast<int>(graph.arrows.size());
  for (const SCCComponent& c : scc.components)
    report.components.push_back({static_cast<int>(c.vertices.size()), c.period,
                                 c.trivial, c.simple_cycle, c.spectral_radius});
  report.reciprocal_poly = reciprocal.coefficients();
  report.n = truncated(traces.values, options.terms);
  report.pi = truncated(counting.pi, options.terms);
  report.mu = truncated(counting.mu, options.terms);
  report.zeta = zeta;
  report.spectral_radius = radius.value;
  report.radius_certificate = radius.certificate;
  report.pnt = constants;
  if (constants.applicable)
    report.pnt_table = pnt_ratio_table(counting.pi, constants,
                                       options.pnt_from, options.pnt_to);
  report.classification = classify_growth(scc, [&](int max_length) {
    return enumerate_bands(presentation, max_length, options.limits);
  });
  return report;
}

std::string report_to_json(const AnalyticsReport& report) {
  ordered_json j;
  j["format"] = "bandzeta-report-v1";
  j["window"] = report.window;
  j["graph"] = {{"vertices", report.graph_vertices},
                {"arrows", report.graph_arrows}};
  j["components"] = ordered_json::array();
  for (const ComponentSummary& c : report.components)
    j["components"].push_back({{"size", c.size},
                               {"period", c.period},
                               {"trivial", c.trivial},
                               {"simple_cycle", c.simple_cycle},
                               {"spectral_radius", c.spectral_radius}});
  j["reciprocal_poly"] = big_array(report.reciprocal_poly);
  j["N"] = big_array(report.n);
  j["pi"] = big_array(report.pi);
  j["mu"] = big_array(report.mu);
  j["zeta"] = big_array(report.zeta);
  j["spectral_radius"] = report.spectral_radius;
  j["radius_certificate"] = report.radius_certificate;
  j["pnt"] = {{"R", report.pnt.radius},
              {"C", report.pnt.attaining_periods},
              {"L", report.pnt.period_lcm},
              {"applicable", report.pnt.applicable}};
  j["pnt"]["table"] = ordered_json::array();
  for (const PNTRow& row : report.pnt_table)
    j["pnt"]["table"].push_back(
        {{"m", row.m}, {"pi", row.pi_value.str()}, {"ratio", row.ratio}});
  ordered_json c;
  c["verdict"] = report.classification.verdict == Verdict::Domestic
                     ? "Domestic"
                     : "NonDomestic";
  if (report.classification.offending_component)
    c["offending_component"] = *report.classification.offending_component;
  else
    c["offending_component"] = nullptr;
  if (report.classification.band_class_count)
    c["band_class_count"] = *report.classification.band_class_count;
  else
    c["band_class_count"] = "infinite";
  c["mu_series"] = ordered_json::array();
  for (const MuSeriesTerm& term : report.classification.mu_series)
    c["mu_series"].push_back(
        {{"length", term.length}, {"pairs", term.pairs}});
  c["mu_series_rational"] = report.classification.mu_series_rational;
  c["exponential_band_growth"] = report.classification.exponential_band_growth;
  j["classification"] = std::move(c);
  return j.dump(2) + "\n";
}

AnalyticsReport report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "bandzeta-report-v1")
      throw ParseError("format", "unknown report format");
    AnalyticsReport report;
    report.window = j.at("window").get<int>();
    report.graph_vertices = j.at("graph").at("vertices").get<int>();
    report.graph_arrows = j.at("graph").at("arrows").get<int>();
    for (const auto& c : j.at("components"))
      report.components.push_back({c.at("size").get<int>(),
                                   c.at("period").get<int>(),
                                   c.at("trivial").get<bool>(),
                                   c.at("simple_cycle").get<bool>(),
                                   c.at("spectral_radius").get<double>()});
    report.reciprocal_poly = parse_big_array(j.at("reciprocal_poly"));
    report.n = parse_big_array(j.at("N"));
    report.pi = parse_big_array(j.at("pi"));
    report.mu = parse_big_array(j.at("mu"));
    report.zeta = parse_big_array(j.at("zeta"));
    report.spectral_radius = j.at("spectral_radius").get<double>();
    report.radius_certificate = j.at("radius_certificate").get<double>();
    report.pnt.radius = j.at("pnt").at("R").get<double>();
    report.pnt.attaining_periods = j.at("pnt").at("C").get<std::int64_t>();
    report.pnt.period_lcm = j.at("pnt").at("L").get<std::int64_t>();
    report.pnt.applicable = j.at("pnt").at("applicable").get<bool>();
    for (const auto& row : j.at("pnt").at("table")) {
      PNTRow r;
      r.m = row.at("m").get<int>();
      r.pi_value = BigInt(row.at("pi").get<std::string>());
      r.ratio = row.at("ratio").get<double>();
      report.pnt_table.push_back(std::move(r));
    }
    const auto& c = j.at("classification");
    report.classification.verdict =
        c.at("verdict").get<std::string>() == "Domestic" ? Verdict::Domestic
                                                         : Verdict::NonDomestic;
    if (!c.at("offending_component").is_null())
      report.classification.offending_component =
          c.at("offending_component").get<int>();
    if (c.at("band_class_count").is_number())
      report.classification.band_class_count =
          c.at("band_class_count").get<std::int64_t>();
    for (const auto& term : c.at("mu_series"))
      report.classification.mu_series.push_back(
          {term.at("length").get<int>(), term.at("pairs").get<std::int64_t>()});
    report.classification.mu_series_rational =
        c.at("mu_series_rational").get<bool>();
    report.classification.exponential_band_growth =
        c.at("exponential_band_growth").get<bool>();
    return report;
  } catch (const ordered_json::exception& e) {
    throw ParseError("report", e.what());
  }
}

}  // namespace bandzeta
