#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "bandzeta/report.hpp"

namespace py = pybind11;
using namespace bandzeta;

namespace {

// Arbitrary-precision integers cross the boundary as decimal strings.
py::object to_py_int(const BigInt& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::list to_py_ints(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py_int(v));
  return out;
}

// Re-validate and stamp the window before any graph-backed operation.
Presentation gated(const Presentation& p, bool need_string_algebra) {
  const ValidationReport r =
      need_string_algebra ? validate_string_algebra(p) : validate_zero_relation(p);
  const bool ok = need_string_algebra ? r.string_algebra : r.admissible;
  if (!ok) {
    std::string message = need_string_algebra
                              ? "presentation is not a string algebra"
                              : "presentation is not admissible";
    if (!r.diagnostics.empty()) {
      message += ": [" + r.diagnostics.front().code + "] " +
                 r.diagnostics.front().message;
    }
    throw PreconditionError(message);
  }
  Presentation q = p;
  q.window = r.window_N;
  return q;
}

DisplayStyle style_of(bool uppercase) {
  DisplayStyle style;
  style.uppercase = uppercase;
  return style;
}

// Binomials replaced, relations normalized, window stamped when the
// presentation is admissible.
Presentation prepare(Presentation p) {
  p = normalize_relations(tilde_presentation(p));
  const ValidationReport r = validate_zero_relation(p);
  if (r.admissible) p.window = r.window_N;
  return p;
}

py::dict validation_dict(const ValidationReport& r) {
  py::dict out;
  out["admissible"] = r.admissible;
  out["string_algebra"] = r.string_algebra;
  out["window"] = r.window_N ? py::cast(*r.window_N) : py::none();
  py::list diags;
  for (const auto& d : r.diagnostics) {
    py::dict item;
    item["code"] = d.code;
    item["subject"] = d.subject;
    item["message"] = d.message;
    diags.append(item);
  }
  out["diagnostics"] = diags;
  return out;
}

py::dict classification_dict(const Classification& c) {
  py::dict out;
  out["verdict"] = c.verdict == Verdict::Domestic ? "Domestic" : "NonDomestic";
  out["offending_component"] =
      c.offending_component ? py::cast(*c.offending_component) : py::none();
  out["band_class_count"] =
      c.band_class_count ? py::cast(*c.band_class_count) : py::none();
  py::list series;
  for (const auto& term : c.mu_series) {
    py::dict item;
    item["length"] = term.length;
    item["pairs"] = term.pairs;
    series.append(item);
  }
  out["mu_series"] = series;
  out["mu_series_rational"] = c.mu_series_rational;
  out["exponential_band_growth"] = c.exponential_band_growth;
  return out;
}

Classification classify_presentation(const Presentation& p, const Limits& limits) {
  const Presentation q = gated(p, true);
  const StateGraph g = build_state_graph(q, limits);
  const SCCDecomposition scc = scc_decompose(g);
  return classify_growth(
      scc, [&](int max_length) { return enumerate_bands(q, max_length, limits); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact band combinatorics for bound quiver presentations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError",
                                                   PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<Presentation>(m, "Presentation")
      .def_property_readonly(
          "vertices", [](const Presentation& p) { return p.quiver.vertices; })
      .def_property_readonly("arrows",
                             [](const Presentation& p) {
                               std::vector<std::string> names;
                               for (const auto& a : p.quiver.arrows)
                                 names.push_back(a.name);
                               return names;
                             })
      .def_property_readonly("relations",
                             [](const Presentation& p) {
                               std::vector<std::string> shown;
                               for (const auto& r : p.relations)
                                 shown.push_back(path_display(r, p.quiver));
                               return shown;
                             })
      .def_property_readonly("window",
                             [](const Presentation& p) { return p.window; })
      .def("__repr__", [](const Presentation& p) {
        return "<Presentation: " + std::to_string(p.quiver.vertices.size()) +
               " vertices, " + std::to_string(p.quiver.arrows.size()) +
               " arrows, " + std::to_string(p.relations.size()) + " relations>";
      });

  m.def("parse", &parse_presentation, py::arg("text"),
        "Parse a presentation from JSON text.");
  m.def("parse_file", &parse_presentation_file, py::arg("path"),
        "Parse a presentation from a JSON file.");
  m.def(
      "load",
      [](const std::string& text) { return prepare(parse_presentation(text)); },
      py::arg("text"),
      "Parse JSON text, replace binomials, normalize relations and stamp "
      "the window when the presentation is admissible.");
  m.def(
      "load_file",
      [](const std::string& path) {
        return prepare(parse_presentation_file(path));
      },
      py::arg("path"), "Like load, reading the JSON text from a file.");
  m.def("tilde", &tilde_presentation, py::arg("presentation"),
        "Replace binomial relations by the two monomials of the associated "
        "zero-relation algebra.");
  m.def("normalize", &normalize_relations, py::arg("presentation"),
        "Drop relations that contain another relation as a factor.");
  m.def(
      "validate",
      [](const Presentation& p) { return validation_dict(validate_string_algebra(p)); },
      py::arg("presentation"),
      "Check admissibility and the string-algebra conditions.");

  m.def(
      "strings",
      [](const Presentation& p, int length, bool uppercase, std::int64_t max_strings) {
        Limits limits;
        if (max_strings > 0) limits.max_strings = max_strings;
        const Presentation q = gated(p, false);
        std::vector<std::string> out;
        for (const auto& w : enumerate_strings(q, length, limits))
          out.push_back(display(w, q.quiver, style_of(uppercase)));
        return out;
      },
      py::arg("presentation"), py::arg("length"), py::arg("uppercase") = false,
      py::arg("max_strings") = 0,
      "All strings of the given length, in display order.");

  m.def(
      "bands",
      [](const Presentation& p, int max_length, bool uppercase,
         std::int64_t max_strings) {
        Limits limits;
        if (max_strings > 0) limits.max_strings = max_strings;
        const Presentation q = gated(p, false);
        py::list out;
        for (const auto& b : enumerate_bands(q, max_length, limits)) {
          py::dict item;
          item["length"] = b.length();
          item["representative"] =
              display(b.representative, q.quiver, style_of(uppercase));
          item["pair_root"] = display(b.pair_root, q.quiver, style_of(uppercase));
          out.append(item);
        }
        return out;
      },
      py::arg("presentation"), py::arg("max_length"), py::arg("uppercase") = false,
      py::arg("max_strings") = 0,
      "Rotation classes of bands up to the given length.");

  m.def(
      "graph",
      [](const Presentation& p, bool uppercase) {
        const Presentation q = gated(p, false);
        const StateGraph g = build_state_graph(q, {});
        const SCCDecomposition scc = scc_decompose(g);
        py::dict out;
        out["window"] = g.window;
        std::vector<std::string> vertices;
        for (const auto& w : g.vertices)
          vertices.push_back(display(w, q.quiver, style_of(uppercase)));
        out["vertices"] = vertices;
        py::list arrows;
        for (const auto& a : g.arrows) {
          py::dict item;
          item["from"] = a.from;
          item["to"] = a.to;
          item["label"] = display(a.label, q.quiver, style_of(uppercase));
          arrows.append(item);
        }
        out["arrows"] = arrows;
        py::list components;
        for (const auto& c : scc.components) {
          py::dict item;
          item["vertices"] = c.vertices;
          item["period"] = c.period;
          item["trivial"] = c.trivial;
          item["simple_cycle"] = c.simple_cycle;
          item["spectral_radius"] = c.spectral_radius;
          components.append(item);
        }
        out["components"] = components;
        return out;
      },
      py::arg("presentation"), py::arg("uppercase") = false,
      "State graph summary with strongly connected components.");

  m.def(
      "adjacency",
      [](const Presentation& p) {
        const Presentation q = gated(p, false);
        return adjacency(build_state_graph(q, {})).entries;
      },
      py::arg("presentation"),
      "Adjacency matrix of the state graph in vertex display order.");

  m.def(
      "dot",
      [](const Presentation& p, bool uppercase) {
        const Presentation q = gated(p, false);
        return export_dot(build_state_graph(q, {}), style_of(uppercase));
      },
      py::arg("presentation"), py::arg("uppercase") = false,
      "State graph in Graphviz DOT format.");

  m.def(
      "trace_sequence",
      [](const Presentation& p, int terms) {
        const Presentation q = gated(p, false);
        const StateGraph g = build_state_graph(q, {});
        return to_py_ints(trace_powers(adjacency(g), terms).values);
      },
      py::arg("presentation"), py::arg("terms"),
      "N_1..N_terms: counts of band-power strings by length.");

  m.def(
      "pi_sequence",
      [](const Presentation& p, int terms) {
        const Presentation q = gated(p, true);
        const StateGraph g = build_state_graph(q, {});
        const auto n = trace_powers(adjacency(g), terms);
        return to_py_ints(counting_report(n, terms).pi);
      },
      py::arg("presentation"), py::arg("terms"),
      "pi(1)..pi(terms): rotation classes of bands by length.");

  m.def(
      "mu_sequence",
      [](const Presentation& p, int terms) {
        const Presentation q = gated(p, true);
        const StateGraph g = build_state_graph(q, {});
        const auto n = trace_powers(adjacency(g), terms);
        return to_py_ints(counting_report(n, terms).mu);
      },
      py::arg("presentation"), py::arg("terms"),
      "mu(1)..mu(terms): inverse pairs of band classes by length.");

  m.def(
      "zeta_series",
      [](const Presentation& p, int terms) {
        const Presentation q = gated(p, false);
        const StateGraph g = build_state_graph(q, {});
        const auto poly = reciprocal_char_poly(adjacency(g));
        return to_py_ints(zeta_coefficients(poly, terms));
      },
      py::arg("presentation"), py::arg("terms"),
      "Coefficients of the zeta function 1/det(I - tA) up to t^terms.");

  m.def(
      "classify",
      [](const Presentation& p) {
        return classification_dict(classify_presentation(p, {}));
      },
      py::arg("presentation"),
      "Domestic / non-domestic dichotomy with evidence.");

  m.def(
      "analyze_json",
      [](const Presentation& p, int terms, int pnt_from, int pnt_to) {
        AnalyticsOptions options;
        options.terms = terms;
        options.pnt_from = pnt_from;
        options.pnt_to = pnt_to;
        return report_to_json(analyze(p, options));
      },
      py::arg("presentation"), py::arg("terms") = 20, py::arg("pnt_from") = 40,
      py::arg("pnt_to") = 60,
      "Full analytics report serialized as JSON.");
}
