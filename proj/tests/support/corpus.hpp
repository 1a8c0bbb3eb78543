#pragma once

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "bandzeta/report.hpp"

namespace testsupport {

using namespace bandzeta;

// The three algebras every suite exercises, inline so tests also run
// without the data directory.  The files under data/ hold the same
// presentations byte for byte up to formatting.

inline const char* kGelfandPonomarev23 = R"({
  "vertices": ["v"],
  "arrows": [
    {"name": "a", "source": "v", "target": "v"},
    {"name": "b", "source": "v", "target": "v"}
  ],
  "relations": [["a", "a"], ["b", "b", "b"], ["b", "a"], ["a", "b"]]
})";

inline const char* kKronecker2 = R"({
  "vertices": ["v1", "v2"],
  "arrows": [
    {"name": "a", "source": "v1", "target": "v2"},
    {"name": "b", "source": "v1", "target": "v2"}
  ],
  "relations": []
})";

inline const char* kSpecialBiserial1 = R"({
  "vertices": ["v"],
  "arrows": [
    {"name": "a", "source": "v", "target": "v"},
    {"name": "b", "source": "v", "target": "v"}
  ],
  "relations": [["b", "a"], ["a", "b"]],
  "binomial_relations": [
    {"lhs": ["a", "a"], "rhs": ["b", "b"], "coefficient": "lambda"}
  ]
})";

// Parse, replace binomials, drop redundant relations, stamp the window.
inline Presentation prepared(const std::string& text) {
  Presentation p = normalize_relations(tilde_presentation(parse_presentation(text)));
  const ValidationReport r = validate_zero_relation(p);
  if (r.admissible) p.window = r.window_N;
  return p;
}

inline Presentation prepared_file(const std::string& path) {
  Presentation p =
      normalize_relations(tilde_presentation(parse_presentation_file(path)));
  const ValidationReport r = validate_zero_relation(p);
  if (r.admissible) p.window = r.window_N;
  return p;
}

// Word from its uppercase display form: lowercase letter = direct
// arrow, uppercase = inverse.  Display reads right to left in
// application order, so storage is the reversed letter sequence.
inline StringWord word(const std::string& shown, const Quiver& q) {
  std::vector<Syllable> stored;
  for (auto it = shown.rbegin(); it != shown.rend(); ++it) {
    const char c = *it;
    const bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
    const std::string name(1, static_cast<char>(
                                  std::tolower(static_cast<unsigned char>(c))));
    const int arrow = q.arrow_index(name);
    if (arrow < 0) throw std::runtime_error("unknown arrow in test word: " + name);
    stored.push_back({arrow, inv});
  }
  return StringWord(std::move(stored));
}

inline std::vector<std::string> displays(const std::vector<StringWord>& words,
                                         const Quiver& q) {
  DisplayStyle style;
  style.uppercase = true;
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(display(w, q, style));
  return out;
}

inline std::vector<std::string> band_displays(const std::vector<BandClass>& bands,
                                              const Quiver& q) {
  DisplayStyle style;
  style.uppercase = true;
  std::vector<std::string> out;
  out.reserve(bands.size());
  for (const auto& b : bands) out.push_back(display(b.representative, q, style));
  return out;
}

}  // namespace testsupport
