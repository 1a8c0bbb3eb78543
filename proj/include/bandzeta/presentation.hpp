#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bandzeta/errors.hpp"

namespace bandzeta {

struct Arrow {
  std::string name;
  int source = 0;  // vertex index
  int target = 0;  // vertex index
  bool operator==(const Arrow&) const = default;
};

// Finite quiver.  Vertices and arrows are kept sorted by name, so index
// order coincides with name order; every index below refers into these
// two vectors.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const;  // -1 when absent
  int arrow_index(const std::string& name) const;   // -1 when absent
  bool operator==(const Quiver&) const = default;
};

// Non-trivial path, stored in application order: arrows[i] is traversed
// before arrows[i+1], so target(arrows[i]) == source(arrows[i+1]).  The
// display convention composes right to left: the stored path (a, b) is
// printed "ba".
struct Path {
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  auto operator<=>(const Path&) const = default;
};

// One commutativity-style relation lhs - coefficient * rhs.  The
// coefficient is an opaque non-zero scalar literal; it is recorded for
// round-tripping but never evaluated, since every computation here
// happens on the associated monomial presentation.
struct BinomialRelation {
  Path lhs;
  Path rhs;
  std::string coefficient;
  bool operator==(const BinomialRelation&) const = default;
};

// Presentation of an algebra by a quiver with monomial relations and
// optional binomial relations.  `window` caches the locality bound for
// string checks once admissibility has been established.
struct Presentation {
  Quiver quiver;
  std::vector<Path> relations;  // sorted, deduplicated
  std::vector<BinomialRelation> binomials;
  std::optional<int> window;

  // True when some monomial relation occurs as a contiguous subpath.
  bool path_in_ideal(const Path& path) const;
  int max_relation_length() const;
  bool operator==(const Presentation&) const = default;
};

struct Diagnostic {
  std::string code;     // stable machine-readable tag
  std::string subject;  // offending object, printable
  std::string message;  // human-readable explanation
  bool operator==(const Diagnostic&) const = default;
};

struct ValidationReport {
  bool admissible = false;
  bool string_algebra = false;
  std::optional<int> window_N;  // set exactly when admissible
  std::vector<Diagnostic> diagnostics;
};

// Parses the JSON input format.  Normalizes order (vertices and arrows
// sorted by name, relations sorted and deduplicated) so that equal
// inputs give equal values.  Throws ParseError on malformed input.
Presentation parse_presentation(const std::string& text);
Presentation parse_presentation_file(const std::string& path);

// Drops every monomial relation that contains another one as a
// contiguous subpath.  Idempotent; leaves binomials untouched.
Presentation normalize_relations(const Presentation& p);

// Admissibility of the monomial part: all relations have length >= 2
// and only finitely many paths avoid the relation ideal.  On success
// the report carries window_N = max(1, max relation length - 1,
// longest relation-free path length).
ValidationReport validate_zero_relation(const Presentation& p);

// Admissibility plus the four local string-algebra conditions (at most
// two arrows in and out of each vertex; at most one composable
// continuation of each arrow on either side staying out of the ideal).
// Condition violations are reported individually.
ValidationReport validate_string_algebra(const Presentation& p);

// Replaces every binomial relation lhs - c * rhs by the two monomial
// relations lhs, rhs and normalizes.  Identity when no binomials are
// present.  Throws ParseError when lhs and rhs are not parallel paths.
Presentation tilde_presentation(const Presentation& p);

// Longest relation-free path data used by admissibility; exposed for
// the resource report.  `finite` is false when arbitrarily long
// relation-free paths exist (then `longest` is meaningless).
struct PathSurvey {
  bool finite = false;
  int longest = 0;
};
PathSurvey survey_relation_free_paths(const Presentation& p);

std::string path_display(const Path& path, const Quiver& q);

}  // namespace bandzeta
