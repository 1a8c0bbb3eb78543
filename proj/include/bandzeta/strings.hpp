#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bandzeta/presentation.hpp"

namespace bandzeta {

// A letter of a walk: an arrow traversed forwards (direct) or
// backwards (inverse).  Syllables order by (arrow, direct < inverse),
// which is the alphabet order used for all displays and enumerations.
struct Syllable {
  int arrow = 0;
  bool inverse = false;
  auto operator<=>(const Syllable&) const = default;
};

int syllable_source(const Syllable& s, const Quiver& q);
int syllable_target(const Syllable& s, const Quiver& q);
Syllable syllable_inverse(const Syllable& s);

// Word in syllables, stored in application order: syllables()[0] is
// applied first and is the rightmost letter of the display form.  A
// word of length n is a *string* for a presentation when consecutive
// syllables compose, no syllable is followed by its inverse, and no
// maximal run of equal-orientation syllables contains a relation (run
// read forwards for direct runs, backwards for inverse ones).  The
// empty word is excluded throughout.
class StringWord {
 public:
  StringWord() = default;
  explicit StringWord(std::vector<Syllable> syllables)
      : syllables_(std::move(syllables)) {}

  const std::vector<Syllable>& syllables() const { return syllables_; }
  int length() const { return static_cast<int>(syllables_.size()); }
  bool empty() const { return syllables_.empty(); }
  const Syllable& first_applied() const { return syllables_.front(); }
  const Syllable& last_applied() const { return syllables_.back(); }

  StringWord rotated(int offset) const;  // cyclic shift in storage order
  bool operator==(const StringWord&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

// Lexicographic comparison in display order (leftmost letter first).
bool display_less(const StringWord& a, const StringWord& b);

// Comparator object for ordered containers keyed by StringWord.
struct DisplayOrder {
  bool operator()(const StringWord& a, const StringWord& b) const {
    return display_less(a, b);
  }
};

struct DisplayStyle {
  // With `uppercase`, an inverse syllable prints as the capitalized
  // arrow name; requires all arrow names to be single lowercase
  // letters.  Default renders inverses with a superscript -1.
  bool uppercase = false;
};

std::string display(const Syllable& s, const Quiver& q,
                    const DisplayStyle& style = {});
std::string display(const StringWord& w, const Quiver& q,
                    const DisplayStyle& style = {});

// Enumeration budgets.  Exceeding one throws ResourceLimitError.
struct Limits {
  std::size_t max_strings = 1'000'000;   // strings retained per length
  std::size_t max_walk_steps = 50'000'000;  // brute-force walk steps
};

bool is_string(const StringWord& w, const Presentation& p);
StringWord inverse(const StringWord& w);

// Concatenation uv when it is again a string: v is applied first, so
// the display form is display(u) followed by display(v).  Returns
// nullopt otherwise.
std::optional<StringWord> concat(const StringWord& u, const StringWord& v,
                                 const Presentation& p);

// All strings of length exactly k, sorted in display order.
std::vector<StringWord> enumerate_strings(const Presentation& p, int k,
                                          const Limits& limits = {});

// Rotation class of a band.  `representative` is the display-least
// rotation among those in band form (first applied syllable inverse,
// last applied direct); `pair_root` is the same minimum taken over the
// class together with its inverse class, so a band and its inverse
// share pair_root.
struct BandClass {
  StringWord representative;
  StringWord pair_root;

  int length() const { return representative.length(); }
  bool operator==(const BandClass&) const = default;
};

enum class CyclicKind {
  NotCyclic,          // endpoints differ
  BandPowerRotation,  // rotation of b^k for a band b
  OtherCyclic,        // cyclic but not mixed or not fully rotatable
};

struct CyclicClassification {
  CyclicKind kind = CyclicKind::NotCyclic;
  std::optional<BandClass> band;  // set for BandPowerRotation
  int exponent = 0;               // k above, ditto
};

bool is_cyclic(const StringWord& w, const Quiver& q);
bool is_mixed(const StringWord& w);
// True when every rotation of the cyclic string is again a string.
bool is_permutable(const StringWord& w, const Presentation& p);
// Smallest p dividing the length with syllable i == syllable i+p (mod n).
int cyclic_period(const StringWord& w);

// Decides where a string sits in the cyclic taxonomy.  Precondition:
// is_string(w, p).
CyclicClassification classify_cyclic(const StringWord& w,
                                     const Presentation& p);

// Canonical form of the rotation class of a band.  Precondition: w is
// a rotation of a band (classify_cyclic kind BandPowerRotation with
// exponent 1); otherwise throws PreconditionError.
BandClass canonical_band(const StringWord& w, const Presentation& p);

// All band rotation classes of length <= max_length, sorted by
// (length, display order of representative).
std::vector<BandClass> enumerate_bands(const Presentation& p, int max_length,
                                       const Limits& limits = {});

}  // namespace bandzeta
