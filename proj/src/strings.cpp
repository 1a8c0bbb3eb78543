#include "bandzeta/strings.hpp"

#include <algorithm>
#include <map>

namespace bandzeta {

namespace {

// Maximal equal-orientation run [begin, end) ending at position
// end - 1, read as the direct path it spells: direct runs forwards,
// inverse runs backwards.
Path run_path(const std::vector<Syllable>& s, int begin, int end) {
  Path path;
  if (s[begin].inverse)
    for (int i = end - 1; i >= begin; --i) path.arrows.push_back(s[i].arrow);
  else
    for (int i = begin; i < end; ++i) path.arrows.push_back(s[i].arrow);
  return path;
}

bool composes(const Syllable& a, const Syllable& b, const Quiver& q) {
  return syllable_target(a, q) == syllable_source(b, q);
}

}  // namespace

int syllable_source(const Syllable& s, const Quiver& q) {
  const Arrow& a = q.arrows[s.arrow];
  return s.inverse ? a.target : a.source;
}

int syllable_target(const Syllable& s, const Quiver& q) {
  const Arrow& a = q.arrows[s.arrow];
  return s.inverse ? a.source : a.target;
}

Syllable syllable_inverse(const Syllable& s) { return {s.arrow, !s.inverse}; }

StringWord StringWord::rotated(int offset) const {
  const int n = length();
  if (n == 0) return *this;
  offset = ((offset % n) + n) % n;
  std::vector<Syllable> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(syllables_[(offset + i) % n]);
  return StringWord(std::move(out));
}

bool display_less(const StringWord& a, const StringWord& b) {
  const auto& sa = a.syllables();
  const auto& sb = b.syllables();
  const int n = std::min(a.length(), b.length());
  for (int k = 0; k < n; ++k) {
    const Syllable& x = sa[a.length() - 1 - k];
    const Syllable& y = sb[b.length() - 1 - k];
    if (x != y) return x < y;
  }
  return a.length() < b.length();
}

std::string display(const Syllable& s, const Quiver& q,
                    const DisplayStyle& style) {
  const std::string& name = q.arrows[s.arrow].name;
  if (!s.inverse) return name;
  if (style.uppercase) {
    if (name.size() != 1 || name[0] < 'a' || name[0] > 'z')
      throw PreconditionError(
          "uppercase display requires single lowercase arrow names");
    return std::string(1, static_cast<char>(name[0] - 'a' + 'A'));
  }
  return name + "⁻¹";  // superscript -1
}

std::string display(const StringWord& w, const Quiver& q,
                    const DisplayStyle& style) {
  const bool separate =
      !style.uppercase &&
      std::any_of(q.arrows.begin(), q.arrows.end(),
                  [](const Arrow& a) { return a.name.size() > 1; });
  std::string out;
  const auto& s = w.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (!out.empty() && separate) out += "·";
    out += display(*it, q, style);
  }
  return out;
}

bool is_string(const StringWord& w, const Presentation& p) {
  const auto& s = w.syllables();
  const int n = w.length();
  if (n == 0) return false;
  for (int i = 1; i < n; ++i) {
    if (!composes(s[i - 1], s[i], p.quiver)) return false;
    if (s[i] == syllable_inverse(s[i - 1])) return false;
  }
  // A maximal run contains a relation factor iff its full path meets
  // the ideal, so one containment test per run suffices.
  int begin = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || s[i].inverse != s[begin].inverse) {
      if (p.path_in_ideal(run_path(s, begin, i))) return false;
      begin = i;
    }
  }
  return true;
}

StringWord inverse(const StringWord& w) {
  std::vector<Syllable> out(w.syllables().rbegin(), w.syllables().rend());
  for (Syllable& s : out) s = syllable_inverse(s);
  return StringWord(std::move(out));
}

std::optional<StringWord> concat(const StringWord& u, const StringWord& v,
                                 const Presentation& p) {
  std::vector<Syllable> joined = v.syllables();
  joined.insert(joined.end(), u.syllables().begin(), u.syllables().end());
  StringWord w(std::move(joined));
  if (!is_string(w, p)) return std::nullopt;
  return w;
}

std::vector<StringWord> enumerate_strings(const Presentation& p, int k,
                                          const Limits& limits) {
  if (k < 1) throw PreconditionError("string length must be >= 1");
  const Quiver& q = p.quiver;
  const int arrow_count = static_cast<int>(q.arrows.size());

  std::vector<StringWord> current;
  for (int a = 0; a < arrow_count; ++a)
    for (const bool inv : {false, true}) {
      const Syllable s{a, inv};
      if (p.path_in_ideal(Path{{a}})) continue;
      current.push_back(StringWord({s}));
    }

  for (int length = 2; length <= k; ++length) {
    std::vector<StringWord> next;
    for (const StringWord& w : current) {
      const Syllable& last = w.last_applied();
      for (int a = 0; a < arrow_count; ++a)
        for (const bool inv : {false, true}) {
          const Syllable s{a, inv};
          if (!composes(last, s, q)) continue;
          if (s == syllable_inverse(last)) continue;
          std::vector<Syllable> grown = w.syllables();
          grown.push_back(s);
          if (s.inverse == last.inverse) {
            // Only the run ending at the new syllable needs rechecking.
            int begin = static_cast<int>(grown.size()) - 1;
            while (begin > 0 && grown[begin - 1].inverse == s.inverse) --begin;
            if (p.path_in_ideal(
                    run_path(grown, begin, static_cast<int>(grown.size()))))
              continue;
          }
          next.push_back(StringWord(std::move(grown)));
          if (next.size() > limits.max_strings)
            throw ResourceLimitError(
                "string enumeration exceeded max_strings = " +
                std::to_string(limits.max_strings) + " at length " +
                std::to_string(length));
        }
    }
    current = std::move(next);
  }

  std::sort(current.begin(), current.end(), display_less);
  return current;
}

bool is_cyclic(const StringWord& w, const Quiver& q) {
  if (w.empty()) return false;
  return syllable_target(w.last_applied(), q) ==
         syllable_source(w.first_applied(), q);
}

bool is_mixed(const StringWord& w) {
  bool direct = false, inverse = false;
  for (const Syllable& s : w.syllables()) (s.inverse ? inverse : direct) = true;
  return direct && inverse;
}

bool is_permutable(const StringWord& w, const Presentation& p) {
  for (int r = 0; r < w.length(); ++r)
    if (!is_string(w.rotated(r), p)) return false;
  return true;
}

int cyclic_period(const StringWord& w) {
  const auto& s = w.syllables();
  const int n = w.length();
  for (int period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) ok = s[i] == s[(i + period) % n];
    if (ok) return period;
  }
  return n;
}

namespace {

bool band_form(const StringWord& w) {
  return !w.empty() && w.first_applied().inverse && !w.last_applied().inverse;
}

// Display-least rotation in band form; empty optional when no rotation
// is in band form (impossible for rotations of bands).
std::optional<StringWord> least_band_form_rotation(const StringWord& w) {
  std::optional<StringWord> best;
  for (int r = 0; r < w.length(); ++r) {
    StringWord candidate = w.rotated(r);
    if (!band_form(candidate)) continue;
    if (!best || display_less(candidate, *best)) best = std::move(candidate);
  }
  return best;
}

bool rotation_of_band(const StringWord& w, const Presentation& p) {
  return is_string(w, p) && is_cyclic(w, p.quiver) && is_mixed(w) &&
         cyclic_period(w) == w.length() && is_permutable(w, p);
}

}  // namespace

CyclicClassification classify_cyclic(const StringWord& w,
                                     const Presentation& p) {
  if (!is_string(w, p))
    throw PreconditionError("classify_cyclic expects a string");
  if (!is_cyclic(w, p.quiver)) return {CyclicKind::NotCyclic, std::nullopt, 0};
  if (!is_mixed(w) || !is_permutable(w, p))
    return {CyclicKind::OtherCyclic, std::nullopt, 0};

  const int n = w.length();
  const int period = cyclic_period(w);
  // The length-`period` windows of w all spell the same rotation class;
  // any window is a substring of a rotation of w, hence a string.
  const StringWord root(std::vector<Syllable>(
      w.syllables().begin(), w.syllables().begin() + period));
  return {CyclicKind::BandPowerRotation, canonical_band(root, p), n / period};
}

BandClass canonical_band(const StringWord& w, const Presentation& p) {
  if (!rotation_of_band(w, p))
    throw PreconditionError("canonical_band expects a rotation of a band");
  const auto representative = least_band_form_rotation(w);
  const auto mirrored = least_band_form_rotation(inverse(w));
  if (!representative || !mirrored)
    throw InternalConsistencyError("band class without band-form rotation");
  BandClass out;
  out.representative = *representative;
  out.pair_root =
      display_less(*mirrored, *representative) ? *mirrored : *representative;
  return out;
}

std::vector<BandClass> enumerate_bands(const Presentation& p, int max_length,
                                       const Limits& limits) {
  std::map<StringWord, BandClass, DisplayOrder> classes;
  for (int n = 1; n <= max_length; ++n) {
    const std::vector<StringWord> words = enumerate_strings(p, n, limits);
    if (words.empty()) break;  // no strings of any greater length either
    for (const StringWord& w : words) {
      if (!band_form(w)) continue;
      if (!is_cyclic(w, p.quiver)) continue;
      if (cyclic_period(w) != n) continue;
      if (!is_permutable(w, p)) continue;
      BandClass c = canonical_band(w, p);
      classes.emplace(c.representative, std::move(c));
    }
  }
  std::vector<BandClass> out;
  out.reserve(classes.size());
  for (auto& [rep, c] : classes) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(),
                   [](const BandClass& a, const BandClass& b) {
                     if (a.length() != b.length()) return a.length() < b.length();
                     return display_less(a.representative, b.representative);
                   });
  return out;
}

}  // namespace bandzeta
