#ifndef GENTLE_STRINGS_HPP
#define GENTLE_STRINGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

// A step of a walk: an arrow traversed forward (direct) or backward (inverse).
struct Letter {
  int arrow = -1;
  bool inv = false;
  bool operator==(const Letter&) const = default;
};

// A string: either the lazy path at a vertex or a nonempty reduced walk that
// avoids the ideal in both reading directions. Letters are kept in traversal
// order (first step first).
struct StringWord {
  int lazy_at = -1;
  std::vector<Letter> letters;

  bool is_lazy() const { return letters.empty(); }
  size_t length() const { return letters.size(); }
  static StringWord lazy(int vertex) {
    StringWord w;
    w.lazy_at = vertex;
    return w;
  }
  bool operator==(const StringWord&) const = default;
};

int letter_start(const GentleQuiver& q, Letter l);
int letter_end(const GentleQuiver& q, Letter l);
Letter flip(Letter l);

int word_source(const GentleQuiver& q, const StringWord& w);
int word_target(const GentleQuiver& q, const StringWord& w);
// k+1 vertices visited, in order.
std::vector<int> vertex_seq(const GentleQuiver& q, const StringWord& w);
std::vector<int> vertex_support(const GentleQuiver& q, const StringWord& w);  // sorted, unique
std::vector<int> arrow_support(const GentleQuiver& q, const StringWord& w);   // sorted, unique
int count_visits(const GentleQuiver& q, const StringWord& w, int vertex);
bool passes_through(const GentleQuiver& q, const StringWord& w, int vertex);

StringWord inverse(const StringWord& w);
// Concatenation in traversal order: walk `a`, then walk `b` (requires
// target(a) == source(b)); validity of the junction is not checked here.
StringWord concat(const GentleQuiver& q, const StringWord& a, const StringWord& b);
// May two letters occur consecutively in a string?
bool valid_pair(const GentleQuiver& q, Letter x, Letter y);

struct StringCheck {
  bool ok = true;
  std::string detail;
};
StringCheck is_valid_string(const GentleQuiver& q, const StringWord& w);

// Total order on words under (arrow label order, direct < inverse); the
// canonical representative of {w, w^-1} is the smaller one.
bool word_less(const GentleQuiver& q, const StringWord& a, const StringWord& b);
StringWord canonicalize(const GentleQuiver& q, const StringWord& w);

// Literal grammar: letters separated by spaces or U+00B7, written in
// composition order (rightmost letter is traversed first); inverses marked
// `^-1` or a trailing `-`; the lazy path is `e_<vertex>`.
StringWord parse_string_literal(const GentleQuiver& q, const std::string& text,
                                bool validate = true);
std::string string_literal(const GentleQuiver& q, const StringWord& w);

// Positional substring occurrence: a segment [i..j] of letters (1-based) or a
// lazy occurrence sitting between letters pos and pos+1 (0 <= pos <= length).
struct Occurrence {
  bool is_lazy = false;
  int i = 1, j = 0;  // segment bounds when !is_lazy
  int pos = 0;       // lazy position when is_lazy
  bool on_top = false;
  bool at_bottom = false;
};
std::vector<Occurrence> substring_occurrences(const GentleQuiver& q, const StringWord& host);
StringWord occurrence_word(const GentleQuiver& q, const StringWord& host, const Occurrence& occ);

// All oriented strings with source m. When some string from m re-enters a
// (vertex, entry-letter) state, the family is infinite; `complete` is false
// and `infinite_witness` holds a string from m revisiting a vertex.
struct StartWalks {
  bool complete = false;
  std::vector<StringWord> walks;  // oriented words, s = m; includes e_m
  std::optional<StringWord> infinite_witness;
};
StartWalks strings_from(const GentleQuiver& q, int m);

struct StringsThrough {
  bool complete = false;
  std::vector<StringWord> strings;  // canonical representatives, sorted
  std::optional<StringWord> infinite_witness;
};
// Without a cap: the complete set when it is finite, otherwise an infinite
// family witness. With a cap: every string through m of length <= cap.
StringsThrough strings_through(const GentleQuiver& q, int m,
                               std::optional<int> cap = std::nullopt);

// Valid one-letter extensions at the target end / prepends at the source end.
std::vector<Letter> extensions_at_target(const GentleQuiver& q, const StringWord& w);
std::vector<Letter> extensions_at_source(const GentleQuiver& q, const StringWord& w);
bool is_maximal_string(const GentleQuiver& q, const StringWord& w);

// Maximal strings passing through m, as canonical classes. Requires every
// string through m to visit each vertex at most once (PreconditionO).
std::vector<StringWord> maximal_strings_through(const GentleQuiver& q, int m);

// Bands: cyclic primitive strings all of whose powers are strings, up to
// rotation and inversion.
struct Band {
  StringWord word;  // canonical representative
  bool operator==(const Band&) const = default;
};
bool is_band(const GentleQuiver& q, const StringWord& w);
// Canonical class representative; reports whether the representative is
// reachable by rotation alone and/or needs an inversion.
struct BandCanon {
  StringWord word;
  bool via_rotation = false;
  bool via_inversion = false;
};
BandCanon canonical_band(const GentleQuiver& q, const StringWord& w);
std::vector<Band> enumerate_bands(const GentleQuiver& q, int max_len);

enum class Cmp { Less, Equal, Greater };
// Total order on strings emanating from m (words oriented away from m, not
// canonicalized). Throws Incomparable for words that the order never has to
// compare; PreconditionIIa-style totality holds case by case.
Cmp brenner_compare(const GentleQuiver& q, int m, const StringWord& mu, const StringWord& nu);

// Distance from m: length of the unique string from m ending at each vertex.
struct DeltaMap {
  std::vector<long> dist;  // -1 encodes infinity
  bool finite(int v) const { return dist[size_t(v)] >= 0; }
  long operator[](int v) const { return dist[size_t(v)]; }
};
// Requires (i*) and (ii)(a) at m; throws PreconditionIStar / PreconditionIIa.
DeltaMap delta(const GentleQuiver& q, int m);

// Raw condition predicates used both here and by the analysis layer.
bool condition_iia(const GentleQuiver& q, int m);
// Endpoint uniqueness of strings starting at m (condition (i*)).
bool condition_istar(const GentleQuiver& q, int m);

}  // namespace gentle

#endif
