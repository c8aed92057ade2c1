#include "gentle/strings.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gentle {

int letter_start(const GentleQuiver& q, Letter l) {
  const Arrow& a = q.arrow(l.arrow);
  return l.inv ? a.target : a.source;
}

int letter_end(const GentleQuiver& q, Letter l) {
  const Arrow& a = q.arrow(l.arrow);
  return l.inv ? a.source : a.target;
}

Letter flip(Letter l) { return {l.arrow, !l.inv}; }

int word_source(const GentleQuiver& q, const StringWord& w) {
  return w.is_lazy() ? w.lazy_at : letter_start(q, w.letters.front());
}

int word_target(const GentleQuiver& q, const StringWord& w) {
  return w.is_lazy() ? w.lazy_at : letter_end(q, w.letters.back());
}

std::vector<int> vertex_seq(const GentleQuiver& q, const StringWord& w) {
  std::vector<int> seq = {word_source(q, w)};
  for (Letter l : w.letters) seq.push_back(letter_end(q, l));
  return seq;
}

std::vector<int> vertex_support(const GentleQuiver& q, const StringWord& w) {
  std::vector<int> seq = vertex_seq(q, w);
  std::sort(seq.begin(), seq.end());
  seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
  return seq;
}

std::vector<int> arrow_support(const GentleQuiver&, const StringWord& w) {
  std::vector<int> s;
  for (Letter l : w.letters) s.push_back(l.arrow);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

int count_visits(const GentleQuiver& q, const StringWord& w, int vertex) {
  int c = 0;
  for (int v : vertex_seq(q, w))
    if (v == vertex) ++c;
  return c;
}

bool passes_through(const GentleQuiver& q, const StringWord& w, int vertex) {
  return count_visits(q, w, vertex) > 0;
}

StringWord inverse(const StringWord& w) {
  StringWord r;
  r.lazy_at = w.lazy_at;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(flip(*it));
  return r;
}

StringWord concat(const GentleQuiver& q, const StringWord& a, const StringWord& b) {
  if (word_target(q, a) != word_source(q, b))
    fail(Err::Semantic, "concat: walks do not meet");
  if (a.is_lazy()) return b;
  if (b.is_lazy()) return a;
  StringWord r = a;
  r.lazy_at = -1;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

bool valid_pair(const GentleQuiver& q, Letter x, Letter y) {
  if (letter_end(q, x) != letter_start(q, y)) return false;
  if (!x.inv && !y.inv) return !q.in_ideal(x.arrow, y.arrow);
  if (x.inv && y.inv) return !q.in_ideal(y.arrow, x.arrow);
  return x.arrow != y.arrow;
}

StringCheck is_valid_string(const GentleQuiver& q, const StringWord& w) {
  if (w.is_lazy()) {
    if (w.lazy_at < 0 || w.lazy_at >= q.vertex_count())
      return {false, "lazy path at unknown vertex"};
    return {};
  }
  for (Letter l : w.letters)
    if (l.arrow < 0 || l.arrow >= q.arrow_count()) return {false, "unknown arrow"};
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    Letter x = w.letters[i], y = w.letters[i + 1];
    if (letter_end(q, x) != letter_start(q, y))
      return {false, "steps " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                         " do not compose"};
    if (!valid_pair(q, x, y)) {
      if (x.inv != y.inv && x.arrow == y.arrow)
        return {false, "not reduced at step " + std::to_string(i + 1)};
      return {false, "forbidden composition at step " + std::to_string(i + 1) + " (" +
                         q.arrow(x.arrow).label + ", " + q.arrow(y.arrow).label + ")"};
    }
  }
  return {};
}

namespace {

// Comparison key of one letter.
std::pair<int, int> letter_key(const GentleQuiver& q, Letter l) {
  return {q.label_rank(l.arrow), l.inv ? 1 : 0};
}

}  // namespace

bool word_less(const GentleQuiver& q, const StringWord& a, const StringWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_lazy()) return q.vertex_rank(a.lazy_at) < q.vertex_rank(b.lazy_at);
  for (size_t i = 0; i < a.letters.size(); ++i) {
    auto ka = letter_key(q, a.letters[i]), kb = letter_key(q, b.letters[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

StringWord canonicalize(const GentleQuiver& q, const StringWord& w) {
  if (w.is_lazy()) return w;
  StringWord r = inverse(w);
  return word_less(q, r, w) ? r : w;
}

StringWord parse_string_literal(const GentleQuiver& q, const std::string& text, bool validate) {
  // Split on spaces and U+00B7.
  std::vector<std::string> toks;
  std::string cur;
  for (size_t i = 0; i < text.size();) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    bool sep = false;
    size_t step = 1;
    if (c == ' ' || c == '\t') sep = true;
    if (c == 0xC2 && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0xB7) {
      sep = true;
      step = 2;
    }
    if (sep) {
      if (!cur.empty()) toks.push_back(cur);
      cur.clear();
    } else {
      cur += text[i];
    }
    i += step;
  }
  if (!cur.empty()) toks.push_back(cur);
  if (toks.empty()) fail(Err::Parse, "empty string literal");

  if (toks.size() == 1 && toks[0].rfind("e_", 0) == 0) {
    std::string v = toks[0].substr(2);
    auto idx = q.vertex_index(v);
    if (!idx) fail(Err::Semantic, "lazy path at unknown vertex '" + v + "'");
    return StringWord::lazy(*idx);
  }

  std::vector<Letter> letters;
  for (const std::string& tok : toks) {
    std::string label = tok;
    bool inv = false;
    if (label.size() > 3 && label.substr(label.size() - 3) == "^-1") {
      inv = true;
      label = label.substr(0, label.size() - 3);
    } else if (label.size() > 1 && label.back() == '-') {
      inv = true;
      label.pop_back();
    }
    auto idx = q.arrow_index(label);
    if (!idx) fail(Err::Semantic, "unknown arrow '" + label + "' in string literal");
    letters.push_back({*idx, inv});
  }
  // The literal lists letters in composition order; traversal order reverses.
  std::reverse(letters.begin(), letters.end());
  StringWord w;
  w.letters = std::move(letters);
  if (validate) {
    StringCheck check = is_valid_string(q, w);
    if (!check.ok) fail(Err::Semantic, "invalid string '" + text + "': " + check.detail);
  }
  return w;
}

std::string string_literal(const GentleQuiver& q, const StringWord& w) {
  if (w.is_lazy()) return "e_" + q.vertex_name(w.lazy_at);
  std::string s;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += q.arrow(it->arrow).label;
    if (it->inv) s += "^-1";
  }
  return s;
}

std::vector<Occurrence> substring_occurrences(const GentleQuiver&, const StringWord& host) {
  std::vector<Occurrence> occs;
  int k = int(host.length());
  auto eps_inv = [&](int idx1based) { return host.letters[size_t(idx1based - 1)].inv; };
  for (int p = 0; p <= k; ++p) {
    Occurrence o;
    o.is_lazy = true;
    o.pos = p;
    o.on_top = (p == 0 || eps_inv(p)) && (p == k || !eps_inv(p + 1));
    o.at_bottom = (p == 0 || !eps_inv(p)) && (p == k || eps_inv(p + 1));
    occs.push_back(o);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      Occurrence o;
      o.i = i;
      o.j = j;
      o.on_top = (i == 1 || eps_inv(i - 1)) && (j == k || !eps_inv(j + 1));
      o.at_bottom = (i == 1 || !eps_inv(i - 1)) && (j == k || eps_inv(j + 1));
      occs.push_back(o);
    }
  return occs;
}

StringWord occurrence_word(const GentleQuiver& q, const StringWord& host, const Occurrence& occ) {
  if (occ.is_lazy) return StringWord::lazy(vertex_seq(q, host)[size_t(occ.pos)]);
  StringWord w;
  w.letters.assign(host.letters.begin() + (occ.i - 1), host.letters.begin() + occ.j);
  return w;
}

namespace {

// Continuations of a walk sitting at `vertex`, arrived by `last` (nullopt at
// the start). At most one direct and one inverse continuation exist except at
// the very start of a walk.
std::vector<Letter> continuations(const GentleQuiver& q, int vertex,
                                  std::optional<Letter> last) {
  std::vector<Letter> out;
  for (int a : q.arrows_out(vertex)) {
    Letter next{a, false};
    if (!last || valid_pair(q, *last, next)) out.push_back(next);
  }
  for (int a : q.arrows_in(vertex)) {
    Letter next{a, true};
    if (!last || valid_pair(q, *last, next)) out.push_back(next);
  }
  std::sort(out.begin(), out.end(), [&](Letter x, Letter y) {
    return letter_key(q, x) < letter_key(q, y);
  });
  return out;
}

struct WalkState {
  int vertex;
  Letter entry;
  bool operator<(const WalkState& o) const {
    if (vertex != o.vertex) return vertex < o.vertex;
    if (entry.arrow != o.entry.arrow) return entry.arrow < o.entry.arrow;
    return entry.inv < o.entry.inv;
  }
};

StringWord shortest_vertex_repeating_prefix(const GentleQuiver& q, const StringWord& w) {
  std::set<int> seen = {word_source(q, w)};
  StringWord prefix;
  prefix.lazy_at = word_source(q, w);
  for (Letter l : w.letters) {
    prefix.letters.push_back(l);
    prefix.lazy_at = -1;
    if (!seen.insert(letter_end(q, l)).second) return prefix;
  }
  return w;
}

}  // namespace

StartWalks strings_from(const GentleQuiver& q, int m) {
  StartWalks result;
  result.complete = true;
  // DFS over walks whose (vertex, entry-letter) states never repeat. A state
  // repeat pumps forever, so the family is infinite exactly when one occurs.
  struct Frame {
    StringWord walk;
    std::set<WalkState> states;
  };
  std::vector<Frame> stack;
  stack.push_back({StringWord::lazy(m), {}});
  size_t expanded = 0;
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (++expanded > 1000000) fail(Err::Internal, "string enumeration exceeded the state cap");
    result.walks.push_back(fr.walk);
    int at = word_target(q, fr.walk);
    std::optional<Letter> last;
    if (!fr.walk.is_lazy()) last = fr.walk.letters.back();
    for (Letter next : continuations(q, at, last)) {
      WalkState st{letter_end(q, next), next};
      StringWord longer = fr.walk;
      longer.lazy_at = -1;
      longer.letters.push_back(next);
      if (fr.states.count(st)) {
        result.complete = false;
        if (!result.infinite_witness)
          result.infinite_witness =
              canonicalize(q, shortest_vertex_repeating_prefix(q, longer));
        continue;
      }
      Frame ext;
      ext.walk = std::move(longer);
      ext.states = fr.states;
      ext.states.insert(st);
      stack.push_back(std::move(ext));
    }
  }
  std::sort(result.walks.begin(), result.walks.end(),
            [&](const StringWord& a, const StringWord& b) { return word_less(q, a, b); });
  return result;
}

namespace {

std::vector<StringWord> walks_from_capped(const GentleQuiver& q, int m, int cap) {
  std::vector<StringWord> all;
  std::vector<StringWord> frontier = {StringWord::lazy(m)};
  all.push_back(frontier[0]);
  for (int len = 0; len < cap; ++len) {
    std::vector<StringWord> longer;
    for (const StringWord& w : frontier) {
      int at = word_target(q, w);
      std::optional<Letter> last;
      if (!w.is_lazy()) last = w.letters.back();
      for (Letter next : continuations(q, at, last)) {
        StringWord ext = w;
        ext.lazy_at = -1;
        ext.letters.push_back(next);
        longer.push_back(std::move(ext));
      }
    }
    for (const StringWord& w : longer) all.push_back(w);
    frontier = std::move(longer);
  }
  return all;
}

std::vector<StringWord> combine_halves(const GentleQuiver& q,
                                       const std::vector<StringWord>& halves,
                                       std::optional<int> cap) {
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<StringWord> out;
  auto key_of = [&](const StringWord& w) {
    std::vector<std::pair<int, int>> key;
    if (w.is_lazy())
      key.push_back({-1 - q.vertex_rank(w.lazy_at), 0});
    else
      for (Letter l : w.letters) key.push_back(letter_key(q, l));
    return key;
  };
  for (const StringWord& left : halves)
    for (const StringWord& right : halves) {
      if (cap && int(left.length() + right.length()) > *cap) continue;
      if (!left.is_lazy() && !right.is_lazy()) {
        // Junction between inverse(left) and right, sitting at m.
        if (!valid_pair(q, flip(left.letters.front()), right.letters.front())) continue;
      }
      StringWord w = concat(q, inverse(left), right);
      StringWord canon = canonicalize(q, w);
      if (seen.insert(key_of(canon)).second) out.push_back(canon);
    }
  std::sort(out.begin(), out.end(),
            [&](const StringWord& a, const StringWord& b) { return word_less(q, a, b); });
  return out;
}

}  // namespace

StringsThrough strings_through(const GentleQuiver& q, int m, std::optional<int> cap) {
  if (m < 0 || m >= q.vertex_count()) fail(Err::Semantic, "unknown vertex");
  StringsThrough result;
  if (cap) {
    result.complete = false;
    result.strings = combine_halves(q, walks_from_capped(q, m, *cap), cap);
    return result;
  }
  StartWalks walks = strings_from(q, m);
  if (!walks.complete) {
    result.complete = false;
    result.infinite_witness = walks.infinite_witness;
    return result;
  }
  result.complete = true;
  result.strings = combine_halves(q, walks.walks, std::nullopt);
  return result;
}

std::vector<Letter> extensions_at_target(const GentleQuiver& q, const StringWord& w) {
  std::optional<Letter> last;
  if (!w.is_lazy()) last = w.letters.back();
  return continuations(q, word_target(q, w), last);
}

std::vector<Letter> extensions_at_source(const GentleQuiver& q, const StringWord& w) {
  // A prepend of x is an append of flip(x) to the inverse word.
  std::vector<Letter> pre;
  for (Letter l : extensions_at_target(q, inverse(w))) pre.push_back(flip(l));
  return pre;
}

bool is_maximal_string(const GentleQuiver& q, const StringWord& w) {
  return extensions_at_target(q, w).empty() && extensions_at_source(q, w).empty();
}

std::vector<StringWord> maximal_strings_through(const GentleQuiver& q, int m) {
  StringsThrough st = strings_through(q, m);
  if (!st.complete)
    fail(Err::PreconditionO, "strings through " + q.vertex_name(m) + " form an infinite family");
  for (const StringWord& w : st.strings)
    for (int v : vertex_support(q, w))
      if (count_visits(q, w, v) > 1)
        fail(Err::PreconditionO, "a string through " + q.vertex_name(m) +
                                     " revisits vertex " + q.vertex_name(v));
  std::vector<StringWord> maximal;
  for (const StringWord& w : st.strings)
    if (is_maximal_string(q, w)) maximal.push_back(w);
  return maximal;
}

bool is_band(const GentleQuiver& q, const StringWord& w) {
  if (w.is_lazy() || !is_valid_string(q, w).ok) return false;
  if (word_source(q, w) != word_target(q, w)) return false;
  // All powers are strings iff the wrap-around junction is valid.
  if (!valid_pair(q, w.letters.back(), w.letters.front())) return false;
  // Primitive: not a proper cyclic power.
  size_t k = w.letters.size();
  for (size_t d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    bool periodic = true;
    for (size_t i = 0; i < k && periodic; ++i)
      if (!(w.letters[i] == w.letters[i % d])) periodic = false;
    if (periodic) return false;
  }
  return true;
}

BandCanon canonical_band(const GentleQuiver& q, const StringWord& w) {
  if (!is_band(q, w)) fail(Err::Semantic, "not a band");
  size_t k = w.letters.size();
  auto rotation = [&](const StringWord& base, size_t r) {
    StringWord rot;
    rot.letters.reserve(k);
    for (size_t i = 0; i < k; ++i) rot.letters.push_back(base.letters[(i + r) % k]);
    return rot;
  };
  StringWord inv = inverse(w);
  BandCanon best;
  bool first = true;
  for (int side = 0; side < 2; ++side) {
    const StringWord& base = side == 0 ? w : inv;
    for (size_t r = 0; r < k; ++r) {
      StringWord cand = rotation(base, r);
      if (first || word_less(q, cand, best.word)) {
        best.word = cand;
        best.via_rotation = (side == 0);
        best.via_inversion = (side == 1);
        first = false;
      } else if (cand == best.word) {
        if (side == 0) best.via_rotation = true;
        if (side == 1) best.via_inversion = true;
      }
    }
  }
  return best;
}

std::vector<Band> enumerate_bands(const GentleQuiver& q, int max_len) {
  if (max_len < 2 && max_len != 1) fail(Err::Semantic, "max_len must be >= 1");
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<Band> bands;
  auto key_of = [&](const StringWord& w) {
    std::vector<std::pair<int, int>> key;
    for (Letter l : w.letters) key.push_back(letter_key(q, l));
    return key;
  };
  for (int v = 0; v < q.vertex_count(); ++v) {
    for (const StringWord& w : walks_from_capped(q, v, max_len)) {
      if (w.is_lazy() || word_target(q, w) != v) continue;
      if (!is_band(q, w)) continue;
      BandCanon canon = canonical_band(q, w);
      if (seen.insert(key_of(canon.word)).second) bands.push_back({canon.word});
    }
  }
  std::sort(bands.begin(), bands.end(),
            [&](const Band& a, const Band& b) { return word_less(q, a.word, b.word); });
  return bands;
}

Cmp brenner_compare(const GentleQuiver& q, int m, const StringWord& mu, const StringWord& nu) {
  if (word_source(q, mu) != m || word_source(q, nu) != m)
    fail(Err::Semantic, "strings not anchored at the same vertex");
  size_t k = mu.length(), p = nu.length();
  size_t j = 0;
  while (j < k && j < p && mu.letters[j] == nu.letters[j]) ++j;
  if (j == k && j == p) return Cmp::Equal;
  if (j == k) return nu.letters[j].inv ? Cmp::Greater : Cmp::Less;
  if (j == p) return mu.letters[j].inv ? Cmp::Less : Cmp::Greater;
  bool mu_inv = mu.letters[j].inv, nu_inv = nu.letters[j].inv;
  if (mu_inv && !nu_inv) return Cmp::Less;
  if (!mu_inv && nu_inv) return Cmp::Greater;
  fail(Err::Incomparable, "strings branch with equal signs; order undefined here");
}

bool condition_iia(const GentleQuiver& q, int m) {
  const auto& out = q.arrows_out(m);
  const auto& in = q.arrows_in(m);
  if (out.size() > 1 || in.size() > 1) return false;
  if (out.size() == 1 && in.size() == 1) return q.in_ideal(in[0], out[0]);
  return true;
}

bool condition_istar(const GentleQuiver& q, int m) {
  StartWalks walks = strings_from(q, m);
  // infinitely many strings from m share finitely many endpoints
  if (!walks.complete) return false;
  std::set<int> ends;
  for (const StringWord& w : walks.walks)
    if (!ends.insert(word_target(q, w)).second) return false;
  return true;
}

DeltaMap delta(const GentleQuiver& q, int m) {
  if (!condition_istar(q, m))
    fail(Err::PreconditionIStar, "strings from " + q.vertex_name(m) +
                                     " are not determined by their endpoints");
  if (!condition_iia(q, m))
    fail(Err::PreconditionIIa, "vertex " + q.vertex_name(m) + " fails the incidence condition");
  DeltaMap d;
  d.dist.assign(size_t(q.vertex_count()), -1);
  for (const StringWord& w : strings_from(q, m).walks)
    d.dist[size_t(word_target(q, w))] = long(w.length());
  return d;
}

}  // namespace gentle
