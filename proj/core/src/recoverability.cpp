#include "gentle/recoverability.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace gentle {

namespace {

// Guard on every walk search below; the case hypotheses keep the spaces tiny,
// this only trips on pathological inputs.
constexpr size_t kWalkStateCap = 100000;

void bump(size_t* counter) {
  if (++*counter > kWalkStateCap)
    fail(Err::InternalSearchFailure, "walk search exceeded the state cap");
}

// Shortest nonlazy string from m back to m, if any. State-simple search is
// enough: cutting out a repeated (vertex, entry-letter) segment keeps the
// endpoints and shortens the walk.
std::optional<StringWord> nonlazy_return_to_m(const GentleQuiver& q, int m) {
  struct Frame {
    StringWord walk;
    std::set<std::pair<int, std::pair<int, int>>> states;
  };
  std::vector<Frame> layer = {{StringWord::lazy(m), {}}};
  std::optional<StringWord> best;
  size_t expanded = 0;
  while (!layer.empty() && !best) {
    std::vector<Frame> next_layer;
    for (const Frame& fr : layer) {
      for (Letter next : extensions_at_target(q, fr.walk)) {
        bump(&expanded);
        StringWord longer = fr.walk;
        longer.lazy_at = -1;
        longer.letters.push_back(next);
        int to = letter_end(q, next);
        if (to == m) {
          if (!best || word_less(q, longer, *best)) best = longer;
          continue;
        }
        auto state = std::make_pair(to, std::make_pair(next.arrow, int(next.inv)));
        if (fr.states.count(state)) continue;
        Frame ext;
        ext.walk = std::move(longer);
        ext.states = fr.states;
        ext.states.insert(state);
        next_layer.push_back(std::move(ext));
      }
    }
    layer = std::move(next_layer);
  }
  return best;
}

std::optional<StringWord> vertex_repeating_string(const GentleQuiver& q,
                                                  const std::vector<StringWord>& sigma) {
  for (const StringWord& w : sigma)
    for (int v : vertex_support(q, w))
      if (count_visits(q, w, v) > 1) return w;
  return std::nullopt;
}

struct IViolation {
  StringWord rho, nu;
  int arrow;
};

std::optional<IViolation> find_i_violation(const GentleQuiver& q,
                                           const std::vector<StringWord>& sigma) {
  std::optional<IViolation> fallback;
  for (const StringWord& rho : sigma)
    for (const StringWord& nu : sigma) {
      std::vector<int> s1 = arrow_support(q, rho), s2 = arrow_support(q, nu);
      std::vector<int> v1 = vertex_support(q, rho), v2 = vertex_support(q, nu);
      for (int g = 0; g < q.arrow_count(); ++g) {
        if (std::binary_search(s1.begin(), s1.end(), g)) continue;
        if (std::binary_search(s2.begin(), s2.end(), g)) continue;
        const Arrow& arr = q.arrow(g);
        if (!std::binary_search(v1.begin(), v1.end(), arr.source)) continue;
        if (!std::binary_search(v2.begin(), v2.end(), arr.target)) continue;
        IViolation viol{rho, nu, g};
        if (arr.source != arr.target) return viol;
        if (!fallback) fallback = viol;
      }
    }
  return fallback;
}

std::string word_str(const GentleQuiver& q, const StringWord& w) {
  return "'" + string_literal(q, w) + "'";
}

}  // namespace

ConditionFlags condition_flags(const GentleQuiver& q, int m) {
  ConditionFlags flags;
  StringsThrough st = strings_through(q, m);

  flags.iia = condition_iia(q, m);
  if (flags.iia) {
    flags.iia_detail = "at most one arrow out of and into the vertex, composite in I if both";
  } else {
    const auto& out = q.arrows_out(m);
    const auto& in = q.arrows_in(m);
    if (out.size() > 1)
      flags.iia_detail = "two outgoing arrows " + q.arrow(out[0]).label + ", " + q.arrow(out[1]).label;
    else if (in.size() > 1)
      flags.iia_detail = "two incoming arrows " + q.arrow(in[0]).label + ", " + q.arrow(in[1]).label;
    else
      flags.iia_detail = "incident pair " + q.arrow(in[0]).label + ", " + q.arrow(out[0]).label +
                         " is not in I";
  }

  if (!st.complete) {
    std::string w = word_str(q, *st.infinite_witness);
    flags.o = false;
    flags.o_detail = "string " + w + " through the vertex revisits a vertex";
    flags.i = false;
    flags.i_detail = "fails through the chain: (o) fails via " + w;
    flags.istar = false;
    flags.istar_detail = "fails through the chain: (o) fails via " + w;
    auto ret = nonlazy_return_to_m(q, m);
    flags.minuscule = !ret.has_value();
    flags.minuscule_detail = flags.minuscule
                                 ? "no string passes through the vertex twice"
                                 : "string " + word_str(q, *ret) + " passes through it twice";
    flags.iib = false;
    flags.iib_detail = "not applicable: (o) fails, maximal strings not enumerated";
    return flags;
  }

  const std::vector<StringWord>& sigma = st.strings;

  auto min_witness = [&]() -> std::optional<StringWord> {
    for (const StringWord& w : sigma)
      if (count_visits(q, w, m) > 1) return w;
    return std::nullopt;
  }();
  flags.minuscule = !min_witness.has_value();
  flags.minuscule_detail = flags.minuscule
                               ? "every string passes through the vertex at most once"
                               : "string " + word_str(q, *min_witness) + " passes through it twice";

  auto o_witness = vertex_repeating_string(q, sigma);
  flags.o = !o_witness.has_value();
  flags.o_detail = flags.o ? "no string through the vertex revisits any vertex"
                           : "string " + word_str(q, *o_witness) + " revisits a vertex";

  if (!flags.o) {
    flags.i = false;
    flags.i_detail = "fails through the chain: (o) fails";
    flags.istar = false;
    flags.istar_detail = "fails through the chain: (o) fails";
    flags.iib = false;
    flags.iib_detail = "not applicable: (o) fails, maximal strings not enumerated";
    return flags;
  }

  // (i*): strings from m are determined by their endpoints.
  {
    StartWalks walks = strings_from(q, m);
    std::map<int, StringWord> by_end;
    flags.istar = true;
    for (const StringWord& w : walks.walks) {
      auto [it, inserted] = by_end.emplace(word_target(q, w), w);
      if (!inserted) {
        flags.istar = false;
        flags.istar_detail = "strings " + word_str(q, it->second) + " and " + word_str(q, w) +
                             " share the endpoint " + q.vertex_name(word_target(q, w));
        break;
      }
    }
    if (flags.istar) flags.istar_detail = "strings from the vertex are determined by endpoints";
  }

  auto violation = find_i_violation(q, sigma);
  flags.i = !violation.has_value();
  if (flags.i) {
    flags.i_detail = "no arrow joins the supports of two strings through the vertex";
  } else {
    flags.i_detail = "arrow " + q.arrow(violation->arrow).label + " joins " +
                     word_str(q, violation->rho) + " to " + word_str(q, violation->nu);
  }

  int maximal = 0;
  std::string names;
  for (const StringWord& w : sigma)
    if (is_maximal_string(q, w)) {
      ++maximal;
      names += (names.empty() ? "" : ", ") + string_literal(q, w);
    }
  flags.iib = maximal <= 1;
  flags.iib_detail = std::to_string(maximal) + " maximal string(s) through the vertex: " + names;
  return flags;
}

AnalysisReport decide(const GentleQuiver& q, int m) {
  if (m < 0 || m >= q.vertex_count()) fail(Err::Semantic, "unknown vertex");
  AnalysisReport report;
  report.m = m;
  report.flags = condition_flags(q, m);
  report.jr = report.flags.istar && (report.flags.iia || report.flags.iib);
  report.cjr = report.flags.i && (report.flags.iia || report.flags.iib);

  StringsThrough st = strings_through(q, m);
  report.sigma_complete = st.complete;
  if (st.complete) report.sigma = st.strings;

  if (report.flags.i && report.flags.iib && st.complete) {
    // Support of the unique maximal string through m is a type-A subquiver.
    for (const StringWord& w : st.strings)
      if (is_maximal_string(q, w)) {
        AnSubquiver r;
        r.vertices = vertex_support(q, w);
        r.arrows = arrow_support(q, w);
        report.an_reduction = r;
        break;
      }
  }
  return report;
}

namespace {

StringWord from_letters(std::vector<Letter> letters, int lazy_vertex) {
  StringWord w;
  if (letters.empty()) {
    w.lazy_at = lazy_vertex;
  } else {
    w.letters = std::move(letters);
  }
  return w;
}

std::vector<Letter> slice(const std::vector<Letter>& v, size_t from, size_t to) {
  return std::vector<Letter>(v.begin() + long(from), v.begin() + long(to));
}

std::vector<Letter> cat(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// All vertex-simple walks from m (finite), sorted by length then word order.
std::vector<StringWord> vertex_simple_walks(const GentleQuiver& q, int m) {
  std::vector<StringWord> out;
  struct Frame {
    StringWord walk;
    std::set<int> visited;
  };
  std::vector<Frame> stack = {{StringWord::lazy(m), {m}}};
  size_t expanded = 0;
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    out.push_back(fr.walk);
    for (Letter next : extensions_at_target(q, fr.walk)) {
      bump(&expanded);
      int to = letter_end(q, next);
      if (fr.visited.count(to)) continue;
      Frame ext;
      ext.walk = fr.walk;
      ext.walk.lazy_at = -1;
      ext.walk.letters.push_back(next);
      ext.visited = fr.visited;
      ext.visited.insert(to);
      stack.push_back(std::move(ext));
    }
  }
  std::sort(out.begin(), out.end(), [&](const StringWord& a, const StringWord& b) {
    return word_less(q, a, b);
  });
  return out;
}

struct CandidatePair {
  std::vector<StringWord> x_words, y_words;
  std::string construction;
};

// Witness for a non-minuscule vertex: a walk returning to m yields a string
// phi^-1 Gamma phi with Gamma a cycle off the end of phi.
std::vector<CandidatePair> candidates_nonminuscule(const GentleQuiver& q, int m) {
  std::vector<CandidatePair> cands;
  auto chi = nonlazy_return_to_m(q, m);
  if (!chi) return cands;
  std::vector<int> vseq = vertex_seq(q, *chi);
  size_t p = 0;
  size_t j = 0;
  std::set<int> seen;
  std::map<int, size_t> first_at;
  for (size_t idx = 0; idx < vseq.size(); ++idx) {
    auto it = first_at.find(vseq[idx]);
    if (it != first_at.end()) {
      p = idx;
      j = it->second;
      break;
    }
    first_at[vseq[idx]] = idx;
  }
  std::vector<Letter> phi = slice(chi->letters, 0, j);
  std::vector<Letter> gamma = slice(chi->letters, j, p);
  std::vector<Letter> phi_inv = inverse(from_letters(phi, m)).letters;
  if (gamma.size() == 1) {
    // X = M(phi)^2, Y = M(phi^-1 Gamma phi)
    CandidatePair c;
    StringWord phi_w = from_letters(phi, m);
    c.x_words = {phi_w, phi_w};
    c.y_words = {from_letters(cat(cat(phi, gamma), phi_inv), m)};
    c.construction = "loop cycle at the end of " + word_str(q, phi_w);
    cands.push_back(std::move(c));
  } else {
    CandidatePair c;
    c.x_words = {from_letters(cat(slice(gamma, 1, gamma.size()), phi_inv), -1)};
    c.y_words = {from_letters(cat(phi, slice(gamma, 0, gamma.size() - 1)), m)};
    c.construction = "cycle split off " + word_str(q, from_letters(phi, m));
    cands.push_back(std::move(c));
  }
  return cands;
}

// Minuscule vertex where some string through m revisits another vertex.
std::vector<CandidatePair> candidates_not_o(const GentleQuiver& q, int m) {
  std::vector<CandidatePair> cands;
  std::vector<StringWord> simple = vertex_simple_walks(q, m);

  // Configuration (alpha): two walks from m to the same q, glueable at m,
  // blocked at q by a relation.
  for (const StringWord& nu : simple) {
    if (nu.is_lazy()) continue;
    for (const StringWord& mu : simple) {
      if (mu.is_lazy() || mu == nu) continue;
      if (word_target(q, nu) != word_target(q, mu)) continue;
      if (word_target(q, nu) == m) continue;
      // joint support only {m, q}
      std::vector<int> sn = vertex_support(q, nu), sm = vertex_support(q, mu);
      std::vector<int> inter;
      std::set_intersection(sn.begin(), sn.end(), sm.begin(), sm.end(),
                            std::back_inserter(inter));
      if (inter != std::vector<int>{std::min(m, word_target(q, nu)),
                                    std::max(m, word_target(q, nu))})
        continue;
      if (!valid_pair(q, flip(nu.letters.front()), mu.letters.front())) continue;  // glue at m
      if (valid_pair(q, mu.letters.back(), flip(nu.letters.back())))
        continue;  // the ends must clash at q
      std::vector<Letter> nu_inv = inverse(nu).letters;
      std::vector<Letter> nu_minus_inv =
          inverse(from_letters(slice(nu.letters, 0, nu.letters.size() - 1), m)).letters;
      CandidatePair c;
      c.x_words = {from_letters(cat(nu_inv, slice(mu.letters, 0, mu.letters.size() - 1)), -1)};
      c.y_words = {from_letters(cat(nu_minus_inv, mu.letters), -1)};
      c.construction = "two walks " + word_str(q, mu) + ", " + word_str(q, nu) +
                       " meeting again at " + q.vertex_name(word_target(q, nu));
      cands.push_back(std::move(c));
    }
  }

  // Configuration (beta): a walk phi from m to q and a band around q.
  for (const StringWord& phi : simple) {
    if (phi.is_lazy()) continue;
    int qv = word_target(q, phi);
    // cyclic vertex-simple (except qv) walks at qv
    struct Frame {
      StringWord walk;
      std::set<int> visited;
    };
    std::vector<StringWord> cycles;
    std::vector<Frame> stack = {{StringWord::lazy(qv), {qv}}};
    size_t expanded = 0;
    while (!stack.empty()) {
      Frame fr = std::move(stack.back());
      stack.pop_back();
      for (Letter next : extensions_at_target(q, fr.walk)) {
        bump(&expanded);
        int to = letter_end(q, next);
        StringWord longer = fr.walk;
        longer.lazy_at = -1;
        longer.letters.push_back(next);
        if (to == qv) {
          cycles.push_back(longer);
          continue;
        }
        if (fr.visited.count(to)) continue;
        Frame ext;
        ext.walk = std::move(longer);
        ext.visited = fr.visited;
        ext.visited.insert(to);
        stack.push_back(std::move(ext));
      }
    }
    std::sort(cycles.begin(), cycles.end(), [&](const StringWord& a, const StringWord& b) {
      return word_less(q, a, b);
    });
    for (const StringWord& gamma : cycles) {
      if (!is_band(q, gamma)) continue;
      if (!valid_pair(q, phi.letters.back(), gamma.letters.front())) continue;  // Gamma phi
      if (valid_pair(q, gamma.letters.back(), flip(phi.letters.back())))
        continue;  // ends must clash at q
      std::vector<int> sp = vertex_support(q, phi), sg = vertex_support(q, gamma);
      std::vector<int> inter;
      std::set_intersection(sp.begin(), sp.end(), sg.begin(), sg.end(),
                            std::back_inserter(inter));
      if (inter != std::vector<int>{qv}) continue;
      std::vector<Letter> gprefix = slice(gamma.letters, 0, gamma.letters.size() - 1);
      CandidatePair c;
      StringWord small = from_letters(cat(phi.letters, gprefix), m);
      c.x_words = {small, small};
      c.y_words = {from_letters(slice(phi.letters, 0, phi.letters.size() - 1), m),
                   from_letters(cat(cat(phi.letters, gamma.letters), gprefix), m)};
      c.construction = "band " + word_str(q, gamma) + " off the end of " + word_str(q, phi);
      cands.push_back(std::move(c));
      // variant with the band walked the other way
      StringWord ginv = inverse(gamma);
      if (valid_pair(q, phi.letters.back(), ginv.letters.front()) &&
          !valid_pair(q, ginv.letters.back(), flip(phi.letters.back()))) {
        std::vector<Letter> gprefix2 = slice(ginv.letters, 0, ginv.letters.size() - 1);
        CandidatePair c2;
        StringWord small2 = from_letters(cat(phi.letters, gprefix2), m);
        c2.x_words = {small2, small2};
        c2.y_words = {from_letters(slice(phi.letters, 0, phi.letters.size() - 1), m),
                      from_letters(cat(cat(phi.letters, ginv.letters), gprefix2), m)};
        c2.construction = "inverted band " + word_str(q, gamma) + " off the end of " +
                          word_str(q, phi);
        cands.push_back(std::move(c2));
      }
    }
  }
  return cands;
}

// (o) holds, (i*) fails: two strings from m with equal endpoints split as a
// common prefix phi and clashing tails nu, mu.
std::vector<CandidatePair> candidates_not_istar(const GentleQuiver& q, int m) {
  std::vector<CandidatePair> cands;
  StartWalks walks = strings_from(q, m);
  if (!walks.complete) return cands;
  std::vector<StringWord> sorted = walks.walks;  // already sorted by length then word order
  for (size_t a = 0; a < sorted.size(); ++a)
    for (size_t b = 0; b < sorted.size(); ++b) {
      if (a == b) continue;
      const StringWord& chi = sorted[a];
      const StringWord& psi = sorted[b];
      if (word_target(q, chi) != word_target(q, psi)) continue;
      size_t j = 0;
      while (j < chi.letters.size() && j < psi.letters.size() &&
             chi.letters[j] == psi.letters[j])
        ++j;
      std::vector<Letter> phi = slice(chi.letters, 0, j);
      std::vector<Letter> nu = slice(chi.letters, j, chi.letters.size());
      std::vector<Letter> mu = slice(psi.letters, j, psi.letters.size());
      if (nu.empty() || mu.empty()) continue;
      // orient so that nu starts with an inverse letter
      if (!nu.front().inv) std::swap(nu, mu);
      if (!nu.front().inv || mu.front().inv) continue;
      for (int variant = 0; variant < 2; ++variant) {
        const std::vector<Letter>& first = variant == 0 ? nu : mu;
        const std::vector<Letter>& second = variant == 0 ? mu : nu;
        CandidatePair c;
        c.x_words = {from_letters(cat(phi, slice(first, 0, first.size() - 1)), m),
                     from_letters(cat(phi, second), m)};
        c.y_words = {from_letters(cat(phi, first), m),
                     from_letters(cat(phi, slice(second, 0, second.size() - 1)), m)};
        c.construction = "tails " + word_str(q, from_letters(nu, -1)) + ", " +
                         word_str(q, from_letters(mu, -1)) + " after prefix " +
                         word_str(q, from_letters(phi, m));
        cands.push_back(std::move(c));
      }
      if (!cands.empty()) return cands;  // minimal pair first
    }
  return cands;
}

// (o) holds, neither incidence condition: a string nu from m with arrows
// delta, gamma in relation at its end and an extra letter into m.
std::vector<CandidatePair> candidates_not_ii(const GentleQuiver& q, int m) {
  std::vector<CandidatePair> cands;
  StartWalks walks = strings_from(q, m);
  if (!walks.complete) return cands;
  for (const StringWord& nu : walks.walks) {
    int t = word_target(q, nu);
    for (int delta : q.arrows_out(t)) {
      Letter dlet{delta, false};
      if (!nu.is_lazy() && !valid_pair(q, nu.letters.back(), dlet)) continue;
      for (int gamma : q.arrows_in(t)) {
        if (gamma == delta) continue;
        Letter glet{gamma, true};
        if (!nu.is_lazy() && !valid_pair(q, nu.letters.back(), glet)) continue;
        if (!q.in_ideal(gamma, delta)) continue;  // traverse gamma then delta lies in I
        // a letter ending at m, prependable to nu
        std::vector<Letter> entries;
        for (int a : q.arrows_in(m)) entries.push_back({a, false});
        for (int a : q.arrows_out(m)) entries.push_back({a, true});
        for (Letter x : entries) {
          if (x.arrow == gamma || x.arrow == delta) continue;
          if (!nu.is_lazy() && !valid_pair(q, x, nu.letters.front())) continue;
          if (nu.is_lazy() && letter_end(q, x) != m) continue;
          std::vector<Letter> nu_l = nu.letters;
          CandidatePair c;
          c.x_words = {from_letters(cat(nu_l, {dlet}), -1),
                       from_letters(cat({x}, nu_l), -1),
                       from_letters(cat(cat({x}, nu_l), {glet}), -1),
                       from_letters(cat(nu_l, {glet}), -1)};
          c.y_words = {from_letters(cat(cat({x}, nu_l), {dlet}), -1),
                       nu,
                       from_letters(cat(cat({x}, nu_l), {glet}), -1),
                       from_letters(cat(nu_l, {glet}), -1)};
          c.construction = "relation fork at the end of " + word_str(q, nu) + " with entry " +
                           q.arrow(x.arrow).label;
          cands.push_back(std::move(c));
        }
      }
    }
  }
  return cands;
}

Representation build_sum(const GentleQuiver& q, Fq field, const std::vector<StringWord>& words) {
  std::vector<Representation> reps;
  for (const StringWord& w : words) reps.push_back(string_module(q, field, w));
  return direct_sum(reps);
}

bool words_all_valid(const GentleQuiver& q, const std::vector<StringWord>& words) {
  for (const StringWord& w : words)
    if (!is_valid_string(q, w).ok) return false;
  return true;
}

std::optional<Witness> try_pair(const GentleQuiver& q, int m, const CandidatePair& cand,
                                Fq field, const OracleOptions& opts) {
  if (!words_all_valid(q, cand.x_words) || !words_all_valid(q, cand.y_words)) return std::nullopt;
  Representation x = build_sum(q, field, cand.x_words);
  Representation y = build_sum(q, field, cand.y_words);
  if (decompose_ledgered(x, y).verdict != IsoVerdict::NotIso) return std::nullopt;
  try {
    GenjfResult gx = genjf(x, std::nullopt, opts);
    GenjfResult gy = genjf(y, std::nullopt, opts);
    if (!(gx.jf == gy.jf)) return std::nullopt;
  } catch (const GentleError&) {
    return std::nullopt;
  }
  Witness w;
  w.kind = Witness::Kind::JrPair;
  w.m = m;
  w.x = std::move(x);
  w.y = std::move(y);
  w.construction = cand.construction;
  return w;
}

// Nilpotent matrix in Jordan form for the given partition, lower shift in
// each block; chain heads are the first vector of each block.
FqMat jordan_nilpotent(Fq field, const Partition& p) {
  int n = p.size();
  FqMat m(field, size_t(n), size_t(n));
  int off = 0;
  for (int part : p.parts) {
    for (int i = 0; i + 1 < part; ++i)
      m.at(size_t(off + i + 1), size_t(off + i)) = field.one();
    off += part;
  }
  return m;
}

Witness build_cjr_witness(const GentleQuiver& q, int m, const IViolation& viol, Fq field,
                          const OracleOptions& opts) {
  Representation x =
      direct_sum({string_module(q, field, viol.rho), string_module(q, field, viol.nu)});
  std::optional<int> hint;
  if (structural_applicable(x, m)) hint = m;
  GenjfResult gx = genjf(x, hint, opts);
  const JordanFormData& lambda = gx.jf;

  int g = viol.arrow;
  int sv = q.arrow(g).source, tv = q.arrow(g).target;

  Representation w = zero_representation(q, field);
  w.ledger.reset();
  for (int v = 0; v < q.vertex_count(); ++v) {
    w.dims[size_t(v)] = lambda.at[size_t(v)].size();
    w.labels[size_t(v)].clear();
    for (int i = 0; i < w.dims[size_t(v)]; ++i) w.labels[size_t(v)].push_back({0, i, -1});
  }
  for (int a = 0; a < q.arrow_count(); ++a)
    w.maps[size_t(a)] = FqMat(field, size_t(w.dims[size_t(q.arrow(a).target)]),
                              size_t(w.dims[size_t(q.arrow(a).source)]));

  Endo n;
  for (int v = 0; v < q.vertex_count(); ++v)
    n.comp.push_back(jordan_nilpotent(field, lambda.at[size_t(v)]));

  FqMat& wg = w.maps[size_t(g)];
  const Partition& ps = lambda.at[size_t(sv)];
  const Partition& pt = lambda.at[size_t(tv)];
  if (ps.empty() || pt.empty())
    fail(Err::InternalSearchFailure, "offending arrow endpoints carry no Jordan data");
  if (sv != tv) {
    int eta = ps.parts[0], k = pt.parts[0];
    // chains: source rows 0..eta-1, target rows 0..k-1
    if (k >= eta) {
      for (int i = 0; i < eta; ++i) wg.at(size_t(k - eta + i), size_t(i)) = field.one();
    } else {
      for (int i = 0; i < k; ++i) wg.at(size_t(i), size_t(i)) = field.one();
    }
  } else {
    bool square_in_ideal = q.in_ideal(g, g);
    if (ps.parts.size() >= 2) {
      int eta1 = ps.parts[0], eta2 = ps.parts[1];
      int head2 = ps.parts[0];  // row offset of the second chain
      int j0 = std::max(0, eta2 - eta1);
      for (int i = 0; i + j0 < eta2 && i < eta1; ++i)
        wg.at(size_t(head2 + j0 + i), size_t(i)) = field.one();
    } else {
      int nblock = ps.parts[0];
      if (nblock < 2) fail(Err::InternalSearchFailure, "loop block too small for a nonzero map");
      int power = square_in_ideal ? (nblock + 1) / 2 : 1;
      FqMat shifted = n.comp[size_t(sv)].power(uint64_t(power));
      wg = shifted;
    }
  }

  Witness witness;
  witness.kind = Witness::Kind::CjrRep;
  witness.m = m;
  witness.x = std::move(x);
  witness.y = std::move(w);
  witness.w_endo = std::move(n);
  witness.offending_arrow = g;
  witness.construction = "arrow " + q.arrow(g).label + " joining " + word_str(q, viol.rho) +
                         " to " + word_str(q, viol.nu);
  return witness;
}

// Last resort: bounded search over small pairs of string-module sums through
// m with equal oracle Jordan data.
std::optional<Witness> fallback_pair_search(const GentleQuiver& q, int m, Fq field,
                                            const OracleOptions& opts) {
  StringsThrough st = strings_through(q, m, 8);
  std::vector<StringWord> pool = st.strings;
  if (pool.size() > 12) pool.resize(12);
  std::vector<std::vector<StringWord>> sums;
  for (size_t a = 0; a < pool.size(); ++a) {
    sums.push_back({pool[a]});
    for (size_t b = a; b < pool.size(); ++b) {
      sums.push_back({pool[a], pool[b]});
      for (size_t c = b; c < pool.size(); ++c) sums.push_back({pool[a], pool[b], pool[c]});
    }
  }
  auto dimvec = [&](const std::vector<StringWord>& words) {
    std::vector<int> d(size_t(q.vertex_count()), 0);
    for (const StringWord& w : words)
      for (int v : vertex_seq(q, w)) d[size_t(v)]++;
    return d;
  };
  auto end_dim = [&](const std::vector<StringWord>& words) {
    long total = 0;
    for (const StringWord& a : words)
      for (const StringWord& b : words) total += hom_dim_combinatorial(q, a, b);
    return total;
  };
  for (size_t a = 0; a < sums.size(); ++a)
    for (size_t b = a + 1; b < sums.size(); ++b) {
      if (dimvec(sums[a]) != dimvec(sums[b])) continue;
      if (end_dim(sums[a]) > 14 || end_dim(sums[b]) > 14) continue;
      CandidatePair cand;
      cand.x_words = sums[a];
      cand.y_words = sums[b];
      cand.construction = "bounded search over sums of strings through the vertex";
      if (auto w = try_pair(q, m, cand, field, opts)) return w;
    }
  return std::nullopt;
}

}  // namespace

Witness find_witness(const GentleQuiver& q, int m, const AnalysisReport& report, Fq field,
                     const OracleOptions& opts) {
  std::vector<CandidatePair> cands;
  bool want_pair = !report.jr;
  if (want_pair) {
    if (!report.flags.minuscule)
      cands = candidates_nonminuscule(q, m);
    else if (!report.flags.o)
      cands = candidates_not_o(q, m);
    else if (!report.flags.istar)
      cands = candidates_not_istar(q, m);
    else
      cands = candidates_not_ii(q, m);
    for (const CandidatePair& cand : cands)
      if (auto w = try_pair(q, m, cand, field, opts)) return *w;
    if (auto w = fallback_pair_search(q, m, field, opts)) return *w;
    fail(Err::InternalSearchFailure, "no verifiable pair found at vertex " + q.vertex_name(m));
  }
  if (!report.cjr) {
    if (!report.sigma_complete)
      fail(Err::InternalSearchFailure, "strings through the vertex not enumerable");
    auto viol = find_i_violation(q, report.sigma);
    if (!viol) fail(Err::InternalSearchFailure, "no separating-arrow violation found");
    return build_cjr_witness(q, m, *viol, field, opts);
  }
  fail(Err::Semantic, "witness requested but the subcategory is canonically recoverable");
}

Transcript verify_witness(const GentleQuiver& q, const Witness& w, const OracleOptions& opts) {
  Transcript t;
  if (w.kind == Witness::Kind::JrPair) {
    IsoResult iso = decompose_ledgered(w.x, w.y);
    t.add("modules-not-isomorphic", iso.verdict == IsoVerdict::NotIso, iso.detail);
    t.add("x-relations", check_relations(w.x));
    t.add("y-relations", check_relations(w.y));
    try {
      GenjfResult gx = genjf(w.x, std::nullopt, opts);
      GenjfResult gy = genjf(w.y, std::nullopt, opts);
      t.engine_x = engine_name(gx.engine) + "/" + exactness_name(gx.exactness);
      t.engine_y = engine_name(gy.engine) + "/" + exactness_name(gy.exactness);
      t.shared_jf = jf_to_string(q, gx.jf);
      t.add("generic-jordan-data-equal", gx.jf == gy.jf,
            jf_to_string(q, gx.jf) + " vs " + jf_to_string(q, gy.jf));
    } catch (const GentleError& e) {
      t.add("generic-jordan-data-equal", false, e.what());
    }
    return t;
  }
  // CjrRep
  const Representation& x = w.x;
  const Representation& wrep = w.y;
  t.add("w-relations", check_relations(wrep));
  if (!w.w_endo) {
    t.add("w-endomorphism-present", false, "certificate endomorphism missing");
    return t;
  }
  t.add("w-endomorphism-commutes", commutes_with_arrows(wrep, *w.w_endo));
  t.add("w-endomorphism-nilpotent", is_nilpotent_endo(wrep, *w.w_endo));
  try {
    std::optional<int> hint;
    if (structural_applicable(x, w.m)) hint = w.m;
    GenjfResult gx = genjf(x, hint, opts);
    t.engine_x = engine_name(gx.engine) + "/" + exactness_name(gx.exactness);
    t.shared_jf = jf_to_string(q, gx.jf);
    JordanFormData jn = jf_of_endo(wrep, *w.w_endo);
    t.add("w-jordan-data-matches-genjf-x", jn == gx.jf,
          jf_to_string(q, jn) + " vs " + jf_to_string(q, gx.jf));
  } catch (const GentleError& e) {
    t.add("w-jordan-data-matches-genjf-x", false, e.what());
  }
  if (w.offending_arrow >= 0) {
    t.add("x-offending-map-zero", x.maps[size_t(w.offending_arrow)].is_zero());
    t.add("w-offending-map-nonzero", !wrep.maps[size_t(w.offending_arrow)].is_zero());
    bool rank_differs = x.maps[size_t(w.offending_arrow)].rank() !=
                        wrep.maps[size_t(w.offending_arrow)].rank();
    t.add("w-not-isomorphic-to-x", rank_differs, "rank differs on the offending arrow");
  } else {
    t.add("offending-arrow-present", false);
  }
  return t;
}

RecoverOutcome recover(const GentleQuiver& q, int m, const JordanFormData& target, Fq field,
                       const OracleOptions& opts) {
  AnalysisReport report = decide(q, m);
  if (!report.jr)
    return {RecoverOutcome::Status::NotJordanRecoverable, std::nullopt,
            "the subcategory at " + q.vertex_name(m) + " is not Jordan recoverable"};
  if (target.at.size() != size_t(q.vertex_count()))
    fail(Err::SizeMismatch, "Jordan data does not match the vertex set");

  if (report.flags.iia) {
    for (int v = 0; v < q.vertex_count(); ++v)
      if (target.at[size_t(v)].parts.size() > 1)
        return {RecoverOutcome::Status::NoSolution, std::nullopt,
                "Jordan data at " + q.vertex_name(v) +
                    " has several blocks; every module here has single-block data"};
    StartWalks walks = strings_from(q, m);
    std::vector<int> want(size_t(q.vertex_count()), 0);
    for (int v = 0; v < q.vertex_count(); ++v) want[size_t(v)] = target.at[size_t(v)].size();
    std::set<int> reachable;
    for (const StringWord& w : walks.walks) reachable.insert(word_target(q, w));
    for (int v = 0; v < q.vertex_count(); ++v)
      if (!reachable.count(v) && want[size_t(v)] > 0)
        return {RecoverOutcome::Status::NoSolution, std::nullopt,
                "vertex " + q.vertex_name(v) + " is not reached from " + q.vertex_name(m)};
    std::vector<Representation> summands;
    std::string expr;
    for (const StringWord& w : walks.walks) {
      long mult = want[size_t(word_target(q, w))];
      for (Letter ext : extensions_at_target(q, w)) {
        StringWord longer = w;
        longer.lazy_at = -1;
        longer.letters.push_back(ext);
        mult -= want[size_t(word_target(q, longer))];
      }
      if (mult < 0)
        return {RecoverOutcome::Status::NoSolution, std::nullopt,
                "the multiplicity of " + string_literal(q, w) + " would be negative"};
      for (long i = 0; i < mult; ++i) summands.push_back(string_module(q, field, w));
    }
    Representation x = summands.empty() ? zero_representation(q, field) : direct_sum(summands);
    if (dim_vector(x) != want)
      return {RecoverOutcome::Status::NoSolution, std::nullopt, "dimension vector mismatch"};
    return {RecoverOutcome::Status::Ok, std::move(x), ""};
  }

  // (ii)(b) branch: search multisets of strings through m by oracle Jordan data.
  std::vector<int> want(size_t(q.vertex_count()), 0);
  for (int v = 0; v < q.vertex_count(); ++v) want[size_t(v)] = target.at[size_t(v)].size();
  const std::vector<StringWord>& sigma = report.sigma;
  std::vector<std::vector<int>> dimvecs;
  for (const StringWord& w : sigma) {
    std::vector<int> d(size_t(q.vertex_count()), 0);
    for (int v : vertex_seq(q, w)) d[size_t(v)]++;
    dimvecs.push_back(std::move(d));
  }
  std::vector<Representation> found;
  std::vector<int> mult(sigma.size(), 0);
  std::vector<int> remaining = want;
  auto total = [](const std::vector<int>& v) {
    int t = 0;
    for (int x : v) t += x;
    return t;
  };
  std::function<void(size_t)> search = [&](size_t idx) {
    if (found.size() > 1) return;
    if (total(remaining) == 0) {
      std::vector<Representation> summands;
      for (size_t s = 0; s < sigma.size(); ++s)
        for (int i = 0; i < mult[s]; ++i) summands.push_back(string_module(q, field, sigma[s]));
      if (summands.empty()) return;
      Representation x = direct_sum(summands);
      try {
        GenjfResult g = genjf(x, std::nullopt, opts);
        if (g.jf == target) found.push_back(std::move(x));
      } catch (const GentleError&) {
      }
      return;
    }
    if (idx >= sigma.size()) return;
    int cap = INT32_MAX;
    for (int v = 0; v < q.vertex_count(); ++v)
      if (dimvecs[idx][size_t(v)] > 0)
        cap = std::min(cap, remaining[size_t(v)] / dimvecs[idx][size_t(v)]);
    for (int c = 0; c <= cap; ++c) {
      if (c > 0)
        for (int v = 0; v < q.vertex_count(); ++v) remaining[size_t(v)] -= dimvecs[idx][size_t(v)];
      mult[idx] = c;
      search(idx + 1);
    }
    for (int v = 0; v < q.vertex_count(); ++v)
      remaining[size_t(v)] += cap * dimvecs[idx][size_t(v)];
    mult[idx] = 0;
  };
  search(0);
  if (found.empty())
    return {RecoverOutcome::Status::NoSolution, std::nullopt,
            "no module through " + q.vertex_name(m) + " attains the given Jordan data"};
  if (found.size() > 1)
    return {RecoverOutcome::Status::AmbiguityBug, std::nullopt,
            "several modules attain the Jordan data; this contradicts recoverability"};
  return {RecoverOutcome::Status::Ok, std::move(found.front()), ""};
}

GentleQuiver random_gentle_quiver(uint64_t seed, const RandomQuiverOptions& opts) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    int n = 1 + int(rng() % uint64_t(opts.max_vertices));
    QuiverSpec spec;
    spec.name = "r" + std::to_string(seed);
    for (int v = 0; v < n; ++v) spec.vertices.push_back(std::to_string(v + 1));
    int arrow_target = int(rng() % uint64_t(opts.max_arrows + 1));
    std::vector<int> indeg(size_t(n), 0), outdeg(size_t(n), 0);
    for (int a = 0; a < arrow_target; ++a) {
      int s = int(rng() % uint64_t(n));
      int t = int(rng() % uint64_t(n));
      if (!opts.allow_loops && s == t) continue;
      if (outdeg[size_t(s)] >= 2 || indeg[size_t(t)] >= 2) continue;
      outdeg[size_t(s)]++;
      indeg[size_t(t)]++;
      std::string label(1, char('a' + spec.arrows.size()));
      spec.arrows.push_back({label, spec.vertices[size_t(s)], spec.vertices[size_t(t)]});
    }
    // relations per vertex: with two continuations (or two predecessors) the
    // ideal membership is forced to a perfect matching
    auto in = std::vector<std::vector<int>>(size_t(n));
    auto out = std::vector<std::vector<int>>(size_t(n));
    for (size_t a = 0; a < spec.arrows.size(); ++a) {
      int s = std::stoi(spec.arrows[a].source) - 1;
      int t = std::stoi(spec.arrows[a].target) - 1;
      out[size_t(s)].push_back(int(a));
      in[size_t(t)].push_back(int(a));
    }
    for (int v = 0; v < n; ++v) {
      const auto& iv = in[size_t(v)];
      const auto& ov = out[size_t(v)];
      auto add_rel = [&](int u, int w) {
        spec.relations.push_back({spec.arrows[size_t(u)].label, spec.arrows[size_t(w)].label});
      };
      if (iv.size() == 2 && ov.size() == 2) {
        if (rng() & 1) {
          add_rel(iv[0], ov[0]);
          add_rel(iv[1], ov[1]);
        } else {
          add_rel(iv[0], ov[1]);
          add_rel(iv[1], ov[0]);
        }
      } else if (iv.size() == 2 && ov.size() == 1) {
        add_rel(iv[rng() & 1], ov[0]);
      } else if (iv.size() == 1 && ov.size() == 2) {
        add_rel(iv[0], ov[rng() & 1]);
      } else if (iv.size() == 1 && ov.size() == 1) {
        if (rng() & 1) add_rel(iv[0], ov[0]);
      }
    }
    ValidationReport vr = GentleQuiver::validate_gentle(spec);
    if (!vr.ok) continue;
    GentleQuiver q = GentleQuiver::from_spec(spec);
    if (!check_admissible(q).ok) continue;
    return q;
  }
  fail(Err::Internal, "random quiver generation did not converge");
}

}  // namespace gentle
