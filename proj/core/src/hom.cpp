#include "gentle/hom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gentle {

namespace {

std::vector<std::pair<int, int>> word_key(const GentleQuiver& q, const StringWord& w) {
  std::vector<std::pair<int, int>> key;
  if (w.is_lazy()) {
    key.push_back({-1 - q.vertex_rank(w.lazy_at), 0});
    return key;
  }
  for (Letter l : w.letters) key.push_back({q.label_rank(l.arrow), l.inv ? 1 : 0});
  return key;
}

}  // namespace

bool is_morphism(const Representation& x, const Representation& y, const Morphism& phi) {
  const GentleQuiver& q = *x.quiver;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    FqMat lhs = y.maps[size_t(a)] * phi.comp[size_t(arr.source)];
    FqMat rhs = phi.comp[size_t(arr.target)] * x.maps[size_t(a)];
    if (!(lhs == rhs)) return false;
  }
  return true;
}

int hom_dim_combinatorial(const GentleQuiver& q, const StringWord& rho,
                          const StringWord& rho_prime) {
  std::map<std::vector<std::pair<int, int>>, int> tops;
  for (const Occurrence& o : substring_occurrences(q, rho))
    if (o.on_top) tops[word_key(q, canonicalize(q, occurrence_word(q, rho, o)))]++;
  int count = 0;
  for (const Occurrence& o : substring_occurrences(q, rho_prime))
    if (o.at_bottom) {
      auto it = tops.find(word_key(q, canonicalize(q, occurrence_word(q, rho_prime, o))));
      if (it != tops.end()) count += it->second;
    }
  return count;
}

namespace {

template <class F>
std::vector<std::vector<typename F::Elem>> commutation_kernel(
    const GentleQuiver& q, F field, const std::vector<int>& xdims,
    const std::vector<int>& ydims, const std::vector<Mat<F>>& xmaps,
    const std::vector<Mat<F>>& ymaps, std::vector<int>* offsets_out) {
  int nv = q.vertex_count();
  std::vector<int> offset(size_t(nv) + 1, 0);
  for (int v = 0; v < nv; ++v)
    offset[size_t(v) + 1] = offset[size_t(v)] + ydims[size_t(v)] * xdims[size_t(v)];
  int unknowns = offset[size_t(nv)];
  size_t rows = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    rows += size_t(ydims[size_t(arr.target)]) * size_t(xdims[size_t(arr.source)]);
  }
  Mat<F> sys(field, rows, size_t(unknowns));
  size_t row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    int s = arr.source, t = arr.target;
    for (int r = 0; r < ydims[size_t(t)]; ++r)
      for (int c = 0; c < xdims[size_t(s)]; ++c) {
        // (Y_a phi_s)[r,c] - (phi_t X_a)[r,c] = 0
        for (int k = 0; k < ydims[size_t(s)]; ++k) {
          int col = offset[size_t(s)] + k * xdims[size_t(s)] + c;
          sys.at(row, size_t(col)) =
              field.add(sys.at(row, size_t(col)), ymaps[size_t(a)].at(size_t(r), size_t(k)));
        }
        for (int k = 0; k < xdims[size_t(t)]; ++k) {
          int col = offset[size_t(t)] + r * xdims[size_t(t)] + k;
          sys.at(row, size_t(col)) =
              field.sub(sys.at(row, size_t(col)), xmaps[size_t(a)].at(size_t(k), size_t(c)));
        }
        ++row;
      }
  }
  if (offsets_out) *offsets_out = offset;
  return sys.kernel_basis();
}

}  // namespace

std::vector<Morphism> hom_space(const Representation& x, const Representation& y) {
  if (x.quiver != y.quiver) fail(Err::Semantic, "hom_space over mixed quivers");
  if (!(x.field == y.field)) fail(Err::Semantic, "hom_space over mixed fields");
  const GentleQuiver& q = *x.quiver;
  std::vector<int> offset;
  auto kernel = commutation_kernel<Fq>(q, x.field, x.dims, y.dims, x.maps, y.maps, &offset);
  std::vector<Morphism> basis;
  for (const auto& vec : kernel) {
    Morphism phi;
    for (int v = 0; v < q.vertex_count(); ++v) {
      FqMat m(x.field, size_t(y.dims[size_t(v)]), size_t(x.dims[size_t(v)]));
      for (int r = 0; r < y.dims[size_t(v)]; ++r)
        for (int c = 0; c < x.dims[size_t(v)]; ++c)
          m.at(size_t(r), size_t(c)) = vec[size_t(offset[size_t(v)] + r * x.dims[size_t(v)] + c)];
      phi.comp.push_back(std::move(m));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

size_t hom_dim_rational(const Representation& x, const Representation& y) {
  if (x.quiver != y.quiver) fail(Err::Semantic, "hom over mixed quivers");
  const GentleQuiver& q = *x.quiver;
  Rationals field;
  auto lift = [&](const FqMat& m) {
    RatMat r(field, m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(int64_t(m.at(i, j)));
    return r;
  };
  std::vector<RatMat> xmaps, ymaps;
  for (const FqMat& m : x.maps) xmaps.push_back(lift(m));
  for (const FqMat& m : y.maps) ymaps.push_back(lift(m));
  return commutation_kernel<Rationals>(q, field, x.dims, y.dims, xmaps, ymaps, nullptr).size();
}

namespace {

std::multiset<std::string> ledger_multiset(const Representation& x) {
  std::multiset<std::string> ms;
  for (const LedgerEntry& e : *x.ledger) ms.insert(ledger_entry_expr(*x.quiver, e));
  return ms;
}

// All strings whose dimension vector fits under `bound` pointwise.
std::vector<StringWord> strings_within(const GentleQuiver& q, const std::vector<int>& bound) {
  std::vector<StringWord> result;
  std::set<std::vector<std::pair<int, int>>> seen;
  auto fits = [&](const StringWord& w) {
    std::vector<int> counts(size_t(q.vertex_count()), 0);
    for (int v : vertex_seq(q, w))
      if (++counts[size_t(v)] > bound[size_t(v)]) return false;
    return true;
  };
  std::vector<StringWord> frontier;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (bound[size_t(v)] < 1) continue;
    StringWord w = StringWord::lazy(v);
    frontier.push_back(w);
    result.push_back(w);
    seen.insert(word_key(q, w));
  }
  while (!frontier.empty()) {
    std::vector<StringWord> longer;
    for (const StringWord& w : frontier)
      for (Letter l : extensions_at_target(q, w)) {
        StringWord ext = w;
        ext.lazy_at = -1;
        ext.letters.push_back(l);
        if (!fits(ext)) continue;
        StringWord canon = canonicalize(q, ext);
        longer.push_back(ext);
        if (seen.insert(word_key(q, canon)).second) result.push_back(canon);
      }
    frontier = std::move(longer);
  }
  return result;
}

bool band_fits(const GentleQuiver& q, const std::vector<int>& bound) {
  int total = 0;
  for (int b : bound) total += b;
  for (const Band& band : enumerate_bands(q, total)) {
    bool fits = true;
    std::vector<int> counts(size_t(q.vertex_count()), 0);
    std::vector<int> vs = vertex_seq(q, band.word);
    vs.pop_back();  // first == last
    for (int v : vs)
      if (++counts[size_t(v)] > bound[size_t(v)]) fits = false;
    if (fits) return true;
  }
  return false;
}

// Multiplicities of string summands from graph-map counts: solve
// sum_s m_s hom(s, t) = hom(X, M(t)) for all candidate strings t.
std::optional<std::vector<int>> string_multiplicities(const Representation& x,
                                                      const std::vector<StringWord>& cands) {
  const GentleQuiver& q = *x.quiver;
  size_t n = cands.size();
  Rationals field;
  RatMat sys(field, n, n + 1);
  for (size_t t = 0; t < n; ++t) {
    for (size_t s = 0; s < n; ++s)
      sys.at(t, s) = Rat(hom_dim_combinatorial(q, cands[s], cands[t]));
    Representation mt = string_module(q, x.field, cands[t]);
    sys.at(t, n) = Rat(int64_t(hom_space(x, mt).size()));
  }
  std::vector<size_t> pivots = sys.rref();
  // Unique solution required: rank n on the coefficient part.
  if (pivots.size() != n || (n > 0 && pivots.back() == n)) return std::nullopt;
  std::vector<int> mult(n, 0);
  for (size_t r = 0; r < n; ++r) {
    Rat v = sys.at(r, n);
    if (v.den != 1 || v.num < 0) return std::nullopt;
    mult[pivots[r]] = int(v.num);
  }
  return mult;
}

}  // namespace

IsoResult decompose_ledgered(const Representation& x, const Representation& y) {
  if (x.quiver != y.quiver) fail(Err::Semantic, "comparing representations over mixed quivers");
  const GentleQuiver& q = *x.quiver;
  if (x.ledger && y.ledger) {
    auto mx = ledger_multiset(x), my = ledger_multiset(y);
    if (mx == my) return {IsoVerdict::Iso, "equal canonical summand multisets"};
    return {IsoVerdict::NotIso, "summand multisets differ"};
  }
  if (x.dims != y.dims) return {IsoVerdict::NotIso, "dimension vectors differ"};
  for (int a = 0; a < q.arrow_count(); ++a)
    if (x.maps[size_t(a)].rank() != y.maps[size_t(a)].rank())
      return {IsoVerdict::NotIso, "rank differs on arrow " + q.arrow(a).label};
  // Ranks of relation-free composites of length 2 and 3.
  for (int a = 0; a < q.arrow_count(); ++a)
    for (int b : q.arrows_out(q.arrow(a).target)) {
      if (q.in_ideal(a, b)) continue;
      FqMat xc = x.maps[size_t(b)] * x.maps[size_t(a)];
      FqMat yc = y.maps[size_t(b)] * y.maps[size_t(a)];
      if (xc.rank() != yc.rank())
        return {IsoVerdict::NotIso,
                "rank differs on path " + q.arrow(b).label + q.arrow(a).label};
      for (int c : q.arrows_out(q.arrow(b).target)) {
        if (q.in_ideal(b, c)) continue;
        if ((x.maps[size_t(c)] * xc).rank() != (y.maps[size_t(c)] * yc).rank())
          return {IsoVerdict::NotIso, "rank differs on a length-3 path"};
      }
    }
  if (band_fits(q, x.dims))
    return {IsoVerdict::Unknown, "support admits a band summand"};
  std::vector<StringWord> cands = strings_within(q, x.dims);
  auto mx = string_multiplicities(x, cands);
  auto my = string_multiplicities(y, cands);
  if (!mx || !my) return {IsoVerdict::Unknown, "graph-map counting system is not uniquely solvable"};
  if (*mx == *my) return {IsoVerdict::Iso, "equal summand multiplicities from graph-map counts"};
  return {IsoVerdict::NotIso, "summand multiplicities from graph-map counts differ"};
}

}  // namespace gentle
