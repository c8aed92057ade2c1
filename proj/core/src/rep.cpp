#include "gentle/rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gentle {

namespace {

int basis_index(const Representation& x, int vertex, int summand, int position, int layer) {
  const auto& labels = x.labels[size_t(vertex)];
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].summand == summand && labels[i].position == position &&
        labels[i].layer == layer)
      return int(i);
  fail(Err::Internal, "basis label not found");
}

}  // namespace

Representation zero_representation(const GentleQuiver& q, Fq field) {
  Representation x;
  x.quiver = &q;
  x.field = field;
  x.dims.assign(size_t(q.vertex_count()), 0);
  x.labels.assign(size_t(q.vertex_count()), {});
  for (int a = 0; a < q.arrow_count(); ++a) x.maps.push_back(FqMat(field, 0, 0));
  x.ledger = std::vector<LedgerEntry>{};
  return x;
}

Representation string_module(const GentleQuiver& q, Fq field, const StringWord& rho) {
  StringCheck check = is_valid_string(q, rho);
  if (!check.ok) fail(Err::Semantic, "string_module on invalid string: " + check.detail);

  Representation x;
  x.quiver = &q;
  x.field = field;
  x.dims.assign(size_t(q.vertex_count()), 0);
  x.labels.assign(size_t(q.vertex_count()), {});

  std::vector<int> vseq = vertex_seq(q, rho);
  for (size_t pos = 0; pos < vseq.size(); ++pos) {
    int v = vseq[pos];
    x.dims[size_t(v)]++;
    x.labels[size_t(v)].push_back({0, int(pos), -1});
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    x.maps.push_back(FqMat(field, size_t(x.dims[size_t(arr.target)]),
                           size_t(x.dims[size_t(arr.source)])));
  }
  for (size_t i = 1; i < vseq.size(); ++i) {
    Letter l = rho.letters[i - 1];
    FqMat& m = x.maps[size_t(l.arrow)];
    if (!l.inv) {
      // arrow goes v_{i-1} -> v_i and sends x_{i-1} to x_i
      int row = basis_index(x, vseq[i], 0, int(i), -1);
      int col = basis_index(x, vseq[i - 1], 0, int(i - 1), -1);
      m.at(size_t(row), size_t(col)) = field.one();
    } else {
      // arrow goes v_i -> v_{i-1} and sends x_i to x_{i-1}
      int row = basis_index(x, vseq[i - 1], 0, int(i - 1), -1);
      int col = basis_index(x, vseq[i], 0, int(i), -1);
      m.at(size_t(row), size_t(col)) = field.one();
    }
  }
  LedgerEntry e;
  e.word = canonicalize(q, rho);
  x.ledger = std::vector<LedgerEntry>{e};
  return x;
}

Representation band_module(const GentleQuiver& q, Fq field, const StringWord& omega,
                           Fq::Elem lambda, int d) {
  if (field.is_zero(lambda)) fail(Err::Semantic, "band parameter lambda must be nonzero");
  if (d < 1) fail(Err::Semantic, "band multiplicity d must be positive");
  if (!is_band(q, omega)) fail(Err::Semantic, "band_module on a word that is not a band");

  BandCanon canon = canonical_band(q, omega);
  Fq::Elem lam = lambda;
  if (!canon.via_rotation && canon.via_inversion) lam = field.inv(lambda);
  if (canon.via_rotation && canon.via_inversion)
    lam = std::min(lambda, field.inv(lambda));  // inversion-symmetric class
  const StringWord& w = canon.word;
  int k = int(w.length());

  Representation x;
  x.quiver = &q;
  x.field = field;
  x.dims.assign(size_t(q.vertex_count()), 0);
  x.labels.assign(size_t(q.vertex_count()), {});
  std::vector<int> vseq = vertex_seq(q, w);  // vseq[k] == vseq[0]
  for (int i = 0; i < k; ++i)
    for (int j = 1; j <= d; ++j) {
      int v = vseq[size_t(i)];
      x.dims[size_t(v)]++;
      x.labels[size_t(v)].push_back({0, i, j});
    }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    x.maps.push_back(FqMat(field, size_t(x.dims[size_t(arr.target)]),
                           size_t(x.dims[size_t(arr.source)])));
  }
  auto put = [&](int arrow, int tv, int tpos, int tlayer, int sv, int spos, int slayer,
                 Fq::Elem val) {
    int row = basis_index(x, tv, 0, tpos, tlayer);
    int col = basis_index(x, sv, 0, spos, slayer);
    FqMat& m = x.maps[size_t(arrow)];
    m.at(size_t(row), size_t(col)) = field.add(m.at(size_t(row), size_t(col)), val);
  };
  for (int idx = 1; idx <= k; ++idx) {
    Letter l = w.letters[size_t(idx - 1)];
    if (idx < k) {
      for (int j = 1; j <= d; ++j) {
        if (l.inv)
          put(l.arrow, vseq[size_t(idx - 1)], idx - 1, j, vseq[size_t(idx)], idx, j, field.one());
        else
          put(l.arrow, vseq[size_t(idx)], idx, j, vseq[size_t(idx - 1)], idx - 1, j, field.one());
      }
    } else {
      // closing letter carries the Jordan block
      for (int j = 1; j <= d; ++j) {
        if (l.inv) {
          put(l.arrow, vseq[size_t(k - 1)], k - 1, j, vseq[0], 0, j, field.inv(lam));
          if (j < d) put(l.arrow, vseq[size_t(k - 1)], k - 1, j + 1, vseq[0], 0, j, field.one());
        } else {
          put(l.arrow, vseq[0], 0, j, vseq[size_t(k - 1)], k - 1, j, lam);
          if (j < d) put(l.arrow, vseq[0], 0, j + 1, vseq[size_t(k - 1)], k - 1, j, field.one());
        }
      }
    }
  }
  LedgerEntry e;
  e.band = true;
  e.word = w;
  e.lambda = lam;
  e.d = d;
  x.ledger = std::vector<LedgerEntry>{e};
  return x;
}

Representation direct_sum(const std::vector<Representation>& reps) {
  if (reps.empty()) fail(Err::Semantic, "direct_sum of nothing; use zero_representation");
  const GentleQuiver* q = reps[0].quiver;
  Fq field = reps[0].field;
  for (const Representation& r : reps) {
    if (r.quiver != q) fail(Err::Semantic, "direct_sum over mixed quivers");
    if (!(r.field == field)) fail(Err::Semantic, "direct_sum over mixed fields");
  }
  Representation x;
  x.quiver = q;
  x.field = field;
  int nv = q->vertex_count();
  x.dims.assign(size_t(nv), 0);
  x.labels.assign(size_t(nv), {});
  bool all_ledgered = true;
  int summand_offset = 0;
  std::vector<LedgerEntry> ledger;
  std::vector<std::vector<int>> offsets;  // per rep, per vertex: basis offset
  for (const Representation& r : reps) {
    auto off = std::vector<int>(size_t(nv));
    for (int v = 0; v < nv; ++v) {
      off[size_t(v)] = x.dims[size_t(v)];
      x.dims[size_t(v)] += r.dims[size_t(v)];
      for (const BasisLabel& lab : r.labels[size_t(v)]) {
        BasisLabel shifted = lab;
        shifted.summand += summand_offset;
        x.labels[size_t(v)].push_back(shifted);
      }
    }
    offsets.push_back(std::move(off));
    if (r.ledger) {
      for (const LedgerEntry& e : *r.ledger) ledger.push_back(e);
      summand_offset += int(r.ledger->size());
    } else {
      all_ledgered = false;
      summand_offset += 1;
    }
  }
  for (int a = 0; a < q->arrow_count(); ++a) {
    const Arrow& arr = q->arrow(a);
    FqMat m(field, size_t(x.dims[size_t(arr.target)]), size_t(x.dims[size_t(arr.source)]));
    for (size_t ri = 0; ri < reps.size(); ++ri) {
      const FqMat& block = reps[ri].maps[size_t(a)];
      int roff = offsets[ri][size_t(arr.target)], coff = offsets[ri][size_t(arr.source)];
      for (size_t r = 0; r < block.rows(); ++r)
        for (size_t c = 0; c < block.cols(); ++c)
          m.at(size_t(roff) + r, size_t(coff) + c) = block.at(r, c);
    }
    x.maps.push_back(std::move(m));
  }
  if (all_ledgered) x.ledger = std::move(ledger);
  return x;
}

bool check_relations(const Representation& x) {
  const GentleQuiver& q = *x.quiver;
  for (const auto& [u, v] : q.relations())
    if (!(x.maps[size_t(v)] * x.maps[size_t(u)]).is_zero()) return false;
  return true;
}

std::vector<int> dim_vector(const Representation& x) { return x.dims; }

std::string ledger_entry_expr(const GentleQuiver& q, const LedgerEntry& e) {
  if (!e.band) return "M(" + string_literal(q, e.word) + ")";
  return "B(" + string_literal(q, e.word) + "; " + std::to_string(e.lambda) + "; " +
         std::to_string(e.d) + ")";
}

std::string module_expr(const Representation& x) {
  if (!x.ledger) return "<no ledger>";
  if (x.ledger->empty()) return "0";
  const GentleQuiver& q = *x.quiver;
  std::map<std::string, int> counts;
  std::vector<std::string> order;
  for (const LedgerEntry& e : *x.ledger) {
    std::string s = ledger_entry_expr(q, e);
    if (counts[s]++ == 0) order.push_back(s);
  }
  std::sort(order.begin(), order.end());
  std::string out;
  for (const std::string& s : order) {
    if (!out.empty()) out += " + ";
    out += s;
    if (counts[s] > 1) out += "^" + std::to_string(counts[s]);
  }
  return out;
}

Representation parse_module_expr(const GentleQuiver& q, Fq field, const std::string& text) {
  std::vector<Representation> summands;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '0' && i + 1 == text.size()) return zero_representation(q, field);
  bool expect_term = true;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (!expect_term) {
      if (text[i] != '+') fail(Err::Parse, "expected '+' in module expression");
      ++i;
      expect_term = true;
      continue;
    }
    char kind = text[i];
    if (kind != 'M' && kind != 'B') fail(Err::Parse, "expected M(...) or B(...) term");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(') fail(Err::Parse, "expected '(' after term head");
    size_t close = text.find(')', i);
    if (close == std::string::npos) fail(Err::Parse, "unbalanced parenthesis in module expression");
    std::string inside = text.substr(i + 1, close - i - 1);
    i = close + 1;
    int power = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t j = i;
      while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) fail(Err::Parse, "expected integer after '^'");
      power = std::stoi(text.substr(i, j - i));
      if (power < 1) fail(Err::Parse, "power must be >= 1");
      i = j;
    }
    Representation term = zero_representation(q, field);
    if (kind == 'M') {
      term = string_module(q, field, parse_string_literal(q, inside));
    } else {
      // B(<literal>; <lambda>; <d>)
      std::vector<std::string> parts;
      std::string cur;
      for (char c : inside) {
        if (c == ';') {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      parts.push_back(cur);
      if (parts.size() != 3) fail(Err::Parse, "expected B(<string>; <lambda>; <d>)");
      auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t");
        size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      StringWord w = parse_string_literal(q, trim(parts[0]));
      long lam_raw = std::stol(trim(parts[1]));
      int d = std::stoi(trim(parts[2]));
      term = band_module(q, field, w, field.from_int(lam_raw), d);
    }
    for (int rep = 0; rep < power; ++rep) summands.push_back(term);
    expect_term = false;
  }
  if (summands.empty()) fail(Err::Parse, "empty module expression");
  return direct_sum(summands);
}

}  // namespace gentle
