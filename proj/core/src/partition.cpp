#include "gentle/partition.hpp"

#include <algorithm>
#include <sstream>

namespace gentle {

Partition normalized_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() <= 0) parts.pop_back();
  for (int p : parts)
    if (p < 0) fail(Err::Semantic, "negative partition part");
  Partition r;
  r.parts = std::move(parts);
  return r;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.parts.empty()) return c;
  for (int col = 1; col <= p.parts[0]; ++col) {
    int count = 0;
    for (int part : p.parts)
      if (part >= col) ++count;
    c.parts.push_back(count);
  }
  return c;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) fail(Err::SizeMismatch, "dominance on partitions of different sizes");
  size_t n = std::max(a.parts.size(), b.parts.size());
  long sa = 0, sb = 0;
  for (size_t k = 0; k < n; ++k) {
    sa += k < a.parts.size() ? a.parts[k] : 0;
    sb += k < b.parts.size() ? b.parts[k] : 0;
    if (sa > sb) return false;
  }
  return true;
}

bool dominance_leq(const JordanFormData& a, const JordanFormData& b) {
  if (a.at.size() != b.at.size()) fail(Err::SizeMismatch, "dominance on mismatched vertex sets");
  for (size_t v = 0; v < a.at.size(); ++v)
    if (!dominance_leq(a.at[v], b.at[v])) return false;
  return true;
}

std::string jf_to_string(const GentleQuiver& q, const JordanFormData& jf) {
  std::string out;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (!out.empty()) out += ";";
    out += q.vertex_name(v) + ":[";
    const Partition& p = jf.at[size_t(v)];
    if (p.empty()) {
      out += "0";
    } else {
      for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts[i]);
      }
    }
    out += "]";
  }
  return out;
}

JordanFormData jf_parse(const GentleQuiver& q, const std::string& text) {
  JordanFormData jf;
  jf.at.assign(size_t(q.vertex_count()), {});
  std::istringstream in(text);
  std::string seg;
  while (std::getline(in, seg, ';')) {
    size_t colon = seg.find(':');
    if (colon == std::string::npos) fail(Err::Parse, "expected <vertex>:[...] in '" + seg + "'");
    std::string vname = seg.substr(0, colon);
    auto strip = [](std::string s) {
      size_t b = s.find_first_not_of(" \t");
      size_t e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    vname = strip(vname);
    auto vi = q.vertex_index(vname);
    if (!vi) fail(Err::Semantic, "unknown vertex '" + vname + "' in Jordan data");
    std::string rest = strip(seg.substr(colon + 1));
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
      fail(Err::Parse, "expected [p1,p2,...] in '" + seg + "'");
    std::vector<int> parts;
    std::istringstream ps(rest.substr(1, rest.size() - 2));
    std::string tok;
    while (std::getline(ps, tok, ',')) {
      tok = strip(tok);
      if (tok.empty()) continue;
      parts.push_back(std::stoi(tok));
    }
    jf.at[size_t(*vi)] = normalized_partition(std::move(parts));
  }
  return jf;
}

Partition jordan_type(const FqMat& n) {
  if (n.rows() != n.cols()) fail(Err::Semantic, "jordan_type of a non-square matrix");
  size_t dim = n.rows();
  if (dim == 0) return {};
  if (!n.power(dim).is_zero()) fail(Err::NotNilpotent, "matrix is not nilpotent");
  // conjugate parts are rank(N^{i-1}) - rank(N^i)
  std::vector<int> conj;
  FqMat pow = n;
  size_t prev_rank = dim;
  while (prev_rank > 0) {
    size_t r = pow.rank();
    conj.push_back(int(prev_rank - r));
    prev_rank = r;
    if (r == 0) break;
    pow = pow * n;
  }
  return conjugate(normalized_partition(std::move(conj)));
}

}  // namespace gentle
