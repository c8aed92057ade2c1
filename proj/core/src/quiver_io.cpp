#include "gentle/quiver_io.hpp"

#include <sstream>
#include <vector>

#include "json.hpp"

namespace gentle {

namespace {

struct Tok {
  std::string text;
  int line, col;
};

std::vector<Tok> tokenize_line(const std::string& line, int lineno) {
  std::vector<Tok> toks;
  size_t i = 0;
  while (i < line.size()) {
    if (isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && !isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    toks.push_back({line.substr(i, j - i), lineno, int(i) + 1});
    i = j;
  }
  return toks;
}

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
  fail(Err::Parse, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what);
}

}  // namespace

QuiverSpec parse_quiver_spec(const std::string& text) {
  QuiverSpec spec;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_quiver = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Tok> toks = tokenize_line(line, lineno);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "quiver") {
      if (toks.size() != 2) parse_fail(lineno, toks[0].col, "expected: quiver <name>");
      spec.name = toks[1].text;
      saw_quiver = true;
    } else if (kw == "vertex") {
      if (toks.size() < 2) parse_fail(lineno, toks[0].col, "expected: vertex <id> [<id> ...]");
      for (size_t i = 1; i < toks.size(); ++i) spec.vertices.push_back(toks[i].text);
    } else if (kw == "arrow") {
      // arrow <label>: <src> -> <tgt>
      if (toks.size() != 4 && toks.size() != 5)
        parse_fail(lineno, toks[0].col, "expected: arrow <label>: <src> -> <tgt>");
      std::string label = toks[1].text;
      if (label.empty() || label.back() != ':')
        parse_fail(lineno, toks[1].col, "arrow label must end with ':'");
      label.pop_back();
      if (label.empty()) parse_fail(lineno, toks[1].col, "empty arrow label");
      std::string src, tgt;
      if (toks.size() == 5) {
        if (toks[3].text != "->") parse_fail(lineno, toks[3].col, "expected '->'");
        src = toks[2].text;
        tgt = toks[4].text;
      } else {
        // allow "a -> b" glued as "a->b"
        size_t pos = toks[2].text.find("->");
        if (pos == std::string::npos) {
          pos = toks[3].text.find("->");
          if (pos != 0) parse_fail(lineno, toks[3].col, "expected '->'");
          src = toks[2].text;
          tgt = toks[3].text.substr(2);
        } else {
          src = toks[2].text.substr(0, pos);
          tgt = toks[2].text.substr(pos + 2);
        }
        if (src.empty() || tgt.empty()) parse_fail(lineno, toks[2].col, "expected <src> -> <tgt>");
      }
      spec.arrows.push_back({label, src, tgt});
    } else if (kw == "rel") {
      if (toks.size() != 3) parse_fail(lineno, toks[0].col, "expected: rel <first> <second>");
      spec.relations.push_back({toks[1].text, toks[2].text});
    } else {
      parse_fail(lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_quiver && spec.name.empty()) spec.name = "q";
  return spec;
}

GentleQuiver parse_quiver(const std::string& text) {
  return GentleQuiver::from_spec(parse_quiver_spec(text));
}

std::string emit_quiver(const QuiverSpec& spec) {
  std::ostringstream out;
  out << "quiver " << (spec.name.empty() ? "q" : spec.name) << "\n";
  if (!spec.vertices.empty()) {
    out << "vertex";
    for (const auto& v : spec.vertices) out << " " << v;
    out << "\n";
  }
  for (const auto& a : spec.arrows)
    out << "arrow " << a.label << ": " << a.source << " -> " << a.target << "\n";
  for (const auto& [u, v] : spec.relations) out << "rel " << u << " " << v << "\n";
  return out.str();
}

std::string emit_quiver(const GentleQuiver& q) { return emit_quiver(q.to_spec()); }

std::string quiver_to_json(const GentleQuiver& q) {
  nlohmann::json j;
  j["name"] = q.name();
  j["vertices"] = q.vertex_names();
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"label", a.label},
                      {"source", q.vertex_name(a.source)},
                      {"target", q.vertex_name(a.target)}});
  j["arrows"] = arrows;
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& [u, v] : q.relations())
    rels.push_back({q.arrow(u).label, q.arrow(v).label});
  j["relations"] = rels;
  return j.dump();
}

std::string report_to_json(const ValidationReport& r) {
  nlohmann::json j;
  j["ok"] = r.ok;
  nlohmann::json v = nlohmann::json::array();
  for (const auto& viol : r.violations)
    v.push_back({{"rule", viol.rule}, {"detail", viol.detail}, {"subject", viol.subject}});
  j["violations"] = v;
  return j.dump();
}

}  // namespace gentle
