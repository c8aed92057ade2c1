#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/quiver_io.hpp"
#include "gentle/recoverability.hpp"
#include "json.hpp"

using namespace gentle;
using nlohmann::json;

namespace {

struct GlobalOpts {
  uint32_t prime = 3;
  uint64_t budget = uint64_t(1) << 20;
  uint64_t seed = 12345;
  int threads = 1;
  std::string format = "human";

  OracleOptions oracle() const {
    OracleOptions o;
    o.budget = budget;
    o.seed = seed;
    o.threads = threads;
    return o;
  }
  bool is_json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) fail(Err::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int resolve_vertex(const GentleQuiver& q, const std::string& name) {
  auto v = q.vertex_index(name);
  if (!v) fail(Err::Semantic, "unknown vertex '" + name + "'");
  return *v;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

json flags_json(const ConditionFlags& f) {
  return json{{"minuscule", f.minuscule},
              {"o", f.o},
              {"i", f.i},
              {"istar", f.istar},
              {"iia", f.iia},
              {"iib", f.iib},
              {"minuscule_detail", f.minuscule_detail},
              {"o_detail", f.o_detail},
              {"i_detail", f.i_detail},
              {"istar_detail", f.istar_detail},
              {"iia_detail", f.iia_detail},
              {"iib_detail", f.iib_detail}};
}

json transcript_json(const Transcript& t) {
  json lines = json::array();
  for (const TranscriptLine& l : t.lines)
    lines.push_back({{"check", l.check}, {"ok", l.ok}, {"detail", l.detail}});
  return json{{"ok", t.ok},
              {"lines", lines},
              {"shared_jf", t.shared_jf},
              {"engine_x", t.engine_x},
              {"engine_y", t.engine_y}};
}

void print_flags_human(const GentleQuiver& q, const AnalysisReport& r) {
  const ConditionFlags& f = r.flags;
  std::cout << "quiver " << q.name() << ", vertex " << q.vertex_name(r.m) << "\n";
  auto line = [](const char* name, bool ok, const std::string& detail) {
    std::cout << "  " << name << std::string(12 - strlen(name), ' ') << (ok ? "yes" : "no ")
              << "  " << detail << "\n";
  };
  line("minuscule", f.minuscule, f.minuscule_detail);
  line("(o)", f.o, f.o_detail);
  line("(i)", f.i, f.i_detail);
  line("(i*)", f.istar, f.istar_detail);
  line("(ii)(a)", f.iia, f.iia_detail);
  line("(ii)(b)", f.iib, f.iib_detail);
  if (r.sigma_complete)
    std::cout << "  #Sigma_Q(m) = " << r.sigma.size() << " strings through the vertex\n";
  else
    std::cout << "  Sigma_Q(m) is an infinite family\n";
  std::cout << "  Jordan recoverable:             " << yesno(r.jr) << "\n";
  std::cout << "  canonically Jordan recoverable: " << yesno(r.cjr) << "\n";
  if (r.an_reduction) {
    std::cout << "  type-A reduction on vertices";
    for (int v : r.an_reduction->vertices) std::cout << " " << q.vertex_name(v);
    std::cout << "\n";
  }
}

int cmd_validate(const GlobalOpts& g, const std::string& path) {
  QuiverSpec spec = parse_quiver_spec(read_file(path));
  ValidationReport gentle_report = GentleQuiver::validate_gentle(spec);
  ValidationReport admissible_report;
  bool ok = gentle_report.ok;
  if (ok) {
    GentleQuiver q = GentleQuiver::from_spec(spec);
    admissible_report = check_admissible(q);
    ok = admissible_report.ok;
    if (g.is_json()) {
      json out = {{"quiver", json::parse(quiver_to_json(q))},
                  {"gentle", json::parse(report_to_json(gentle_report))},
                  {"admissible", json::parse(report_to_json(admissible_report))},
                  {"ok", ok}};
      std::cout << out.dump(2) << "\n";
      return ok ? 0 : 1;
    }
  } else if (g.is_json()) {
    json out = {{"gentle", json::parse(report_to_json(gentle_report))}, {"ok", false}};
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  if (ok) {
    std::cout << "ok: gentle and admissible (" << spec.vertices.size() << " vertices, "
              << spec.arrows.size() << " arrows, " << spec.relations.size() << " relations)\n";
    return 0;
  }
  for (const Violation& v : gentle_report.violations)
    std::cout << "violation [" << v.rule << "] " << v.detail << "\n";
  for (const Violation& v : admissible_report.violations)
    std::cout << "violation [" << v.rule << "] " << v.detail << "\n";
  return 1;
}

int cmd_basis(const GlobalOpts& g, const std::string& path) {
  GentleQuiver q = parse_quiver(read_file(path));
  ValidationReport adm = check_admissible(q);
  if (!adm.ok) {
    std::cout << "not admissible: " << adm.violations[0].detail << "\n";
    return 1;
  }
  std::vector<AlgebraPath> basis = algebra_basis(q);
  if (g.is_json()) {
    json paths = json::array();
    for (const AlgebraPath& p : basis)
      paths.push_back({{"display", path_display(q, p)}, {"length", p.arrows.size()}});
    std::cout << json{{"count", basis.size()}, {"paths", paths}}.dump(2) << "\n";
    return 0;
  }
  size_t max_len = 0;
  for (const AlgebraPath& p : basis) max_len = std::max(max_len, p.arrows.size());
  for (size_t len = 0; len <= max_len; ++len) {
    std::cout << "length " << len << ":";
    for (const AlgebraPath& p : basis)
      if (p.arrows.size() == len) std::cout << " " << path_display(q, p);
    std::cout << "\n";
  }
  std::cout << "total " << basis.size() << " basis paths\n";
  return 0;
}

int cmd_strings(const GlobalOpts& g, const std::string& path, const std::string& vertex,
                int cap) {
  GentleQuiver q = parse_quiver(read_file(path));
  int m = resolve_vertex(q, vertex);
  StringsThrough st = cap >= 0 ? strings_through(q, m, cap) : strings_through(q, m);
  if (g.is_json()) {
    json words = json::array();
    for (const StringWord& w : st.strings) words.push_back(string_literal(q, w));
    json out = {{"vertex", vertex}, {"complete", st.complete}, {"strings", words}};
    if (st.infinite_witness) out["infinite_witness"] = string_literal(q, *st.infinite_witness);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (st.infinite_witness) {
    std::cout << "Sigma_Q(" << vertex << ") is infinite; witness string "
              << string_literal(q, *st.infinite_witness)
              << " revisits a vertex (rerun with --cap for a finite slice)\n";
    return 0;
  }
  std::cout << (st.complete ? "complete" : "capped") << " set, " << st.strings.size()
            << " strings through " << vertex << ":\n";
  for (const StringWord& w : st.strings) std::cout << "  " << string_literal(q, w) << "\n";
  return 0;
}

int cmd_bands(const GlobalOpts& g, const std::string& path, int max_len) {
  GentleQuiver q = parse_quiver(read_file(path));
  std::vector<Band> bands = enumerate_bands(q, max_len);
  if (g.is_json()) {
    json out = json::array();
    for (const Band& b : bands) out.push_back(string_literal(q, b.word));
    std::cout << json{{"max_len", max_len}, {"bands", out}}.dump(2) << "\n";
    return 0;
  }
  std::cout << bands.size() << " band class(es) of length <= " << max_len << "\n";
  for (const Band& b : bands) std::cout << "  " << string_literal(q, b.word) << "\n";
  return 0;
}

int cmd_analyze(const GlobalOpts& g, const std::string& path, const std::string& vertex,
                bool with_witness) {
  GentleQuiver q = parse_quiver(read_file(path));
  int m = resolve_vertex(q, vertex);
  AnalysisReport report = decide(q, m);
  std::optional<Witness> witness;
  std::optional<Transcript> transcript;
  std::optional<RecoverOutcome> demo;
  if (with_witness) {
    if (!report.jr || !report.cjr) {
      witness = find_witness(q, m, report, Fq(2), g.oracle());
      transcript = verify_witness(q, *witness, g.oracle());
    } else if (report.sigma_complete) {
      // recovery demonstration on the sum of all strings through m
      std::vector<Representation> summands;
      for (const StringWord& w : report.sigma)
        summands.push_back(string_module(q, Fq(g.prime), w));
      Representation x = direct_sum(summands);
      GenjfResult gj = genjf(x, m, g.oracle());
      demo = recover(q, m, gj.jf, Fq(g.prime), g.oracle());
    }
  }
  if (g.is_json()) {
    json out = {{"quiver", q.name()}, {"vertex", vertex},
                {"flags", flags_json(report.flags)},
                {"jr", report.jr},    {"cjr", report.cjr},
                {"sigma_complete", report.sigma_complete}};
    if (report.sigma_complete) out["sigma_size"] = report.sigma.size();
    if (report.an_reduction) {
      json verts = json::array();
      for (int v : report.an_reduction->vertices) verts.push_back(q.vertex_name(v));
      out["an_reduction"] = verts;
    }
    if (witness) {
      out["witness"] = {
          {"kind", witness->kind == Witness::Kind::JrPair ? "jr-pair" : "cjr-rep"},
          {"x", module_expr(witness->x)},
          {"y", witness->kind == Witness::Kind::JrPair ? module_expr(witness->y)
                                                       : std::string("<generic rep>")},
          {"construction", witness->construction},
          {"verification", transcript_json(*transcript)}};
      if (witness->offending_arrow >= 0)
        out["witness"]["offending_arrow"] = q.arrow(witness->offending_arrow).label;
    }
    if (demo && demo->rep) out["recovery_demo"] = module_expr(*demo->rep);
    std::cout << out.dump(2) << "\n";
    return transcript && !transcript->ok ? 1 : 0;
  }
  print_flags_human(q, report);
  if (witness) {
    std::cout << "\nwitness ("
              << (witness->kind == Witness::Kind::JrPair ? "pair" : "generic rep") << "), "
              << witness->construction << "\n";
    std::cout << "  X = " << module_expr(witness->x) << "\n";
    if (witness->kind == Witness::Kind::JrPair)
      std::cout << "  Y = " << module_expr(witness->y) << "\n";
    else
      std::cout << "  W: nonzero map on arrow " << q.arrow(witness->offending_arrow).label
                << ", zero elsewhere, with a nilpotent endomorphism\n";
    if (!transcript->shared_jf.empty())
      std::cout << "  shared GenJF: " << transcript->shared_jf << "\n";
    for (const TranscriptLine& l : transcript->lines)
      std::cout << "  [" << (l.ok ? "ok" : "FAIL") << "] " << l.check
                << (l.detail.empty() ? "" : ": " + l.detail) << "\n";
  }
  if (demo && demo->rep)
    std::cout << "\nrecovery demonstration: GenJF of the full string sum recovers "
              << module_expr(*demo->rep) << "\n";
  return transcript && !transcript->ok ? 1 : 0;
}

int cmd_genjf(const GlobalOpts& g, const std::string& path, const std::string& expr,
              const std::string& engine, const std::string& hint) {
  GentleQuiver q = parse_quiver(read_file(path));
  Fq field(g.prime);
  Representation x = parse_module_expr(q, field, expr);
  std::optional<int> hint_vertex;
  if (!hint.empty()) hint_vertex = resolve_vertex(q, hint);
  GenjfResult result;
  if (engine == "structural") {
    if (!hint_vertex) fail(Err::Semantic, "--engine structural needs --vertex-hint");
    result.jf = genjf_structural(x, *hint_vertex);
    result.certificate = construct_shift_endo(x, *hint_vertex);
    result.engine = GenjfEngine::Structural;
    result.exactness = Exactness::ProvenExact;
  } else if (engine == "oracle") {
    OracleOptions opts = g.oracle();
    opts.force_exhaustive = true;
    result = genjf(x, std::nullopt, opts);
  } else if (engine == "oracle-sampled") {
    OracleOptions opts = g.oracle();
    opts.budget = 0;
    result = genjf(x, std::nullopt, opts);
  } else {
    result = genjf(x, hint_vertex, g.oracle());
  }
  if (g.is_json()) {
    json out = {{"module", module_expr(x)},
                {"jf", jf_to_string(q, result.jf)},
                {"engine", engine_name(result.engine)},
                {"exactness", exactness_name(result.exactness)},
                {"prime", g.prime}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "GenJF(" << module_expr(x) << ") = " << jf_to_string(q, result.jf) << "\n";
  std::cout << "engine: " << engine_name(result.engine) << " ("
            << exactness_name(result.exactness) << "), coefficients in F_" << g.prime << "\n";
  return 0;
}

int cmd_homdim(const GlobalOpts& g, const std::string& path, const std::string& left,
               const std::string& right) {
  GentleQuiver q = parse_quiver(read_file(path));
  StringWord a = parse_string_literal(q, left);
  StringWord b = parse_string_literal(q, right);
  int comb = hom_dim_combinatorial(q, a, b);
  Fq field(g.prime);
  size_t kernel = hom_space(string_module(q, field, a), string_module(q, field, b)).size();
  if (g.is_json()) {
    std::cout << json{{"left", left},
                      {"right", right},
                      {"combinatorial", comb},
                      {"kernel", kernel}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "graph-map count:  " << comb << "\n";
    std::cout << "kernel dimension: " << kernel << "\n";
  }
  return comb == int(kernel) ? 0 : 1;
}

int cmd_recover(const GlobalOpts& g, const std::string& path, const std::string& vertex,
                const std::string& jf_text) {
  GentleQuiver q = parse_quiver(read_file(path));
  int m = resolve_vertex(q, vertex);
  JordanFormData target = jf_parse(q, jf_text);
  RecoverOutcome out = recover(q, m, target, Fq(g.prime), g.oracle());
  std::string status;
  switch (out.status) {
    case RecoverOutcome::Status::Ok:
      status = "ok";
      break;
    case RecoverOutcome::Status::NoSolution:
      status = "NoSolution";
      break;
    case RecoverOutcome::Status::NotJordanRecoverable:
      status = "NotJordanRecoverable";
      break;
    case RecoverOutcome::Status::AmbiguityBug:
      status = "AmbiguityBug";
      break;
  }
  if (g.is_json()) {
    json j = {{"vertex", vertex}, {"jf", jf_text}, {"status", status}};
    if (out.rep) j["module"] = module_expr(*out.rep);
    if (!out.detail.empty()) j["detail"] = out.detail;
    std::cout << j.dump(2) << "\n";
  } else if (out.rep) {
    std::cout << module_expr(*out.rep) << "\n";
  } else {
    std::cout << status << (out.detail.empty() ? "" : ": " + out.detail) << "\n";
  }
  if (out.status == RecoverOutcome::Status::Ok ||
      out.status == RecoverOutcome::Status::NoSolution)
    return 0;
  return 1;
}

struct SelfTest {
  bool json_mode = false;
  json results = json::array();
  int failures = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    if (!ok) ++failures;
    if (json_mode)
      results.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
    else
      std::cout << (ok ? "[PASS] " : "[FAIL] ") << name
                << (detail.empty() || ok ? "" : ": " + detail) << "\n";
  }
};

int cmd_selftest(const GlobalOpts& g) {
  SelfTest t;
  t.json_mode = g.is_json();
  OracleOptions oracle = g.oracle();

  for (const std::string& name : fixture_names()) {
    GentleQuiver q = fixture_quiver(name);
    t.check("fixture " + name + " validates",
            GentleQuiver::validate_gentle(q.to_spec()).ok && check_admissible(q).ok);
  }

  {
    GentleQuiver q = fixture_quiver("gentle8");
    t.check("eight-vertex basis has 20 paths", algebra_basis(q).size() == 20);
  }

  {
    GentleQuiver q = fixture_quiver("morphex");
    Fq f(g.prime);
    Representation x = parse_module_expr(q, f, "M(e_1) + M(a) + M(c)^2");
    Representation y = parse_module_expr(q, f, "M(a) + M(b)");
    t.check("hom dimension of the worked example is 1", hom_space(x, y).size() == 1);
    t.check("graph-map count agrees",
            hom_dim_combinatorial(q, parse_string_literal(q, "a"),
                                  parse_string_literal(q, "a")) == 1);
  }

  auto oracle_jf = [&](const std::string& fixture, const std::string& expr) {
    GentleQuiver q = fixture_quiver(fixture);
    for (uint32_t p : {uint32_t(2), uint32_t(3)}) {
      Representation x = parse_module_expr(q, Fq(p), expr);
      try {
        OracleOutcome out = genjf_oracle(x, oracle);
        if (out.unique_max() && out.exhaustive) return jf_to_string(q, out.jf());
      } catch (const GentleError&) {
      }
    }
    return std::string("<none>");
  };
  t.check("GenJF of the split A2 module", oracle_jf("a2", "M(e_1) + M(e_2)") == "1:[1];2:[1]");
  t.check("GenJF of the joined A2 module", oracle_jf("a2", "M(a)") == "1:[1];2:[1]");
  t.check("GenJF on the three-vertex line",
          oracle_jf("firstgentle", "M(a) + M(e_2) + M(b)") == "1:[1];2:[3];3:[1]");
  t.check("GenJF at the tree vertex",
          oracle_jf("jrex1", "M(e_1) + M(c^-1 a) + M(a) + M(b a)") ==
              "1:[4];2:[3];3:[1];4:[1]");
  t.check("GenJF pair on the parallel quiver",
          oracle_jf("minnot2", "M(e_1) + M(c b^-1 c a)") == "1:[2];2:[2];3:[2]" &&
              oracle_jf("minnot2", "M(c a)^2") == "1:[2];2:[2];3:[2]");
  t.check("GenJF pair on the triangle",
          oracle_jf("minnot1", "M(a b^-1)") == "1:[1];2:[1];3:[1]" &&
              oracle_jf("minnot1", "M(b^-1 c)") == "1:[1];2:[1];3:[1]");
  t.check("GenJF pair at the crossing vertex",
          oracle_jf("jrex1", "M(b) + M(a) + M(c^-1 a) + M(c)") ==
                  "1:[2];2:[3,1];3:[2];4:[1]" &&
              oracle_jf("jrex1", "M(b a) + M(e_2) + M(c^-1 a) + M(c)") ==
                  "1:[2];2:[3,1];3:[2];4:[1]");

  auto verdict = [&](const std::string& fixture, const std::string& vertex, bool jr, bool cjr) {
    GentleQuiver q = fixture_quiver(fixture);
    AnalysisReport r = decide(q, *q.vertex_index(vertex));
    return r.jr == jr && r.cjr == cjr;
  };
  t.check("verdicts on the three-vertex line", verdict("firstgentle", "2", true, true));
  t.check("verdicts on the tree",
          verdict("jrex1", "1", true, true) && verdict("jrex1", "3", true, true) &&
              verdict("jrex1", "4", true, true) && verdict("jrex1", "2", false, false));
  t.check("verdicts on the bound cycle", verdict("cjrneed1", "2", true, false));
  t.check("verdicts on the triangle", verdict("minnot1", "1", false, false) &&
                                          verdict("minnot1", "2", false, false) &&
                                          verdict("minnot1", "3", false, false));
  t.check("verdicts on the parallel quiver", verdict("minnot2", "1", false, false));
  t.check("verdicts on the double arrow", verdict("kronecker", "1", false, false) &&
                                              verdict("kronecker", "2", false, false));

  {
    GentleQuiver q = fixture_quiver("firstgentle");
    Fq f(g.prime);
    RecoverOutcome out =
        recover(q, *q.vertex_index("2"), jf_parse(q, "1:[1];2:[3];3:[1]"), f);
    t.check("recovery of the worked example",
            out.status == RecoverOutcome::Status::Ok &&
                module_expr(*out.rep) == "M(a) + M(b) + M(e_2)");
    t.check("recovery rejects the unattained data",
            recover(q, *q.vertex_index("2"), jf_parse(q, "1:[1];2:[1];3:[1]"), f).status ==
                RecoverOutcome::Status::NoSolution);
  }

  {
    GentleQuiver q = fixture_quiver("jrex1");
    int m = *q.vertex_index("2");
    AnalysisReport r = decide(q, m);
    Witness w = find_witness(q, m, r, Fq(2), oracle);
    t.check("witness pair at the crossing vertex verifies", verify_witness(q, w, oracle).ok);
    GentleQuiver c = fixture_quiver("cjrneed1");
    AnalysisReport rc = decide(c, *c.vertex_index("2"));
    Witness wc = find_witness(c, *c.vertex_index("2"), rc, Fq(2), oracle);
    t.check("generic-representation witness on the bound cycle verifies",
            verify_witness(c, wc, oracle).ok);
  }

  if (t.json_mode)
    std::cout << json{{"ok", t.failures == 0}, {"results", t.results}}.dump(2) << "\n";
  else
    std::cout << (t.failures == 0 ? "all self-tests passed" : "self-test failures!") << "\n";
  return t.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gentle: string and band combinatorics of gentle quivers, generic Jordan "
               "form data, and Jordan recoverability analysis"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--prime", g.prime, "prime for the coefficient field")->capture_default_str();
  app.add_option("--budget", g.budget, "max points for exhaustive oracle enumeration")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled enumeration")->capture_default_str();
  app.add_option("--threads", g.threads, "worker cap for the oracle")->capture_default_str();
  app.add_option("--format", g.format, "output format: human|json")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();

  std::string file, vertex, expr, engine = "auto", hint, left, right, jf_text;
  int cap = -1, max_len = 6;
  bool with_witness = false;

  CLI::App* validate = app.add_subcommand("validate", "check gentleness and admissibility");
  validate->add_option("file", file)->required();

  CLI::App* basis = app.add_subcommand("basis", "list the path-algebra basis");
  basis->add_option("file", file)->required();

  CLI::App* strings = app.add_subcommand("strings", "strings through a vertex");
  strings->add_option("file", file)->required();
  strings->add_option("-m,--vertex", vertex)->required();
  strings->add_option("--cap", cap, "length cap for infinite families");

  CLI::App* bands = app.add_subcommand("bands", "band classes up to a length bound");
  bands->add_option("file", file)->required();
  bands->add_option("--max-len", max_len)->capture_default_str();

  CLI::App* analyze = app.add_subcommand("analyze", "Jordan recoverability verdicts");
  analyze->add_option("file", file)->required();
  analyze->add_option("-m,--vertex", vertex)->required();
  analyze->add_flag("--witness", with_witness, "attach a verified witness or recovery demo");

  CLI::App* genjf_cmd = app.add_subcommand("genjf", "generic Jordan form data of a module");
  genjf_cmd->add_option("file", file)->required();
  genjf_cmd->add_option("--module", expr)->required();
  genjf_cmd->add_option("--engine", engine)
      ->check(CLI::IsMember({"auto", "structural", "oracle", "oracle-sampled"}))
      ->capture_default_str();
  genjf_cmd->add_option("--vertex-hint", hint);

  CLI::App* homdim = app.add_subcommand("homdim", "hom dimension between string modules");
  homdim->add_option("file", file)->required();
  homdim->add_option("--left", left)->required();
  homdim->add_option("--right", right)->required();

  CLI::App* recover_cmd = app.add_subcommand("recover", "module from generic Jordan data");
  recover_cmd->add_option("file", file)->required();
  recover_cmd->add_option("-m,--vertex", vertex)->required();
  recover_cmd->add_option("--jf", jf_text)->required();

  app.add_subcommand("selftest", "run the bundled fixture suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(g, file);
    if (basis->parsed()) return cmd_basis(g, file);
    if (strings->parsed()) return cmd_strings(g, file, vertex, cap);
    if (bands->parsed()) return cmd_bands(g, file, max_len);
    if (analyze->parsed()) return cmd_analyze(g, file, vertex, with_witness);
    if (genjf_cmd->parsed()) return cmd_genjf(g, file, expr, engine, hint);
    if (homdim->parsed()) return cmd_homdim(g, file, left, right);
    if (recover_cmd->parsed()) return cmd_recover(g, file, vertex, jf_text);
    return cmd_selftest(g);
  } catch (const GentleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Err::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
