#include <fstream>

#include "doctest.h"
#include "gentle/fixtures.hpp"
#include "gentle/quiver_io.hpp"

using namespace gentle;

TEST_CASE("eight-vertex fixture is gentle and admissible") {
  QuiverSpec spec = parse_quiver_spec(fixture_text("gentle8"));
  ValidationReport r = GentleQuiver::validate_gentle(spec);
  CHECK(r.ok);
  GentleQuiver q = GentleQuiver::from_spec(spec);
  CHECK(check_admissible(q).ok);
}

TEST_CASE("single vertex, no arrows validates") {
  QuiverSpec spec;
  spec.name = "pt";
  spec.vertices = {"1"};
  CHECK(GentleQuiver::validate_gentle(spec).ok);
  GentleQuiver q = GentleQuiver::from_spec(spec);
  CHECK(check_admissible(q).ok);
  CHECK(algebra_basis(q).size() == 1);
}

TEST_CASE("triple parallel arrow breaks the out-degree bound") {
  QuiverSpec spec = parse_quiver_spec(fixture_text("kronecker"));
  spec.arrows.push_back({"c", "1", "2"});
  ValidationReport r = GentleQuiver::validate_gentle(spec);
  CHECK(!r.ok);
  bool saw_out = false, saw_in = false;
  for (const auto& v : r.violations) {
    if (v.rule == "out-degree") saw_out = true;
    if (v.rule == "in-degree") saw_in = true;
  }
  CHECK(saw_out);
  CHECK(saw_in);
}

TEST_CASE("unique continuation violations are caught") {
  // two relation-free continuations of arrow a at vertex 2
  QuiverSpec spec;
  spec.vertices = {"1", "2", "3"};
  spec.arrows = {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "3"}};
  ValidationReport r = GentleQuiver::validate_gentle(spec);
  CHECK(!r.ok);
  CHECK(r.violations[0].rule == "continuation-plain");
}

TEST_CASE("disconnected quiver is a violation") {
  QuiverSpec spec;
  spec.vertices = {"1", "2"};
  ValidationReport r = GentleQuiver::validate_gentle(spec);
  CHECK(!r.ok);
  CHECK(r.violations[0].rule == "disconnected");
}

TEST_CASE("relation-free cycle fails admissibility, relations fix it") {
  QuiverSpec spec;
  spec.vertices = {"1", "2", "3"};
  spec.arrows = {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}};
  GentleQuiver no_rel = GentleQuiver::from_spec(spec);
  ValidationReport r = check_admissible(no_rel);
  CHECK(!r.ok);
  CHECK(r.violations[0].rule == "relation-free-cycle");

  GentleQuiver cyc = fixture_quiver("cjrneed1");
  CHECK(check_admissible(cyc).ok);
  CHECK(check_admissible(fixture_quiver("kronecker")).ok);
}

TEST_CASE("algebra basis of the eight-vertex fixture has 20 elements") {
  GentleQuiver q = fixture_quiver("gentle8");
  std::vector<AlgebraPath> basis = algebra_basis(q);
  CHECK(basis.size() == 20);
  std::vector<std::string> names;
  for (const auto& p : basis) names.push_back(path_display(q, p));
  for (const char* want : {"cd", "eg", "gf", "ab", "egf"})
    CHECK(std::count(names.begin(), names.end(), want) == 1);
  // grouped by length: 8 lazy, 7 arrows, 4 of length 2, 1 of length 3
  CHECK(std::count_if(basis.begin(), basis.end(),
                      [](const AlgebraPath& p) { return p.arrows.empty(); }) == 8);
  CHECK(std::count_if(basis.begin(), basis.end(),
                      [](const AlgebraPath& p) { return p.arrows.size() == 2; }) == 4);
}

TEST_CASE("a2 basis") {
  GentleQuiver q = fixture_quiver("a2");
  std::vector<AlgebraPath> basis = algebra_basis(q);
  std::vector<std::string> names;
  for (const auto& p : basis) names.push_back(path_display(q, p));
  CHECK(names == std::vector<std::string>{"e_1", "e_2", "a"});
}

TEST_CASE("parse/emit round trip is structurally stable") {
  for (const std::string& name : fixture_names()) {
    GentleQuiver q = fixture_quiver(name);
    GentleQuiver q2 = parse_quiver(emit_quiver(q));
    CHECK(q.vertex_names() == q2.vertex_names());
    CHECK(q.relations() == q2.relations());
    REQUIRE(q.arrow_count() == q2.arrow_count());
    for (int a = 0; a < q.arrow_count(); ++a) {
      CHECK(q.arrow(a).label == q2.arrow(a).label);
      CHECK(q.arrow(a).source == q2.arrow(a).source);
      CHECK(q.arrow(a).target == q2.arrow(a).target);
    }
  }
}

TEST_CASE("parser reports syntax and semantic errors") {
  CHECK_THROWS_AS(parse_quiver("vertex 1\nfrobnicate\n"), GentleError);
  // relation on non-composable arrows
  QuiverSpec spec = parse_quiver_spec(
      "quiver bad\nvertex 1 2 3\narrow a: 1 -> 2\narrow b: 1 -> 3\nrel a b\n");
  ValidationReport r = GentleQuiver::validate_gentle(spec);
  CHECK(!r.ok);
  CHECK(r.violations[0].rule == "non-composable-relation");
}

TEST_CASE("fixture files on disk match the bundled texts") {
  for (const std::string& name : fixture_names()) {
    std::ifstream in(std::string(GENTLE_REPO_DIR) + "/fixtures/" + name + ".quiver");
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == fixture_text(name));
  }
}

TEST_CASE("json serialization carries the stable keys") {
  GentleQuiver q = fixture_quiver("a2");
  std::string j = quiver_to_json(q);
  for (const char* key : {"\"vertices\"", "\"arrows\"", "\"relations\""})
    CHECK(j.find(key) != std::string::npos);
  ValidationReport r;
  r.add("out-degree", "demo", "1");
  CHECK(report_to_json(r).find("\"violations\"") != std::string::npos);
}
