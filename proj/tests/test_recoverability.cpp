#include "doctest.h"
#include <functional>
#include <map>
#include "gentle/fixtures.hpp"
#include "gentle/quiver_io.hpp"
#include "gentle/recoverability.hpp"

using namespace gentle;

namespace {

AnalysisReport at(const GentleQuiver& q, const char* vertex) {
  return decide(q, *q.vertex_index(vertex));
}

}  // namespace

TEST_CASE("condition flags on the three-vertex line") {
  GentleQuiver q = fixture_quiver("firstgentle");
  AnalysisReport r = at(q, "2");
  CHECK(r.flags.minuscule);
  CHECK(r.flags.o);
  CHECK(r.flags.i);
  CHECK(r.flags.istar);
  CHECK(r.flags.iia);
  CHECK(!r.flags.iib);  // two maximal strings through the middle
  CHECK(r.jr);
  CHECK(r.cjr);
}

TEST_CASE("condition flags where two arrows come in") {
  GentleQuiver q = fixture_quiver("jrex1");
  AnalysisReport r = at(q, "2");
  CHECK(!r.flags.iia);
  CHECK(r.flags.iia_detail.find("incoming") != std::string::npos);
  CHECK(!r.flags.iib);
  CHECK(!r.jr);
  CHECK(r.flags.istar);
  CHECK(r.flags.i);  // (i) itself holds here; recoverability dies on (ii)
}

TEST_CASE("condition flags on the bound cycle") {
  GentleQuiver q = fixture_quiver("cjrneed1");
  AnalysisReport r = at(q, "2");
  CHECK(r.flags.istar);
  CHECK(r.flags.iia);
  CHECK(!r.flags.i);
  CHECK(r.flags.i_detail.find("c") != std::string::npos);
  CHECK(r.jr);
  CHECK(!r.cjr);
}

TEST_CASE("verdict table across the bundled quivers") {
  GentleQuiver fg = fixture_quiver("firstgentle");
  CHECK(at(fg, "2").jr);
  CHECK(at(fg, "2").cjr);

  GentleQuiver jr1 = fixture_quiver("jrex1");
  for (const char* v : {"1", "3", "4"}) {
    AnalysisReport r = at(jr1, v);
    CHECK(r.jr);
    CHECK(r.cjr);
  }
  CHECK(!at(jr1, "2").jr);

  GentleQuiver c1 = fixture_quiver("cjrneed1");
  CHECK(at(c1, "2").jr);
  CHECK(!at(c1, "2").cjr);

  GentleQuiver m1 = fixture_quiver("minnot1");
  for (const char* v : {"1", "2", "3"}) CHECK(!at(m1, v).jr);

  GentleQuiver m2 = fixture_quiver("minnot2");
  CHECK(!at(m2, "1").jr);

  GentleQuiver kro = fixture_quiver("kronecker");
  CHECK(!at(kro, "1").jr);
  CHECK(!at(kro, "2").jr);
  CHECK(!at(kro, "1").cjr);

  GentleQuiver a2 = fixture_quiver("a2");
  CHECK(at(a2, "1").jr);
  CHECK(at(a2, "1").cjr);
}

TEST_CASE("type A reduction data appears with a unique maximal string") {
  GentleQuiver q = fixture_quiver("lambda3");
  AnalysisReport r = at(q, "2");
  CHECK(r.jr);
  CHECK(r.cjr);
  CHECK(!r.flags.iia);  // two incoming arrows
  CHECK(r.flags.iib);
  REQUIRE(r.an_reduction.has_value());
  CHECK(r.an_reduction->vertices.size() == 3);
  CHECK(r.an_reduction->arrows.size() == 2);
}

TEST_CASE("verdicts are invariant under relabeling") {
  GentleQuiver q = fixture_quiver("jrex1");
  // same quiver with permuted names and labels
  GentleQuiver p = parse_quiver(
      "quiver perm\n"
      "vertex w x y z\n"
      "arrow u: x -> w\n"
      "arrow t: z -> x\n"
      "arrow s: y -> z\n"  // not used: fresh labels, same shape below
      "\n");
  // direct relabeling of jrex1: 1->x, 2->z, 3->y, 4->w with a->t, b->u?, c->s
  GentleQuiver relabeled = parse_quiver(
      "quiver relabeled\n"
      "vertex w x y z\n"
      "arrow t: x -> z\n"
      "arrow u: z -> w\n"
      "arrow s: y -> z\n"
      "rel s u\n");
  (void)p;
  std::map<std::string, std::string> to = {{"1", "x"}, {"2", "z"}, {"3", "y"}, {"4", "w"}};
  for (const auto& [orig, renamed] : to) {
    AnalysisReport a = decide(q, *q.vertex_index(orig));
    AnalysisReport b = decide(relabeled, *relabeled.vertex_index(renamed));
    CHECK(a.jr == b.jr);
    CHECK(a.cjr == b.cjr);
  }
}

TEST_CASE("implication chain holds on fixtures and random quivers") {
  auto check_chain = [](const GentleQuiver& q) {
    for (int m = 0; m < q.vertex_count(); ++m) {
      ConditionFlags f = condition_flags(q, m);
      if (f.i) CHECK(f.istar);
      if (f.istar) CHECK(f.o);
      if (f.o) CHECK(f.minuscule);
    }
  };
  for (const std::string& name : fixture_names()) check_chain(fixture_quiver(name));
  RandomQuiverOptions with_loops;
  with_loops.allow_loops = true;
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    check_chain(random_gentle_quiver(seed));
    check_chain(random_gentle_quiver(seed, with_loops));
  }
}

TEST_CASE("witness pairs at the known failure vertices") {
  Fq f(2);
  struct Case {
    const char* fixture;
    const char* vertex;
    const char* jf;
  };
  for (Case c : {Case{"jrex1", "2", "1:[2];2:[3,1];3:[2];4:[1]"},
                 Case{"minnot2", "1", "1:[2];2:[2];3:[2]"},
                 Case{"minnot1", "1", "1:[1];2:[1];3:[1]"}}) {
    GentleQuiver q = fixture_quiver(c.fixture);
    int m = *q.vertex_index(c.vertex);
    AnalysisReport report = decide(q, m);
    REQUIRE(!report.jr);
    Witness w = find_witness(q, m, report, f);
    CHECK(w.kind == Witness::Kind::JrPair);
    Transcript t = verify_witness(q, w);
    CHECK(t.ok);
    CHECK(t.shared_jf == c.jf);
  }
}

TEST_CASE("witness for the canonical failure on the bound cycle") {
  GentleQuiver q = fixture_quiver("cjrneed1");
  int m = *q.vertex_index("2");
  AnalysisReport report = decide(q, m);
  REQUIRE(report.jr);
  REQUIRE(!report.cjr);
  Witness w = find_witness(q, m, report, Fq(2));
  CHECK(w.kind == Witness::Kind::CjrRep);
  Transcript t = verify_witness(q, w);
  CHECK(t.ok);
  CHECK(w.offending_arrow >= 0);
}

TEST_CASE("corrupted witnesses fail verification") {
  GentleQuiver q = fixture_quiver("jrex1");
  int m = *q.vertex_index("2");
  AnalysisReport report = decide(q, m);
  Witness w = find_witness(q, m, report, Fq(2));
  REQUIRE(verify_witness(q, w).ok);
  SUBCASE("y replaced by x") {
    Witness bad = w;
    bad.y = bad.x;
    Transcript t = verify_witness(q, bad);
    CHECK(!t.ok);
    CHECK(!t.lines[0].ok);  // the isomorphism check trips first
  }
  SUBCASE("a dropped summand changes the Jordan data") {
    Witness bad = w;
    REQUIRE(bad.y.ledger.has_value());
    std::vector<LedgerEntry> entries = *bad.y.ledger;
    REQUIRE(entries.size() > 1);
    entries.pop_back();
    std::vector<Representation> summands;
    for (const LedgerEntry& e : entries)
      summands.push_back(string_module(q, bad.y.field, e.word));
    bad.y = direct_sum(summands);
    Transcript t = verify_witness(q, bad);
    CHECK(!t.ok);
  }
}

TEST_CASE("recovery in the single-incidence branch") {
  GentleQuiver q = fixture_quiver("firstgentle");
  Fq f(2);
  int m = *q.vertex_index("2");
  RecoverOutcome out = recover(q, m, jf_parse(q, "1:[1];2:[3];3:[1]"), f);
  REQUIRE(out.status == RecoverOutcome::Status::Ok);
  CHECK(module_expr(*out.rep) == "M(a) + M(b) + M(e_2)");

  RecoverOutcome two = recover(q, m, jf_parse(q, "1:[2];2:[4];3:[1]"), f);
  REQUIRE(two.status == RecoverOutcome::Status::Ok);
  CHECK(module_expr(*two.rep) == "M(a)^2 + M(b) + M(e_2)");

  RecoverOutcome s2 = recover(q, m, jf_parse(q, "1:[0];2:[1];3:[0]"), f);
  REQUIRE(s2.status == RecoverOutcome::Status::Ok);
  CHECK(module_expr(*s2.rep) == "M(e_2)");

  CHECK(recover(q, m, jf_parse(q, "1:[1];2:[1];3:[1]"), f).status ==
        RecoverOutcome::Status::NoSolution);
  CHECK(recover(q, m, jf_parse(q, "1:[1];2:[2,1];3:[1]"), f).status ==
        RecoverOutcome::Status::NoSolution);

  GentleQuiver kro = fixture_quiver("kronecker");
  CHECK(recover(kro, 0, jf_parse(kro, "1:[1];2:[1]"), f).status ==
        RecoverOutcome::Status::NotJordanRecoverable);
}

TEST_CASE("recovery round trip in the single-incidence branch") {
  GentleQuiver q = fixture_quiver("firstgentle");
  Fq f(2);
  int m = *q.vertex_index("2");
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        if (a + b + c == 0) continue;
        std::vector<Representation> summands;
        for (int i = 0; i < a; ++i)
          summands.push_back(string_module(q, f, parse_string_literal(q, "a^-1")));
        for (int i = 0; i < b; ++i)
          summands.push_back(string_module(q, f, parse_string_literal(q, "e_2")));
        for (int i = 0; i < c; ++i)
          summands.push_back(string_module(q, f, parse_string_literal(q, "b")));
        Representation x = direct_sum(summands);
        JordanFormData jf = genjf_structural(x, m);
        RecoverOutcome out = recover(q, m, jf, f);
        REQUIRE(out.status == RecoverOutcome::Status::Ok);
        CHECK(decompose_ledgered(*out.rep, x).verdict == IsoVerdict::Iso);
      }
}

TEST_CASE("recovery through the unique-maximal-string branch") {
  GentleQuiver q = fixture_quiver("lambda3");
  Fq f(2);
  int m = *q.vertex_index("2");
  AnalysisReport r = decide(q, m);
  REQUIRE(r.jr);
  REQUIRE(!r.flags.iia);
  // module: the full string plus a lazy one
  Representation x = parse_module_expr(q, f, "M(b^-1 a) + M(e_2)");
  GenjfResult g = genjf(x);
  RecoverOutcome out = recover(q, m, g.jf, f);
  REQUIRE(out.status == RecoverOutcome::Status::Ok);
  CHECK(decompose_ledgered(*out.rep, x).verdict == IsoVerdict::Iso);
  // split data reconstructs the split module
  RecoverOutcome split = recover(q, m, jf_parse(q, "1:[1];2:[1,1];3:[1]"), f);
  REQUIRE(split.status == RecoverOutcome::Status::Ok);
  CHECK(module_expr(*split.rep) == "M(a) + M(b)");
  // and a Jordan data nothing attains
  CHECK(recover(q, m, jf_parse(q, "1:[0];2:[1,1];3:[0]"), f).status ==
        RecoverOutcome::Status::NoSolution);
}

TEST_CASE("random quiver generator emits valid admissible gentle quivers") {
  for (uint64_t seed = 100; seed < 140; ++seed) {
    GentleQuiver q = random_gentle_quiver(seed);
    CHECK(GentleQuiver::validate_gentle(q.to_spec()).ok);
    CHECK(check_admissible(q).ok);
  }
}

TEST_CASE("round trips through the unique-maximal-string branch, all small multisets") {
  GentleQuiver q = fixture_quiver("lambda3");
  Fq f(2);
  int m = *q.vertex_index("2");
  StringsThrough st = strings_through(q, m);
  REQUIRE(st.complete);
  REQUIRE(st.strings.size() == 4);  // within the |Sigma| <= 8 regime
  std::vector<int> mult(st.strings.size(), 0);
  std::function<void(size_t)> walk = [&](size_t idx) {
    if (idx == mult.size()) {
      int total = 0;
      for (int v : mult) total += v;
      if (total == 0) return;
      std::vector<Representation> summands;
      for (size_t i = 0; i < mult.size(); ++i)
        for (int c = 0; c < mult[i]; ++c)
          summands.push_back(string_module(q, f, st.strings[i]));
      Representation x = direct_sum(summands);
      GenjfResult g = genjf(x);
      RecoverOutcome out = recover(q, m, g.jf, f);
      REQUIRE(out.status == RecoverOutcome::Status::Ok);
      CHECK(decompose_ledgered(*out.rep, x).verdict == IsoVerdict::Iso);
      return;
    }
    for (int c = 0; c <= 2; ++c) {
      mult[idx] = c;
      walk(idx + 1);
    }
    mult[idx] = 0;
  };
  walk(0);
}
