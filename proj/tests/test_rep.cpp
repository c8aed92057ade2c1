#include "doctest.h"
#include "gentle/fixtures.hpp"
#include "gentle/rep.hpp"

using namespace gentle;

TEST_CASE("string module of c^-1 d a matches the worked example") {
  GentleQuiver q = fixture_quiver("stringrepex");
  Fq f(3);
  Representation x = string_module(q, f, parse_string_literal(q, "c^-1 d a"));
  CHECK(x.dims == std::vector<int>{1, 2, 1});
  const FqMat& xa = x.maps[size_t(*q.arrow_index("a"))];
  REQUIRE(xa.rows() == 2);
  REQUIRE(xa.cols() == 1);
  CHECK(xa.at(0, 0) == 1);
  CHECK(xa.at(1, 0) == 0);
  CHECK(x.maps[size_t(*q.arrow_index("b"))].is_zero());
  const FqMat& xc = x.maps[size_t(*q.arrow_index("c"))];
  CHECK(xc.at(0, 0) == 0);
  CHECK(xc.at(0, 1) == 1);
  const FqMat& xd = x.maps[size_t(*q.arrow_index("d"))];
  CHECK(xd.at(0, 0) == 1);
  CHECK(xd.at(0, 1) == 0);
  CHECK(check_relations(x));
}

TEST_CASE("lazy string module is the simple module") {
  GentleQuiver q = fixture_quiver("firstgentle");
  Fq f(3);
  Representation s2 = string_module(q, f, parse_string_literal(q, "e_2"));
  CHECK(s2.dims == std::vector<int>{0, 1, 0});
  for (const FqMat& m : s2.maps) CHECK(m.is_zero());
}

TEST_CASE("string module of b a in jrex1") {
  GentleQuiver q = fixture_quiver("jrex1");
  Fq f(3);
  Representation x = string_module(q, f, parse_string_literal(q, "b a"));
  CHECK(x.dims == std::vector<int>{1, 1, 0, 1});
  CHECK(x.maps[size_t(*q.arrow_index("a"))].at(0, 0) == 1);
  CHECK(x.maps[size_t(*q.arrow_index("b"))].at(0, 0) == 1);
  CHECK(check_relations(x));
}

TEST_CASE("band module carries the Jordan block on the closing letter") {
  GentleQuiver q = fixture_quiver("bandex");
  Fq f(5);
  StringWord omega = parse_string_literal(q, "b^-1 c^-1 d a");
  for (uint32_t lam = 1; lam < 5; ++lam)
    for (int d = 1; d <= 3; ++d) {
      Representation x = band_module(q, f, omega, lam, d);
      CHECK(x.dims == std::vector<int>{d, 2 * d, d});
      CHECK(check_relations(x));
      // the two-sided winding: a and c act with full rank, b closes up
      CHECK(int(x.maps[size_t(*q.arrow_index("a"))].rank()) == d);
      CHECK(int(x.maps[size_t(*q.arrow_index("b"))].rank()) == d);
    }
  // d = 1: the lambda appears as a 1x1 scalar on the closing arrow
  Representation x1 = band_module(q, f, omega, 2, 1);
  int nonzero_scalars = 0;
  for (const FqMat& m : x1.maps)
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c)
        if (m.at(r, c) != 0 && m.at(r, c) != 1) ++nonzero_scalars;
  CHECK(nonzero_scalars == 1);
}

TEST_CASE("kronecker band of length two") {
  GentleQuiver q = fixture_quiver("kronecker");
  Fq f(3);
  Representation x = band_module(q, f, parse_string_literal(q, "a^-1 b"), 1, 1);
  CHECK(x.dims == std::vector<int>{1, 1});
  CHECK(!x.maps[0].is_zero());
  CHECK(!x.maps[1].is_zero());
  CHECK(check_relations(x));
}

TEST_CASE("direct sum adds dimensions and concatenates ledgers") {
  GentleQuiver q = fixture_quiver("a2");
  Fq f(3);
  Representation s1 = string_module(q, f, parse_string_literal(q, "e_1"));
  Representation s2 = string_module(q, f, parse_string_literal(q, "e_2"));
  Representation sum = direct_sum({s1, s2});
  CHECK(sum.dims == std::vector<int>{1, 1});
  CHECK(sum.maps[0].is_zero());
  REQUIRE(sum.ledger.has_value());
  CHECK(sum.ledger->size() == 2);

  Representation zero = zero_representation(q, f);
  Representation same = direct_sum({s1, zero});
  CHECK(same.dims == s1.dims);

  Representation ma = string_module(q, f, parse_string_literal(q, "a"));
  Representation twice = direct_sum({ma, ma});
  CHECK(module_expr(twice) == "M(a)^2");
}

TEST_CASE("check_relations sees a violation in a hand-built map") {
  GentleQuiver q = fixture_quiver("firstgentle");
  Fq f(3);
  Representation x = string_module(q, f, parse_string_literal(q, "a"));
  Representation y = string_module(q, f, parse_string_literal(q, "b"));
  Representation sum = direct_sum({x, y});
  // force a nonzero composite through the relation a then b
  sum.maps[size_t(*q.arrow_index("a"))].at(0, 0) = 1;
  sum.maps[size_t(*q.arrow_index("b"))].at(0, 0) = 1;
  CHECK(!check_relations(sum));
}

TEST_CASE("dimension vector of a sum is the sum of dimension vectors") {
  GentleQuiver q = fixture_quiver("jrex1");
  Fq f(3);
  Representation a = parse_module_expr(q, f, "M(b a) + M(a)");
  Representation b = parse_module_expr(q, f, "M(c^-1 a) + M(c)");
  std::vector<int> sum = dim_vector(direct_sum({a, b}));
  for (int v = 0; v < q.vertex_count(); ++v)
    CHECK(sum[size_t(v)] == dim_vector(a)[size_t(v)] + dim_vector(b)[size_t(v)]);
}

TEST_CASE("module expression round trip") {
  GentleQuiver q = fixture_quiver("firstgentle");
  Fq f(3);
  Representation x = parse_module_expr(q, f, "M(a^-1)^2 + M(e_2) + M(b)");
  CHECK(x.dims == std::vector<int>{2, 4, 1});
  CHECK(module_expr(x) == "M(a)^2 + M(b) + M(e_2)");
  Representation again = parse_module_expr(q, f, module_expr(x));
  CHECK(again.dims == x.dims);

  GentleQuiver bx = fixture_quiver("bandex");
  Representation band = parse_module_expr(bx, Fq(5), "B(b^-1 c^-1 d a; 2; 2)");
  CHECK(band.dims == std::vector<int>{2, 4, 2});
  CHECK_THROWS_AS(parse_module_expr(bx, Fq(5), "B(b^-1 c^-1 d a; 0; 2)"), GentleError);
}

TEST_CASE("every string and band module satisfies the relations") {
  for (const std::string& name : fixture_names()) {
    GentleQuiver q = fixture_quiver(name);
    Fq f(3);
    for (int m = 0; m < q.vertex_count(); ++m)
      for (const StringWord& w : strings_through(q, m, 4).strings)
        CHECK(check_relations(string_module(q, f, w)));
    for (const Band& band : enumerate_bands(q, 4))
      for (uint32_t lam = 1; lam < 3; ++lam)
        for (int d = 1; d <= 3; ++d)
          CHECK(check_relations(band_module(q, f, band.word, lam, d)));
  }
}

TEST_CASE("band module matrices match the worked block form") {
  GentleQuiver q = fixture_quiver("bandex");
  Fq f(5);
  // the canonical class representative keeps this orientation, so the
  // closing letter is b and carries the inverse-scalar Jordan block
  Representation x = band_module(q, f, parse_string_literal(q, "b^-1 c^-1 d a"), 2, 2);
  const FqMat& xa = x.maps[size_t(*q.arrow_index("a"))];
  const FqMat& xb = x.maps[size_t(*q.arrow_index("b"))];
  // X_a = [I_2; 0], X_b = [0; J_2(lambda^-1)] with rows grouped by position
  REQUIRE(xa.rows() == 4);
  REQUIRE(xb.rows() == 4);
  CHECK(xa.at(0, 0) == 1);
  CHECK(xa.at(1, 1) == 1);
  CHECK(xa.at(2, 0) == 0);
  CHECK(xa.at(3, 1) == 0);
  uint32_t lam_inv = f.inv(2);  // 3 mod 5
  CHECK(xb.at(0, 0) == 0);
  CHECK(xb.at(1, 1) == 0);
  CHECK(xb.at(2, 0) == lam_inv);
  CHECK(xb.at(2, 1) == 0);
  CHECK(xb.at(3, 0) == 1);
  CHECK(xb.at(3, 1) == lam_inv);
}

TEST_CASE("kronecker band with unit scalar has identity maps") {
  GentleQuiver q = fixture_quiver("kronecker");
  Fq f(3);
  Representation x = band_module(q, f, parse_string_literal(q, "a^-1 b"), 1, 1);
  for (const FqMat& m : x.maps) {
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 1);
    CHECK(m.at(0, 0) == 1);
  }
}
