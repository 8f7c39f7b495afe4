#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cell600/errors.hpp"
#include "cell600/rays.hpp"

using namespace cell600;

namespace {

// Regression constants from an exhaustive pass over the 1770 ray pairs.
constexpr std::size_t kDegree600Cell = 15;
const std::map<std::string, int> kAbsInnerProducts = {{"0", 450}, {"-2+2t", 360}, {"2", 600}, {"2t", 360}};

Ray ray(RayId id, std::array<const char*, 4> c) {
  return {id, {parse_golden(c[0]), parse_golden(c[1]), parse_golden(c[2]), parse_golden(c[3])}};
}

}  // namespace

TEST_CASE("600-cell catalog") {
  const RaySet rays = build_600cell_rays();
  REQUIRE(rays.size() == 60);
  CHECK(rays.by_id(1) == ray(1, {"2", "0", "0", "0"}));
  CHECK(rays.by_id(13) == ray(13, {"k", "0", "-t", "-1"}));
  CHECK(rays.by_id(60) == ray(60, {"0", "t", "k", "1"}));
  for (const Ray& r : rays.rays()) CHECK(r.norm_squared() == GoldenNum(4));
  for (std::size_t i = 0; i < rays.size(); ++i) CHECK(rays[i].id == static_cast<RayId>(i + 1));
}

TEST_CASE("inner products") {
  const RaySet rays = build_600cell_rays();
  CHECK(golden_is_zero(inner_product(rays.by_id(1), rays.by_id(2))));
  CHECK(inner_product(rays.by_id(1), rays.by_id(13)) == GoldenNum(mpq_class(-2), mpq_class(2)));
  CHECK(inner_product(rays.by_id(13), rays.by_id(13)) == GoldenNum(4));

  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      GoldenNum ip = inner_product(rays[i], rays[j]);
      if (ip.sign() < 0) ip = -ip;
      ++seen[ip.to_string()];
    }
  }
  CHECK(seen == kAbsInnerProducts);
}

TEST_CASE("orthogonality graph of the 600-cell") {
  const RaySet rays = build_600cell_rays();
  const OrthoGraph g = orthogonality_graph(rays);
  CHECK(g.adjacent(g.index_of(1), g.index_of(2)));
  CHECK_FALSE(g.adjacent(g.index_of(1), g.index_of(13)));
  for (std::size_t v = 0; v < g.size(); ++v) {
    CHECK_FALSE(g.adjacent(v, v));
    CHECK(g.degree(v) == kDegree600Cell);
    for (std::size_t u = 0; u < g.size(); ++u) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
  CHECK(g.edge_count() == 60 * kDegree600Cell / 2);
}

TEST_CASE("induced subgraph") {
  const OrthoGraph g = orthogonality_graph(build_600cell_rays());
  const std::vector<RayId> one{1};
  const OrthoGraph single = induced_subgraph(g, one);
  CHECK(single.size() == 1);
  CHECK(single.edge_count() == 0);
  std::vector<RayId> all(g.labels().begin(), g.labels().end());
  CHECK(induced_subgraph(g, all) == g);
  const std::vector<RayId> unknown{1, 61};
  CHECK_THROWS_AS(induced_subgraph(g, unknown), InvariantError);
}

TEST_CASE("Peres-24 matches a pattern enumeration") {
  // Oracle: integer vectors with entries in {-2..2} and squared norm 2 or 4
  // whose first nonzero entry is positive (one representative per sign pair).
  std::set<std::array<long, 4>> expected;
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      for (long c = -2; c <= 2; ++c) {
        for (long d = -2; d <= 2; ++d) {
          const long n2 = a * a + b * b + c * c + d * d;
          if (n2 != 2 && n2 != 4) continue;
          const std::array<long, 4> v{a, b, c, d};
          if (*std::find_if(v.begin(), v.end(), [](long x) { return x != 0; }) > 0) expected.insert(v);
        }
      }
    }
  }
  const RaySet peres = build_peres24();
  REQUIRE(peres.size() == 24);
  REQUIRE(expected.size() == 24);
  std::set<std::array<long, 4>> got;
  for (const Ray& r : peres.rays()) {
    std::array<long, 4> v{};
    for (std::size_t i = 0; i < 4; ++i) {
      REQUIRE(r.components[i].is_integral());
      REQUIRE(r.components[i].tau_part() == 0);
      v[i] = r.components[i].rational_part().get_num().get_si();
    }
    got.insert(v);
    const GoldenNum n2 = r.norm_squared();
    CHECK((n2 == GoldenNum(2) || n2 == GoldenNum(4)));
  }
  CHECK(got == expected);
  CHECK(got.count({2, 0, 0, 0}) == 1);
}

TEST_CASE("ray-file round trip") {
  for (const RaySet& rays : {build_600cell_rays(), build_peres24()}) {
    const RaySet back = parse_rayset(format_rayset(rays), rays.name());
    CHECK(back == rays);
  }
  const std::string text = format_rayset(build_600cell_rays());
  CHECK(text.find("\n1: 2 0 0 0\n") != std::string::npos);
  CHECK(text.find("\n60: 0 t k 1\n") != std::string::npos);
}

TEST_CASE("ray-file errors") {
  SUBCASE("arity") {
    try {
      parse_rayset("1: 2 0 0 0\n5: 1 1 1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("bad component column") {
    try {
      parse_rayset("7: 1 1 x 1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 8);
    }
  }
  SUBCASE("antipodal duplicate") {
    try {
      parse_rayset("1: 1 t 0 k\n2: -1 -t 0 -k\n");
      FAIL("expected an invariant error");
    } catch (const InvariantError& e) {
      CHECK(e.id() == 2);
    }
  }
  SUBCASE("zero vector") { CHECK_THROWS_AS(parse_rayset("3: 0 0 0 0\n"), InvariantError); }
  SUBCASE("duplicate id") { CHECK_THROWS_AS(parse_rayset("3: 1 0 0 0\n3: 0 1 0 0\n"), InvariantError); }
  SUBCASE("missing colon") { CHECK_THROWS_AS(parse_rayset("3 1 0 0 0\n"), ParseError); }
  SUBCASE("comments and blanks") {
    const RaySet rs = parse_rayset("# header\n\n4: 0 0 0 2  # axis\n");
    CHECK(rs.size() == 1);
    CHECK(rs.by_id(4).components[3] == GoldenNum(2));
  }
}
