#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cell600/parity.hpp"
#include "cell600/report.hpp"
#include "cell600/scan.hpp"

using namespace cell600;

namespace {

constexpr double kPi = std::numbers::pi;

const OperatorFamily& family_a() {
  static const OperatorFamily f = conflict_family(build_600cell_rays(), builtin_sets().set_a, 5, "A");
  return f;
}

Vec4 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec4 r{n(rng), n(rng), n(rng), n(rng)};
  const double s = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]);
  for (double& x : r) x /= s;
  return r;
}

}  // namespace

TEST_CASE("spherical parameterization") {
  const Vec4 pole = spherical_to_vector(0, 0, 0);
  CHECK(pole == Vec4{0, 0, 0, 1});
  const Vec4 x = spherical_to_vector(0, kPi / 2, kPi / 2);
  CHECK(x[0] == doctest::Approx(1.0));
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(x[i]) < 1e-15);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const Vec4 r = spherical_to_vector(u(rng), u(rng), u(rng));
    CHECK(std::abs(std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]) - 1.0) <= 1e-12);
  }
  for (int i = 0; i < 200; ++i) {
    const Vec4 r = random_unit(rng);
    const Vec4 back = spherical_to_vector(vector_to_angles(r));
    for (std::size_t k = 0; k < 4; ++k) CHECK(back[k] == doctest::Approx(r[k]).epsilon(1e-9));
  }
}

TEST_CASE("mesh") {
  const MeshSpec one = MeshSpec::degrees(1.0);
  CHECK(one.phi_count() == 180);
  CHECK(one.theta1_count() == 181);
  CHECK(one.theta2_count() == 181);
  CHECK(one.node_count() == 180U * 181U * 181U);
  CHECK(MeshSpec::degrees(2.0).node_count() == 90U * 91U * 91U);
  CHECK_THROWS_AS(MeshSpec::degrees(0.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS((MeshSpec{0.1, -0.1, 0.1}.validate()), std::invalid_argument);
}

TEST_CASE("violation value") {
  const RaySet rays = build_600cell_rays();
  const OperatorFamily& fa = family_a();
  CHECK(fa.size() == 990);

  const Spectrum top = max_eigen(ngon_operator(rays, NGon(std::vector<RayId>{1, 2, 13, 41, 34})));
  CHECK(fa.value(top.max_eigenvector) >= 2.1778 - 5e-4);

  const std::vector<SymMatrix4> identity{SymMatrix4::identity()};
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) CHECK(violation_value(random_unit(rng), identity) == doctest::Approx(1.0));
  CHECK(fa.value({1, 0, 0, 0}) > 2.0);
  CHECK_THROWS_AS(violation_value({1, 0, 0, 0}, std::span<const SymMatrix4>{}), std::invalid_argument);
  CHECK_THROWS_AS(OperatorFamily{}.value({1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("vectorized evaluation matches the reference and is even in r") {
  const OperatorFamily& fa = family_a();
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const Vec4 r = random_unit(rng);
    const double fast = fa.value(r);
    CHECK(std::abs(fast - violation_value(r, fa.operators())) <= 1e-12);
    CHECK(std::abs(fast - fa.value({-r[0], -r[1], -r[2], -r[3]})) <= 1e-12);
  }
}

TEST_CASE("refinement") {
  const OperatorFamily& fa = family_a();
  const ScanReport coarse = scan_universality(fa, MeshSpec::degrees(6.0), {false, 0, 1});
  const RefineResult r1 = refine_minimum(fa, coarse.mesh_argmin);
  CHECK(r1.value <= coarse.mesh_min);
  CHECK(r1.evaluations <= 10'000 + 4);
  const RefineResult r2 = refine_minimum(fa, coarse.mesh_argmin);
  CHECK(r1.value == r2.value);
  CHECK(r1.angles == r2.angles);

  const Spectrum top = max_eigen(ngon_operator(build_600cell_rays(), NGon(std::vector<RayId>{1, 2, 13, 41, 34})));
  const Angles start = vector_to_angles(top.max_eigenvector);
  CHECK(refine_minimum(fa, start).value < 2.1778);
}

TEST_CASE("coarse scan of set A") {
  const OperatorFamily& fa = family_a();
  const ScanReport report = scan_universality(fa, MeshSpec::degrees(3.0));
  CHECK(report.nodes == 60U * 61U * 61U);
  CHECK(report.mesh_min > 2.0);
  REQUIRE(report.refined);
  CHECK(report.refined_min <= report.mesh_min + 1e-12);
  CHECK(report.refined_min > 2.0);
  CHECK(std::abs(fa.value(spherical_to_vector(report.refined_argmin)) - report.refined_min) <= 1e-10);
  CHECK(report.starts.size() == 11);
  CHECK(report.starts.front().start == report.mesh_argmin);
}

TEST_CASE("the Peres-24 pentagons do not cover every ray") {
  const RaySet peres = build_peres24();
  const OperatorFamily fp = conflict_family(peres, std::nullopt, 5, "peres-24");
  CHECK(fp.size() == 576);
  const ScanReport report = scan_universality(fp, MeshSpec::degrees(5.0));
  CHECK(report.minimum() <= 2.0);
  // Each Peres ray itself is a witness.
  for (const Ray& r : peres.rays()) {
    auto v = r.to_double();
    const double s = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    for (double& x : v) x /= s;
    CHECK(fp.value(v) <= 2.0 + 1e-9);
  }
}
