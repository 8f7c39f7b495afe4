#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cell600/errors.hpp"
#include "cell600/golden.hpp"

using namespace cell600;

namespace {

GoldenNum g(long a, long b) { return {mpq_class(a), mpq_class(b)}; }

GoldenNum random_small(std::mt19937_64& rng, long bound = 20) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::uniform_int_distribution<long> den(1, 6);
  return {mpq_class(d(rng), den(rng)), mpq_class(d(rng), den(rng))};
}

}  // namespace

TEST_CASE("addition") {
  CHECK(golden_add(g(0, 1), g(-1, 1)) == g(-1, 2));
  CHECK(golden_add(g(0, 0), g(3, 5)) == g(3, 5));
  CHECK(golden_add(g(1, 1), g(-1, -1)) == g(0, 0));
}

TEST_CASE("multiplication reduces by t^2 = t + 1") {
  CHECK(golden_mul(g(0, 1), g(0, 1)) == g(1, 1));
  CHECK(golden_mul(g(-1, 1), g(0, 1)) == g(1, 0));
  // (t - 1)^2 = t^2 - 2t + 1 = 2 - t
  CHECK(golden_mul(g(-1, 1), g(-1, 1)) == g(2, -1));
  CHECK(GoldenNum::tau() * GoldenNum::kappa() == GoldenNum(1));
  CHECK(GoldenNum::kappa() == GoldenNum::tau() - GoldenNum(1));
}

TEST_CASE("zero test is exact") {
  CHECK(golden_is_zero(g(0, 0)));
  CHECK_FALSE(golden_is_zero(g(2, -1)));
  CHECK_FALSE(golden_is_zero(g(-1, 1)));
  CHECK_FALSE(golden_is_zero(GoldenNum(mpq_class(1, 1'000'000'007), 0)));
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(0x600c311);
  for (int i = 0; i < 500; ++i) {
    const GoldenNum x = random_small(rng);
    const GoldenNum y = random_small(rng);
    const GoldenNum z = random_small(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == GoldenNum());
    // The Galois conjugate is a ring homomorphism.
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("to_double tracks the float product") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    const GoldenNum x = g(d(rng), d(rng));
    const GoldenNum y = g(d(rng), d(rng));
    const double exact = (x * y).to_double();
    const double approx = x.to_double() * y.to_double();
    // Relative to the factor magnitudes: the product itself may cancel.
    const double scale = std::max(1.0, std::abs(x.to_double() * y.to_double()));
    CHECK(std::abs(exact - approx) <= 1e-12 * scale);
  }
}

TEST_CASE("to_double is correctly rounded for tau") {
  CHECK(GoldenNum::tau().to_double() == 1.6180339887498949);
  CHECK(GoldenNum::kappa().to_double() == 0.6180339887498949);
  // 1 - 0.618... exposes cancellation: t - 1 - kappa = 0 exactly.
  CHECK((GoldenNum::tau() - GoldenNum(1) - GoldenNum::kappa()).to_double() == 0.0);
}

TEST_CASE("exact sign agrees with the real value") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const GoldenNum x = random_small(rng, 200);
    const double v = x.to_double();
    if (std::abs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
  }
  CHECK(g(-1, 1).sign() == 1);
  CHECK(g(2, -1).sign() == 1);
  CHECK(g(-2, 1).sign() == -1);
  CHECK(g(0, 0).sign() == 0);
  CHECK(GoldenNum::kappa() < GoldenNum(1));
  CHECK(GoldenNum(1) < GoldenNum::tau());
}

TEST_CASE("textual form") {
  CHECK(GoldenNum::tau().to_string() == "t");
  CHECK(GoldenNum::kappa().to_string() == "k");
  CHECK((-GoldenNum::kappa()).to_string() == "-k");
  CHECK(g(2, -1).to_string() == "2-t");
  CHECK(g(1, 3).to_string() == "1+3t");
  CHECK(g(-2, 0).to_string() == "-2");
  CHECK(GoldenNum(mpq_class(1, 2), mpq_class(-3, 2)).to_string() == "1/2-3/2t");

  CHECK(parse_golden("t") == GoldenNum::tau());
  CHECK(parse_golden("-k") == -GoldenNum::kappa());
  CHECK(parse_golden("2-t") == g(2, -1));
  CHECK(parse_golden(" 1 + 3t ") == g(1, 3));
  CHECK(parse_golden("1/2-1/2k") == GoldenNum(mpq_class(1), mpq_class(-1, 2)));
  CHECK(parse_golden("k+t") == g(-1, 2));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const GoldenNum x = random_small(rng);
    CHECK(parse_golden(x.to_string()) == x);
  }
}

TEST_CASE("malformed text reports the column") {
  CHECK_THROWS_AS(parse_golden(""), ParseError);
  CHECK_THROWS_AS(parse_golden("x"), ParseError);
  CHECK_THROWS_AS(parse_golden("1/0"), ParseError);
  try {
    parse_golden("2t3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
}

TEST_CASE("division by zero throws") { CHECK_THROWS_AS(GoldenNum(1) / GoldenNum(), std::domain_error); }
