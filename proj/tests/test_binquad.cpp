#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf2conics/binquad.hpp"

using gf2conics::BinaryQuadraticForm;
using gf2conics::Field;

TEST_CASE("the form requires a nonzero theta in range") {
  const Field f(3);
  CHECK_THROWS_AS(BinaryQuadraticForm(f, 0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryQuadraticForm(f, 8), std::invalid_argument);
  CHECK(BinaryQuadraticForm(f, 3).theta() == 3);
}

TEST_CASE("trace criterion matches frozen values") {
  const Field f8(3);
  CHECK(gf2conics::is_irreducible(BinaryQuadraticForm(f8, 1)));        // D(1) = 1
  CHECK_FALSE(gf2conics::is_irreducible(BinaryQuadraticForm(f8, 3)));  // D(x) = 0
  const Field f4(2);
  CHECK_FALSE(gf2conics::is_irreducible(BinaryQuadraticForm(f4, 1)));  // D(1) = 0
}

TEST_CASE("constructive factorization matches frozen values") {
  const Field f8(3);
  const auto p = gf2conics::factor(BinaryQuadraticForm(f8, 3));
  REQUIRE(p.has_value());
  CHECK(p->a == 0x4);
  CHECK(p->b == 0x7);
  CHECK_FALSE(gf2conics::factor(BinaryQuadraticForm(f8, 1)).has_value());

  const Field f4(2);
  const auto q = gf2conics::factor(BinaryQuadraticForm(f4, 1));
  REQUIRE(q.has_value());
  CHECK(q->a == 0x2);
  CHECK(q->b == 0x3);
}

TEST_CASE("brute force factorization matches frozen values") {
  const Field f8(3);
  const auto p = gf2conics::brute_force_factor(BinaryQuadraticForm(f8, 3));
  REQUIRE(p.has_value());
  CHECK(p->a == 0x4);
  CHECK(p->b == 0x7);

  const Field f2(1);
  CHECK_FALSE(gf2conics::brute_force_factor(BinaryQuadraticForm(f2, 1)).has_value());

  const Field f4(2);
  const auto q = gf2conics::brute_force_factor(BinaryQuadraticForm(f4, 1));
  REQUIRE(q.has_value());
  CHECK(q->a == 0x2);
  CHECK(q->b == 0x3);
}

TEST_CASE("criterion, solver, and oracle agree on every theta") {
  for (unsigned n = 1; n <= 8; ++n) {
    const Field f(n);
    for (std::uint32_t theta = 1; theta < f.order(); ++theta) {
      const BinaryQuadraticForm form(f, theta);
      const bool irreducible = gf2conics::is_irreducible(form);
      const auto constructed = gf2conics::factor(form);
      const auto scanned = gf2conics::brute_force_factor(form);
      REQUIRE(constructed.has_value() == !irreducible);
      REQUIRE(scanned.has_value() == !irreducible);
      if (constructed) {
        // the same unordered pair from both routes
        REQUIRE(constructed->a == scanned->a);
        REQUIRE(constructed->b == scanned->b);
        // expansion identity (u + av)(u + bv) = u^2 + v^2 + theta uv
        REQUIRE((constructed->a ^ constructed->b) == theta);
        REQUIRE(f.mul(constructed->a, constructed->b) == 1);
        REQUIRE(constructed->a != constructed->b);
      }
    }
  }
}

TEST_CASE("irreducible theta count is exactly half the nonzero elements") {
  for (unsigned n = 1; n <= 12; ++n) {
    const Field f(n);
    std::uint64_t irreducible = 0;
    for (std::uint32_t theta = 1; theta < f.order(); ++theta) {
      if (gf2conics::is_irreducible(BinaryQuadraticForm(f, theta))) ++irreducible;
    }
    CHECK(irreducible == f.order() / 2);
  }
}
