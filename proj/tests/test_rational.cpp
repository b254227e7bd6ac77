#include <doctest.h>

#include <limits>

#include "svx/rational.hpp"

using svx::Rat;

TEST_CASE("rational arithmetic stays exact") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(-a == Rat(-1, 3));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-1, -6) == Rat(1, 6));
  CHECK(Rat(0, 5) == Rat(0));
  CHECK(a > b);
  CHECK(Rat(-1, 2) < Rat(0));
}

TEST_CASE("division by zero and zero denominators are rejected") {
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("decimal parsing is exact") {
  CHECK(Rat::from_decimal("2") == Rat(2));
  CHECK(Rat::from_decimal("-0.125") == Rat(-1, 8));
  CHECK(Rat::from_decimal("0.5") == Rat(1, 2));
  CHECK(Rat::from_decimal("2.5e-3") == Rat(1, 400));
  CHECK(Rat::from_decimal("1E2") == Rat(100));
  CHECK(Rat::from_decimal("0.123456789012345") == Rat(123456789012345L, 1000000000000000L));
  CHECK_THROWS_AS(Rat::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::from_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::from_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::from_decimal("1e"), std::invalid_argument);
}

TEST_CASE("doubles convert exactly as dyadic rationals") {
  CHECK(Rat::from_double(0.25) == Rat(1, 4));
  CHECK(Rat::from_double(-3.0) == Rat(-3));
  double third = 1.0 / 3.0;
  Rat r = Rat::from_double(third);
  CHECK(r.to_double() == third);
  CHECK(r != Rat(1, 3));
  CHECK_THROWS_AS(Rat::from_double(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("string renderings") {
  CHECK(Rat(0).fraction_str() == "0/1");
  CHECK(Rat(-3, 2).fraction_str() == "-3/2");
  CHECK(Rat(1, 8).decimal_str() == "0.125");
  CHECK(Rat(5).decimal_str() == "5");
  CHECK(Rat(-1, 4).decimal_str() == "-0.25");
  CHECK(Rat(1, 10).decimal_str() == "0.1");
  // Repeating expansion falls back to a 17-significant-digit rounding.
  CHECK(Rat(1, 3).decimal_str() == "0.33333333333333331");
  // Round-trip for decimals with at most 15 significant digits.
  Rat w = Rat::from_decimal("0.123456789012345");
  CHECK(Rat::from_decimal(w.decimal_str()) == w);
}
