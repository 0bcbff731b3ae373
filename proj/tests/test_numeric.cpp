#include <doctest.h>

#include "fracturan/error.hpp"
#include "fracturan/numeric.hpp"

using namespace fracturan;

TEST_CASE("binomial coefficients") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(1, 2) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(7, -1) == 0);
  CHECK(binom(-3, 2) == 0);
  CHECK(binom(60, 30) == Count("118264581564861424"));
  CHECK(to_decimal(binom(200, 100)) ==
        "90548514656103281165404177077484163874504589675413336841320");
}

TEST_CASE("Pascal's rule for a up to 200") {
  for (std::int64_t a = 0; a < 200; ++a) {
    for (std::int64_t m = 0; m <= a + 1; ++m) {
      CHECK(binom(a + 1, m) == binom(a, m) + binom(a, m - 1));
    }
  }
}

TEST_CASE("signed binomials agree with unsigned ones") {
  for (std::int64_t a = -2; a < 40; ++a) {
    for (std::int64_t b = -2; b < 42; ++b) CHECK(binom_signed(a, b) == SignedCount(binom(a, b)));
  }
}

TEST_CASE("checked arithmetic raises instead of wrapping") {
  CHECK_THROWS_AS(binom(1000, 500), Error);
  try {
    (void)binom(1000, 500);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::overflow);
  }
  CHECK_THROWS_AS(to_count(SignedCount(-1), "test"), Error);
  CHECK_THROWS_AS(Count(0) - Count(1), std::exception);
}

TEST_CASE("decimal conversion") {
  const u128 big = (u128{1} << 127) + 5;
  CHECK(to_decimal(big) == "170141183460469231731687303715884105733");
  CHECK(to_count(big) == parse_count("170141183460469231731687303715884105733"));
  CHECK(to_decimal(u128{0}) == "0");
  CHECK(to_decimal(SignedCount(-42)) == "-42");
  CHECK_THROWS_AS(parse_count("12a"), Error);
  CHECK_THROWS_AS(parse_count(""), Error);
}

TEST_CASE("half integers") {
  CHECK(HalfInt(5).to_string() == "5/2");
  CHECK(HalfInt(4).to_string() == "2");
  CHECK(HalfInt(0).to_string() == "0");
  CHECK(HalfInt::from_integer(3).doubled() == 6);
  CHECK(HalfInt(5).is_integer() == false);
  CHECK(HalfInt(3) < HalfInt(4));
}
