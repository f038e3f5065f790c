#include "tcd/rational.hpp"

#include "doctest.h"
#include "tcd/errors.hpp"

using namespace tcd;

TEST_CASE("rat_str canonical forms") {
  CHECK(rat_str(Rat(1, 2)) == "1/2");
  CHECK(rat_str(Rat(4, 2)) == "2");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(rat_str(Rat(-3, 9)) == "-1/3");
}

TEST_CASE("rat_parse round-trips and rejects junk") {
  CHECK(rat_parse("7/3") == Rat(7, 3));
  CHECK(rat_parse("-5") == Rat(-5));
  CHECK(rat_parse("6/4") == Rat(3, 2));  // canonicalized
  CHECK(rat_parse(rat_str(Rat(355, 113))) == Rat(355, 113));
  CHECK_THROWS_AS(rat_parse(""), InputError);
  CHECK_THROWS_AS(rat_parse("x/y"), InputError);
  CHECK_THROWS_AS(rat_parse("1/0"), InputError);
  CHECK_THROWS_AS(rat_parse("1.5"), InputError);
}

TEST_CASE("rat_pow exact powers") {
  CHECK(rat_pow(Rat(2, 3), 0) == Rat(1));
  CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(rat_pow(Rat(-1, 2), 2) == Rat(1, 4));
}

TEST_CASE("falling_factorial and int_pow") {
  CHECK(falling_factorial(5, 5) == Int(120));
  CHECK(falling_factorial(6, 4) == Int(360));
  CHECK(falling_factorial(4, 0) == Int(1));
  CHECK(int_pow(2, 10) == Int(1024));
  CHECK(int_pow(7, 0) == Int(1));
}
