#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homlie/rational.hpp"

using homlie::Rat;

TEST_CASE("construction canonicalizes") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(-6, -3) == Rat(2));
  CHECK(Rat(3, 3).numerator() == 1);
  CHECK(Rat(3, -3).denominator() == 1);
}

TEST_CASE("zero denominator rejected") {
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) - Rat(1, 3) == Rat(0));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(-Rat(1, 2) == Rat(-1, 2));
  Rat big = Rat(1);
  for (int i = 0; i < 64; ++i) big *= Rat(10);
  CHECK((big * Rat(1, 3)) * Rat(3) == big);
}

TEST_CASE("comparisons") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1) < Rat(0));
  CHECK(Rat(5, 10) <= Rat(1, 2));
  CHECK(abs(Rat(-3, 4)) == Rat(3, 4));
  CHECK(Rat(-3).sign() == -1);
  CHECK(Rat(0).isZero());
}

TEST_CASE("string round trip") {
  CHECK(Rat::fromString("1/2").str() == "1/2");
  CHECK(Rat::fromString("-7").str() == "-7");
  CHECK(Rat::fromString("4/6").str() == "2/3");
  CHECK(Rat::fromString("0/5").str() == "0");
  CHECK(Rat::fromString("007").str() == "7");
  CHECK_THROWS_AS(Rat::fromString(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::fromString("-"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::fromString("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::fromString("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::fromString("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::fromString("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::fromString("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::fromString("+1"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::fromString("1e3"), std::invalid_argument);
}

TEST_CASE("random values survive the string round trip") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 999);
  for (int i = 0; i < 10000; ++i) {
    Rat r(num(gen), den(gen));
    CHECK(Rat::fromString(r.str()) == r);
  }
}

TEST_CASE("works as an Eigen scalar") {
  using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
  Mat a = Mat::Identity(3, 3);
  Mat b(3, 3);
  b.setZero();
  b(0, 1) = Rat(1, 2);
  b(2, 0) = Rat(-3);
  Mat c = a * b + b;
  CHECK(c == Mat(2 * b));
  CHECK((b.transpose().transpose()) == b);
  Mat d = b * b;
  CHECK(d(2, 1) == Rat(-3, 2));
}
