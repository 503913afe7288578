#include <catch2/catch_amalgamated.hpp>

#include "credal/interval.hpp"
#include "credal/rational.hpp"

using namespace credal;

TEST_CASE("decimal and fraction literals parse to identical exact values") {
  CHECK(parse_rat("0.2") == parse_rat("1/5"));
  CHECK(parse_rat("0.25") == Rat(1) / 4);
  CHECK(parse_rat("1.25") == Rat(5) / 4);
  CHECK(parse_rat(".5") == Rat(1) / 2);
  CHECK(parse_rat("2.") == Rat(2));
  CHECK(parse_rat("8501/22707") == Rat(8501) / 22707);
  CHECK(parse_rat("-3/6") == Rat(-1) / 2);
  CHECK(parse_rat(" 7 ") == Rat(7));
}

TEST_CASE("canonical text form is lowest terms with integers bare") {
  CHECK(to_string(parse_rat("2/10")) == "1/5");
  CHECK(to_string(parse_rat("4/2")) == "2");
  CHECK(to_string(parse_rat("0.500")) == "1/2");
  CHECK(to_string(Rat(0)) == "0");
  CHECK(to_string(Rat(-6) / 4) == "-3/2");
}

TEST_CASE("arithmetic stays exact through long chains") {
  // 1/3 accumulated 3000 times is exactly 1000.
  Rat acc(0);
  for (int i = 0; i < 3000; ++i) acc += Rat(1) / 3;
  CHECK(acc == Rat(1000));
}

TEST_CASE("bad literals are rejected") {
  CHECK_THROWS_AS(parse_rat(""), SyntaxError);
  CHECK_THROWS_AS(parse_rat("a/b"), SyntaxError);
  CHECK_THROWS_AS(parse_rat("1/0"), SyntaxError);
  CHECK_THROWS_AS(parse_rat("1.2.3"), SyntaxError);
  CHECK_THROWS_AS(parse_rat("1/2/3"), SyntaxError);
  CHECK_THROWS_AS(parse_rat("."), SyntaxError);
  CHECK_THROWS_AS(parse_rat("-"), SyntaxError);
  CHECK_THROWS_AS(parse_rat("1e3"), SyntaxError);
}

TEST_CASE("probability intervals enforce 0 <= lo <= hi <= 1") {
  Interval i(parse_rat("0.2"), parse_rat("0.3"));
  CHECK(i.lo() == Rat(1) / 5);
  CHECK(i.complement() == Interval(parse_rat("0.7"), parse_rat("0.8")));
  CHECK(i.contains(Rat(1) / 4));
  CHECK_FALSE(i.contains(Rat(1) / 2));
  CHECK_THROWS_AS(Interval(Rat(1) / 2, Rat(1) / 3), DomainError);
  CHECK_THROWS_AS(Interval(Rat(-1) / 2, Rat(1) / 3), DomainError);
  CHECK_THROWS_AS(Interval(Rat(1) / 2, Rat(3) / 2), DomainError);
}
