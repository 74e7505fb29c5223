#include <doctest.h>

#include "cascade/rat.hpp"

using namespace cascade;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rat a(1, 3), b(2, 9);
  CHECK((a + b).str() == "5/9");
  CHECK((a - b).str() == "1/9");
  CHECK((a * b).str() == "2/27");
  CHECK((a / b).str() == "3/2");
  CHECK(Rat(-4, -6) == Rat(2, 3));
  CHECK(Rat(4, -6) == Rat(-2, 3));
  CHECK(Rat(4, -6).den() == 3);
  CHECK_THROWS(Rat(1, 0));
  CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("pow3 and exact log3") {
  CHECK(Rat::pow3(0) == Rat(1));
  CHECK(Rat::pow3(3) == Rat(27));
  CHECK(Rat::pow3(-4) == Rat(1, 81));
  CHECK(Rat::pow3(5).log3_exact().value() == 5);
  CHECK(Rat::pow3(-7).log3_exact().value() == -7);
  CHECK(!Rat(2, 3).log3_exact().has_value());
  CHECK(!Rat(6).log3_exact().has_value());
  CHECK(Rat(1).log3_exact().value() == 0);
}

TEST_CASE("interval basics") {
  RInterval iv(Rat(1, 3), Rat(2, 3));
  CHECK(iv.length() == Rat(1, 3));
  CHECK(iv.midpoint() == Rat(1, 2));
  CHECK(iv.contains(RInterval(Rat(1, 2), Rat(5, 9))));
  CHECK(!iv.contains(RInterval(Rat(1, 4), Rat(1, 2))));
  CHECK(iv.meets(RInterval(Rat(2, 3), Rat(1))));
  CHECK(!iv.interior_intersects(RInterval(Rat(2, 3), Rat(1))));
  CHECK_THROWS(RInterval(Rat(1), Rat(0)));

  CofiniteInterval cof(RInterval(Rat(0), Rat(1), false, false));
  CHECK(cof.contains_point(Rat(0)));
  CHECK(cof.contains_point(Rat(2)));
  CHECK(!cof.contains_point(Rat(1, 2)));
  CHECK(cof.contains(RInterval(Rat(2), Rat(3))));
}
