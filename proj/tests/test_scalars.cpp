#include <doctest.h>

#include "neck/scalars.hpp"

using namespace neck;

TEST_CASE("hpoly arithmetic") {
  HPoly h = HPoly::h();
  CHECK((h + (-h)).is_zero());
  CHECK(HPoly::monomial(1, 1) * HPoly::monomial(1, 1) == h);  // h^(1/2) * h^(1/2)
  HPoly p = h.scale(2) + HPoly(1);                            // 2h + 1
  CHECK(p.scale(3) == h.scale(6) + HPoly(3));
  CHECK(p.str() == "2*h + 1");
  CHECK((h * h + h.scale(3)).str() == "h^2 + 3*h");
  CHECK(HPoly(Rat(3) / 2).str() == "3/2");
  CHECK((-h).str() == "-h");
}

TEST_CASE("hpoly ring axioms on a few samples") {
  HPoly a = HPoly::monomial(Rat(3) / 2, 4) + HPoly::monomial(-2, 2) + HPoly(1);
  HPoly b = HPoly::monomial(5, 2) - HPoly(Rat(1) / 3);
  HPoly c = HPoly::monomial(-1, 6) + HPoly::monomial(7, 0);
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
}

TEST_CASE("div_h") {
  HPoly p = HPoly::monomial(1, 4) + HPoly::monomial(3, 2);  // h^2 + 3h
  CHECK(p.div_h() == HPoly::h() + HPoly(3));
  CHECK(HPoly::h().div_h() == HPoly(1));
  CHECK_THROWS_AS((HPoly(1) + HPoly::h()).div_h(), Error);
}

TEST_CASE("assert_integral") {
  CHECK(HPoly::h().assert_integral() == HPoly::h());
  CHECK(HPoly().assert_integral().is_zero());
  CHECK_THROWS_AS(HPoly::monomial(1, 1).assert_integral(), Error);
  CHECK_THROWS_AS(HPoly::monomial(1, -2).assert_integral(), Error);
  CHECK(!HPoly::monomial(1, 3).is_integral());
}

TEST_CASE("eval and mod") {
  HPoly p = HPoly::monomial(2, 2) + HPoly(5);
  CHECK(p.eval_at_one() == 7);
  CHECK(p.mod_h() == HPoly(5));
  CHECK(p.coeff(2) == 2);
}
