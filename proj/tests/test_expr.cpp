#include <doctest.h>

#include "neck/expr.hpp"

using namespace neck;

namespace {

Quiver two_loop() { return parse_quiver("vertex v\nedge a v v\nedge b v v\n"); }

const Arrow A{0, false}, As{0, true}, B{1, false};

}  // namespace

TEST_CASE("algebra expressions") {
  Quiver q = two_loop();
  CHECK(parse_algebra(q, "1") == AlgebraElement::unit());
  CHECK(parse_algebra(q, "h^2") == AlgebraElement::unit(HPoly::monomial(1, 4)));
  CHECK(parse_algebra(q, "cyc(a,b)") ==
        AlgebraElement(lift(q, LieMonomial::cycle(canonical_cycle(q, {A, B})))));
  CHECK(parse_algebra(q, "link([a@1 a*@2])") ==
        AlgebraElement(Link::make(q, {{{A, 1}, {As, 2}}}, {})));
  CHECK(parse_algebra(q, "link([a@4 a*@9])") ==
        parse_algebra(q, "link([a@1 a*@2])"));  // order-isomorphic heights
  CHECK(parse_algebra(q, "idem(v)") == AlgebraElement(Link::make(q, {}, {0})));
  // product = height stacking
  CHECK(parse_algebra(q, "cyc(a)*cyc(a*)") ==
        AlgebraElement(Link::make(q, {{{A, 1}}, {{As, 2}}}, {})));
  CHECK(parse_algebra(q, "3/2*h*link([a@1]) - 1") ==
        AlgebraElement(Link::make(q, {{{A, 1}}}, {}), HPoly::monomial(Rat(3) / 2, 2)) -
            AlgebraElement::unit());
}

TEST_CASE("lie expressions") {
  Quiver q = two_loop();
  CHECK(parse_lie(q, "cyc(a,b,a*,b*)") ==
        LieElement(LieMonomial::cycle(canonical_cycle(q, {A, B, As, Arrow{1, true}}))));
  CHECK(parse_lie(q, "2*idem(v) - cyc(a)") ==
        LieElement(LieMonomial::idem(0), 2) -
            LieElement(LieMonomial::cycle(canonical_cycle(q, {A}))));
  CHECK_THROWS_AS(parse_lie(q, "cyc(a)*cyc(b)"), Error);
  CHECK_THROWS_AS(parse_lie(q, "link([a@1])"), Error);
  CHECK_THROWS_AS(parse_lie(q, "h"), Error);
}

TEST_CASE("parse errors carry positions") {
  Quiver q = two_loop();
  CHECK_THROWS_WITH_AS(parse_algebra(q, "cyc(z)"), doctest::Contains("offset 4"), Error);
  CHECK_THROWS_AS(parse_algebra(q, "cyc(a"), Error);
  CHECK_THROWS_AS(parse_algebra(q, "cyc(a) garbage"), Error);
  CHECK_THROWS_AS(parse_algebra(q, "link([a@1 a@1])"), Error);
  CHECK_THROWS_AS(parse_algebra(q, "idem(w)"), Error);
}

TEST_CASE("round trip: parse after render is the identity") {
  Quiver q = two_loop();
  Rng rng(2024);
  for (int i = 0; i < 40; ++i) {
    AlgebraElement x(random_link(q, rng, 4),
                     HPoly::monomial(Rat(rng.range(-3, 3)), 2 * rng.range(0, 2)));
    AlgebraElement y(random_link(q, rng, 3));
    AlgebraElement e = x + y + AlgebraElement::unit(HPoly(Rat(rng.range(-2, 2))));
    CHECK(parse_algebra(q, e.str(q)) == e);
  }
  // Lie elements
  LieElement l = parse_lie(q, "cyc(a,b) - 3*cyc(a*) + idem(v)");
  CHECK(parse_lie(q, l.str(q)) == l);
  // h-polynomials through the algebra reading
  AlgebraElement hp = AlgebraElement::unit(HPoly::monomial(Rat(3) / 2, 4) +
                                           HPoly::monomial(-1, 2) + HPoly(2));
  CHECK(parse_algebra(q, hp.str(q)) == hp);
}

TEST_CASE("dimension vector parsing") {
  Quiver q = parse_quiver("vertex u\nvertex v\nedge c u v\n");
  DimVector d = parse_dim_vector(q, "v=1,u=2");
  CHECK(d.at(0) == 2);
  CHECK(d.at(1) == 1);
  CHECK_THROWS_AS(parse_dim_vector(q, "u=2"), Error);
  CHECK_THROWS_AS(parse_dim_vector(q, "u=2,w=1"), Error);
}
