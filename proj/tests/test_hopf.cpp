#include <doctest.h>

#include <set>

#include "neck/hopf.hpp"

using namespace neck;

namespace {

Quiver one_loop() { return parse_quiver("vertex v\nedge a v v\n"); }
Quiver two_loop() { return parse_quiver("vertex v\nedge a v v\nedge b v v\n"); }

const Arrow A{0, false}, As{0, true};

Link L(const Quiver& q, std::vector<HeightedCycle> cycles, std::vector<int> idems = {}) {
  return Link::make(q, std::move(cycles), std::move(idems));
}

}  // namespace

TEST_CASE("coloring counts on the one-loop quiver") {
  Quiver q = one_loop();
  // single arrow: a cut pair needs both a and a*, so only the two trivial
  // colorings exist
  auto c1 = enumerate_colorings(q, L(q, {{{A, 1}}}), 2);
  CHECK(c1.size() == 2);
  for (const auto& c : c1) CHECK(c.pairs.empty());

  // cycle(a@1 a*@2): the two trivial colorings plus the forced full cut
  auto c2 = enumerate_colorings(q, L(q, {{{A, 1}, {As, 2}}}), 2);
  CHECK(c2.size() == 3);
  int cut = 0;
  for (const auto& c : c2) {
    if (c.pairs.empty()) continue;
    ++cut;
    CHECK(c.sign == 1);
    CHECK(c.exp2_active == 2);  // h^1
    CHECK(c.outputs[0] == L(q, {}, {0}));
    CHECK(c.outputs[1] == L(q, {}, {0}));
  }
  CHECK(cut == 1);

  // one color forbids cuts
  for (int arrows = 1; arrows <= 3; ++arrows)
    for (const Link& x : enumerate_links(q, arrows)) {
      auto cs = enumerate_colorings(q, x, 1);
      CHECK(cs.size() == 1);
      CHECK(cs.front().pairs.empty());
    }
}

TEST_CASE("sign depends only on the pairing, never on the colors") {
  Quiver q = one_loop();
  Link x = L(q, {{{A, 1}, {As, 2}, {A, 3}, {As, 4}}});
  std::map<std::string, std::set<int>> signs_by_pairing;
  for (const auto& c : enumerate_colorings(q, x, 3)) {
    std::string key;
    for (const auto& [p, pp] : c.pairs)
      key += std::to_string(x.height_at(p)) + "~" + std::to_string(x.height_at(pp)) + ";";
    signs_by_pairing[key].insert(c.sign);
  }
  for (const auto& [k, signs] : signs_by_pairing) CHECK(signs.size() == 1);
}

TEST_CASE("coproduct worked values") {
  Quiver q = one_loop();
  HopfCtx ctx(q);
  // Delta(1) = 1 (x) 1
  TensorElement d1 = coproduct(ctx, AlgebraElement::unit(), 2);
  TensorElement want1(2);
  want1.add({Link(), Link()}, HPoly(1));
  CHECK(d1 == want1);

  // Delta([a@1]) = [a@1] (x) 1 + 1 (x) [a@1]
  Link a1 = L(q, {{{A, 1}}});
  TensorElement d2 = coproduct(ctx, AlgebraElement(a1), 2);
  TensorElement want2(2);
  want2.add({a1, Link()}, HPoly(1));
  want2.add({Link(), a1}, HPoly(1));
  CHECK(d2 == want2);

  // Delta(cycle(a@1 a*@2)) = X (x) 1 + 1 (x) X + h (v (x) v)
  Link x = L(q, {{{A, 1}, {As, 2}}});
  Link v = L(q, {}, {0});
  TensorElement d3 = coproduct(ctx, AlgebraElement(x), 2);
  TensorElement want3(2);
  want3.add({x, Link()}, HPoly(1));
  want3.add({Link(), x}, HPoly(1));
  want3.add({v, v}, HPoly::h());
  CHECK(d3 == want3);
}

TEST_CASE("antipode worked values") {
  Quiver q = one_loop();
  HopfCtx ctx(q);
  CHECK(antipode(ctx, AlgebraElement::unit(), AntipodeMethod::Direct) ==
        AlgebraElement::unit());
  CHECK(antipode(ctx, AlgebraElement::unit(), AntipodeMethod::Series) ==
        AlgebraElement::unit());

  Link v = L(q, {}, {0});
  AlgebraElement minus_v = AlgebraElement(v, HPoly(Rat(-1)));
  CHECK(antipode(ctx, AlgebraElement(v), AntipodeMethod::Direct) == minus_v);
  CHECK(antipode(ctx, AlgebraElement(v), AntipodeMethod::Series) == minus_v);

  Link x = L(q, {{{A, 1}, {As, 2}}});
  AlgebraElement want = AlgebraElement(x, HPoly(Rat(-1))) +
                        AlgebraElement(L(q, {}, {0, 0}), HPoly::h());
  CHECK(antipode(ctx, AlgebraElement(x), AntipodeMethod::Direct) == want);
  CHECK(antipode(ctx, AlgebraElement(x), AntipodeMethod::Series) == want);
}

TEST_CASE("the arrows sign policy breaks the antipode axiom where components works") {
  Quiver q = one_loop();
  Link x = L(q, {{{A, 1}, {As, 2}}});
  // under the arrows reading #(X) = 2, so S(X) = +X_r, which fails the
  // worked value above
  HopfOptions flipped;
  flipped.sign = SignPolicy::Arrows;
  HopfCtx ctx(q, flipped);
  AlgebraElement want = AlgebraElement(x, HPoly(Rat(-1))) +
                        AlgebraElement(L(q, {}, {0, 0}), HPoly::h());
  CHECK(antipode(ctx, AlgebraElement(x), AntipodeMethod::Direct) != want);
}

TEST_CASE("verify_hopf") {
  Quiver q = one_loop();
  Report vac = verify_hopf(q, 0, 4, 1);
  CHECK(vac.pass());

  Report rep = verify_hopf(q, 15, 4, 1);
  CHECK(rep.pass());
  CHECK(verify_hopf(q, 15, 4, 1).str() == rep.str());

  Report rep2 = verify_hopf(two_loop(), 10, 4, 3);
  CHECK(rep2.pass());
}

TEST_CASE("flipping the coloring sign is detected by delta-respects-relations") {
  Quiver q = one_loop();
  HopfCtx ctx(q);
  Rewriter& rw = ctx.rewriter();
  Link x = L(q, {{{A, 1}, {As, 2}}});
  auto gens = relation_generators(q, x);
  REQUIRE(gens.size() == 1);
  // mutated coproduct: negate every cut summand
  auto mutated = [&](const AlgebraElement& e) {
    TensorElement t(2);
    for (const auto& [l, c] : e.terms())
      for (const auto& col : enumerate_colorings(q, l, 2)) {
        int sign = col.pairs.empty() ? col.sign : -col.sign;
        t.add(col.outputs, c * HPoly::monomial(sign, col.exp2_active));
      }
    return t;
  };
  TensorElement good = coproduct(ctx, gens[0].expansion, 2);
  CHECK(rw.reduce_factors(good).is_zero());
  TensorElement bad = mutated(gens[0].expansion);
  CHECK_FALSE(rw.reduce_factors(bad).is_zero());
}

TEST_CASE("paper exponent policy is rejected by the delta-respects-relations suite") {
  Quiver q = one_loop();
  HopfOptions paper;
  paper.exponent = ExponentPolicy::Paper;
  Report rep = verify_hopf(q, 25, 5, 1, paper);
  bool relations_fail = false;
  for (const auto& r : rep.identities)
    if (r.identity == "delta-respects-relations" && r.failures > 0) relations_fail = true;
  CHECK(relations_fail);

  // the witness configuration: one cut pair of cyc(a,a*,a,a*) leaves one
  // non-vertex and one vertex orbit, where the paper reading gives h^(1/2)
  Link w = L(q, {{{A, 1}, {As, 2}, {A, 3}, {As, 4}}});
  CHECK_THROWS_AS(enumerate_colorings(q, w, 2, paper), Error);
  // while the default policy stays integral there
  CHECK_NOTHROW(enumerate_colorings(q, w, 2));
}

TEST_CASE("quantization diagnostic") {
  Quiver q = one_loop();
  HopfCtx ctx(q);
  // cyc(a): no cutting pairs at all
  QuantReport r1 = quantization_diagnostic(ctx, canonical_cycle(q, {A}));
  CHECK(r1.ledger.empty());
  CHECK_FALSE(r1.has_cut_colorings);
  CHECK(r1.identity == QuantReport::Identity36::Holds);
  CHECK(r1.enveloping_ok);

  // cyc(a,a*): one cut coloring, both orbits collapse, identity holds
  QuantReport r2 = quantization_diagnostic(ctx, canonical_cycle(q, {A, As}));
  CHECK(r2.has_cut_colorings);
  CHECK(r2.all_cut_orbits_collapse);
  CHECK(r2.ledger.size() == 1);
  CHECK(r2.ledger[0].sign == 1);
  CHECK(r2.ledger[0].exp2_active == 2);
  CHECK(r2.identity == QuantReport::Identity36::Holds);
  CHECK(r2.enveloping_ok);

  // the exponent policies disagree on the adjacent-cut configuration and the
  // ledger flags it
  QuantReport r3 = quantization_diagnostic(ctx, canonical_cycle(q, {A, As, A, As}));
  bool flagged = false;
  for (const auto& row : r3.ledger) flagged = flagged || row.policy_disagreement;
  CHECK(flagged);
  CHECK(!r3.findings.empty());
  CHECK(r3.identity == QuantReport::Identity36::Holds);
}
