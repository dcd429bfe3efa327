#include "neck/hopf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace neck {

ExponentPolicy parse_exponent_policy(const std::string& s) {
  if (s == "paper") return ExponentPolicy::Paper;
  if (s == "alt") return ExponentPolicy::Alt;
  throw Error(ErrorKind::Usage, "unknown exponent policy '" + s + "' (paper|alt)");
}

SignPolicy parse_sign_policy(const std::string& s) {
  if (s == "components") return SignPolicy::Components;
  if (s == "arrows") return SignPolicy::Arrows;
  throw Error(ErrorKind::Usage, "unknown sign policy '" + s + "' (components|arrows)");
}

std::string Coloring::describe(const Quiver& q, const Link& x) const {
  std::ostringstream os;
  os << "I={";
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ", ";
    const auto& [p, pp] = pairs[i];
    os << q.arrow_name(x.arrow_at(p)) << "@" << x.height_at(p) << "~"
       << q.arrow_name(x.arrow_at(pp)) << "@" << x.height_at(pp);
  }
  os << "} colors=[";
  for (size_t i = 0; i < orbit_color.size(); ++i) {
    if (i) os << ",";
    os << orbit_color[i] << (orbit_is_vertex[i] ? "v" : "");
  }
  for (size_t i = 0; i < idem_color.size(); ++i) os << ";" << idem_color[i];
  os << "]";
  return os.str();
}

std::vector<Coloring> enumerate_colorings(const Quiver& q, const Link& x, int n,
                                          const HopfOptions& opt) {
  if (n < 1) throw Error(ErrorKind::Domain, "coloring count must be >= 1");

  std::vector<Pos> pos_list;
  for (int ci = 0; ci < static_cast<int>(x.cycles().size()); ++ci)
    for (int off = 0; off < static_cast<int>(x.cycles()[ci].size()); ++off)
      pos_list.push_back(Pos{ci, off});
  const int P = static_cast<int>(pos_list.size());
  std::vector<int> first_id(x.cycles().size() + 1, 0);
  for (size_t ci = 0; ci < x.cycles().size(); ++ci)
    first_id[ci + 1] = first_id[ci] + static_cast<int>(x.cycles()[ci].size());
  auto id_of = [&](Pos p) { return first_id[p.cycle] + p.offset; };

  const int N = x.num_components();
  const int m = x.num_idems();
  std::vector<int> match(P, -1);
  std::vector<Coloring> out;

  auto process_matching = [&]() {
    // f-orbits: the cyclic successor, rerouted across cuts
    std::vector<int> orbit_of(P, -1);
    std::vector<std::vector<Pos>> orbits;
    for (int start = 0; start < P; ++start) {
      if (orbit_of[start] >= 0) continue;
      std::vector<Pos> orbit;
      int cur = start;
      while (orbit_of[cur] < 0) {
        orbit_of[cur] = static_cast<int>(orbits.size());
        orbit.push_back(pos_list[cur]);
        Pos base = match[cur] >= 0 ? pos_list[match[cur]] : pos_list[cur];
        cur = id_of(x.succ(base));
      }
      orbits.push_back(std::move(orbit));
    }
    const int q_total = static_cast<int>(orbits.size());

    std::vector<bool> is_vertex(q_total, true);
    for (int id = 0; id < P; ++id)
      if (match[id] < 0) is_vertex[orbit_of[id]] = false;
    int q_nv = 0;
    for (bool v : is_vertex)
      if (!v) ++q_nv;

    // pair constraints: the orbit holding the higher cut gets the larger color
    std::vector<std::pair<Pos, Pos>> pairs;
    std::vector<std::pair<int, int>> less_than;  // (orbit a, orbit b): c(a) < c(b)
    int npairs = 0;
    int sign = 1;
    for (int id = 0; id < P; ++id) {
      if (match[id] < id) continue;  // uncut, or the pair was handled at its partner
      ++npairs;
      const Pos p = pos_list[id];
      const Pos pp = pos_list[match[id]];
      pairs.emplace_back(p, pp);
      const int oa = orbit_of[id];
      const int ob = orbit_of[match[id]];
      if (oa == ob) return;  // c(oa) != c(ob) is unsatisfiable
      if (x.height_at(p) < x.height_at(pp))
        less_than.emplace_back(oa, ob);
      else
        less_than.emplace_back(ob, oa);
      // sign factor of the Q-side position of the pair
      const int qid = x.arrow_at(p).starred ? match[id] : id;
      const Pos qp = pos_list[qid];
      const Pos qpp = pos_list[match[qid]];
      sign *= x.height_at(qp) < x.height_at(qpp) ? 1 : -1;
    }

    const int exp2_paper = npairs + N - q_nv;
    const int exp2_alt = npairs + q_total - N;
    const int exp2_active =
        opt.exponent == ExponentPolicy::Paper ? exp2_paper : exp2_alt;

    // color the orbits subject to the strict constraints, idempotents freely
    std::vector<int> ocolor(q_total, 0);
    std::vector<int> icolor(m, 0);
    std::function<void(int)> color_idems = [&](int slot) {
      if (slot == m) {
        Coloring col;
        col.colors = n;
        col.pairs = pairs;
        col.orbits = orbits;
        col.orbit_is_vertex = is_vertex;
        col.orbit_color = ocolor;
        col.idem_color = icolor;
        col.sign = sign;
        col.exp2_paper = exp2_paper;
        col.exp2_alt = exp2_alt;
        col.exp2_active = exp2_active;
        if (exp2_active < 0 || exp2_active % 2 != 0)
          throw Error(ErrorKind::Integrality,
                      "coloring " + col.describe(q, x) + " of " + x.str(q) +
                          " has h-exponent " + std::to_string(exp2_active) +
                          "/2 under the active policy");
        // assemble X^1 .. X^n
        for (int t = 1; t <= n; ++t) {
          std::vector<HeightedCycle> cycles;
          std::vector<int> idems;
          for (int o = 0; o < q_total; ++o) {
            if (ocolor[o] != t) continue;
            if (is_vertex[o]) {
              idems.push_back(q.source(x.arrow_at(orbits[o].front())));
            } else {
              HeightedCycle c;
              for (const Pos& p : orbits[o])
                if (match[id_of(p)] < 0)
                  c.push_back(HeightedArrow{x.arrow_at(p), x.height_at(p)});
              cycles.push_back(std::move(c));
            }
          }
          for (int s = 0; s < m; ++s)
            if (icolor[s] == t) idems.push_back(x.idems()[s]);
          col.outputs.push_back(Link::make(q, std::move(cycles), std::move(idems)));
        }
        out.push_back(std::move(col));
        return;
      }
      for (int t = 1; t <= n; ++t) {
        icolor[slot] = t;
        color_idems(slot + 1);
      }
    };
    std::function<void(int)> color_orbits = [&](int o) {
      if (o == q_total) {
        color_idems(0);
        return;
      }
      for (int t = 1; t <= n; ++t) {
        bool ok = true;
        for (const auto& [a, b] : less_than) {
          if (a == o && ocolor[b] != 0 && !(t < ocolor[b])) ok = false;
          if (b == o && ocolor[a] != 0 && !(ocolor[a] < t)) ok = false;
        }
        if (!ok) continue;
        ocolor[o] = t;
        color_orbits(o + 1);
        ocolor[o] = 0;
      }
    };
    color_orbits(0);
  };

  std::function<void(int)> rec = [&](int id) {
    if (id == P) {
      process_matching();
      return;
    }
    if (match[id] >= 0) {
      rec(id + 1);
      return;
    }
    rec(id + 1);  // leave uncut
    const Arrow want = involute(x.arrow_at(pos_list[id]));
    for (int j = id + 1; j < P; ++j) {
      if (match[j] >= 0 || x.arrow_at(pos_list[j]) != want) continue;
      match[id] = j;
      match[j] = id;
      rec(id + 1);
      match[id] = -1;
      match[j] = -1;
    }
  };
  rec(0);
  return out;
}

const TensorElement& HopfCtx::delta(const Link& l) {
  auto it = delta_cache_.find(l);
  if (it != delta_cache_.end()) return it->second;
  TensorElement t(2);
  for (const auto& col : enumerate_colorings(*q_, l, 2, opt_))
    t.add(col.outputs, HPoly::monomial(col.sign, col.exp2_active));
  return delta_cache_.emplace(l, std::move(t)).first->second;
}

TensorElement coproduct(HopfCtx& ctx, const Link& x, int n) {
  if (n < 2) throw Error(ErrorKind::Domain, "coproduct needs n >= 2");
  if (n == 2) return ctx.delta(x);
  TensorElement t(n);
  for (const auto& col : enumerate_colorings(ctx.quiver(), x, n, ctx.options()))
    t.add(col.outputs, HPoly::monomial(col.sign, col.exp2_active));
  return t;
}

TensorElement coproduct(HopfCtx& ctx, const AlgebraElement& x, int n) {
  TensorElement out(n);
  for (const auto& [l, c] : x.terms()) out = out + coproduct(ctx, l, n).scale(c);
  return out;
}

TensorElement sigma_swap(const TensorElement& t) {
  TensorElement out(t.arity());
  for (const auto& [k, c] : t.terms()) {
    auto key = k;
    std::swap(key[0], key[1]);
    out.add(key, c);
  }
  return out;
}

namespace {

int direct_sign(const Link& l, SignPolicy pol) {
  int count = pol == SignPolicy::Components
                  ? l.num_components() + l.num_idems()
                  : l.num_arrows() + l.num_idems();
  return count % 2 == 0 ? 1 : -1;
}

Link reverse_heights(const Quiver& q, const Link& l) {
  const int M = l.num_arrows() + 1;
  std::vector<HeightedCycle> cycles = l.cycles();
  for (auto& c : cycles)
    for (auto& ha : c) ha.height = M - ha.height;
  return Link::make(q, std::move(cycles), l.idems());
}

/// Delta' = (Id - unit*counit)^(x)2 after Delta: drop terms with an empty
/// factor.
TensorElement reduced_delta(HopfCtx& ctx, const Link& l) {
  TensorElement out(2);
  for (const auto& [k, c] : ctx.delta(l).terms())
    if (!k[0].is_empty() && !k[1].is_empty()) out.add(k, c);
  return out;
}

/// Apply Delta' to one slot of a tensor (used for (Delta')^i and for the
/// coassociativity checks with the full Delta).
TensorElement delta_slot(HopfCtx& ctx, const TensorElement& t, int slot, bool reduced) {
  TensorElement out(t.arity() + 1);
  for (const auto& [k, c] : t.terms()) {
    TensorElement d = reduced ? reduced_delta(ctx, k[slot]) : ctx.delta(k[slot]);
    for (const auto& [dk, dc] : d.terms()) {
      std::vector<Link> key;
      key.reserve(k.size() + 1);
      for (int i = 0; i < slot; ++i) key.push_back(k[i]);
      key.push_back(dk[0]);
      key.push_back(dk[1]);
      for (size_t i = slot + 1; i < k.size(); ++i) key.push_back(k[i]);
      out.add(key, c * dc);
    }
  }
  return out;
}

AlgebraElement multiply_out(const Quiver& q, const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) {
    Link prod;
    for (const auto& l : k) prod = link_multiply(q, prod, l);
    out.add(prod, c);
  }
  return out;
}

}  // namespace

AlgebraElement antipode(HopfCtx& ctx, const AlgebraElement& x, AntipodeMethod m) {
  const Quiver& q = ctx.quiver();
  if (m == AntipodeMethod::Direct) {
    AlgebraElement out;
    for (const auto& [l, c] : x.terms())
      out.add(reverse_heights(q, l), c.scale(direct_sign(l, ctx.options().sign)));
    return ctx.rewriter().reduce(out);
  }

  // series: eta eps(x) + sum_{i>=0} (-1)^(i+1) m^i (Delta')^i (x - eta eps x)
  HPoly eps = counit(x);
  AlgebraElement rest = x - AlgebraElement::unit(eps);
  AlgebraElement total = AlgebraElement::unit(eps);
  TensorElement t(1);
  for (const auto& [l, c] : rest.terms()) t.add({l}, c);
  int parity = -1;  // (-1)^(i+1) for i = 0
  int guard = 0;
  while (!t.is_zero()) {
    if (++guard > 1000)
      throw Error(ErrorKind::Domain, "series antipode failed to terminate");
    total = total + multiply_out(q, t).scale(HPoly(parity));
    t = delta_slot(ctx, t, 0, /*reduced=*/true);
    parity = -parity;
  }
  return ctx.rewriter().reduce(total);
}

// --- verification -----------------------------------------------------------

Report verify_hopf(const Quiver& q, int samples, int max_arrows,
                   unsigned long long seed, const HopfOptions& opt) {
  Report rep;
  rep.suite = "hopf";
  HopfCtx ctx(q, opt);
  Rewriter& rw = ctx.rewriter();
  Rng rng(seed);

  auto tensors_equal = [&](const TensorElement& a, const TensorElement& b) {
    return (rw.reduce_factors(a) - rw.reduce_factors(b)).is_zero();
  };

  for (int s = 0; s < samples; ++s) {
    Link X = random_link(q, rng, max_arrows);
    Link Y = random_link(q, rng, max_arrows);
    const std::string wit =
        "sample " + std::to_string(s) + ": X=" + X.str(q) + " Y=" + Y.str(q);
    auto run = [&](const std::string& identity, const std::function<bool()>& check) {
      bool ok = false;
      std::string extra;
      try {
        ok = check();
      } catch (const Error& e) {
        ok = false;
        extra = std::string(" [") + e.what() + "]";
      }
      rep.record(identity, ok, wit + extra);
    };

    run("coassociativity", [&] {
      TensorElement d2(2);
      d2 = ctx.delta(X);
      TensorElement left = delta_slot(ctx, d2, 0, false);
      TensorElement right = delta_slot(ctx, d2, 1, false);
      TensorElement direct = coproduct(ctx, X, 3);
      return tensors_equal(left, direct) && tensors_equal(right, direct);
    });

    run("coproduct-multiplicative", [&] {
      Link XY = link_multiply(q, X, Y);
      return tensors_equal(coproduct(ctx, XY, 2),
                           tensor_multiply(q, ctx.delta(X), ctx.delta(Y)));
    });

    run("no-cross-component-cuts", [&] {
      Link XY = link_multiply(q, X, Y);
      const int nx = X.num_arrows();
      for (const auto& col : enumerate_colorings(q, XY, 2, opt))
        for (const auto& [p, pp] : col.pairs)
          if ((XY.height_at(p) <= nx) != (XY.height_at(pp) <= nx)) return false;
      return true;
    });

    run("counit-axioms", [&] {
      AlgebraElement left, right;
      for (const auto& [k, c] : ctx.delta(X).terms()) {
        if (k[0].is_empty()) left.add(k[1], c);
        if (k[1].is_empty()) right.add(k[0], c);
      }
      AlgebraElement xe = rw.reduce(X);
      return (rw.reduce(left) - xe).is_zero() && (rw.reduce(right) - xe).is_zero();
    });

    run("antipode-axiom", [&] {
      AlgebraElement lhs, rhs;
      for (const auto& [k, c] : ctx.delta(X).terms()) {
        lhs = lhs + multiply(q, antipode(ctx, AlgebraElement(k[0]), AntipodeMethod::Direct),
                             AlgebraElement(k[1]))
                        .scale(c);
        rhs = rhs + multiply(q, AlgebraElement(k[0]),
                             antipode(ctx, AlgebraElement(k[1]), AntipodeMethod::Direct))
                        .scale(c);
      }
      AlgebraElement target = AlgebraElement::unit(X.is_empty() ? HPoly(1) : HPoly());
      return (rw.reduce(lhs) - target).is_zero() && (rw.reduce(rhs) - target).is_zero();
    });

    run("antipode-squared", [&] {
      AlgebraElement s2 = antipode(ctx, antipode(ctx, AlgebraElement(X), AntipodeMethod::Direct),
                                   AntipodeMethod::Direct);
      return (s2 - rw.reduce(X)).is_zero();
    });

    run("antipode-direct-vs-series", [&] {
      return (antipode(ctx, AlgebraElement(X), AntipodeMethod::Direct) -
              antipode(ctx, AlgebraElement(X), AntipodeMethod::Series))
          .is_zero();
    });

    run("delta-respects-relations", [&] {
      for (const auto& g : relation_generators(q, X))
        if (!rw.reduce_factors(coproduct(ctx, g.expansion, 2)).is_zero()) return false;
      return true;
    });
  }
  return rep;
}

// --- quantization diagnostic -------------------------------------------------

std::string QuantReport::str() const {
  std::ostringstream os;
  os << "word " << word << "\n";
  if (ledger.empty()) {
    os << "  no cutting pairs; D = 0";
    if (identity == Identity36::Holds) os << "; delta matches; identity holds";
    os << "\n";
  }
  for (const auto& row : ledger) {
    os << "  coloring " << row.cut_desc << " sign=" << (row.sign > 0 ? "+1" : "-1")
       << " exp[active]=" << row.exp2_active << "/2 exp[paper]=" << row.exp2_paper
       << "/2 exp[alt]=" << row.exp2_alt << "/2 -> " << row.output_desc;
    if (row.policy_disagreement) os << "  (policies disagree)";
    os << "\n";
  }
  os << "  enveloping mod h: " << (enveloping_ok ? "PASS" : "FAIL");
  if (!enveloping_ok) os << " [" << enveloping_witness << "]";
  os << "\n";
  os << "  sect-3.6 identity: ";
  switch (identity) {
    case Identity36::Holds: os << "holds"; break;
    case Identity36::NotDivisible: os << "FINDING (not divisible by h)"; break;
    case Identity36::Mismatch: os << "FINDING (mismatch)"; break;
  }
  if (!identity_detail.empty()) os << " " << identity_detail;
  os << "\n";
  for (const auto& f : findings) os << "  finding: " << f << "\n";
  return os.str();
}

QuantReport quantization_diagnostic(HopfCtx& ctx, const CyclicWord& w) {
  const Quiver& q = ctx.quiver();
  Rewriter& rw = ctx.rewriter();
  QuantReport rep;
  rep.word = w.str(q);
  LieElement x(LieMonomial::cycle(w));
  Link X = lift(q, LieMonomial::cycle(w));

  // ledger of cut colorings
  std::vector<Coloring> cols;
  bool enumeration_ok = true;
  try {
    cols = enumerate_colorings(q, X, 2, ctx.options());
  } catch (const Error& e) {
    enumeration_ok = false;
    rep.findings.push_back(std::string("integrality: ") + e.what());
    rep.identity = QuantReport::Identity36::NotDivisible;
    rep.identity_detail = "(coloring enumeration aborted under the active policy)";
  }
  for (const auto& col : cols) {
    if (col.pairs.empty()) continue;
    rep.has_cut_colorings = true;
    for (bool v : col.orbit_is_vertex)
      if (!v) rep.all_cut_orbits_collapse = false;
    QuantLedgerRow row;
    row.cut_desc = col.describe(q, X);
    row.sign = col.sign;
    row.exp2_active = col.exp2_active;
    row.exp2_paper = col.exp2_paper;
    row.exp2_alt = col.exp2_alt;
    row.policy_disagreement = col.exp2_paper != col.exp2_active;
    std::ostringstream os;
    os << col.outputs[0].str(q) << "⊗" << col.outputs[1].str(q);
    row.output_desc = os.str();
    if (row.policy_disagreement)
      rep.findings.push_back("exponent policies disagree on coloring " + row.cut_desc +
                             ": paper=" + std::to_string(row.exp2_paper) +
                             "/2, active=" + std::to_string(row.exp2_active) + "/2");
    rep.ledger.push_back(std::move(row));
  }

  // (a) enveloping-algebra law mod h against small partners
  {
    std::vector<CyclicWord> partners = enumerate_words(q, 1);
    for (const auto& wy : enumerate_words(q, 2)) partners.push_back(wy);
    partners.push_back(w);
    for (const auto& wy : partners) {
      LieElement y(LieMonomial::cycle(wy));
      AlgebraElement lx = lift(q, x);
      AlgebraElement ly = lift(q, y);
      AlgebraElement comm = multiply(q, lx, ly) - multiply(q, ly, lx);
      AlgebraElement lhs = rw.reduce(comm).mod_h();
      AlgebraElement rhs = rw.reduce(lift(q, bracket(q, x, y))).mod_h();
      if (!(lhs - rhs).is_zero()) {
        rep.enveloping_ok = false;
        rep.enveloping_witness = "x=" + w.str(q) + " y=" + wy.str(q);
        break;
      }
    }
  }

  // (b) div_h(Delta - sigma Delta) against the cobracket, mod h
  if (enumeration_ok) {
    TensorElement D = ctx.delta(X) - sigma_swap(ctx.delta(X));
    bool divisible = true;
    TensorElement Dh(2);
    try {
      for (const auto& [k, c] : D.terms()) Dh.add(k, c.div_h());
    } catch (const Error& e) {
      divisible = false;
      rep.identity = QuantReport::Identity36::NotDivisible;
      rep.identity_detail = std::string("[") + e.what() + "]";
    }
    if (divisible) {
      TensorElement lhs = rw.reduce_factors(Dh);
      TensorElement lhs_mod(2);
      for (const auto& [k, c] : lhs.terms()) lhs_mod.add(k, c.mod_h());
      TensorElement rhs(2);
      LieTensor cb = cobracket(q, x);
      for (const auto& [k, c] : cb.terms())
        rhs.add({lift(q, k[0]), lift(q, k[1])}, HPoly(c));
      rhs = rw.reduce_factors(rhs);
      if ((lhs_mod - rhs).is_zero()) {
        rep.identity = QuantReport::Identity36::Holds;
      } else {
        rep.identity = QuantReport::Identity36::Mismatch;
        rep.identity_detail = "div_h(D) mod h = " + lhs_mod.str(q) +
                              " but cobracket lifts to " + rhs.str(q);
      }
    }
  }
  return rep;
}

}  // namespace neck
