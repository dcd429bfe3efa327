#include "neck/lie.hpp"

#include <sstream>

#include "neck/rng.hpp"

namespace neck {

void LieElement::add(const LieMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement LieElement::operator+(const LieElement& o) const {
  LieElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

LieElement LieElement::operator-(const LieElement& o) const {
  LieElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, -c);
  return out;
}

LieElement LieElement::scale(const Rat& c) const {
  LieElement out;
  for (const auto& [m, v] : terms_) out.add(m, v * c);
  return out;
}

std::string LieElement::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << a << "*";
    os << m.str(q);
  }
  return os.str();
}

void LieTensor::add(const std::vector<LieMonomial>& key, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LieTensor LieTensor::operator+(const LieTensor& o) const {
  LieTensor out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

LieTensor LieTensor::operator-(const LieTensor& o) const {
  LieTensor out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, -c);
  return out;
}

LieTensor LieTensor::scale(const Rat& c) const {
  LieTensor out(arity_);
  for (const auto& [k, v] : terms_) out.add(k, v * c);
  return out;
}

std::string LieTensor::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << a << "*";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) os << "⊗";
      os << k[i].str(q);
    }
  }
  return os.str();
}

void PathElement::add(const PathWord& p, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void PathTensor::add(const PathWord& a, const PathWord& b, const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(a, b);
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int arrow_bracket(Arrow f, Arrow g) {
  if (f.edge != g.edge || f.starred == g.starred) return 0;
  return f.starred ? -1 : 1;
}

namespace {

/// Cyclic segment of w strictly between positions i and j (going forward
/// from i+1 up to j-1), as a LieMonomial starting conceptually at
/// target(a_i).  Empty segments give the idempotent there.
LieMonomial cyclic_segment(const Quiver& q, const std::vector<Arrow>& a, int from,
                           int to) {
  const int n = static_cast<int>(a.size());
  std::vector<Arrow> seg;
  for (int k = (from + 1) % n; k != to; k = (k + 1) % n) seg.push_back(a[k]);
  if (seg.empty()) return LieMonomial::idem(q.target(a[from]));
  return LieMonomial::cycle(canonical_cycle(q, seg));
}

}  // namespace

LieElement bracket(const Quiver& q, const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [mx, cx] : x.terms()) {
    if (mx.is_idem()) continue;  // {b, y} = 0 for b in B
    for (const auto& [my, cy] : y.terms()) {
      if (my.is_idem()) continue;
      const auto& a = mx.word().arrows();
      const auto& b = my.word().arrows();
      const int k = static_cast<int>(a.size());
      const int l = static_cast<int>(b.size());
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < l; ++j) {
          int sc = arrow_bracket(a[i], b[j]);
          if (sc == 0) continue;
          // (a_i)_t a_{i+1}..a_{i-1} b_{j+1}..b_{j-1}
          std::vector<Arrow> spliced;
          for (int t = 1; t < k; ++t) spliced.push_back(a[(i + t) % k]);
          for (int t = 1; t < l; ++t) spliced.push_back(b[(j + t) % l]);
          LieMonomial m = spliced.empty()
                              ? LieMonomial::idem(q.target(a[i]))
                              : LieMonomial::cycle(canonical_cycle(q, spliced));
          out.add(m, cx * cy * sc);
        }
      }
    }
  }
  return out;
}

LieTensor cobracket(const Quiver& q, const LieElement& x) {
  LieTensor out(2);
  for (const auto& [m, c] : x.terms()) {
    if (m.is_idem() || m.length() <= 1) continue;  // delta(B) = delta(Qbar) = 0
    const auto& a = m.word().arrows();
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int sc = arrow_bracket(a[i], a[j]);
        if (sc == 0) continue;
        LieMonomial first = cyclic_segment(q, a, j, i);
        LieMonomial second = cyclic_segment(q, a, i, j);
        out.add({first, second}, c * sc);
        out.add({second, first}, -(c * sc));
      }
    }
  }
  return out;
}

PathElement partial(const Quiver& q, const PathWord& p, Arrow e) {
  PathElement out;
  const auto& a = p.arrows();
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (a[i] != e) continue;
    // (a_i)_t a_{i+1}..a_n a_1..a_{i-1}; the wrap product vanishes unless
    // the junctions compose in the path algebra.
    std::vector<Arrow> seg;
    for (int t = i + 1; t < n; ++t) seg.push_back(a[t]);
    for (int t = 0; t < i; ++t) seg.push_back(a[t]);
    int at = q.target(a[i]);
    bool ok = true;
    for (const Arrow& ar : seg) {
      if (q.source(ar) != at) {
        ok = false;
        break;
      }
      at = q.target(ar);
    }
    if (!ok) continue;
    out.add(PathWord(q, q.target(a[i]), seg), 1);
  }
  return out;
}

PathElement partial(const Quiver& q, const CyclicWord& w, Arrow e) {
  return partial(q, PathWord(q, q.source(w.arrows().front()), w.arrows()), e);
}

PathTensor double_derivation(const Quiver& q, const PathWord& p, Arrow e) {
  PathTensor out;
  const auto& a = p.arrows();
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (a[i] != e) continue;
    std::vector<Arrow> left(a.begin(), a.begin() + i);
    std::vector<Arrow> right(a.begin() + i + 1, a.end());
    out.add(PathWord(q, p.start(), left), PathWord(q, q.target(a[i]), right), 1);
  }
  return out;
}

PathTensor double_derivation(const Quiver& q, const CyclicWord& w, Arrow e) {
  return double_derivation(q, PathWord(q, q.source(w.arrows().front()), w.arrows()), e);
}

namespace {

std::optional<LieMonomial> project_path(const Quiver& q, const PathWord& p) {
  if (p.start() != p.end()) return std::nullopt;
  if (p.is_idempotent()) return LieMonomial::idem(p.start());
  return LieMonomial::cycle(canonical_cycle(q, p.arrows()));
}

PathWord lift_cycle(const Quiver& q, const CyclicWord& w, int offset) {
  const auto& a = w.arrows();
  const int n = static_cast<int>(a.size());
  std::vector<Arrow> rot;
  rot.reserve(n);
  for (int k = 0; k < n; ++k) rot.push_back(a[(offset % n + k) % n]);
  return PathWord(q, q.source(rot.front()), rot);
}

}  // namespace

LieElement project_cyclic(const Quiver& q, const PathElement& p) {
  LieElement out;
  for (const auto& [pw, c] : p.terms())
    if (auto m = project_path(q, pw)) out.add(*m, c);
  return out;
}

LieElement bracket_via_partials(const Quiver& q, const LieElement& x,
                                const LieElement& y, int lift_offset) {
  LieElement out;
  for (const auto& [mx, cx] : x.terms()) {
    if (mx.is_idem()) continue;
    for (const auto& [my, cy] : y.terms()) {
      if (my.is_idem()) continue;
      PathWord f = lift_cycle(q, mx.word(), lift_offset);
      PathWord g = lift_cycle(q, my.word(), lift_offset);
      for (int e = 0; e < q.num_edges(); ++e) {
        Arrow xe{e, false};
        Arrow xs{e, true};
        auto accumulate = [&](const PathElement& df, const PathElement& dg, int sign) {
          for (const auto& [pf, cf] : df.terms())
            for (const auto& [pg, cg] : dg.terms())
              if (auto prod = pf.compose(q, pg))
                if (auto m = project_path(q, *prod))
                  out.add(*m, cx * cy * cf * cg * sign);
        };
        accumulate(partial(q, f, xe), partial(q, g, xs), 1);
        accumulate(partial(q, f, xs), partial(q, g, xe), -1);
      }
    }
  }
  return out;
}

LieTensor cobracket_via_partials(const Quiver& q, const LieElement& x, int lift_offset) {
  LieTensor out(2);
  for (const auto& [m, c] : x.terms()) {
    if (m.is_idem()) continue;
    PathWord f = lift_cycle(q, m.word(), lift_offset);
    for (int e = 0; e < q.num_edges(); ++e) {
      Arrow xe{e, false};
      Arrow xs{e, true};
      auto accumulate = [&](Arrow d, const PathElement& pf, int sign) {
        for (const auto& [pw, cf] : pf.terms()) {
          PathTensor dd = double_derivation(q, pw, d);
          for (const auto& [pair, cd] : dd.terms()) {
            auto a = project_path(q, pair.first);
            auto b = project_path(q, pair.second);
            if (a && b) out.add({*a, *b}, c * cf * cd * sign);
          }
        }
      };
      accumulate(xe, partial(q, f, xs), 1);
      accumulate(xs, partial(q, f, xe), -1);
    }
  }
  return out;
}

LieTensor wedge(const LieElement& a, const LieElement& b) {
  LieTensor out(2);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      out.add({ma, mb}, ca * cb);
      out.add({mb, ma}, -(ca * cb));
    }
  return out;
}

LieTensor tensor_bracket_right(const Quiver& q, const LieTensor& t, const LieElement& f) {
  // {a (x) b, 1 (x) f + f (x) 1} = {a,f} (x) b + a (x) {b,f}
  LieTensor out(2);
  for (const auto& [k, c] : t.terms()) {
    LieElement a(k[0]), b(k[1]);
    LieElement af = bracket(q, a, f);
    LieElement bf = bracket(q, b, f);
    for (const auto& [m, cb] : af.terms()) out.add({m, k[1]}, c * cb);
    for (const auto& [m, cb] : bf.terms()) out.add({k[0], m}, c * cb);
  }
  return out;
}

LieTensor tensor_bracket_left(const Quiver& q, const LieElement& e, const LieTensor& t) {
  // {1 (x) e + e (x) 1, c (x) d} = {e,c} (x) d + c (x) {e,d}
  LieTensor out(2);
  for (const auto& [k, c] : t.terms()) {
    LieElement cc(k[0]), d(k[1]);
    LieElement ec = bracket(q, e, cc);
    LieElement ed = bracket(q, e, d);
    for (const auto& [m, cb] : ec.terms()) out.add({m, k[1]}, c * cb);
    for (const auto& [m, cb] : ed.terms()) out.add({k[0], m}, c * cb);
  }
  return out;
}

LieElement bracket_contract(const Quiver& q, const LieTensor& t) {
  LieElement out;
  for (const auto& [k, c] : t.terms()) {
    LieElement a(k[0]), b(k[1]);
    out = out + bracket(q, a, b).scale(c);
  }
  return out;
}

LieTensor cobracket_first_slot(const Quiver& q, const LieTensor& t) {
  LieTensor out(3);
  for (const auto& [k, c] : t.terms()) {
    LieTensor d = cobracket(q, LieElement(k[0]));
    for (const auto& [dk, dc] : d.terms()) out.add({dk[0], dk[1], k[1]}, c * dc);
  }
  return out;
}

LieTensor alt3(const LieTensor& t) {
  LieTensor out(3);
  for (const auto& [k, c] : t.terms()) {
    out.add({k[0], k[1], k[2]}, c);
    out.add({k[1], k[2], k[0]}, c);
    out.add({k[2], k[0], k[1]}, c);
  }
  return out;
}

// --- seeded suite ---------------------------------------------------------

namespace {

CyclicWord random_word(const Quiver& q, Rng& rng, int max_len);

}  // namespace

CyclicWord random_cyclic_word(const Quiver& q, Rng& rng, int max_len) {
  return random_word(q, rng, max_len);
}

namespace {

/// Random composable cyclic word of length in [1, max_len]; closed walks
/// built from uniform arrows with rejection.
CyclicWord random_word(const Quiver& q, Rng& rng, int max_len) {
  auto all = q.arrows();
  while (true) {
    int len = static_cast<int>(rng.range(1, max_len));
    std::vector<Arrow> walk;
    walk.push_back(all[rng.below(all.size())]);
    bool ok = true;
    for (int i = 1; i < len; ++i) {
      std::vector<Arrow> next;
      for (Arrow a : all)
        if (q.source(a) == q.target(walk.back())) next.push_back(a);
      if (next.empty()) {
        ok = false;
        break;
      }
      walk.push_back(next[rng.below(next.size())]);
    }
    if (!ok) continue;
    if (q.target(walk.back()) != q.source(walk.front())) continue;
    return canonical_cycle(q, walk);
  }
}

/// Random element: one to three monomials, coefficients in [-3,3]\{0};
/// occasionally a bare idempotent to exercise the B boundary cases.
LieElement random_element(const Quiver& q, Rng& rng, int max_len) {
  LieElement out;
  int parts = static_cast<int>(rng.range(1, 3));
  for (int i = 0; i < parts; ++i) {
    Rat c(rng.range(1, 3) * (rng.below(2) ? 1 : -1));
    if (rng.below(8) == 0) {
      out.add(LieMonomial::idem(static_cast<int>(rng.below(q.num_vertices()))), c);
    } else {
      out.add(LieMonomial::cycle(random_word(q, rng, max_len)), c);
    }
  }
  return out;
}

}  // namespace

Report verify_lie(const Quiver& q, int samples, int max_len, unsigned long long seed) {
  Report rep;
  rep.suite = "lie";
  IdentityResult antisym{"antisymmetry", 0, 0, ""};
  IdentityResult jacobi{"jacobi", 0, 0, ""};
  IdentityResult cojacobi{"co-jacobi", 0, 0, ""};
  IdentityResult cocycle{"cocycle", 0, 0, ""};
  IdentityResult brdelta{"br-after-delta", 0, 0, ""};
  IdentityResult br_eq{"bracket-via-partials", 0, 0, ""};
  IdentityResult cobr_eq{"cobracket-via-partials", 0, 0, ""};

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    LieElement x = random_element(q, rng, max_len);
    LieElement y = random_element(q, rng, max_len);
    LieElement z = random_element(q, rng, max_len);
    int offset = static_cast<int>(rng.below(6));
    auto witness = [&](const char* what) {
      return std::string(what) + " at sample " + std::to_string(s) + ": x=" +
             x.str(q) + " y=" + y.str(q) + " z=" + z.str(q);
    };

    ++antisym.cases;
    if (!(bracket(q, x, y) + bracket(q, y, x)).is_zero()) {
      if (antisym.failures++ == 0) antisym.first_witness = witness("antisymmetry");
    }

    ++jacobi.cases;
    LieElement jac = bracket(q, x, bracket(q, y, z)) +
                     bracket(q, y, bracket(q, z, x)) +
                     bracket(q, z, bracket(q, x, y));
    if (!jac.is_zero()) {
      if (jacobi.failures++ == 0) jacobi.first_witness = witness("jacobi");
    }

    ++cojacobi.cases;
    if (!alt3(cobracket_first_slot(q, cobracket(q, x))).is_zero()) {
      if (cojacobi.failures++ == 0) cojacobi.first_witness = witness("co-jacobi");
    }

    ++cocycle.cases;
    LieTensor lhs = cobracket(q, bracket(q, x, y));
    LieTensor rhs = tensor_bracket_right(q, cobracket(q, x), y) +
                    tensor_bracket_left(q, x, cobracket(q, y));
    if (!(lhs - rhs).is_zero()) {
      if (cocycle.failures++ == 0) cocycle.first_witness = witness("cocycle");
    }

    ++brdelta.cases;
    if (!bracket_contract(q, cobracket(q, x)).is_zero()) {
      if (brdelta.failures++ == 0) brdelta.first_witness = witness("br-after-delta");
    }

    ++br_eq.cases;
    if (bracket(q, x, y) != bracket_via_partials(q, x, y, offset)) {
      if (br_eq.failures++ == 0) br_eq.first_witness = witness("bracket-via-partials");
    }

    ++cobr_eq.cases;
    if (!(cobracket(q, x) - cobracket_via_partials(q, x, offset)).is_zero()) {
      if (cobr_eq.failures++ == 0)
        cobr_eq.first_witness = witness("cobracket-via-partials");
    }
  }

  rep.identities = {antisym, jacobi, cojacobi, cocycle, brdelta, br_eq, cobr_eq};
  return rep;
}

}  // namespace neck
