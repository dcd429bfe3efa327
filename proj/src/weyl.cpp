#include "neck/weyl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace neck {

DimVector DimVector::make(const Quiver& q, std::vector<int> dims) {
  if (static_cast<int>(dims.size()) != q.num_vertices())
    throw Error(ErrorKind::Dimension, "dimension vector must cover every vertex");
  for (int d : dims)
    if (d < 0) throw Error(ErrorKind::Dimension, "dimensions must be nonnegative");
  return DimVector{std::move(dims)};
}

std::string DimVector::str(const Quiver& q) const {
  std::ostringstream os;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ",";
    os << q.vertex_name(static_cast<int>(i)) << "=" << dims[i];
  }
  return os.str();
}

std::string WeylGenerator::str(const Quiver& q) const {
  std::ostringstream os;
  os << (deriv ? "d" : "x") << "[" << q.edge(edge).name << "," << row << "," << col
     << "]";
  return os.str();
}

void WeylElement::add(const WeylMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  if (!(dims_ == o.dims_))
    throw Error(ErrorKind::Dimension, "mixed dimension vectors");
  WeylElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add(m, c);
  return out;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  return *this + o.scale(-1);
}

WeylElement WeylElement::scale(const Rat& c) const {
  WeylElement out(*this);
  out.terms_.clear();
  for (const auto& [m, v] : terms_) out.add(m, v * c);
  return out;
}

std::string WeylElement::str(const Quiver& q) const {
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
    std::vector<std::string> gens;
    for (const auto& g : m.xs) gens.push_back(g.str(q));
    for (const auto& g : m.ds) gens.push_back(g.str(q));
    if (gens.empty()) {
      os << a;
      continue;
    }
    if (a != 1) os << a << " * ";
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) os << " ";
      os << gens[i];
    }
  }
  return os.str();
}

CoordPoly CoordPoly::monomial(const std::vector<WeylGenerator>& xs, const Rat& c) {
  CoordPoly p;
  p.add(xs, c);
  return p;
}

void CoordPoly::add(const std::vector<WeylGenerator>& xs, const Rat& c) {
  if (c == 0) return;
  std::vector<WeylGenerator> key = xs;
  std::sort(key.begin(), key.end());
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoordPoly CoordPoly::operator+(const CoordPoly& o) const {
  CoordPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

std::string CoordPoly::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (const auto& g : k) os << "*" << g.str(q);
  }
  return os.str();
}

namespace {

using GenCount = std::map<WeylGenerator, int>;

GenCount counted(const std::vector<WeylGenerator>& v) {
  GenCount out;
  for (const auto& g : v) ++out[g];
  return out;
}

std::vector<WeylGenerator> flattened(const GenCount& c) {
  std::vector<WeylGenerator> out;
  for (const auto& [g, n] : c)
    for (int i = 0; i < n; ++i) out.push_back(g);
  return out;
}

Rat binom(int n, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Rat factorial(int n) {
  Rat r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

WeylElement weyl_mul(const Quiver& q, const WeylElement& p, const WeylElement& r) {
  if (!(p.dims() == r.dims()))
    throw Error(ErrorKind::Dimension, "mixed dimension vectors");
  WeylElement out(q, p.dims());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mr, cr] : r.terms()) {
      // commute mp.ds past mr.xs, contracting matching generators
      GenCount ds = counted(mp.ds);
      GenCount xs = counted(mr.xs);
      std::vector<WeylGenerator> common;
      for (const auto& [g, n] : ds) {
        WeylGenerator as_x = g;
        as_x.deriv = false;
        if (xs.count(as_x)) common.push_back(g);
      }
      std::function<void(size_t, Rat, GenCount, GenCount)> expand =
          [&](size_t i, Rat coeff, GenCount dleft, GenCount xleft) {
            if (i == common.size()) {
              GenCount allx = counted(mp.xs);
              for (const auto& [g, n] : xleft) allx[g] += n;
              GenCount alld = counted(mr.ds);
              for (const auto& [g, n] : dleft) alld[g] += n;
              WeylMonomial m;
              m.xs = flattened(allx);
              m.ds = flattened(alld);
              out.add(m, cp * cr * coeff);
              return;
            }
            WeylGenerator d = common[i];
            WeylGenerator x = d;
            x.deriv = false;
            int nd = ds.at(d);
            int nx = xs.at(x);
            for (int k = 0; k <= std::min(nd, nx); ++k) {
              GenCount d2 = dleft;
              GenCount x2 = xleft;
              d2[d] -= k;
              if (d2[d] == 0) d2.erase(d);
              x2[x] -= k;
              if (x2[x] == 0) x2.erase(x);
              expand(i + 1, coeff * binom(nd, k) * binom(nx, k) * factorial(k), d2, x2);
            }
          };
      expand(0, 1, ds, xs);
    }
  }
  return out;
}

CoordPoly apply(const Quiver& q, const WeylElement& p, const CoordPoly& f) {
  (void)q;
  CoordPoly out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [k, fc] : f.terms()) {
      // differentiate
      GenCount poly = counted(k);
      Rat coeff = c * fc;
      bool dead = false;
      for (const auto& d : m.ds) {
        WeylGenerator x = d;
        x.deriv = false;
        auto it = poly.find(x);
        if (it == poly.end() || it->second == 0) {
          dead = true;
          break;
        }
        coeff *= it->second;
        if (--it->second == 0) poly.erase(it);
      }
      if (dead) continue;
      for (const auto& x : m.xs) ++poly[x];
      out.add(flattened(poly), coeff);
    }
  }
  return out;
}

WeylElement rho_link(const Quiver& q, const Link& x, const DimVector& d,
                     int star_sign) {
  WeylElement out(q, d);
  Rat prefactor = 1;
  for (int v : x.idems()) prefactor *= d.at(v);
  if (prefactor == 0) return out;
  for (const auto& c : x.cycles())
    for (const auto& ha : c)
      if (ha.arrow.starred) prefactor *= star_sign;

  const int n = x.num_arrows();
  const auto by_height = x.positions_by_height();

  // one summation index per position, ranging over the source dimension
  std::vector<Pos> pos_list;
  std::vector<int> ranges;
  for (int ci = 0; ci < static_cast<int>(x.cycles().size()); ++ci)
    for (int off = 0; off < static_cast<int>(x.cycles()[ci].size()); ++off) {
      Pos p{ci, off};
      pos_list.push_back(p);
      ranges.push_back(d.at(q.source(x.arrow_at(p))));
    }
  auto index_of = [&](Pos p) {
    for (size_t i = 0; i < pos_list.size(); ++i)
      if (pos_list[i] == p) return static_cast<int>(i);
    return -1;
  };
  for (int r : ranges)
    if (r == 0) return out;  // empty sum: the zero operator

  std::vector<int> k(pos_list.size(), 1);
  while (true) {
    // ordered product over heights
    WeylElement prod(q, d);
    prod.add(WeylMonomial{}, 1);
    for (int h = 1; h <= n; ++h) {
      Pos p = by_height[h];
      Arrow a = x.arrow_at(p);
      int kp = k[index_of(p)];
      int kq = k[index_of(x.succ(p))];
      WeylGenerator g;
      g.edge = a.edge;
      if (!a.starred) {
        g.deriv = false;
        g.row = kp;
        g.col = kq;
      } else {
        g.deriv = true;
        g.row = kq;
        g.col = kp;
      }
      WeylElement gen(q, d);
      WeylMonomial gm;
      (g.deriv ? gm.ds : gm.xs).push_back(g);
      gen.add(gm, 1);
      prod = weyl_mul(q, prod, gen);
    }
    out = out + prod;

    // odometer
    size_t i = 0;
    for (; i < k.size(); ++i) {
      if (k[i] < ranges[i]) {
        ++k[i];
        break;
      }
      k[i] = 1;
    }
    if (i == k.size()) break;
    if (k.empty()) break;
  }
  return out.scale(prefactor);
}

WeylElement rho(const Quiver& q, const AlgebraElement& x, const DimVector& d,
                int star_sign) {
  WeylElement out(q, d);
  for (const auto& [l, c] : x.terms())
    out = out + rho_link(q, l, d, star_sign).scale(c.eval_at_one());
  return out;
}

// --- suite ------------------------------------------------------------------

namespace {

WeylGenerator random_generator(const Quiver& q, const DimVector& d, Rng& rng) {
  while (true) {
    int e = static_cast<int>(rng.below(q.num_edges()));
    int ds = d.at(q.edge(e).source);
    int dt = d.at(q.edge(e).target);
    if (ds == 0 || dt == 0) continue;
    WeylGenerator g;
    g.deriv = rng.below(2) == 1;
    g.edge = e;
    g.row = static_cast<int>(rng.range(1, ds));
    g.col = static_cast<int>(rng.range(1, dt));
    return g;
  }
}

WeylElement random_weyl(const Quiver& q, const DimVector& d, Rng& rng) {
  WeylElement out(q, d);
  int nterms = static_cast<int>(rng.range(1, 2));
  for (int t = 0; t < nterms; ++t) {
    WeylMonomial m;
    int ngens = static_cast<int>(rng.range(0, 3));
    for (int i = 0; i < ngens; ++i) {
      WeylGenerator g = random_generator(q, d, rng);
      (g.deriv ? m.ds : m.xs).push_back(g);
    }
    std::sort(m.xs.begin(), m.xs.end());
    std::sort(m.ds.begin(), m.ds.end());
    out.add(m, Rat(rng.range(1, 3) * (rng.below(2) ? 1 : -1)));
  }
  return out;
}

CoordPoly random_poly(const Quiver& q, const DimVector& d, Rng& rng) {
  CoordPoly out;
  int nterms = static_cast<int>(rng.range(1, 2));
  for (int t = 0; t < nterms; ++t) {
    std::vector<WeylGenerator> xs;
    int deg = static_cast<int>(rng.range(0, 3));
    for (int i = 0; i < deg; ++i) {
      WeylGenerator g = random_generator(q, d, rng);
      g.deriv = false;
      xs.push_back(g);
    }
    out.add(xs, Rat(rng.range(1, 3) * (rng.below(2) ? 1 : -1)));
  }
  return out;
}

}  // namespace

Report verify_rep(const Quiver& q, const DimVector& d, int samples,
                  unsigned long long seed) {
  Report rep;
  rep.suite = "rep";
  Rng rng(seed);
  Rewriter rw(q);

  for (int s = 0; s < samples; ++s) {
    Link X = random_link(q, rng, 4);
    Link Y = random_link(q, rng, 4);
    const std::string wit =
        "sample " + std::to_string(s) + ": X=" + X.str(q) + " Y=" + Y.str(q);

    {
      WeylElement lhs = rho_link(q, link_multiply(q, X, Y), d);
      WeylElement rhs = weyl_mul(q, rho_link(q, X, d), rho_link(q, Y, d));
      rep.record("rho-multiplicative", (lhs - rhs).is_zero(), wit);
    }
    {
      bool ok = true;
      for (const auto& g : relation_generators(q, X))
        if (!rho(q, g.expansion, d).is_zero()) {
          ok = false;
          break;
        }
      rep.record("rho-kills-relations", ok, wit);
    }
    {
      WeylElement lhs = rho(q, rw.reduce(AlgebraElement(X)), d);
      WeylElement rhs = rho_link(q, X, d);
      rep.record("rho-after-reduce", (lhs - rhs).is_zero(), wit);
    }
    {
      WeylElement p = random_weyl(q, d, rng);
      WeylElement r = random_weyl(q, d, rng);
      CoordPoly f = random_poly(q, d, rng);
      CoordPoly lhs = apply(q, weyl_mul(q, p, r), f);
      CoordPoly rhs = apply(q, p, apply(q, r, f));
      rep.record("weyl-mul-vs-apply", (lhs.terms() == rhs.terms()),
                 wit + " p=" + p.str(q) + " r=" + r.str(q) + " f=" + f.str(q));
    }
  }
  return rep;
}

}  // namespace neck
