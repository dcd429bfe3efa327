#include "neck/link.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace neck {

namespace {

void check_cycle(const Quiver& q, const HeightedCycle& c) {
  if (c.empty()) throw Error(ErrorKind::Composability, "empty link component");
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    q.check_arrow(c[i].arrow);
    if (q.target(c[i].arrow) != q.source(c[(i + 1) % n].arrow))
      throw Error(ErrorKind::Composability,
                  "link component does not compose at offset " + std::to_string(i));
    if (c[i].height <= 0)
      throw Error(ErrorKind::Domain, "heights must be positive");
  }
}

std::vector<Arrow> arrows_of(const HeightedCycle& c) {
  std::vector<Arrow> out;
  out.reserve(c.size());
  for (const auto& ha : c) out.push_back(ha.arrow);
  return out;
}

}  // namespace

Link Link::make(const Quiver& q, std::vector<HeightedCycle> cycles,
                std::vector<int> idems) {
  Link out;
  std::vector<int> heights;
  for (const auto& c : cycles) {
    check_cycle(q, c);
    for (const auto& ha : c) heights.push_back(ha.height);
  }
  std::sort(heights.begin(), heights.end());
  if (std::adjacent_find(heights.begin(), heights.end()) != heights.end())
    throw Error(ErrorKind::Domain, "heights must be pairwise distinct");
  for (int v : idems)
    if (v < 0 || v >= q.num_vertices())
      throw Error(ErrorKind::Domain, "idempotent vertex out of range");

  // order-isomorphic relabeling onto 1..N
  auto renorm = [&](int h) {
    return static_cast<int>(std::lower_bound(heights.begin(), heights.end(), h) -
                            heights.begin()) + 1;
  };
  for (auto& c : cycles) {
    for (auto& ha : c) ha.height = renorm(ha.height);
    // minimal height first
    int best = 0;
    for (int i = 1; i < static_cast<int>(c.size()); ++i)
      if (c[i].height < c[best].height) best = i;
    std::rotate(c.begin(), c.begin() + best, c.end());
  }

  // sort components by (underlying word, minimal height); after the rotation
  // above the minimal height sits at offset 0
  std::vector<std::pair<CyclicWord, int>> keys;
  std::vector<int> order(cycles.size());
  keys.reserve(cycles.size());
  for (const auto& c : cycles) keys.emplace_back(canonical_cycle(q, arrows_of(c)), c[0].height);
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (keys[a].first != keys[b].first) return keys[a].first < keys[b].first;
    return keys[a].second < keys[b].second;
  });
  for (int i : order) out.cycles_.push_back(std::move(cycles[i]));

  std::sort(idems.begin(), idems.end());
  out.idems_ = std::move(idems);
  return out;
}

int Link::num_arrows() const {
  int n = 0;
  for (const auto& c : cycles_) n += static_cast<int>(c.size());
  return n;
}

std::vector<Pos> Link::positions_by_height() const {
  std::vector<Pos> by_height(num_arrows() + 1);
  for (int ci = 0; ci < static_cast<int>(cycles_.size()); ++ci)
    for (int off = 0; off < static_cast<int>(cycles_[ci].size()); ++off)
      by_height[cycles_[ci][off].height] = Pos{ci, off};
  return by_height;
}

bool Link::operator<(const Link& o) const {
  if (cycles_ != o.cycles_) return cycles_ < o.cycles_;
  return idems_ < o.idems_;
}

std::string Link::str(const Quiver& q) const {
  if (is_empty()) return "1";
  std::ostringstream os;
  os << "link(";
  bool first = true;
  for (const auto& c : cycles_) {
    if (!first) os << "; ";
    first = false;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << " ";
      os << q.arrow_name(c[i].arrow) << "@" << c[i].height;
    }
    os << "]";
  }
  for (int v : idems_) {
    if (!first) os << "; ";
    first = false;
    os << "idem(" << q.vertex_name(v) << ")";
  }
  os << ")";
  return os.str();
}

void AlgebraElement::add(const Link& l, const HPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(l, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  for (const auto& [l, c] : o.terms_) out.add(l, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  for (const auto& [l, c] : o.terms_) out.add(l, -c);
  return out;
}

AlgebraElement AlgebraElement::scale(const HPoly& c) const {
  AlgebraElement out;
  for (const auto& [l, v] : terms_) out.add(l, v * c);
  return out;
}

AlgebraElement AlgebraElement::mod_h() const {
  AlgebraElement out;
  for (const auto& [l, v] : terms_) out.add(l, v.mod_h());
  return out;
}

namespace {

/// (negative?, rendered absolute value) for one summand.
std::pair<bool, std::string> render_term(const HPoly& coeff, const std::string& body) {
  const bool unit_body = body == "1";
  if (coeff.terms().size() == 1) {
    auto [e, c] = *coeff.terms().begin();
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    HPoly abs_mono = HPoly::monomial(a, e);
    std::string cs = abs_mono.str();
    if (cs == "1") return {neg, body};
    if (unit_body) return {neg, cs};
    return {neg, cs + "*" + body};
  }
  std::string cs = "(" + coeff.str() + ")";
  return {false, unit_body ? cs : cs + "*" + body};
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i == 0)
      os << (parts[i].first ? "-" : "");
    else
      os << (parts[i].first ? " - " : " + ");
    os << parts[i].second;
  }
  return os.str();
}

}  // namespace

std::string AlgebraElement::str(const Quiver& q) const {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [l, c] : terms_) parts.push_back(render_term(c, l.str(q)));
  return join_terms(parts);
}

void TensorElement::add(const std::vector<Link>& key, const HPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, -c);
  return out;
}

TensorElement TensorElement::scale(const HPoly& c) const {
  TensorElement out(arity_);
  for (const auto& [k, v] : terms_) out.add(k, v * c);
  return out;
}

std::string TensorElement::str(const Quiver& q) const {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [k, c] : terms_) {
    std::ostringstream body;
    bool wrap = !(c == HPoly(1)) && !(c == HPoly(Rat(-1)));
    if (wrap) body << "(";
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) body << "⊗";
      body << k[i].str(q);
    }
    if (wrap) body << ")";
    parts.push_back(render_term(c, body.str()));
  }
  return join_terms(parts);
}

// --- lift / product --------------------------------------------------------

Link lift(const Quiver& q, const LieMonomial& m) {
  if (m.is_idem()) return Link::make(q, {}, {m.vertex()});
  HeightedCycle c;
  int h = 1;
  for (Arrow a : m.word().arrows()) c.push_back(HeightedArrow{a, h++});
  return Link::make(q, {c}, {});
}

AlgebraElement lift(const Quiver& q, const LieElement& x) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) out.add(lift(q, m), HPoly(c));
  return out;
}

std::vector<LieMonomial> underlying_words(const Quiver& q, const Link& x) {
  std::vector<LieMonomial> out;
  for (const auto& c : x.cycles())
    out.push_back(LieMonomial::cycle(canonical_cycle(q, arrows_of(c))));
  for (int v : x.idems()) out.push_back(LieMonomial::idem(v));
  std::sort(out.begin(), out.end());
  return out;
}

Link link_multiply(const Quiver& q, const Link& x, const Link& y) {
  const int shift = x.num_arrows();
  std::vector<HeightedCycle> cycles = x.cycles();
  for (HeightedCycle c : y.cycles()) {
    for (auto& ha : c) ha.height += shift;
    cycles.push_back(std::move(c));
  }
  std::vector<int> idems = x.idems();
  idems.insert(idems.end(), y.idems().begin(), y.idems().end());
  return Link::make(q, std::move(cycles), std::move(idems));
}

AlgebraElement multiply(const Quiver& q, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [lx, cx] : x.terms())
    for (const auto& [ly, cy] : y.terms()) out.add(link_multiply(q, lx, ly), cx * cy);
  return out;
}

TensorElement tensor_multiply(const Quiver& q, const TensorElement& x, const TensorElement& y) {
  TensorElement out(x.arity());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      std::vector<Link> key;
      key.reserve(kx.size());
      for (size_t i = 0; i < kx.size(); ++i) key.push_back(link_multiply(q, kx[i], ky[i]));
      out.add(key, cx * cy);
    }
  return out;
}

HPoly counit(const AlgebraElement& x) {
  auto it = x.terms().find(Link());
  return it == x.terms().end() ? HPoly() : it->second;
}

// --- PBW order -------------------------------------------------------------

std::vector<int> pbw_rank_of_height(const Quiver& q, const Link& x) {
  (void)q;
  std::vector<int> rank(x.num_arrows() + 1, 0);
  int base = 0;
  for (const auto& c : x.cycles()) {
    const int n = static_cast<int>(c.size());
    // start at the word-minimal rotation; among several (periodic word),
    // the one holding the smallest height
    auto offs = minimal_rotation_offsets(arrows_of(c));
    int start = offs.front();
    for (int o : offs)
      if (c[o].height < c[start].height) start = o;
    for (int k = 0; k < n; ++k) rank[c[(start + k) % n].height] = base + k + 1;
    base += n;
  }
  return rank;
}

bool is_normal(const Quiver& q, const Link& x) {
  auto rank = pbw_rank_of_height(q, x);
  for (int h = 1; h < static_cast<int>(rank.size()); ++h)
    if (rank[h] != h) return false;
  return true;
}

std::vector<int> inverted_pairs(const Quiver& q, const Link& x) {
  auto rank = pbw_rank_of_height(q, x);
  std::vector<int> out;
  for (int h = 1; h + 1 < static_cast<int>(rank.size()); ++h)
    if (rank[h] > rank[h + 1]) out.push_back(h);
  return out;
}

Link normal_lift(const Quiver& q, const std::vector<LieMonomial>& ms) {
  std::vector<LieMonomial> sorted = ms;
  std::sort(sorted.begin(), sorted.end());
  std::vector<HeightedCycle> cycles;
  std::vector<int> idems;
  int h = 0;
  for (const auto& m : sorted) {
    if (m.is_idem()) {
      idems.push_back(m.vertex());
      continue;
    }
    HeightedCycle c;
    for (Arrow a : m.word().arrows()) c.push_back(HeightedArrow{a, ++h});
    cycles.push_back(std::move(c));
  }
  return Link::make(q, std::move(cycles), std::move(idems));
}

// --- rewriting -------------------------------------------------------------

RewriteStep rewrite_step(const Quiver& q, const Link& x, int height) {
  const auto by_height = x.positions_by_height();
  const Pos lo = by_height[height];
  const Pos hi = by_height[height + 1];
  RewriteStep step;

  // X': heights swapped
  std::vector<HeightedCycle> cycles = x.cycles();
  cycles[lo.cycle][lo.offset].height = height + 1;
  cycles[hi.cycle][hi.offset].height = height;
  step.xprime = Link::make(q, std::move(cycles), x.idems());

  const Arrow a_lo = x.arrow_at(lo);
  const Arrow a_hi = x.arrow_at(hi);
  step.coeff = arrow_bracket(a_lo, a_hi);
  step.eps = lo.cycle == hi.cycle ? 1 : 0;
  if (step.coeff == 0) return step;

  std::vector<HeightedCycle> rest;
  std::vector<int> idems = x.idems();
  for (int ci = 0; ci < static_cast<int>(x.cycles().size()); ++ci)
    if (ci != lo.cycle && ci != hi.cycle) rest.push_back(x.cycles()[ci]);

  auto segment = [&](Pos from, Pos to) {
    // arrows strictly after `from` and strictly before `to`, cyclically,
    // inside from.cycle (== to.cycle for the split, or the whole rest of
    // the component when from == to)
    const auto& comp = x.cycles()[from.cycle];
    const int n = static_cast<int>(comp.size());
    HeightedCycle seg;
    for (int k = (from.offset + 1) % n; k != to.offset; k = (k + 1) % n)
      seg.push_back(comp[k]);
    return seg;
  };

  if (step.eps == 1) {
    // same component: split into the two arcs between the cut positions
    HeightedCycle part1 = segment(hi, lo);
    HeightedCycle part2 = segment(lo, hi);
    if (part1.empty())
      idems.push_back(q.target(a_hi));
    else
      rest.push_back(std::move(part1));
    if (part2.empty())
      idems.push_back(q.target(a_lo));
    else
      rest.push_back(std::move(part2));
  } else {
    // different components: merge the two leftover arcs
    HeightedCycle merged = segment(lo, lo);
    HeightedCycle tail = segment(hi, hi);
    merged.insert(merged.end(), tail.begin(), tail.end());
    if (merged.empty())
      idems.push_back(q.target(a_lo));
    else
      rest.push_back(std::move(merged));
  }
  step.xsecond = Link::make(q, std::move(rest), std::move(idems));
  return step;
}

std::vector<RelationGenerator> relation_generators(const Quiver& q, const Link& x) {
  std::vector<RelationGenerator> out;
  const int n = x.num_arrows();
  const auto by_height = x.positions_by_height();
  for (int h = 1; h < n; ++h) {
    RelationGenerator g;
    g.x = x;
    g.height = h;
    g.lo = by_height[h];
    g.hi = by_height[h + 1];
    g.same_component = g.lo.cycle == g.hi.cycle;
    auto step = rewrite_step(q, x, h);
    g.eps = step.eps;
    g.expansion = AlgebraElement(x) - AlgebraElement(step.xprime);
    if (step.coeff != 0)
      g.expansion =
          g.expansion - AlgebraElement(step.xsecond,
                                       HPoly::monomial(step.coeff, 2 * step.eps));
    out.push_back(std::move(g));
  }
  return out;
}

AlgebraElement Rewriter::reduce(const Link& x) {
  auto it = memo_.find(x);
  if (it != memo_.end()) return it->second;
  auto inverted = inverted_pairs(*q_, x);
  AlgebraElement result;
  if (inverted.empty()) {
    result.add(x, HPoly(1));
  } else {
    auto step = rewrite_step(*q_, x, inverted.front());
    result = reduce(step.xprime);
    if (step.coeff != 0)
      result = result +
               reduce(step.xsecond).scale(HPoly::monomial(step.coeff, 2 * step.eps));
  }
  memo_.emplace(x, result);
  return result;
}

AlgebraElement Rewriter::reduce(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [l, c] : x.terms()) out = out + reduce(l).scale(c);
  return out;
}

TensorElement Rewriter::reduce_factors(const TensorElement& t) {
  TensorElement out(t.arity());
  for (const auto& [key, c] : t.terms()) {
    // expand the product of the reduced factors
    std::vector<std::pair<std::vector<Link>, HPoly>> acc = {{{}, c}};
    for (const auto& l : key) {
      AlgebraElement red = reduce(l);
      std::vector<std::pair<std::vector<Link>, HPoly>> next;
      for (const auto& [prefix, pc] : acc)
        for (const auto& [rl, rc] : red.terms()) {
          auto k = prefix;
          k.push_back(rl);
          next.emplace_back(std::move(k), pc * rc);
        }
      acc = std::move(next);
    }
    for (auto& [k, v] : acc) out.add(k, v);
  }
  return out;
}

AlgebraElement reduce_with_strategy(
    const Quiver& q, const AlgebraElement& x,
    const std::function<int(const std::vector<int>&)>& choose) {
  AlgebraElement out;
  std::map<Link, HPoly> work(x.terms().begin(), x.terms().end());
  while (!work.empty()) {
    auto [l, c] = *work.begin();
    work.erase(work.begin());
    auto inverted = inverted_pairs(q, l);
    if (inverted.empty()) {
      out.add(l, c);
      continue;
    }
    auto step = rewrite_step(q, l, inverted[choose(inverted)]);
    auto push = [&](const Link& nl, const HPoly& nc) {
      auto [it, fresh] = work.try_emplace(nl, nc);
      if (!fresh) {
        it->second += nc;
        if (it->second.is_zero()) work.erase(it);
      }
    };
    push(step.xprime, c);
    if (step.coeff != 0)
      push(step.xsecond, c * HPoly::monomial(step.coeff, 2 * step.eps));
  }
  return out;
}

AlgebraElement reduce_random(const Quiver& q, const AlgebraElement& x, Rng& rng) {
  return reduce_with_strategy(q, x, [&rng](const std::vector<int>& options) {
    return static_cast<int>(rng.below(options.size()));
  });
}

// --- sampling / enumeration ------------------------------------------------

namespace {

std::optional<std::vector<Arrow>> try_closed_walk(const Quiver& q, Rng& rng, int len) {
  auto all = q.arrows();
  std::vector<Arrow> walk;
  walk.push_back(all[rng.below(all.size())]);
  for (int i = 1; i < len; ++i) {
    std::vector<Arrow> next;
    for (Arrow a : all)
      if (q.source(a) == q.target(walk.back())) next.push_back(a);
    if (next.empty()) return std::nullopt;
    walk.push_back(next[rng.below(next.size())]);
  }
  if (q.target(walk.back()) != q.source(walk.front())) return std::nullopt;
  return walk;
}

}  // namespace

Link random_link(const Quiver& q, Rng& rng, int max_arrows) {
  int budget = static_cast<int>(rng.range(1, max_arrows));
  std::vector<HeightedCycle> cycles;
  int used = 0;
  int stuck = 0;
  while (used < budget && stuck < 64) {
    int len = static_cast<int>(rng.range(1, budget - used));
    auto walk = try_closed_walk(q, rng, len);
    if (!walk) {
      ++stuck;
      continue;
    }
    cycles.push_back(HeightedCycle(walk->size()));
    for (size_t i = 0; i < walk->size(); ++i) cycles.back()[i].arrow = (*walk)[i];
    used += len;
  }
  // random height assignment: a shuffled 1..used
  std::vector<int> heights(used);
  for (int i = 0; i < used; ++i) heights[i] = i + 1;
  for (int i = used - 1; i > 0; --i)
    std::swap(heights[i], heights[rng.below(i + 1)]);
  int k = 0;
  for (auto& c : cycles)
    for (auto& ha : c) ha.height = heights[k++];
  std::vector<int> idems;
  if (rng.below(4) == 0) idems.push_back(static_cast<int>(rng.below(q.num_vertices())));
  return Link::make(q, std::move(cycles), std::move(idems));
}

std::vector<CyclicWord> enumerate_words(const Quiver& q, int length) {
  std::set<CyclicWord> out;
  auto all = q.arrows();
  std::vector<Arrow> walk;
  std::function<void()> dfs = [&]() {
    if (static_cast<int>(walk.size()) == length) {
      if (q.target(walk.back()) == q.source(walk.front()))
        out.insert(canonical_cycle(q, walk));
      return;
    }
    for (Arrow a : all) {
      if (!walk.empty() && q.source(a) != q.target(walk.back())) continue;
      walk.push_back(a);
      dfs();
      walk.pop_back();
    }
  };
  if (length > 0) dfs();
  return std::vector<CyclicWord>(out.begin(), out.end());
}

namespace {

void enumerate_partitions(int n, std::vector<std::vector<int>>& blocks,
                          const std::function<void(const std::vector<std::vector<int>>&)>& emit,
                          int next) {
  if (next > n) {
    emit(blocks);
    return;
  }
  // index loop: the recursion grows and shrinks the tail of `blocks`
  const std::size_t existing = blocks.size();
  for (std::size_t i = 0; i < existing; ++i) {
    blocks[i].push_back(next);
    enumerate_partitions(n, blocks, emit, next + 1);
    blocks[i].pop_back();
  }
  blocks.push_back({next});
  enumerate_partitions(n, blocks, emit, next + 1);
  blocks.pop_back();
}

}  // namespace

std::vector<Link> enumerate_links(const Quiver& q, int arrows) {
  std::set<Link> out;
  if (arrows == 0) {
    out.insert(Link());
    return {out.begin(), out.end()};
  }
  // heighted cycles over an exact height set, all rotations collapsing later
  auto cycles_over = [&](const std::vector<int>& heights) {
    std::vector<HeightedCycle> result;
    int len = static_cast<int>(heights.size());
    for (const CyclicWord& w : enumerate_words(q, len)) {
      // every heighted cycle over w can be rotated so its arrows read in
      // canonical order, so permuting the heights over that one sequence
      // covers everything
      std::vector<int> perm = heights;
      std::sort(perm.begin(), perm.end());
      do {
        HeightedCycle c(len);
        for (int i = 0; i < len; ++i) c[i] = HeightedArrow{w.arrows()[i], perm[i]};
        result.push_back(std::move(c));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return result;
  };

  std::vector<std::vector<int>> blocks;
  enumerate_partitions(arrows, blocks,
                       [&](const std::vector<std::vector<int>>& bs) {
                         std::vector<std::vector<HeightedCycle>> choices;
                         for (const auto& b : bs) {
                           choices.push_back(cycles_over(b));
                           if (choices.back().empty()) return;
                         }
                         std::vector<HeightedCycle> picked(bs.size());
                         std::function<void(size_t)> rec = [&](size_t i) {
                           if (i == bs.size()) {
                             out.insert(Link::make(q, picked, {}));
                             return;
                           }
                           for (const auto& c : choices[i]) {
                             picked[i] = c;
                             rec(i + 1);
                           }
                         };
                         rec(0);
                       },
                       1);
  return {out.begin(), out.end()};
}

}  // namespace neck
