#ifndef NECK_LINK_HPP
#define NECK_LINK_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neck/lie.hpp"
#include "neck/quiver.hpp"
#include "neck/rng.hpp"
#include "neck/scalars.hpp"

namespace neck {

struct HeightedArrow {
  Arrow arrow;
  int height = 0;

  bool operator==(const HeightedArrow& o) const {
    return arrow == o.arrow && height == o.height;
  }
  bool operator<(const HeightedArrow& o) const {
    if (!(arrow == o.arrow)) return arrow < o.arrow;
    return height < o.height;
  }
};

using HeightedCycle = std::vector<HeightedArrow>;

/// Position of a heighted arrow inside a link: (component, offset).
struct Pos {
  int cycle = -1;
  int offset = -1;
  bool operator==(const Pos& o) const { return cycle == o.cycle && offset == o.offset; }
  bool operator<(const Pos& o) const {
    return cycle != o.cycle ? cycle < o.cycle : offset < o.offset;
  }
};

/// A basis element of the quantized algebra: a symmetric product of
/// height-labeled cycles plus vertex idempotents, kept in canonical form:
/// heights renormalized to 1..N, every cycle rotated minimal-height-first,
/// cycles sorted by (underlying word, minimal height), idempotents sorted.
class Link {
public:
  Link() = default;  // the empty link: the unit of A

  static Link make(const Quiver& q, std::vector<HeightedCycle> cycles,
                   std::vector<int> idems);

  const std::vector<HeightedCycle>& cycles() const { return cycles_; }
  const std::vector<int>& idems() const { return idems_; }

  bool is_empty() const { return cycles_.empty() && idems_.empty(); }
  int num_arrows() const;
  int num_components() const { return static_cast<int>(cycles_.size()); }
  int num_idems() const { return static_cast<int>(idems_.size()); }

  Arrow arrow_at(Pos p) const { return cycles_[p.cycle][p.offset].arrow; }
  int height_at(Pos p) const { return cycles_[p.cycle][p.offset].height; }
  Pos succ(Pos p) const {
    return Pos{p.cycle, (p.offset + 1) % static_cast<int>(cycles_[p.cycle].size())};
  }

  /// Position holding each height; index 1..N.
  std::vector<Pos> positions_by_height() const;

  bool operator==(const Link& o) const {
    return cycles_ == o.cycles_ && idems_ == o.idems_;
  }
  bool operator!=(const Link& o) const { return !(*this == o); }
  bool operator<(const Link& o) const;

  std::string str(const Quiver& q) const;

private:
  std::vector<HeightedCycle> cycles_;
  std::vector<int> idems_;
};

/// C[h]-linear combination of links; no zero coefficients.  The empty link
/// is the identity element.
class AlgebraElement {
public:
  AlgebraElement() = default;
  explicit AlgebraElement(const Link& l, const HPoly& c = HPoly(1)) { add(l, c); }

  static AlgebraElement unit(const HPoly& c = HPoly(1)) { return AlgebraElement(Link(), c); }

  void add(const Link& l, const HPoly& c);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scale(const HPoly& c) const;
  AlgebraElement mod_h() const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  const std::map<Link, HPoly>& terms() const { return terms_; }

  std::string str(const Quiver& q) const;

private:
  std::map<Link, HPoly> terms_;
};

/// Element of A^{\otimes n}.
class TensorElement {
public:
  explicit TensorElement(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  void add(const std::vector<Link>& key, const HPoly& c);
  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement scale(const HPoly& c) const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const TensorElement& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  const std::map<std::vector<Link>, HPoly>& terms() const { return terms_; }

  std::string str(const Quiver& q) const;

private:
  int arity_;
  std::map<std::vector<Link>, HPoly> terms_;
};

// --- construction and product --------------------------------------------

/// Canonical lift of a Lie monomial: heights 1..|w| increasing from the
/// canonical first arrow; idempotents lift to idempotent-only links.
Link lift(const Quiver& q, const LieMonomial& m);
AlgebraElement lift(const Quiver& q, const LieElement& x);

/// Forget heights: the multiset of cyclic words plus idempotents.
std::vector<LieMonomial> underlying_words(const Quiver& q, const Link& x);

/// Product: stacks y's heights above x's, then renormalizes.
Link link_multiply(const Quiver& q, const Link& x, const Link& y);
AlgebraElement multiply(const Quiver& q, const AlgebraElement& x, const AlgebraElement& y);
TensorElement tensor_multiply(const Quiver& q, const TensorElement& x, const TensorElement& y);

/// Coefficient of the empty link.
HPoly counit(const AlgebraElement& x);

// --- relations and PBW rewriting -----------------------------------------

/// One generator of the relation module per adjacent-height pair:
/// X - X' - h^eps * X''.
struct RelationGenerator {
  Link x;
  int height = 0;           // the pair is (height, height+1)
  Pos lo, hi;               // positions carrying height / height+1
  bool same_component = false;
  int eps = 0;              // h-power on the X'' term
  AlgebraElement expansion; // X - X' - h^eps X''
};

std::vector<RelationGenerator> relation_generators(const Quiver& q, const Link& x);

/// Single application of the relation at heights (h, h+1):
/// X = X' + h^eps * coeff * X''.
struct RewriteStep {
  Link xprime;
  int coeff = 0;  // [a_lo, a_hi]; X'' is absent when zero
  int eps = 0;
  Link xsecond;
};
RewriteStep rewrite_step(const Quiver& q, const Link& x, int height);

/// Target rank of the position holding each height (index 1..N) under the
/// PBW component order; a link is normal iff rank[h] == h throughout.
std::vector<int> pbw_rank_of_height(const Quiver& q, const Link& x);
bool is_normal(const Quiver& q, const Link& x);

/// Heights h with the pair (h, h+1) out of PBW order.
std::vector<int> inverted_pairs(const Quiver& q, const Link& x);

/// The normal-form link over a multiset of Lie monomials (the PBW basis
/// element projecting to it).
Link normal_lift(const Quiver& q, const std::vector<LieMonomial>& ms);

/// PBW normal form via the disorder-reducing rewriting system.  Memoizes
/// per link; results are strategy-independent (empirical Diamond Lemma).
class Rewriter {
public:
  explicit Rewriter(const Quiver& q) : q_(&q) {}

  AlgebraElement reduce(const AlgebraElement& x);
  AlgebraElement reduce(const Link& x);
  TensorElement reduce_factors(const TensorElement& t);

  std::size_t cache_size() const { return memo_.size(); }

private:
  const Quiver* q_;
  std::map<Link, AlgebraElement> memo_;
};

/// Reduction with a caller-supplied choice among the inverted pairs of each
/// intermediate link (used by the confluence suites); no memoization.
AlgebraElement reduce_with_strategy(const Quiver& q, const AlgebraElement& x,
                                    const std::function<int(const std::vector<int>&)>& choose);

/// Seeded random-strategy reduction.
AlgebraElement reduce_random(const Quiver& q, const AlgebraElement& x, Rng& rng);

// --- random links for the suites -----------------------------------------

Link random_link(const Quiver& q, Rng& rng, int max_arrows);

/// All pure-arrow links with exactly `arrows` arrows (no idempotents).
std::vector<Link> enumerate_links(const Quiver& q, int arrows);

/// All cyclic words of the given exact length.
std::vector<CyclicWord> enumerate_words(const Quiver& q, int length);

}  // namespace neck

#endif
