#ifndef NECK_LIE_HPP
#define NECK_LIE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neck/quiver.hpp"
#include "neck/report.hpp"
#include "neck/rng.hpp"
#include "neck/scalars.hpp"

namespace neck {

/// Basis element of the necklace Lie algebra L: a cyclic word or a vertex
/// idempotent.  Idempotents sort before cycles.
class LieMonomial {
public:
  static LieMonomial cycle(CyclicWord w) { return LieMonomial(std::move(w), -1); }
  static LieMonomial idem(int vertex) { return LieMonomial(std::nullopt, vertex); }

  bool is_idem() const { return vertex_ >= 0; }
  int vertex() const { return vertex_; }
  const CyclicWord& word() const { return *word_; }
  int length() const { return is_idem() ? 0 : word_->size(); }

  bool operator==(const LieMonomial& o) const {
    return vertex_ == o.vertex_ && word_ == o.word_;
  }
  bool operator<(const LieMonomial& o) const {
    if (is_idem() != o.is_idem()) return is_idem();
    if (is_idem()) return vertex_ < o.vertex_;
    return *word_ < *o.word_;
  }

  std::string str(const Quiver& q) const {
    return is_idem() ? "idem(" + q.vertex_name(vertex_) + ")" : word_->str(q);
  }

private:
  LieMonomial(std::optional<CyclicWord> w, int v) : word_(std::move(w)), vertex_(v) {}
  std::optional<CyclicWord> word_;
  int vertex_;
};

/// Rational linear combination of LieMonomials; no zero coefficients.
class LieElement {
public:
  LieElement() = default;
  explicit LieElement(const LieMonomial& m, const Rat& c = 1) { add(m, c); }

  void add(const LieMonomial& m, const Rat& c);
  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement scale(const Rat& c) const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const LieElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const LieElement& o) const { return !(*this == o); }

  const std::map<LieMonomial, Rat>& terms() const { return terms_; }

  std::string str(const Quiver& q) const;

private:
  std::map<LieMonomial, Rat> terms_;
};

/// Element of L^{\otimes n}, n >= 2.
class LieTensor {
public:
  explicit LieTensor(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  void add(const std::vector<LieMonomial>& key, const Rat& c);
  LieTensor operator+(const LieTensor& o) const;
  LieTensor operator-(const LieTensor& o) const;
  LieTensor scale(const Rat& c) const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const LieTensor& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  const std::map<std::vector<LieMonomial>, Rat>& terms() const { return terms_; }

  std::string str(const Quiver& q) const;

private:
  int arity_;
  std::map<std::vector<LieMonomial>, Rat> terms_;
};

/// Linear combination of open paths (a piece of the path algebra).
class PathElement {
public:
  PathElement() = default;
  void add(const PathWord& p, const Rat& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<PathWord, Rat>& terms() const { return terms_; }
  bool operator==(const PathElement& o) const { return terms_ == o.terms_; }

private:
  std::map<PathWord, Rat> terms_;
};

/// Linear combination of pairs of open paths (image of a double derivation).
class PathTensor {
public:
  void add(const PathWord& a, const PathWord& b, const Rat& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<PathWord, PathWord>, Rat>& terms() const { return terms_; }

private:
  std::map<std::pair<PathWord, PathWord>, Rat> terms_;
};

// --- bracket / cobracket -------------------------------------------------

/// Structure constant [f,g] for arrows: [e,e*] = 1, [e*,e] = -1, else 0.
int arrow_bracket(Arrow f, Arrow g);

/// Necklace Lie bracket, bilinear extension of the pair-removal formula.
/// Idempotents bracket to zero with everything.
LieElement bracket(const Quiver& q, const LieElement& x, const LieElement& y);

/// Cobracket delta: L -> L ^ L, zero on B and on words of length <= 1.
LieTensor cobracket(const Quiver& q, const LieElement& x);

/// Cyclic partial derivative of a cyclic word with respect to an arrow.
PathElement partial(const Quiver& q, const CyclicWord& w, Arrow e);
PathElement partial(const Quiver& q, const PathWord& p, Arrow e);

/// Double derivation on an open path (and on the canonical open-path
/// representative of a cyclic word).
PathTensor double_derivation(const Quiver& q, const PathWord& p, Arrow e);
PathTensor double_derivation(const Quiver& q, const CyclicWord& w, Arrow e);

/// The alternate bracket/cobracket formulas through partial derivatives.
/// `lift_offset` rotates the open-path representative used for each cyclic
/// word; the result is independent of it.
LieElement bracket_via_partials(const Quiver& q, const LieElement& x,
                                const LieElement& y, int lift_offset = 0);
LieTensor cobracket_via_partials(const Quiver& q, const LieElement& x,
                                 int lift_offset = 0);

/// Projection of a path to A^cyc: closed paths map to cyclic words (empty
/// ones to idempotents), open paths to zero.
LieElement project_cyclic(const Quiver& q, const PathElement& p);

// --- tensor utilities used by the identity suites ------------------------

LieTensor wedge(const LieElement& a, const LieElement& b);
LieTensor tensor_bracket_right(const Quiver& q, const LieTensor& t, const LieElement& f);
LieTensor tensor_bracket_left(const Quiver& q, const LieElement& e, const LieTensor& t);
LieElement bracket_contract(const Quiver& q, const LieTensor& t);  // br of a 2-tensor
LieTensor cobracket_first_slot(const Quiver& q, const LieTensor& t);  // (delta x 1)
LieTensor alt3(const LieTensor& t);  // cyclic symmetrizer on 3-tensors

/// Seeded identity suite for the Lie bialgebra.
Report verify_lie(const Quiver& q, int samples, int max_len, unsigned long long seed);

/// Random composable cyclic word (uniform arrows, rejection on closure).
CyclicWord random_cyclic_word(const Quiver& q, Rng& rng, int max_len);

}  // namespace neck

#endif
