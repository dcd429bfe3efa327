#ifndef NECK_WEYL_HPP
#define NECK_WEYL_HPP

#include <map>
#include <string>
#include <vector>

#include "neck/link.hpp"
#include "neck/report.hpp"

namespace neck {

/// Dimension vector d: one nonnegative integer per vertex.
struct DimVector {
  std::vector<int> dims;

  static DimVector make(const Quiver& q, std::vector<int> dims);
  int at(int vertex) const { return dims[vertex]; }
  bool operator==(const DimVector& o) const { return dims == o.dims; }
  std::string str(const Quiver& q) const;
};

/// Generator of the Weyl algebra on Rep_d: the coordinate x[e,k,m] of the
/// matrix of edge e (k indexing the source dimension, m the target, the
/// summation convention of the representation formula), or the derivative
/// d[e,k,m] = partial w.r.t. x[e,k,m].
struct WeylGenerator {
  bool deriv = false;
  int edge = -1;
  int row = 0;  // 1..d(source)
  int col = 0;  // 1..d(target)

  bool operator==(const WeylGenerator& o) const {
    return deriv == o.deriv && edge == o.edge && row == o.row && col == o.col;
  }
  bool operator<(const WeylGenerator& o) const {
    if (deriv != o.deriv) return !deriv;  // coordinates sort before derivatives
    if (edge != o.edge) return edge < o.edge;
    if (row != o.row) return row < o.row;
    return col < o.col;
  }

  std::string str(const Quiver& q) const;
};

/// Normal-ordered monomial: coordinates then derivatives, each part sorted.
struct WeylMonomial {
  std::vector<WeylGenerator> xs;
  std::vector<WeylGenerator> ds;

  bool operator==(const WeylMonomial& o) const { return xs == o.xs && ds == o.ds; }
  bool operator<(const WeylMonomial& o) const {
    if (xs != o.xs) return xs < o.xs;
    return ds < o.ds;
  }
};

/// Normal-ordered differential operator with rational coefficients.
class WeylElement {
public:
  WeylElement(const Quiver& q, const DimVector& d) : dims_(d) { (void)q; }

  const DimVector& dims() const { return dims_; }
  void add(const WeylMonomial& m, const Rat& c);
  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement scale(const Rat& c) const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const WeylElement& o) const {
    return dims_ == o.dims_ && terms_ == o.terms_;
  }

  const std::map<WeylMonomial, Rat>& terms() const { return terms_; }
  std::string str(const Quiver& q) const;

private:
  DimVector dims_;
  std::map<WeylMonomial, Rat> terms_;
};

/// Commutative polynomial in the coordinates (the module the operators act
/// on; the independent oracle for weyl_mul).
class CoordPoly {
public:
  CoordPoly() = default;
  static CoordPoly monomial(const std::vector<WeylGenerator>& xs, const Rat& c);

  void add(const std::vector<WeylGenerator>& xs, const Rat& c);
  CoordPoly operator+(const CoordPoly& o) const;
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const CoordPoly& o) const { return terms_ == o.terms_; }
  const std::map<std::vector<WeylGenerator>, Rat>& terms() const { return terms_; }
  std::string str(const Quiver& q) const;

private:
  std::map<std::vector<WeylGenerator>, Rat> terms_;
};

/// Product with normal-ordering rewriting (d x = x d + 1 on matching
/// generators, everything else commutes).
WeylElement weyl_mul(const Quiver& q, const WeylElement& p, const WeylElement& r);

/// Action on polynomials by multiplication and differentiation.
CoordPoly apply(const Quiver& q, const WeylElement& p, const CoordPoly& f);

/// The representation of A on Rep_d at h = 1.  star_sign is the scalar the
/// reversed-arrow generators carry: -1 is the unique normalization under
/// which the assignment kills the relation module and respects the product
/// at the same time; +1 is the verbatim reading (selectable so the
/// discrepancy stays demonstrable).
WeylElement rho(const Quiver& q, const AlgebraElement& x, const DimVector& d,
                int star_sign = -1);
WeylElement rho_link(const Quiver& q, const Link& x, const DimVector& d,
                     int star_sign = -1);

Report verify_rep(const Quiver& q, const DimVector& d, int samples,
                  unsigned long long seed);

}  // namespace neck

#endif
