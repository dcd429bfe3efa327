#ifndef NECK_SCALARS_HPP
#define NECK_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

#include "neck/error.hpp"

namespace neck {

/// Exact rational coefficient. boost keeps it reduced with positive
/// denominator, which is all the invariant we need.
using Rat = boost::multiprecision::cpp_rational;

std::string to_string(const Rat& r);

/// Polynomial in the deformation parameter h with rational coefficients.
///
/// Exponents are stored doubled (exp2 = 2 * exponent) so that the
/// half-integer exponents arising while a coloring weight is assembled are
/// representable exactly.  assert_integral() is the gate that claims a
/// value back into Z_{>=0} exponents.
class HPoly {
public:
  HPoly() = default;
  HPoly(const Rat& constant);  // NOLINT: implicit by design, scalar embedding
  HPoly(long long constant) : HPoly(Rat(constant)) {}

  /// Monomial c * h^(exp2/2).
  static HPoly monomial(const Rat& coeff, int exp2);
  static HPoly h() { return monomial(1, 2); }

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const HPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const HPoly& o) const { return !(*this == o); }
  bool operator<(const HPoly& o) const { return terms_ < o.terms_; }

  HPoly operator+(const HPoly& o) const;
  HPoly operator-(const HPoly& o) const;
  HPoly operator*(const HPoly& o) const;
  HPoly operator-() const;
  HPoly& operator+=(const HPoly& o) { return *this = *this + o; }
  HPoly& operator-=(const HPoly& o) { return *this = *this - o; }
  HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

  HPoly scale(const Rat& c) const;

  /// Coefficient of h^(exp2/2); zero if absent.
  Rat coeff(int exp2) const;

  /// Constant term, i.e. coeff(0).
  Rat constant() const { return coeff(0); }

  /// Truncation to the constant term (the image mod h).
  HPoly mod_h() const;

  /// Substitute h = 1: the sum of all coefficients.
  Rat eval_at_one() const;

  /// Divide by h.  Every exponent must be >= 1.
  HPoly div_h() const;

  /// Identity on polynomials whose exponents are all integers >= 0;
  /// otherwise throws ErrorKind::Integrality naming the offending term.
  const HPoly& assert_integral() const;

  bool is_integral() const;

  const std::map<int, Rat>& terms() const { return terms_; }

  /// Rendered like "3/2*h^2 + h - 1"; half exponents as h^(k/2).
  std::string str() const;

private:
  // exp2 -> coefficient, no zero coefficients stored
  std::map<int, Rat> terms_;
};

}  // namespace neck

#endif
