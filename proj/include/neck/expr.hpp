#ifndef NECK_EXPR_HPP
#define NECK_EXPR_HPP

#include <string>

#include "neck/hopf.hpp"
#include "neck/lie.hpp"
#include "neck/link.hpp"
#include "neck/weyl.hpp"

namespace neck {

/// Expression grammar shared by the CLI:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | 'h' ['^' int] | atom | '(' expr ')'
///   atom   := cyc(a,b*,...) | idem(v) | link([a@1 b@2]; [c@3]; idem(v))
/// In the algebra reading everything evaluates to an AlgebraElement
/// (cyc/idem enter through their canonical lifts); the Lie reading allows
/// only cyc/idem atoms and rational coefficients.
AlgebraElement parse_algebra(const Quiver& q, const std::string& text);
LieElement parse_lie(const Quiver& q, const std::string& text);

/// "v=2,u=1"; every vertex of the quiver must be assigned.
DimVector parse_dim_vector(const Quiver& q, const std::string& text);

}  // namespace neck

#endif
