#pragma once

#include "lie2mm/lie2.hpp"

/// Named Lie algebras and representations used as fixtures, examples and benchmarks.
namespace lie2mm::catalog {

LieAlgebra abelian(std::size_t n);
/// Basis X, Y, Z with [X,Y] = Z.
LieAlgebra heisenberg();
/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
LieAlgebra su2();
/// Basis H, E, F with [H,E] = 2E, [H,F] = -2F, [E,F] = H.
LieAlgebra sl2();
/// [e1,e2] = e2.
LieAlgebra affine_line();
/// Basis J, P1, P2 with [J,P1] = P2, [J,P2] = -P1.
LieAlgebra euclidean2();
/// [e1,e2] = e3, [e1,e3] = e4.
LieAlgebra filiform4();
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Strictly upper triangular action of the Heisenberg algebra on R^3:
/// rho(X) = E12, rho(Y) = E23, rho(Z) = E13.
Representation heisenberg_matrix_rep();
/// rho(e_i) = lambda_i Id on R^dim. Valid when lambda vanishes on [g,g].
Representation scaling_rep(const LieAlgebra& g, const Vector& lambda, std::size_t dim);

/// The cochain e^1 ^ e^2 ^ e^3 (first three basis covectors) with scalar values.
Cochain volume_cocycle(std::size_t n);

}  // namespace lie2mm::catalog
