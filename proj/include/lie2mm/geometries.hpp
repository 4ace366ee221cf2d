#pragma once

#include "lie2mm/moment_map.hpp"

/// Polynomial Hamiltonian actions used as fixtures, examples and benchmarks.
namespace lie2mm::catalog {

/// The volume form dx1^..^dxn restricted to the first three coordinates when n = 3.
PolyForm volume_form3();

/// Abelian R^3 acting on R^3 by translations d/dx, d/dy, d/dz; omega = dx^dy^dz.
HamiltonianAction translations(const Vector& p);
/// Left-invariant frame X = d/dx, Y = d/dy + x d/dz, Z = d/dz of the Heisenberg group in
/// the coordinates (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy'); omega = dx^dy^dz.
HamiltonianAction heisenberg_frame(const Vector& p);
/// su(2) acting on R^3 by infinitesimal rotations; omega = dx^dy^dz.
HamiltonianAction rotations(const Vector& p);
/// Abelian R^4 translating x1..x4 on R^6 with omega = dx1^dx2^dx3 + dx4^dx5^dx6.
HamiltonianAction translations_r6(const Vector& p);

}  // namespace lie2mm::catalog
