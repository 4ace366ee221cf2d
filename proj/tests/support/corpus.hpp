#pragma once

// Deterministic generators for the randomized test corpus.

#include <random>
#include <string>
#include <vector>

#include "lie2mm/lie2.hpp"
#include "lie2mm/poly.hpp"

namespace corpus {

using lie2mm::Rational;

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int range = 3);
lie2mm::Vector random_vector(Rng& rng, std::size_t n, int range = 3);
/// Product of random unit lower and unit upper triangular integer matrices.
lie2mm::Matrix random_invertible(Rng& rng, std::size_t n);
lie2mm::Matrix inverse(const lie2mm::Matrix& p);

/// Same algebra in the basis f_a = sum_i P(i,a) e_i.
lie2mm::LieAlgebra change_basis(const lie2mm::LieAlgebra& g, const lie2mm::Matrix& p);
/// rho transported to change_basis(g, P), with h re-based by the columns of Q.
lie2mm::Representation transport(const lie2mm::Representation& rho, const lie2mm::LieAlgebra& g2,
                                 const lie2mm::Matrix& p, const lie2mm::Matrix& q);

/// A random element of ker(d: Alt^3 g* (x) h -> Alt^4 g* (x) h).
lie2mm::Cochain random_cocycle(Rng& rng, const lie2mm::Representation& rho);

struct Instance {
    std::string label;
    lie2mm::MinimalLie2Algebra L;
};

/// The worked families (abelian R^3 bullets, Heisenberg matrix rep, su(2) string algebra).
std::vector<Instance> worked_families();
/// Random valid triples built from catalog algebras under random changes of basis.
/// dim g <= max_g, dim h <= max_h.
std::vector<Instance> random_instances(std::uint64_t seed, std::size_t count, std::size_t max_g,
                                       std::size_t max_h);

/// A random CE cochain of the given total degree.
lie2mm::CECochain random_ce_cochain(Rng& rng, const lie2mm::MinimalLie2Algebra& L,
                                    std::size_t degree);

/// Random polynomial with a few terms of total degree <= max_degree.
lie2mm::Poly random_poly(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t terms = 3);
lie2mm::PolyForm random_form(Rng& rng, std::size_t nvars, std::size_t degree, unsigned max_degree);
lie2mm::PolyVectorField random_field(Rng& rng, std::size_t nvars, unsigned max_degree);

}  // namespace corpus
