#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie2mm/lie2.hpp"

namespace lie2mm {

/// The 3-cocycle omega_{3p} in Alt^3 g*, either given directly or obtained by evaluating the
/// 2-plectic form on the action fields at the base point.
struct OmegaThreeP {
    enum class Origin { Direct, EvaluatedAtPoint };
    Cochain values;
    Origin origin = Origin::Direct;
};

/// Checks shape and d_g-closedness (NotClosed otherwise).
OmegaThreeP make_omega(const LieAlgebra& g, Cochain w, OmegaThreeP::Origin origin);

/// A solution eta = xi + phi of the system
///   d_g(phi) + d3(xi) = w,   xi in [g,h]°
/// with xi in h*, phi in Alt^2 g*. kernel_basis spans the homogeneous solutions in the
/// coordinates (xi_0..xi_{m-1}, phi on ext_basis(n,2)).
struct StarSolution {
    Vector xi;
    Cochain phi;
    std::vector<Vector> kernel_basis;
};

struct StarResult {
    std::optional<StarSolution> solution;
    std::size_t rank = 0;            ///< rank of the system matrix
    std::size_t augmented_rank = 0;  ///< rank with the right-hand side adjoined
};

/// Coefficient matrix of the system in the unknown order (xi, phi). Rows: the theta^3 equations
/// (ext_basis(n,3)) followed by the theta eta equations (index i * dim h + beta).
Matrix star_matrix(const MinimalLie2Algebra& L);
StarResult solve_star(const MinimalLie2Algebra& L, const OmegaThreeP& w);
/// True when (xi, phi) solves the system exactly.
bool satisfies_star(const MinimalLie2Algebra& L, const OmegaThreeP& w, const Vector& xi,
                    const Cochain& phi);

/// The Alt^3 g* component of d_{CE(L)} xi; equals -(xi o c).
Cochain d3(const MinimalLie2Algebra& L, const Vector& xi);
/// xi o c in Alt^3 g*.
Cochain compose_cocycle(const MinimalLie2Algebra& L, const Vector& xi);

/// Psi(xi) = [d3 xi] in H^3(g). Throws NotInAnnihilator when xi is not in [g,h]°.
CohomologyClass psi(const MinimalLie2Algebra& L, const Vector& xi);
/// Whether [w] lies in Psi([g,h]°), decided from d_g(Alt^2 g*) and Psi of an annihilator basis.
bool in_image_of_psi(const MinimalLie2Algebra& L, const OmegaThreeP& w);

enum class Criterion { NotExists, Exists, Inconclusive };
std::string to_string(Criterion c);

/// Requires [w] != 0 (PreconditionFailed otherwise). NotExists when every component of c_red
/// is exact, Inconclusive otherwise.
Criterion criterion_cred_zero(const MinimalLie2Algebra& L, const OmegaThreeP& w);
/// Requires [w] != 0. Exists when dim H^3(g) = 1 and [c_red] != 0, Inconclusive otherwise.
Criterion criterion_h3_onedim(const MinimalLie2Algebra& L, const OmegaThreeP& w);

/// L-infinity morphism h[1]+g -> R[1] +_{-w} g with identity on g.
struct AlgebraicMorphism {
    Vector f1_h;
    Cochain f2;
};

/// Checks f1_h[h,x] = 0 and
///   f1_h([x,y,z]) - f2(x,[y,z]) + f2(y,[x,z]) - f2(z,[x,y]) = -w(x,y,z)
/// on basis tuples; throws StarViolation naming the first failure.
AlgebraicMorphism eta_to_morphism(const MinimalLie2Algebra& L, const OmegaThreeP& w,
                                  const StarSolution& eta);

struct QuotientPresentation {
    Vector xi;
    std::vector<Vector> kernel;  ///< basis of ker xi, an ideal of h
    Vector section;              ///< h0 with xi(h0) = 1, spanning h / ker xi
    Cochain quotient_cocycle;    ///< induced cocycle on h / ker xi in the basis [h0]
    Cochain target_cocycle;      ///< xi o c
    bool ideal_ok = false;
    bool strict_iso_ok = false;
    bool class_relation_ok = false;  ///< [xi o c] = -[w]
};

/// Throws XiZero when xi = 0.
QuotientPresentation quotient_presentation(const MinimalLie2Algebra& L, const OmegaThreeP& w,
                                           const StarSolution& eta);

struct ExistenceReport {
    std::string verdict;            ///< "exists", "exists (algebraic)" or "not-exists"
    std::string geometric_status;   ///< "H1-zero" or "undecided-geometric"
    std::string reason;             ///< class-zero, c_red-zero, H3-one-dim or direct-star
    bool omega_class_zero = false;
    std::optional<bool> cred_class_zero;
    std::size_t h3_dim = 0;
    std::size_t annihilator_dim = 0;
    StarResult star;
    std::optional<StarSolution> certificate;
    std::vector<std::string> notes;
};

/// Runs the criteria, solves the system, and cross-checks the routes against each other
/// (InternalInvariantBreach on disagreement). `h1_zero_geometry` states that w came from an
/// action on a manifold with H^1 = 0.
ExistenceReport decide_existence(const MinimalLie2Algebra& L, const OmegaThreeP& w,
                                 bool h1_zero_geometry);

}  // namespace lie2mm
