#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie2mm/existence.hpp"
#include "lie2mm/lie2.hpp"
#include "lie2mm/poly.hpp"

namespace lie2mm {

/// An infinitesimal action x -> v_x of g on R^n by Hamiltonian vector fields for omega,
/// with gamma1[i] the primitive of -i_{v_i} omega based at the form's base point.
struct HamiltonianAction {
    LieAlgebra algebra;
    std::vector<PolyVectorField> fields;
    TwoPlecticForm omega;
    std::vector<PolyForm> gamma1;

    std::size_t nvars() const { return omega.nvars(); }
    const Vector& base_point() const { return omega.base_point(); }
    PolyVectorField field(const Vector& x) const;
    PolyForm gamma1_of(const Vector& x) const;
};

/// Checks [v_i, v_j] = v_{[e_i,e_j]} and that each i_{v_i} omega is closed.
/// Throws NotMorphism, NotHamiltonian or DimensionMismatch.
HamiltonianAction build_action(const LieAlgebra& g, std::vector<PolyVectorField> fields,
                               const TwoPlecticForm& omega);

/// i(v_{x1} ^ .. ^ v_{xk}) omega for basis indices.
PolyForm omega_k(const HamiltonianAction& a, const std::vector<std::size_t>& indices);

/// i(v_[x1,x2] ^ v_x3)w - i(v_[x1,x3] ^ v_x2)w + i(v_[x2,x3] ^ v_x1)w - d(i(v_x1 ^ v_x2 ^ v_x3)w);
/// zero for every Hamiltonian action.
PolyForm triple_identity_defect(const HamiltonianAction& a, std::size_t i, std::size_t j,
                                std::size_t k);

/// omega(v_x, v_y, v_z) at the base point, checked closed in the Lie algebra complex and
/// cross-checked against the triple identity (InternalInvariantBreach otherwise).
OmegaThreeP omega_3p(const HamiltonianAction& a);

/// Element of CE(L) (x) Omega(R^n), keyed by (CE monomial, form degree).
class DoubleCochain {
public:
    DoubleCochain() = default;
    DoubleCochain(std::size_t dim_g, std::size_t dim_h, std::size_t nvars)
        : dim_g_(dim_g), dim_h_(dim_h), nvars_(nvars) {}

    using Key = std::pair<CEMonomial, std::size_t>;

    std::size_t dim_g() const noexcept { return dim_g_; }
    std::size_t dim_h() const noexcept { return dim_h_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<Key, PolyForm>& terms() const noexcept { return terms_; }

    void add(const CEMonomial& m, const PolyForm& a);
    PolyForm component(const CEMonomial& m, std::size_t form_degree) const;
    bool is_zero() const { return terms_.empty(); }
    int poly_degree() const;

    DoubleCochain& operator+=(const DoubleCochain& o);
    DoubleCochain& operator-=(const DoubleCochain& o);
    friend DoubleCochain operator+(DoubleCochain a, const DoubleCochain& b) { return a += b; }
    friend DoubleCochain operator-(DoubleCochain a, const DoubleCochain& b) { return a -= b; }
    friend DoubleCochain operator*(const Rational& s, const DoubleCochain& a);
    friend bool operator==(const DoubleCochain& a, const DoubleCochain& b) = default;

private:
    std::size_t dim_g_ = 0;
    std::size_t dim_h_ = 0;
    std::size_t nvars_ = 0;
    std::map<Key, PolyForm> terms_;
};

/// d_tot(eta (x) a) = d_CE(eta) (x) a + (-1)^{|eta|} eta (x) d a.
DoubleCochain d_tot(const MinimalLie2Algebra& L, const DoubleCochain& x);

/// omega~ = omega_1 - omega_2 + omega_3 with omega_k(x1..xk) = i(v_x1 ^ .. ^ v_xk) omega,
/// stored per increasing basis tuple.
struct OmegaTilde {
    std::vector<PolyForm> omega1;               ///< 2-forms, per generator
    std::map<ExtIndex, PolyForm> omega2;        ///< 1-forms, per pair
    std::map<ExtIndex, Poly> omega3;            ///< functions, per triple
};

OmegaTilde omega_tilde(const HamiltonianAction& a);
DoubleCochain to_double_cochain(const MinimalLie2Algebra& L, const OmegaTilde& w);

/// mu = mu1|g + mu1|h + mu2 in total degree 2.
struct MomentMapCandidate {
    std::vector<PolyForm> mu1_g;   ///< one 1-form per basis element of g
    std::vector<Poly> mu1_h;       ///< one function per basis element of h
    std::vector<Poly> mu2;         ///< one function per pair in ext_basis(dim g, 2)
};

/// sum theta^i (x) mu1_g[i] + sum eta^b (x) mu1_h[b] + sum_{i<j} theta^i theta^j (x) mu2(i,j).
DoubleCochain to_double_cochain(const MinimalLie2Algebra& L, const MomentMapCandidate& mu);
/// Inverse of the above on total-degree-2 elements; other components must vanish.
MomentMapCandidate from_double_cochain(const MinimalLie2Algebra& L, const DoubleCochain& x);

struct EquationStatus {
    std::string name;
    bool pass = true;
    std::vector<std::size_t> tuple;   ///< first failing basis tuple
    std::string defect;
};

struct Verification {
    bool pass = true;
    std::vector<EquationStatus> equations;
    /// Name of the first violated equation, empty on success.
    std::string first_failure;
};

/// The five component equations checked as polynomial identities on basis tuples:
///   hamiltonian_g   d mu1_g(x) = -i_{v_x} omega
///   closed_h        d mu1_h(h) = 0
///   bracket_2       d mu2(x,y) = mu1_g([x,y]) - zeta(2) i(v_x ^ v_y) omega
///   invariant_h     mu1_h(rho(x) h) = 0
///   bracket_3       mu1_h(c(x,y,z)) - zeta(3) i(v_x ^ v_y ^ v_z) omega
///                       = mu2(x,[y,z]) - mu2(y,[x,z]) + mu2(z,[x,y])
Verification verify_moment_map(const HamiltonianAction& a, const MinimalLie2Algebra& L,
                               const MomentMapCandidate& mu);

/// d_tot mu == omega~, compared component-wise.
Verification verify_via_dtot(const HamiltonianAction& a, const MinimalLie2Algebra& L,
                             const MomentMapCandidate& mu);

/// The gamma moment map for R[1] +_{-omega_3p} g.
struct GammaMomentMap {
    MinimalLie2Algebra L;
    MomentMapCandidate mu;
    /// gamma2 per pair in ext_basis(dim g, 2), vanishing at the base point.
    std::vector<Poly> gamma2;
};

GammaMomentMap build_gamma(const HamiltonianAction& a);

/// phi^eta: mu1_g = gamma1, mu1_h = xi (constants), mu2 = phi + gamma2.
/// Throws StarViolation if eta does not solve the system for omega_3p of the action.
MomentMapCandidate build_phi_eta(const HamiltonianAction& a, const MinimalLie2Algebra& L,
                                 const StarSolution& eta);

/// r(eta (x) a) = eta * a(p) for functions, 0 for forms of positive degree.
CECochain restrict_r(const MinimalLie2Algebra& L, const DoubleCochain& x, const Vector& p);
CECochain restrict_r(const MinimalLie2Algebra& L, const MomentMapCandidate& mu, const Vector& p);

/// The CE(L) element xi + phi of a system solution.
CECochain star_as_ce(const MinimalLie2Algebra& L, const Vector& xi, const Cochain& phi);

/// Reads (xi, phi) back from a degree-2 CE element.
StarSolution star_from_ce(const MinimalLie2Algebra& L, const CECochain& x);

struct InnerEquivalence {
    /// alpha(e_i) as polynomial functions, with d_tot alpha = mu - mu'.
    std::optional<std::vector<Poly>> alpha;
    unsigned degree_bound = 0;
};

/// Searches alpha in g* (x) {polynomials of degree <= bound}. The default bound is the
/// largest polynomial degree in mu - mu' plus one. Throws NotClosedDifference when
/// mu - mu' is not d_tot-closed.
InnerEquivalence inner_equivalence(const MinimalLie2Algebra& L, const MomentMapCandidate& mu,
                                   const MomentMapCandidate& mu_prime,
                                   std::optional<unsigned> degree_bound = std::nullopt);

}  // namespace lie2mm
