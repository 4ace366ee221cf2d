#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lie2mm/catalog.hpp"
#include "lie2mm/errors.hpp"
#include "lie2mm/geometries.hpp"
#include "oracle.hpp"

using namespace lie2mm;

namespace {

Vector pt(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

struct NamedAction {
    std::string label;
    HamiltonianAction action;
};

std::vector<NamedAction> corpus_actions()
{
    std::vector<NamedAction> out;
    for (const Vector& p : {pt(0, 0, 0), pt(1, -2, 3)}) {
        const std::string at = to_string(p);
        out.push_back({"translations " + at, catalog::translations(p)});
        out.push_back({"heisenberg " + at, catalog::heisenberg_frame(p)});
        out.push_back({"rotations " + at, catalog::rotations(p)});
    }
    out.push_back({"r6", catalog::translations_r6(Vector{Rational(1), Rational(0), Rational(0),
                                                         Rational(0), Rational(2), Rational(-1)})});
    return out;
}

bool brute_exact(const LieAlgebra& g, const Cochain& w)
{
    const Representation triv = trivial_representation(g, 1);
    const oracle::Mat d2 = oracle::brute_differential_matrix(g, triv.matrices(), 1, 2);
    return d2.empty() ? w.is_zero() : oracle::solvable(d2, w.values);
}

// Heisenberg matrix representation with c = e^{XYZ} in the Z-direction of h.
MinimalLie2Algebra heisenberg_L()
{
    const Representation rho = catalog::heisenberg_matrix_rep();
    Cochain c(3, 3, 3);
    c.at({0, 1, 2}, 2) = 1;
    return build_minimal(rho.algebra(), rho, c);
}

DoubleCochain random_double(corpus::Rng& rng, const MinimalLie2Algebra& L, std::size_t N,
                            std::size_t total)
{
    DoubleCochain x(L.dim_g(), L.dim_h(), N);
    for (std::size_t fd = 0; fd <= std::min(total, N); ++fd) {
        const std::size_t ce = total - fd;
        for (const auto& m : ce_basis(L.dim_g(), L.dim_h(), ce))
            if (rng() % 3 == 0)
                x.add(m, corpus::random_form(rng, N, fd, 2));
    }
    return x;
}

MomentMapCandidate add_exact(corpus::Rng& rng, const MinimalLie2Algebra& L,
                             const MomentMapCandidate& mu, std::size_t N)
{
    DoubleCochain alpha(L.dim_g(), L.dim_h(), N);
    for (std::size_t i = 0; i < L.dim_g(); ++i)
        alpha.add({{i}, {}}, PolyForm::function(corpus::random_poly(rng, N, 2)));
    return from_double_cochain(L, to_double_cochain(L, mu) + d_tot(L, alpha));
}

void expect_same_verdicts(const Verification& a, const Verification& b, const std::string& label)
{
    EXPECT_EQ(a.pass, b.pass) << label;
    EXPECT_EQ(a.first_failure, b.first_failure) << label;
    ASSERT_EQ(a.equations.size(), b.equations.size());
    for (std::size_t i = 0; i < a.equations.size(); ++i)
        EXPECT_EQ(a.equations[i].pass, b.equations[i].pass) << label << " " << a.equations[i].name;
}

}  // namespace

TEST(BuildAction, TranslationsAndHeisenbergAreValid)
{
    const HamiltonianAction t = catalog::translations(pt(0, 0, 0));
    EXPECT_EQ(t.gamma1.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(d_dR(t.gamma1[i]), -omega_k(t, {i}));
    const HamiltonianAction h = catalog::heisenberg_frame(pt(0, 0, 0));
    EXPECT_EQ(lie_bracket(h.fields[0], h.fields[1]), h.fields[2]);
}

TEST(BuildAction, NonHamiltonianGenerator)
{
    PolyVectorField xdx(3);
    xdx[0] = Poly::variable(3, 0);
    try {
        build_action(catalog::abelian(3),
                     {xdx, PolyVectorField::coordinate(3, 1), PolyVectorField::coordinate(3, 2)},
                     make_two_plectic(catalog::volume_form3(), pt(1, 0, 0)));
        FAIL() << "expected NotHamiltonian";
    } catch (const NotHamiltonian& e) {
        EXPECT_EQ(e.generator_index, 0u);
    }
}

TEST(BuildAction, NonMorphism)
{
    std::vector<PolyVectorField> v;
    for (std::size_t i = 0; i < 3; ++i)
        v.push_back(PolyVectorField::coordinate(3, i));
    try {
        build_action(catalog::heisenberg(), v, make_two_plectic(catalog::volume_form3(), pt(0, 0, 0)));
        FAIL() << "expected NotMorphism";
    } catch (const NotMorphism& e) {
        EXPECT_EQ(e.pair, (std::array<std::size_t, 2>{0, 1}));
    }
    EXPECT_THROW(build_action(catalog::abelian(2), v,
                              make_two_plectic(catalog::volume_form3(), pt(0, 0, 0))),
                 DimensionMismatch);
}

TEST(OmegaThreeP, Examples)
{
    EXPECT_EQ(omega_3p(catalog::translations(pt(0, 0, 0))).values, catalog::volume_cocycle(3));
    for (const Vector& p : {pt(0, 0, 0), pt(2, -1, 5), pt(-3, 4, 1)}) {
        const OmegaThreeP w = omega_3p(catalog::heisenberg_frame(p));
        EXPECT_EQ(w.origin, OmegaThreeP::Origin::EvaluatedAtPoint);
        EXPECT_FALSE(brute_exact(catalog::heisenberg(), w.values));
    }
    // dependent fields d/dx, d/dy, d/dx + d/dy
    PolyVectorField sum = PolyVectorField::coordinate(3, 0) + PolyVectorField::coordinate(3, 1);
    const HamiltonianAction dep = build_action(
        catalog::abelian(3), {PolyVectorField::coordinate(3, 0), PolyVectorField::coordinate(3, 1), sum},
        make_two_plectic(catalog::volume_form3(), pt(0, 0, 0)));
    EXPECT_TRUE(omega_3p(dep).values.is_zero());
    EXPECT_TRUE(omega_3p(catalog::rotations(pt(1, 2, 3))).values.is_zero());
}

TEST(MomentMapProperty, TripleIdentityAndOmegaTildeClosed)
{
    for (const auto& [label, a] : corpus_actions()) {
        const std::size_t n = a.algebra.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (i != j && j != k && i != k)
                        EXPECT_TRUE(triple_identity_defect(a, i, j, k).is_zero()) << label;
        const GammaMomentMap G = build_gamma(a);
        EXPECT_TRUE(d_tot(G.L, to_double_cochain(G.L, omega_tilde(a))).is_zero()) << label;
    }
}

TEST(DTotProperty, SquaresToZero)
{
    corpus::Rng rng(41);
    for (const auto& inst : corpus::worked_families())
        for (std::size_t total = 0; total <= 3; ++total) {
            const DoubleCochain x = random_double(rng, inst.L, 3, total);
            EXPECT_TRUE(d_tot(inst.L, d_tot(inst.L, x)).is_zero()) << inst.label;
        }
}

TEST(BuildGamma, TranslationsClosedForm)
{
    const HamiltonianAction a = catalog::translations(pt(0, 0, 0));
    const GammaMomentMap G = build_gamma(a);
    const auto pairs = ext_basis(3, 2);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const PolyForm ivv = omega_k(a, pairs[p]);
        EXPECT_EQ(PolyForm::function(G.gamma2[p]), -primitive(ivv, a.base_point()));
    }
    // gamma2(e1,e2) = -z, since d(-z) = -dz = -i(d/dx ^ d/dy) omega
    EXPECT_EQ(G.gamma2[0], -Poly::variable(3, 2));
    EXPECT_EQ(G.L.c(), Rational(-1) * catalog::volume_cocycle(3));
}

TEST(BuildGamma, ZeroFieldsGiveZeroGamma2)
{
    const HamiltonianAction a = build_action(catalog::abelian(3), std::vector<PolyVectorField>(3, PolyVectorField(3)),
                                             make_two_plectic(catalog::volume_form3(), pt(0, 0, 0)));
    const GammaMomentMap G = build_gamma(a);
    for (const auto& g2 : G.gamma2)
        EXPECT_TRUE(g2.is_zero());
    EXPECT_TRUE(verify_moment_map(a, G.L, G.mu).pass);
}

TEST(BuildGamma, VerifiedOnEveryCorpusAction)
{
    for (const auto& [label, a] : corpus_actions()) {
        const GammaMomentMap G = build_gamma(a);
        EXPECT_TRUE(verify_moment_map(a, G.L, G.mu).pass) << label;
        EXPECT_TRUE(verify_via_dtot(a, G.L, G.mu).pass) << label;
        for (const auto& g2 : G.gamma2)
            EXPECT_EQ(g2.evaluate(a.base_point()), 0) << label;
        // r(gamma) has no theta^2 part
        const CECochain r = restrict_r(G.L, G.mu, a.base_point());
        EXPECT_TRUE(r.component(2, 0).is_zero()) << label;
    }
}

TEST(Verify, PerturbationsFailTheRightEquation)
{
    const HamiltonianAction a = catalog::heisenberg_frame(pt(0, 0, 0));
    const GammaMomentMap G = build_gamma(a);
    MomentMapCandidate mu = G.mu;
    mu.mu2[0] += Poly::variable(3, 0);
    Verification v = verify_moment_map(a, G.L, mu);
    EXPECT_FALSE(v.pass);
    EXPECT_EQ(v.first_failure, "bracket_2");
    expect_same_verdicts(v, verify_via_dtot(a, G.L, mu), "mu2 perturbed");

    mu = G.mu;
    mu.mu1_h[0] += Poly::variable(3, 1);
    v = verify_moment_map(a, G.L, mu);
    EXPECT_EQ(v.first_failure, "closed_h");
    expect_same_verdicts(v, verify_via_dtot(a, G.L, mu), "mu1_h nonconstant");

    const MomentMapCandidate zero{std::vector<PolyForm>(3, PolyForm(3, 1)), {Poly(3)},
                                  std::vector<Poly>(3, Poly(3))};
    v = verify_moment_map(a, G.L, zero);
    EXPECT_FALSE(v.pass);
    EXPECT_EQ(v.first_failure, "hamiltonian_g");
    expect_same_verdicts(v, verify_via_dtot(a, G.L, zero), "zero candidate");
}

TEST(VerifyProperty, BothRoutesAgreeOnRandomCandidates)
{
    corpus::Rng rng(42);
    const MinimalLie2Algebra hL = heisenberg_L();
    for (const auto& [label, a] : corpus_actions()) {
        const GammaMomentMap G = build_gamma(a);
        const std::size_t N = a.nvars();
        for (int t = 0; t < 12; ++t) {
            MomentMapCandidate mu = add_exact(rng, G.L, G.mu, N);
            switch (rng() % 5) {
            case 0:
                mu.mu1_g[rng() % mu.mu1_g.size()] += corpus::random_form(rng, N, 1, 1);
                break;
            case 1:
                mu.mu1_h[0] += corpus::random_poly(rng, N, 1);
                break;
            case 2:
                mu.mu2[rng() % mu.mu2.size()] += corpus::random_poly(rng, N, 2);
                break;
            case 3:
                mu.mu2[rng() % mu.mu2.size()] += Poly::constant(N, corpus::random_rational(rng));
                break;
            default:
                break;
            }
            expect_same_verdicts(verify_moment_map(a, G.L, mu), verify_via_dtot(a, G.L, mu), label);
        }
    }
    // invariant_h can only fail with a nontrivial representation
    const HamiltonianAction h = catalog::heisenberg_frame(pt(0, 0, 0));
    const StarSolution eta = *solve_star(hL, omega_3p(h)).solution;
    MomentMapCandidate mu = build_phi_eta(h, hL, eta);
    mu.mu1_h[0] += Poly::constant(3, 1);
    const Verification v = verify_moment_map(h, hL, mu);
    EXPECT_FALSE(v.equations[3].pass);
    expect_same_verdicts(v, verify_via_dtot(h, hL, mu), "invariant_h");
}

TEST(PhiEta, HeisenbergWitnessEndToEnd)
{
    corpus::Rng rng(43);
    const MinimalLie2Algebra L = heisenberg_L();
    for (const Vector& p : {pt(0, 0, 0), pt(1, 2, 3)}) {
        const HamiltonianAction a = catalog::heisenberg_frame(p);
        const StarResult r = solve_star(L, omega_3p(a));
        ASSERT_TRUE(r.solution);
        for (int t = 0; t < 4; ++t) {
            StarSolution eta = *r.solution;
            for (const auto& k : r.solution->kernel_basis) {
                const Rational s = corpus::random_rational(rng);
                for (std::size_t b = 0; b < L.dim_h(); ++b)
                    eta.xi[b] += s * k[b];
                for (std::size_t q = 0; q < eta.phi.values.size(); ++q)
                    eta.phi.values[q] += s * k[L.dim_h() + q];
            }
            const MomentMapCandidate mu = build_phi_eta(a, L, eta);
            EXPECT_TRUE(verify_moment_map(a, L, mu).pass);
            EXPECT_TRUE(verify_via_dtot(a, L, mu).pass);
            EXPECT_EQ(restrict_r(L, mu, p), star_as_ce(L, eta.xi, eta.phi));
        }
    }
}

TEST(PhiEta, ExactOmegaRecoversGMomentMap)
{
    // rotations have omega_3p = 0, so h = 0 and eta is a 2-cocycle of su(2)
    const HamiltonianAction a = catalog::rotations(pt(1, -1, 2));
    const LieAlgebra& g = a.algebra;
    const MinimalLie2Algebra L = build_minimal(g, trivial_representation(g, 0), Cochain(3, 3, 0));
    const StarResult r = solve_star(L, omega_3p(a));
    ASSERT_TRUE(r.solution);
    const MomentMapCandidate mu = build_phi_eta(a, L, *r.solution);
    EXPECT_TRUE(mu.mu1_h.empty());
    EXPECT_TRUE(verify_moment_map(a, L, mu).pass);
    EXPECT_TRUE(verify_via_dtot(a, L, mu).pass);
}

TEST(PhiEta, R6WithTrivialH)
{
    const HamiltonianAction a = catalog::translations_r6(zero_vector(6));
    const OmegaThreeP w = omega_3p(a);
    const MinimalLie2Algebra L =
        build_minimal(a.algebra, trivial_representation(a.algebra, 1), Rational(-1) * w.values);
    const StarResult r = solve_star(L, w);
    ASSERT_TRUE(r.solution);
    const MomentMapCandidate mu = build_phi_eta(a, L, *r.solution);
    EXPECT_TRUE(verify_moment_map(a, L, mu).pass);
    EXPECT_EQ(restrict_r(L, mu, a.base_point()), star_as_ce(L, r.solution->xi, r.solution->phi));
}

TEST(PhiEta, RejectsNonSolution)
{
    const MinimalLie2Algebra L = heisenberg_L();
    const HamiltonianAction a = catalog::heisenberg_frame(pt(0, 0, 0));
    StarSolution eta{zero_vector(3), Cochain(3, 2, 1), {}};
    EXPECT_THROW(build_phi_eta(a, L, eta), StarViolation);
}

TEST(RestrictR, KillsPositiveDegreeForms)
{
    const MinimalLie2Algebra L = heisenberg_L();
    DoubleCochain x(3, 3, 3);
    x.add({{0}, {}}, PolyForm::basis(3, {1}, Poly::constant(3, 1)));
    x.add({{0, 1}, {}}, PolyForm::basis(3, {0, 2}, Poly::variable(3, 0)));
    EXPECT_TRUE(restrict_r(L, x, pt(1, 1, 1)).is_zero());
}

TEST(RestrictRProperty, ChainMap)
{
    corpus::Rng rng(44);
    for (const auto& inst : corpus::worked_families())
        for (std::size_t total = 0; total <= 3; ++total)
            for (int t = 0; t < 3; ++t) {
                const DoubleCochain x = random_double(rng, inst.L, 3, total);
                const Vector p = corpus::random_vector(rng, 3);
                EXPECT_EQ(restrict_r(inst.L, d_tot(inst.L, x), p),
                          ce_diff(inst.L, restrict_r(inst.L, x, p)))
                    << inst.label;
            }
}

TEST(InnerEquivalence, IdenticalMapsGiveZero)
{
    const HamiltonianAction a = catalog::translations(pt(0, 0, 0));
    const GammaMomentMap G = build_gamma(a);
    const InnerEquivalence e = inner_equivalence(G.L, G.mu, G.mu);
    ASSERT_TRUE(e.alpha);
    for (const auto& f : *e.alpha)
        EXPECT_TRUE(f.is_zero());
}

TEST(InnerEquivalenceProperty, MuIsEquivalentToPhiOfItsRestriction)
{
    corpus::Rng rng(45);
    const MinimalLie2Algebra hL = heisenberg_L();
    for (const auto& [label, a] : corpus_actions()) {
        const GammaMomentMap G = build_gamma(a);
        for (int t = 0; t < 2; ++t) {
            const MomentMapCandidate mu = add_exact(rng, G.L, G.mu, a.nvars());
            ASSERT_TRUE(verify_moment_map(a, G.L, mu).pass) << label;
            const CECochain r = restrict_r(G.L, mu, a.base_point());
            const StarSolution eta = star_from_ce(G.L, r);
            const MomentMapCandidate phi = build_phi_eta(a, G.L, eta);
            const InnerEquivalence e = inner_equivalence(G.L, mu, phi);
            EXPECT_TRUE(e.alpha) << label;
        }
    }
    const HamiltonianAction h = catalog::heisenberg_frame(pt(1, 0, -1));
    const StarSolution eta = *solve_star(hL, omega_3p(h)).solution;
    const MomentMapCandidate mu = add_exact(rng, hL, build_phi_eta(h, hL, eta), 3);
    const MomentMapCandidate phi = build_phi_eta(h, hL, star_from_ce(hL, restrict_r(hL, mu, h.base_point())));
    EXPECT_TRUE(inner_equivalence(hL, mu, phi).alpha);
}

TEST(InnerEquivalence, NonEquivalentAndNonClosedPairs)
{
    const MinimalLie2Algebra L = heisenberg_L();
    const HamiltonianAction a = catalog::heisenberg_frame(pt(0, 0, 0));
    const StarResult r = solve_star(L, omega_3p(a));
    ASSERT_TRUE(r.solution);
    // a closed, non-exact 2-cochain of the Heisenberg algebra: X*^Z*
    StarSolution other = *r.solution;
    other.phi.at({0, 2}, 0) += 1;
    ASSERT_TRUE(satisfies_star(L, omega_3p(a), other.xi, other.phi));
    const MomentMapCandidate mu = build_phi_eta(a, L, *r.solution);
    const MomentMapCandidate mu2 = build_phi_eta(a, L, other);
    const InnerEquivalence e = inner_equivalence(L, mu, mu2, 4);
    EXPECT_FALSE(e.alpha);
    EXPECT_EQ(e.degree_bound, 4u);

    MomentMapCandidate broken = mu;
    broken.mu2[0] += Poly::variable(3, 0);
    EXPECT_THROW(inner_equivalence(L, mu, broken), NotClosedDifference);
}
