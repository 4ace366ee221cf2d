#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lie2mm/catalog.hpp"
#include "lie2mm/errors.hpp"
#include "lie2mm/lie2.hpp"
#include "oracle.hpp"

using namespace lie2mm;

namespace {

Cochain random_cochain(corpus::Rng& rng, std::size_t n, std::size_t k, std::size_t V)
{
    Cochain c(n, k, V);
    for (auto& x : c.values)
        x = corpus::random_rational(rng);
    return c;
}

MinimalLie2Algebra string_algebra()
{
    const LieAlgebra g = catalog::su2();
    return build_minimal(g, trivial_representation(g, 1),
                         cartan_cocycle(g, Rational(-1, 2) * killing_form(g)));
}

}  // namespace

TEST(BuildMinimal, AbelianWithZeroCocycle)
{
    const LieAlgebra g = catalog::abelian(3);
    EXPECT_NO_THROW(build_minimal(g, trivial_representation(g, 2), Cochain(3, 3, 2)));
    EXPECT_NO_THROW(build_minimal(g, adjoint_representation(g), Cochain(3, 3, 3)));
}

TEST(BuildMinimal, StringLie2Algebra)
{
    const MinimalLie2Algebra L = string_algebra();
    EXPECT_EQ(L.dim_g(), 3u);
    EXPECT_EQ(L.dim_h(), 1u);
    EXPECT_EQ(L.c().at({0, 1, 2}, 0), 1);
}

TEST(BuildMinimal, HeisenbergCoboundaryCocycle)
{
    corpus::Rng rng(3);
    const Representation rho = catalog::heisenberg_matrix_rep();
    for (int trial = 0; trial < 5; ++trial) {
        const Cochain beta = random_cochain(rng, 3, 2, 3);
        const Cochain c = ce_differential(rho, beta);
        // coboundaries are cocycles: expand d c with the brute-force formula
        oracle::FullCochain full{3, 3, 3, {}};
        full.values.assign(27, Vector(3, Rational(0)));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                for (std::size_t d = 0; d < 3; ++d)
                    full.at({a, b, d}) = c.evaluate({a, b, d});
        const oracle::FullCochain dc = oracle::brute_differential(rho.algebra(), rho.matrices(), full);
        for (const auto& v : dc.values)
            EXPECT_TRUE(is_zero(v));
        EXPECT_NO_THROW(build_minimal(rho.algebra(), rho, c));
    }
}

TEST(BuildMinimal, CocycleViolationNamesTuple)
{
    const LieAlgebra g = catalog::abelian(4);
    const Representation rho = catalog::scaling_rep(g, {Rational(1), Rational(0), Rational(0), Rational(0)}, 1);
    Cochain c(4, 3, 1);
    c.at({1, 2, 3}, 0) = 1;
    try {
        build_minimal(g, rho, c);
        FAIL() << "expected CocycleViolation";
    } catch (const CocycleViolation& e) {
        EXPECT_EQ(e.tuple, (std::array<std::size_t, 4>{0, 1, 2, 3}));
        EXPECT_EQ(e.defect, (Vector{Rational(1)}));
    }
}

TEST(BuildMinimal, ShapeMismatch)
{
    const LieAlgebra g = catalog::abelian(3);
    EXPECT_THROW(build_minimal(g, trivial_representation(g, 2), Cochain(3, 3, 1)), DimensionMismatch);
    EXPECT_THROW(build_minimal(g, trivial_representation(catalog::su2(), 1), Cochain(3, 3, 1)),
                 DimensionMismatch);
}

TEST(CeDiff, PureThetaPartIsTheLieAlgebraDifferential)
{
    corpus::Rng rng(6);
    for (const auto& inst : corpus::random_instances(41, 20, 4, 3)) {
        const MinimalLie2Algebra& L = inst.L;
        const Representation triv = trivial_representation(L.g(), 1);
        for (std::size_t a = 0; a < L.dim_g(); ++a) {
            const Cochain f = random_cochain(rng, L.dim_g(), a, 1);
            const CECochain d = ce_diff(L, ce_from_cochain(L, f, 0));
            EXPECT_EQ(d, ce_from_cochain(L, ce_differential(triv, f), 0)) << inst.label;
        }
    }
}

TEST(CeDiff, DualVectorOnAbelianTrivialGivesMinusPullbackOfC)
{
    corpus::Rng rng(8);
    const LieAlgebra g = catalog::abelian(3);
    for (int trial = 0; trial < 5; ++trial) {
        const Cochain c = random_cochain(rng, 3, 3, 2);
        const MinimalLie2Algebra L = build_minimal(g, trivial_representation(g, 2), c);
        const Vector xi = corpus::random_vector(rng, 2);
        const CECochain d = ce_diff(L, ce_from_dual(L, xi));
        // lands in Alt^3 g* only
        EXPECT_EQ(d, d.component(3, 0));
        const Cochain pulled = push_coefficients(Matrix::from_rows({xi}, 2), c);
        EXPECT_EQ(ce_to_cochain(L, d, 3, 0), Rational(-1) * pulled);
    }
}

TEST(CeDiff, SquareIsZeroOnRandomAlgebras)
{
    corpus::Rng rng(12);
    for (const auto& inst : corpus::random_instances(42, 20, 4, 3)) {
        for (std::size_t d = 1; d <= 4; ++d) {
            const CECochain x = corpus::random_ce_cochain(rng, inst.L, d);
            EXPECT_TRUE(ce_diff(inst.L, ce_diff(inst.L, x)).is_zero()) << inst.label << " degree " << d;
        }
    }
}

TEST(CeDiff, SquareIsZeroOnQuadraticEtaMonomials)
{
    for (const auto& inst : corpus::worked_families()) {
        for (const auto& m : ce_basis(inst.L.dim_g(), inst.L.dim_h(), 5)) {
            CECochain x(inst.L.dim_g(), inst.L.dim_h());
            x.add(m, 1);
            EXPECT_TRUE(ce_diff(inst.L, ce_diff(inst.L, x)).is_zero()) << inst.label;
        }
    }
}

TEST(CeDiff, OneEtaComponentMatchesDualRepresentationDifferential)
{
    corpus::Rng rng(13);
    for (const auto& inst : corpus::random_instances(43, 25, 3, 3)) {
        const MinimalLie2Algebra L0 = inst.L;
        const MinimalLie2Algebra L =
            build_minimal(L0.g(), L0.h(), Cochain(L0.dim_g(), 3, L0.dim_h()));
        const Representation dual = dual_representation(L.h());
        for (std::size_t a = 0; a + 1 <= L.dim_g(); ++a) {
            const Cochain f = random_cochain(rng, L.dim_g(), a, L.dim_h());
            const CECochain d = ce_diff(L, ce_from_cochain(L, f, 1));
            EXPECT_EQ(d, d.component(a + 1, 1));
            EXPECT_EQ(ce_to_cochain(L, d, a + 1, 1), ce_differential(dual, f)) << inst.label;
        }
    }
}

TEST(CeDiff, DualVectorClosedInThetaEtaIffInAnnihilator)
{
    corpus::Rng rng(14);
    for (const auto& inst : corpus::random_instances(44, 25, 4, 3)) {
        const MinimalLie2Algebra& L = inst.L;
        const auto ann = bracket_annihilator(L);
        for (const auto& xi : ann)
            EXPECT_TRUE(ce_diff(L, ce_from_dual(L, xi)).component(1, 1).is_zero());
        for (int t = 0; t < 4; ++t) {
            const Vector xi = corpus::random_vector(rng, L.dim_h());
            oracle::Mat cols(L.dim_h(), Vector(ann.size()));
            for (std::size_t k = 0; k < ann.size(); ++k)
                for (std::size_t b = 0; b < L.dim_h(); ++b)
                    cols[b][k] = ann[k][b];
            const bool in_ann = ann.empty() ? is_zero(xi) : oracle::solvable(cols, xi);
            EXPECT_EQ(ce_diff(L, ce_from_dual(L, xi)).component(1, 1).is_zero(), in_ann);
        }
    }
}

TEST(CeDiff, ShapeMismatch)
{
    const MinimalLie2Algebra L = string_algebra();
    EXPECT_THROW(ce_diff(L, CECochain(2, 1)), DimensionMismatch);
    CECochain bad(3, 1);
    bad.add({{}, {1}}, 1);
    EXPECT_THROW(ce_diff(L, bad), DimensionMismatch);
}

TEST(CeDiffMatrix, ParallelEqualsSerialAndSquaresToZero)
{
    for (const auto& inst : corpus::random_instances(45, 10, 4, 3)) {
        for (std::size_t d = 1; d <= 4; ++d) {
            const Matrix m1 = ce_diff_matrix(inst.L, d);
            EXPECT_EQ(m1, reference::ce_diff_matrix(inst.L, d));
            const Matrix m2 = ce_diff_matrix(inst.L, d + 1);
            EXPECT_TRUE((m2 * m1).is_zero()) << inst.label;
        }
    }
}

TEST(Reduce, HeisenbergQuotientIsOneDimensional)
{
    const Representation rho = catalog::heisenberg_matrix_rep();
    Cochain c(3, 3, 3);
    c.at({0, 1, 2}, 2) = 1;
    const ReducedLie2Algebra red = reduce(build_minimal(rho.algebra(), rho, c));
    EXPECT_EQ(red.h_red.dim(), 1u);
    EXPECT_EQ(red.c_red.at({0, 1, 2}, 0), 1);
}

TEST(Reduce, TrivialRepresentationKeepsEverything)
{
    corpus::Rng rng(15);
    const LieAlgebra g = catalog::heisenberg();
    const Cochain c = random_cochain(rng, 3, 3, 2);
    const ReducedLie2Algebra red = reduce(build_minimal(g, trivial_representation(g, 2), c));
    EXPECT_EQ(red.h_red.dim(), 2u);
    EXPECT_EQ(red.projection, Matrix::identity(2));
    EXPECT_EQ(red.c_red, c);
}

TEST(Reduce, ScalingRepresentationKillsQuotient)
{
    const LieAlgebra g = catalog::abelian(3);
    const Representation rho = catalog::scaling_rep(g, {Rational(2), Rational(0), Rational(-1)}, 2);
    Cochain c(3, 3, 2);
    c.at({0, 1, 2}, 0) = 5;
    const ReducedLie2Algebra red = reduce(build_minimal(g, rho, c));
    EXPECT_EQ(red.h_red.dim(), 0u);
    EXPECT_TRUE(red.c_red.is_zero());
}

TEST(Annihilator, TrivialRepresentationGivesAllOfDual)
{
    const LieAlgebra g = catalog::su2();
    const MinimalLie2Algebra L = build_minimal(g, trivial_representation(g, 2), Cochain(3, 3, 2));
    EXPECT_EQ(bracket_annihilator(L).size(), 2u);
    EXPECT_TRUE(bracket_image(L).empty());
}

TEST(Annihilator, HeisenbergMatrixRepIsOneDimensional)
{
    const Representation rho = catalog::heisenberg_matrix_rep();
    const MinimalLie2Algebra L = build_minimal(rho.algebra(), rho, Cochain(3, 3, 3));
    // brute force: list rho(e_i) e_j and take the rank of their span
    oracle::Mat images;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            images.push_back(rho.act(i, unit_vector(3, j)));
    const std::size_t span_dim = oracle::rank(images);
    EXPECT_EQ(span_dim, 2u);
    const auto ann = bracket_annihilator(L);
    EXPECT_EQ(ann.size(), 3u - span_dim);
    EXPECT_EQ(ann[0], (Vector{Rational(0), Rational(0), Rational(1)}));
    EXPECT_EQ(bracket_image(L).size(), span_dim);
}

TEST(Annihilator, IdentityScalingGivesZero)
{
    const LieAlgebra g = catalog::abelian(2);
    const MinimalLie2Algebra L =
        build_minimal(g, catalog::scaling_rep(g, {Rational(1), Rational(1)}, 3), Cochain(2, 3, 3));
    EXPECT_TRUE(bracket_annihilator(L).empty());
    EXPECT_EQ(bracket_image(L).size(), 3u);
}
