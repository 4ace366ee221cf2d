#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "lie2mm/errors.hpp"
#include "lie2mm/exterior.hpp"
#include "lie2mm/linear_algebra.hpp"
#include "oracle.hpp"

using namespace lie2mm;

namespace {

// (a ^ b)(v_1..v_{k+l}) = 1/(k! l!) sum_sigma sgn(sigma) a(v_sigma(1..k)) b(v_sigma(k+1..k+l))
Rational brute_wedge(const AltForm& a, const AltForm& b, const std::vector<Vector>& v)
{
    const std::size_t k = a.degree(), l = b.degree();
    std::vector<std::size_t> perm(k + l);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total(0);
    do {
        std::vector<Vector> first, second;
        for (std::size_t i = 0; i < k; ++i)
            first.push_back(v[perm[i]]);
        for (std::size_t i = k; i < k + l; ++i)
            second.push_back(v[perm[i]]);
        total += oracle::permutation_sign(perm) * a.evaluate(first) * b.evaluate(second);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational fact(1);
    for (std::size_t i = 2; i <= k; ++i)
        fact *= i;
    for (std::size_t i = 2; i <= l; ++i)
        fact *= i;
    return total / fact;
}

AltForm random_form(corpus::Rng& rng, std::size_t dim, std::size_t degree)
{
    AltForm f(dim, degree);
    for (auto& c : f.coefficients())
        c = corpus::random_rational(rng);
    return f;
}

Matrix random_matrix(corpus::Rng& rng, std::size_t r, std::size_t c, double density)
{
    std::bernoulli_distribution keep(density);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng))
                m(i, j) = corpus::random_rational(rng, 4);
    return m;
}

}  // namespace

TEST(Rational, ParseAndPrintRoundTrip)
{
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
    EXPECT_EQ(to_string(parse_rational("7")), "7");
    EXPECT_EQ(to_string(parse_rational("+0/5")), "0");
    EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
              parse_rational("41152263004115226300411522630"));
}

TEST(Rational, RejectsMalformedText)
{
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1.5"), ParseError);
    EXPECT_THROW(parse_rational("3/-6"), ParseError);
}

TEST(MultiIndex, RanksEnumerateBasesInOrder)
{
    for (std::size_t dim = 0; dim <= 6; ++dim)
        for (std::size_t k = 0; k <= dim + 1; ++k) {
            const auto ext = ext_basis(dim, k);
            ASSERT_EQ(ext.size(), binomial(dim, k));
            for (std::size_t i = 0; i < ext.size(); ++i)
                EXPECT_EQ(ext_rank(ext[i], dim), i);
            const auto sym = sym_basis(dim, k);
            ASSERT_EQ(sym.size(), multichoose(dim, k));
            for (std::size_t i = 0; i < sym.size(); ++i)
                EXPECT_EQ(sym_rank(sym[i], dim), i);
        }
}

TEST(MultiIndex, SortSignMatchesInversionCount)
{
    std::vector<std::size_t> p{2, 0, 3, 1};
    const int expected = oracle::permutation_sign(p);
    EXPECT_EQ(sort_with_sign(p), expected);
    EXPECT_EQ(p, (std::vector<std::size_t>{0, 1, 2, 3}));
    std::vector<std::size_t> rep{1, 0, 1};
    EXPECT_EQ(sort_with_sign(rep), 0);
}

TEST(Wedge, DeterminantNormalization)
{
    const AltForm w = wedge(AltForm::covector(2, 0), AltForm::covector(2, 1));
    const std::vector<Vector> args{unit_vector(2, 0), unit_vector(2, 1)};
    EXPECT_EQ(w.evaluate(args), 1);
}

TEST(Wedge, SquareOfCovectorVanishes)
{
    EXPECT_TRUE(wedge(AltForm::covector(3, 0), AltForm::covector(3, 0)).is_zero());
}

TEST(Wedge, TripleProductMatchesBruteForceAntisymmetrization)
{
    const AltForm e12 = wedge(AltForm::covector(3, 0), AltForm::covector(3, 1));
    const AltForm e3 = AltForm::covector(3, 2);
    const std::vector<Vector> args{unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)};
    const Rational expected = brute_wedge(e12, e3, args);
    EXPECT_EQ(expected, 1);
    EXPECT_EQ(wedge(e12, e3).evaluate(args), expected);
}

TEST(Wedge, DimensionMismatchNamesShapes)
{
    try {
        wedge(AltForm::covector(2, 0), AltForm::covector(3, 0));
        FAIL() << "expected DimensionMismatch";
    } catch (const DimensionMismatch& e) {
        EXPECT_NE(std::string(e.what()).find("R^2"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("R^3"), std::string::npos);
    }
}

TEST(WedgeProperty, GradedCommutativeBilinearAndMatchesBruteForce)
{
    corpus::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 2 + rng() % 4;
        const std::size_t k = rng() % 3, l = rng() % 3;
        if (k + l > dim)
            continue;
        const AltForm a = random_form(rng, dim, k);
        const AltForm a2 = random_form(rng, dim, k);
        const AltForm b = random_form(rng, dim, l);
        const Rational s = corpus::random_rational(rng);
        const int sign = (k * l) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(wedge(a, b), Rational(sign) * wedge(b, a));
        EXPECT_EQ(wedge(a + s * a2, b), wedge(a, b) + s * wedge(a2, b));
        std::vector<Vector> args;
        for (std::size_t i = 0; i < k + l; ++i)
            args.push_back(corpus::random_vector(rng, dim));
        EXPECT_EQ(wedge(a, b).evaluate(args), brute_wedge(a, b, args));
    }
}

TEST(SolveAffine, IdentitySystem)
{
    const AffineSolution s = solve_affine(Matrix::identity(2), {Rational(1), Rational(2)});
    ASSERT_TRUE(s.particular);
    EXPECT_EQ(*s.particular, (Vector{Rational(1), Rational(2)}));
    EXPECT_TRUE(s.kernel_basis.empty());
}

TEST(SolveAffine, InconsistentZeroSystem)
{
    const AffineSolution s = solve_affine(Matrix(2, 2), {Rational(1), Rational(0)});
    EXPECT_FALSE(s.particular);
    EXPECT_EQ(s.rank, 0u);
    EXPECT_EQ(s.augmented_rank, 1u);
}

TEST(SolveAffine, UnderdeterminedRowVerifiedBySubstitution)
{
    const Matrix A = Matrix::from_rows({{Rational(1), Rational(1)}}, 2);
    const Vector b{Rational(1)};
    const AffineSolution s = solve_affine(A, b);
    ASSERT_TRUE(s.particular);
    EXPECT_EQ(A.apply(*s.particular), b);
    EXPECT_EQ(*s.particular, (Vector{Rational(1), Rational(0)}));
    ASSERT_EQ(s.kernel_basis.size(), 1u);
    EXPECT_TRUE(is_zero(A.apply(s.kernel_basis[0])));
    EXPECT_EQ(s.kernel_basis[0], (Vector{Rational(1), Rational(-1)}));
}

TEST(SolveAffine, ShapeMismatch)
{
    EXPECT_THROW(solve_affine(Matrix(2, 2), {Rational(1)}), DimensionMismatch);
}

TEST(Rank, Examples)
{
    EXPECT_EQ(rank(Matrix::identity(3)), 3u);
    EXPECT_EQ(rank(Matrix(4, 5)), 0u);
    const Matrix m = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, 2);
    EXPECT_EQ(rank(m), 1u);
    EXPECT_EQ(oracle::rank(oracle::to_mat(m)), 1u);
}

TEST(LinearAlgebraProperty, SubstitutionRankNullityAndOracleAgreement)
{
    corpus::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        const Matrix A = random_matrix(rng, r, c, 0.5);
        Vector b = corpus::random_vector(rng, r);
        if (trial % 2 == 0)  // consistent right-hand side
            b = A.apply(corpus::random_vector(rng, c));
        const AffineSolution s = solve_affine(A, b);
        EXPECT_EQ(s.rank + s.kernel_basis.size(), c);
        EXPECT_EQ(s.rank, oracle::rank(oracle::to_mat(A)));
        EXPECT_EQ(s.particular.has_value(), oracle::solvable(oracle::to_mat(A), b));
        if (s.particular)
            EXPECT_EQ(A.apply(*s.particular), b);
        for (const auto& k : s.kernel_basis)
            EXPECT_TRUE(is_zero(A.apply(k)));
        if (trial % 2 == 0)
            EXPECT_TRUE(s.particular.has_value());
    }
}

TEST(LinearAlgebraProperty, ParallelAndSerialEliminationAreIdentical)
{
    corpus::Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t r = 20 + rng() % 30, c = 20 + rng() % 30;
        const Matrix A = random_matrix(rng, r, c, 0.2);
        const Vector b = corpus::random_vector(rng, r);
        const AffineSolution p = solve_affine(A, b);
        const AffineSolution s = reference::solve_affine(A, b);
        EXPECT_EQ(p.particular, s.particular);
        EXPECT_EQ(p.kernel_basis, s.kernel_basis);
        EXPECT_EQ(p.rank, s.rank);
        EXPECT_EQ(rank(A), reference::rank(A));
        EXPECT_EQ(kernel_basis(A), reference::kernel_basis(A));
    }
}

TEST(LinearAlgebraProperty, KernelVectorsStartPositive)
{
    corpus::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix A = random_matrix(rng, 3, 6, 0.6);
        for (const auto& k : kernel_basis(A)) {
            const auto it = std::find_if(k.begin(), k.end(), [](const Rational& x) { return sgn(x) != 0; });
            ASSERT_NE(it, k.end());
            EXPECT_GT(sgn(*it), 0);
        }
    }
}
