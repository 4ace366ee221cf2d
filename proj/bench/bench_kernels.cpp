#include <benchmark/benchmark.h>

#include <random>

#include "lie2mm/catalog.hpp"
#include "lie2mm/linear_algebra.hpp"

using namespace lie2mm;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols)
{
    std::mt19937_64 rng(rows * 7919 + cols);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 3 != 0) {
                m(r, c) = Rational(num(rng), den(rng));
                m(r, c).canonicalize();
            }
    return m;
}

LieAlgebra algebra_of_dim(std::size_t n)
{
    LieAlgebra g = catalog::su2();
    while (g.dim() + 3 <= n)
        g = catalog::direct_sum(g, g.dim() % 2 ? catalog::heisenberg() : catalog::sl2());
    while (g.dim() < n)
        g = catalog::direct_sum(g, catalog::abelian(1));
    return g;
}

MinimalLie2Algebra lie2_of_dim(std::size_t n)
{
    const LieAlgebra g = algebra_of_dim(n);
    return build_minimal(g, adjoint_representation(g), Cochain(n, 3, n));
}

void BM_RankParallel(benchmark::State& s)
{
    const Matrix m = random_matrix(s.range(0), s.range(0) + 4);
    for (auto _ : s)
        benchmark::DoNotOptimize(rank(m));
}

void BM_RankSerial(benchmark::State& s)
{
    const Matrix m = random_matrix(s.range(0), s.range(0) + 4);
    for (auto _ : s)
        benchmark::DoNotOptimize(reference::rank(m));
}

void BM_DifferentialMatrixParallel(benchmark::State& s)
{
    const Representation rho = adjoint_representation(algebra_of_dim(s.range(0)));
    for (auto _ : s)
        benchmark::DoNotOptimize(differential_matrix(rho, 3));
}

void BM_DifferentialMatrixSerial(benchmark::State& s)
{
    const Representation rho = adjoint_representation(algebra_of_dim(s.range(0)));
    for (auto _ : s)
        benchmark::DoNotOptimize(reference::differential_matrix(rho, 3));
}

void BM_CEDiffMatrixParallel(benchmark::State& s)
{
    const MinimalLie2Algebra L = lie2_of_dim(s.range(0));
    for (auto _ : s)
        benchmark::DoNotOptimize(ce_diff_matrix(L, 3));
}

void BM_CEDiffMatrixSerial(benchmark::State& s)
{
    const MinimalLie2Algebra L = lie2_of_dim(s.range(0));
    for (auto _ : s)
        benchmark::DoNotOptimize(reference::ce_diff_matrix(L, 3));
}

}  // namespace

BENCHMARK(BM_RankParallel)->Arg(40)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->Arg(40)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DifferentialMatrixParallel)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DifferentialMatrixSerial)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CEDiffMatrixParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CEDiffMatrixSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
