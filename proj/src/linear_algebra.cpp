#include "lie2mm/linear_algebra.hpp"

#include <cstddef>
#include <utility>

#include "lie2mm/errors.hpp"

namespace lie2mm {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch(m.shape(), "row of length " + std::to_string(rows[r].size()));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

std::string Matrix::shape() const
{
    return std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix";
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v)
{
    if (v.size() != rows_)
        throw DimensionMismatch(shape(), "column of length " + std::to_string(v.size()));
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw DimensionMismatch(shape(), "vector[" + std::to_string(v.size()) + "]");
    Vector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

bool Matrix::is_zero() const { return lie2mm::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch(a.shape(), b.shape());
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch(a.shape(), b.shape());
    Matrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch(a.shape(), b.shape());
    Matrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a)
{
    Matrix out(a);
    for (auto& x : out.data_)
        x *= s;
    return out;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

struct Echelon {
    IntRows rows;
    std::vector<std::size_t> pivot_cols;
};

// Scales each row of [A | b] by the lcm of its denominators.
IntRows integer_rows(const Matrix& a, const Vector* b)
{
    const std::size_t width = a.cols() + (b ? 1 : 0);
    IntRows out(a.rows(), std::vector<Integer>(width));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer l(1);
        for (std::size_t c = 0; c < a.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
        if (b)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)[r].get_den_mpz_t());
        for (std::size_t c = 0; c < a.cols(); ++c)
            out[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
        if (b)
            out[r][a.cols()] = (*b)[r].get_num() * (l / (*b)[r].get_den());
    }
    return out;
}

template <bool Parallel>
Echelon bareiss(IntRows m)
{
    Echelon e;
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows ? m[0].size() : 0;
    Integer prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t p = r;
        while (p < nrows && sgn(m[p][col]) == 0)
            ++p;
        if (p == nrows)
            continue;
        std::swap(m[p], m[r]);

        const std::vector<Integer>& pivot_row = m[r];
        const Integer& pivot = pivot_row[col];
        auto update = [&](std::size_t i) {
            std::vector<Integer>& row = m[i];
            const Integer f = row[col];
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Integer t = pivot * row[j];
                if (sgn(f) != 0)
                    t -= f * pivot_row[j];
                mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            row[col] = 0;
        };
        const auto first = static_cast<std::ptrdiff_t>(r + 1);
        const auto last = static_cast<std::ptrdiff_t>(nrows);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 4) if (last - first > 16)
            for (std::ptrdiff_t i = first; i < last; ++i)
                update(static_cast<std::size_t>(i));
        } else {
            for (std::ptrdiff_t i = first; i < last; ++i)
                update(static_cast<std::size_t>(i));
        }
        prev = pivot;
        e.pivot_cols.push_back(col);
        ++r;
    }
    e.rows = std::move(m);
    return e;
}

// Solves the echelon system for the pivot variables given values of the free ones.
Vector back_substitute(const Echelon& e, std::size_t n, Vector x, bool use_rhs)
{
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        const std::size_t pc = e.pivot_cols[k];
        if (pc >= n)
            continue;
        const auto& row = e.rows[k];
        Rational acc = use_rhs ? Rational(row[n]) : Rational(0);
        for (std::size_t j = pc + 1; j < n; ++j)
            if (sgn(row[j]) != 0)
                acc -= Rational(row[j]) * x[j];
        x[pc] = acc / Rational(row[pc]);
    }
    return x;
}

void normalize_sign(Vector& v)
{
    for (const auto& x : v) {
        if (sgn(x) == 0)
            continue;
        if (sgn(x) < 0)
            for (auto& y : v)
                y = -y;
        return;
    }
}

std::vector<Vector> kernel_from_echelon(const Echelon& e, std::size_t n)
{
    std::vector<bool> is_pivot(n, false);
    for (auto pc : e.pivot_cols)
        if (pc < n)
            is_pivot[pc] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vector x(n, Rational(0));
        x[f] = 1;
        x = back_substitute(e, n, std::move(x), false);
        normalize_sign(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

template <bool Parallel>
std::size_t rank_impl(const Matrix& a)
{
    if (a.rows() == 0 || a.cols() == 0)
        return 0;
    return bareiss<Parallel>(integer_rows(a, nullptr)).pivot_cols.size();
}

template <bool Parallel>
std::vector<Vector> kernel_impl(const Matrix& a)
{
    if (a.rows() == 0) {
        std::vector<Vector> basis;
        for (std::size_t f = 0; f < a.cols(); ++f)
            basis.push_back(unit_vector(a.cols(), f));
        return basis;
    }
    return kernel_from_echelon(bareiss<Parallel>(integer_rows(a, nullptr)), a.cols());
}

template <bool Parallel>
AffineSolution solve_impl(const Matrix& a, const Vector& b)
{
    if (b.size() != a.rows())
        throw DimensionMismatch(a.shape(), "right-hand side of length " + std::to_string(b.size()));
    const std::size_t n = a.cols();
    AffineSolution out;
    if (a.rows() == 0) {
        out.particular = zero_vector(n);
        out.kernel_basis = kernel_impl<Parallel>(a);
        return out;
    }
    const Echelon e = bareiss<Parallel>(integer_rows(a, &b));
    out.augmented_rank = e.pivot_cols.size();
    out.rank = out.augmented_rank;
    bool consistent = true;
    for (auto pc : e.pivot_cols)
        if (pc == n) {
            consistent = false;
            --out.rank;
        }
    if (consistent)
        out.particular = back_substitute(e, n, zero_vector(n), true);
    out.kernel_basis = kernel_from_echelon(e, n);
    return out;
}

}  // namespace

std::size_t rank(const Matrix& a) { return rank_impl<true>(a); }
AffineSolution solve_affine(const Matrix& a, const Vector& b) { return solve_impl<true>(a, b); }
std::vector<Vector> kernel_basis(const Matrix& a) { return kernel_impl<true>(a); }

namespace reference {
std::size_t rank(const Matrix& a) { return rank_impl<false>(a); }
AffineSolution solve_affine(const Matrix& a, const Vector& b) { return solve_impl<false>(a, b); }
std::vector<Vector> kernel_basis(const Matrix& a) { return kernel_impl<false>(a); }
}  // namespace reference

}  // namespace lie2mm
