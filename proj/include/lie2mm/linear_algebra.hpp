#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie2mm/rational.hpp"

namespace lie2mm {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::string shape() const;

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    Matrix transpose() const;
    Vector apply(const Vector& v) const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Result of solving A x = b: one particular solution when the system is consistent, and a
/// basis of ker A. Each kernel vector is scaled so its first nonzero entry is positive.
struct AffineSolution {
    std::optional<Vector> particular;
    std::vector<Vector> kernel_basis;
    std::size_t rank = 0;            ///< rank A
    std::size_t augmented_rank = 0;  ///< rank [A | b]
};

// Fraction-free (Bareiss) elimination on the integer-scaled matrix. Pivot order is fixed:
// leftmost column first, smallest row index within a column. The row updates of each pivot
// step run in parallel when built with OpenMP.
std::size_t rank(const Matrix& a);
AffineSolution solve_affine(const Matrix& a, const Vector& b);
std::vector<Vector> kernel_basis(const Matrix& a);

/// Serial implementations of the same elimination; bit-identical results.
namespace reference {
std::size_t rank(const Matrix& a);
AffineSolution solve_affine(const Matrix& a, const Vector& b);
std::vector<Vector> kernel_basis(const Matrix& a);
}  // namespace reference

}  // namespace lie2mm
