#pragma once

#include <span>
#include <string>

#include "lie2mm/multi_index.hpp"
#include "lie2mm/rational.hpp"

namespace lie2mm {

/// An alternating k-linear form on a `dim`-dimensional space, stored by its values on
/// lexicographically ordered strictly increasing basis tuples.
class AltForm {
public:
    AltForm(std::size_t dim, std::size_t degree);

    /// The basis covector e^i.
    static AltForm covector(std::size_t dim, std::size_t i);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t degree() const noexcept { return degree_; }
    std::string shape() const;

    const Rational& operator[](const ExtIndex& index) const;
    Rational& operator[](const ExtIndex& index);
    const Vector& coefficients() const noexcept { return coeffs_; }
    Vector& coefficients() noexcept { return coeffs_; }

    /// Value on arbitrary vectors: sum over basis tuples of coefficient times minor.
    Rational evaluate(std::span<const Vector> vectors) const;

    bool is_zero() const { return lie2mm::is_zero(coeffs_); }

    AltForm& operator+=(const AltForm& other);
    AltForm& operator-=(const AltForm& other);
    AltForm& operator*=(const Rational& s);
    friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
    friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
    friend AltForm operator*(const Rational& s, AltForm a) { return a *= s; }
    friend bool operator==(const AltForm& a, const AltForm& b)
    {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::size_t dim_;
    std::size_t degree_;
    Vector coeffs_;
};

/// Exterior product with the shuffle-sign convention, so that (e^1 ^ e^2)(e_1, e_2) = 1.
AltForm wedge(const AltForm& a, const AltForm& b);

/// Determinant of a small dense square matrix given row-major.
Rational determinant(std::vector<Vector> rows);

}  // namespace lie2mm
