#include "lie2mm/exterior.hpp"

#include "lie2mm/errors.hpp"

namespace lie2mm {

AltForm::AltForm(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree), coeffs_(binomial(dim, degree), Rational(0))
{
}

AltForm AltForm::covector(std::size_t dim, std::size_t i)
{
    AltForm f(dim, 1);
    f[{i}] = 1;
    return f;
}

std::string AltForm::shape() const
{
    return "Alt^" + std::to_string(degree_) + "(R^" + std::to_string(dim_) + ")*";
}

const Rational& AltForm::operator[](const ExtIndex& index) const
{
    return coeffs_.at(ext_rank(index, dim_));
}

Rational& AltForm::operator[](const ExtIndex& index) { return coeffs_.at(ext_rank(index, dim_)); }

Rational determinant(std::vector<Vector> rows)
{
    const std::size_t n = rows.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(rows[p][c]) == 0)
            ++p;
        if (p == n)
            return Rational(0);
        if (p != c) {
            std::swap(rows[p], rows[c]);
            det = -det;
        }
        det *= rows[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(rows[r][c]) == 0)
                continue;
            Rational f = rows[r][c] / rows[c][c];
            for (std::size_t k = c; k < n; ++k)
                rows[r][k] -= f * rows[c][k];
        }
    }
    return det;
}

Rational AltForm::evaluate(std::span<const Vector> vectors) const
{
    if (vectors.size() != degree_)
        throw DimensionMismatch(shape(), std::to_string(vectors.size()) + " arguments");
    for (const auto& v : vectors)
        if (v.size() != dim_)
            throw DimensionMismatch(shape(), "argument of length " + std::to_string(v.size()));

    const auto basis = ext_basis(dim_, degree_);
    Rational total(0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (sgn(coeffs_[b]) == 0)
            continue;
        std::vector<Vector> minor(degree_, Vector(degree_));
        for (std::size_t r = 0; r < degree_; ++r)
            for (std::size_t s = 0; s < degree_; ++s)
                minor[r][s] = vectors[s][basis[b][r]];
        total += coeffs_[b] * determinant(std::move(minor));
    }
    return total;
}

AltForm& AltForm::operator+=(const AltForm& other)
{
    if (other.dim_ != dim_ || other.degree_ != degree_)
        throw DimensionMismatch(shape(), other.shape());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

AltForm& AltForm::operator-=(const AltForm& other)
{
    if (other.dim_ != dim_ || other.degree_ != degree_)
        throw DimensionMismatch(shape(), other.shape());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

AltForm& AltForm::operator*=(const Rational& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

AltForm wedge(const AltForm& a, const AltForm& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch(a.shape(), b.shape());
    AltForm out(a.dim(), a.degree() + b.degree());
    if (a.degree() + b.degree() > a.dim())
        return out;
    const auto basis_a = ext_basis(a.dim(), a.degree());
    const auto basis_b = ext_basis(b.dim(), b.degree());
    for (std::size_t i = 0; i < basis_a.size(); ++i) {
        const Rational& ca = a.coefficients()[i];
        if (sgn(ca) == 0)
            continue;
        for (std::size_t j = 0; j < basis_b.size(); ++j) {
            const Rational& cb = b.coefficients()[j];
            if (sgn(cb) == 0)
                continue;
            std::vector<std::size_t> merged(basis_a[i]);
            merged.insert(merged.end(), basis_b[j].begin(), basis_b[j].end());
            const int s = sort_with_sign(merged);
            if (s == 0)
                continue;
            out[merged] += s * ca * cb;
        }
    }
    return out;
}

}  // namespace lie2mm
