#include "lie2mm/lie_algebra.hpp"

#include "lie2mm/errors.hpp"

namespace lie2mm {

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const
{
    const std::size_t n = dim();
    Vector out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = sc_.at(i, j, k);
    return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const
{
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n)
        throw DimensionMismatch("g of dim " + std::to_string(n),
                                "vectors of length " + std::to_string(x.size()) + "," +
                                    std::to_string(y.size()));
    Vector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0)
                continue;
            const Rational w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(sc_.at(i, j, k)) != 0)
                    out[k] += w * sc_.at(i, j, k);
        }
    }
    return out;
}

Matrix LieAlgebra::ad(std::size_t i) const
{
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            m(k, j) = sc_.at(i, j, k);
    return m;
}

LieAlgebra check_lie_algebra(StructureConstants sc, std::vector<std::string> names)
{
    const std::size_t n = sc.dim;
    if (sc.values.size() != n * n * n)
        throw DimensionMismatch("structure constants for dim " + std::to_string(n),
                                std::to_string(sc.values.size()) + " entries");
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i)
            names.push_back("e" + std::to_string(i + 1));
    if (names.size() != n)
        throw DimensionMismatch("dim " + std::to_string(n),
                                std::to_string(names.size()) + " basis names");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sc.at(i, j, k) != -sc.at(j, i, k))
                    throw AntisymmetryViolation(i, j);

    LieAlgebra g(std::move(sc), std::move(names));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector a = g.bracket(g.bracket(i, j), unit_vector(n, k));
                const Vector b = g.bracket(g.bracket(j, k), unit_vector(n, i));
                const Vector c = g.bracket(g.bracket(k, i), unit_vector(n, j));
                Vector defect = a + b + c;
                if (!is_zero(defect))
                    throw JacobiViolation({i, j, k}, std::move(defect));
            }
    return g;
}

bool Representation::is_trivial() const
{
    for (const auto& m : mats_)
        if (!m.is_zero())
            return false;
    return true;
}

Representation check_representation(const LieAlgebra& g, std::vector<Matrix> matrices,
                                    std::size_t dim)
{
    const std::size_t n = g.dim();
    if (matrices.size() != n)
        throw DimensionMismatch("g of dim " + std::to_string(n),
                                std::to_string(matrices.size()) + " action matrices");
    if (n > 0)
        dim = matrices[0].rows();
    for (const auto& m : matrices)
        if (m.rows() != dim || m.cols() != dim)
            throw DimensionMismatch(std::to_string(dim) + "x" + std::to_string(dim) + " matrix",
                                    m.shape());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs(dim, dim);
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(g.c(i, j, k)) != 0)
                    lhs = lhs + g.c(i, j, k) * matrices[k];
            const Matrix rhs = matrices[i] * matrices[j] - matrices[j] * matrices[i];
            if (!(lhs == rhs)) {
                const Matrix d = lhs - rhs;
                std::string detail = "defect rows";
                for (std::size_t r = 0; r < dim; ++r)
                    detail += " " + to_string(d.row(r));
                throw RepViolation(i, j, detail);
            }
        }
    return Representation(g, std::move(matrices), dim);
}

Representation trivial_representation(const LieAlgebra& g, std::size_t dim)
{
    return check_representation(g, std::vector<Matrix>(g.dim(), Matrix(dim, dim)), dim);
}

Representation adjoint_representation(const LieAlgebra& g)
{
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < g.dim(); ++i)
        mats.push_back(g.ad(i));
    return check_representation(g, std::move(mats), g.dim());
}

Representation dual_representation(const Representation& rho)
{
    std::vector<Matrix> mats;
    for (const auto& m : rho.matrices())
        mats.push_back(Rational(-1) * m.transpose());
    return check_representation(rho.algebra(), std::move(mats), rho.dim());
}

Representation direct_sum(const Representation& a, const Representation& b)
{
    if (!(a.algebra() == b.algebra()))
        throw DimensionMismatch("representation of one algebra", "representation of another");
    const std::size_t da = a.dim();
    const std::size_t d = da + b.dim();
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
        Matrix m(d, d);
        for (std::size_t r = 0; r < da; ++r)
            for (std::size_t c = 0; c < da; ++c)
                m(r, c) = a.matrix(i)(r, c);
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t c = 0; c < b.dim(); ++c)
                m(da + r, da + c) = b.matrix(i)(r, c);
        mats.push_back(std::move(m));
    }
    return check_representation(a.algebra(), std::move(mats), d);
}

std::string Cochain::shape() const
{
    return "Alt^" + std::to_string(degree) + "(R^" + std::to_string(algebra_dim) + ")* x R^" +
           std::to_string(coeff_dim);
}

Vector Cochain::value(const ExtIndex& sorted) const
{
    const std::size_t base = ext_rank(sorted, algebra_dim) * coeff_dim;
    return Vector(values.begin() + static_cast<std::ptrdiff_t>(base),
                  values.begin() + static_cast<std::ptrdiff_t>(base + coeff_dim));
}

void Cochain::set_value(const ExtIndex& sorted, const Vector& v)
{
    if (v.size() != coeff_dim)
        throw DimensionMismatch(shape(), "value of length " + std::to_string(v.size()));
    const std::size_t base = ext_rank(sorted, algebra_dim) * coeff_dim;
    for (std::size_t a = 0; a < coeff_dim; ++a)
        values[base + a] = v[a];
}

Vector Cochain::evaluate(std::vector<std::size_t> tuple) const
{
    if (tuple.size() != degree)
        throw DimensionMismatch(shape(), std::to_string(tuple.size()) + " arguments");
    const int s = sort_with_sign(tuple);
    if (s == 0)
        return zero_vector(coeff_dim);
    Vector v = value(tuple);
    if (s < 0)
        for (auto& x : v)
            x = -x;
    return v;
}

Cochain& Cochain::operator+=(const Cochain& o)
{
    if (o.algebra_dim != algebra_dim || o.degree != degree || o.coeff_dim != coeff_dim)
        throw DimensionMismatch(shape(), o.shape());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] += o.values[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o)
{
    if (o.algebra_dim != algebra_dim || o.degree != degree || o.coeff_dim != coeff_dim)
        throw DimensionMismatch(shape(), o.shape());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] -= o.values[i];
    return *this;
}

Cochain push_coefficients(const Matrix& a, const Cochain& f)
{
    if (a.cols() != f.coeff_dim)
        throw DimensionMismatch(a.shape(), f.shape());
    Cochain out(f.algebra_dim, f.degree, a.rows());
    const std::size_t blocks = binomial(f.algebra_dim, f.degree);
    for (std::size_t r = 0; r < blocks; ++r)
        for (std::size_t w = 0; w < a.rows(); ++w)
            for (std::size_t v = 0; v < f.coeff_dim; ++v)
                if (sgn(a(w, v)) != 0)
                    out.values[r * a.rows() + w] += a(w, v) * f.values[r * f.coeff_dim + v];
    return out;
}

namespace {

// Calls emit(out_a, in_block, in_a, coeff) for every term of
// (df)(e_J)[out_a] = sum coeff * f(e_{in_block})[in_a], J increasing of length k+1.
template <class Emit>
void expand_differential(const Representation& rho, const ExtIndex& J, Emit&& emit)
{
    const LieAlgebra& g = rho.algebra();
    const std::size_t n = g.dim();
    const std::size_t V = rho.dim();
    const std::size_t len = J.size();

    for (std::size_t i = 0; i < len; ++i) {
        const Matrix& m = rho.matrix(J[i]);
        if (m.is_zero())
            continue;
        ExtIndex rest;
        for (std::size_t t = 0; t < len; ++t)
            if (t != i)
                rest.push_back(J[t]);
        const std::size_t block = ext_rank(rest, n);
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (std::size_t a = 0; a < V; ++a)
            for (std::size_t b = 0; b < V; ++b)
                if (sgn(m(a, b)) != 0)
                    emit(a, block, b, sign * m(a, b));
    }

    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            const int sign = ((i + j) % 2 == 0) ? 1 : -1;
            for (std::size_t m = 0; m < n; ++m) {
                const Rational& c = g.c(J[i], J[j], m);
                if (sgn(c) == 0)
                    continue;
                std::vector<std::size_t> tuple{m};
                for (std::size_t t = 0; t < len; ++t)
                    if (t != i && t != j)
                        tuple.push_back(J[t]);
                const int s = sort_with_sign(tuple);
                if (s == 0)
                    continue;
                const std::size_t block = ext_rank(tuple, n);
                const Rational coeff = sign * s * c;
                for (std::size_t a = 0; a < V; ++a)
                    emit(a, block, a, coeff);
            }
        }
}

void check_coefficients(const Representation& rho, const Cochain& f)
{
    if (f.algebra_dim != rho.algebra().dim() || f.coeff_dim != rho.dim() ||
        f.values.size() != binomial(f.algebra_dim, f.degree) * f.coeff_dim)
        throw DimensionMismatch("cochain on g of dim " + std::to_string(rho.algebra().dim()) +
                                    " with values in R^" + std::to_string(rho.dim()),
                                f.shape());
}

template <bool Parallel>
Matrix assemble_differential(const Representation& rho, std::size_t k)
{
    const std::size_t n = rho.algebra().dim();
    const std::size_t V = rho.dim();
    const auto out_basis = ext_basis(n, k + 1);
    Matrix d(out_basis.size() * V, binomial(n, k) * V);
    auto fill = [&](std::size_t r) {
        expand_differential(rho, out_basis[r],
                            [&](std::size_t a, std::size_t block, std::size_t b, const Rational& c) {
                                d(r * V + a, block * V + b) += c;
                            });
    };
    const auto count = static_cast<std::ptrdiff_t>(out_basis.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic) if (count > 8)
        for (std::ptrdiff_t r = 0; r < count; ++r)
            fill(static_cast<std::size_t>(r));
    } else {
        for (std::ptrdiff_t r = 0; r < count; ++r)
            fill(static_cast<std::size_t>(r));
    }
    return d;
}

}  // namespace

Cochain ce_differential(const Representation& rho, const Cochain& f)
{
    check_coefficients(rho, f);
    const std::size_t n = rho.algebra().dim();
    const std::size_t V = rho.dim();
    Cochain out(n, f.degree + 1, V);
    const auto out_basis = ext_basis(n, f.degree + 1);
    for (std::size_t r = 0; r < out_basis.size(); ++r)
        expand_differential(rho, out_basis[r],
                            [&](std::size_t a, std::size_t block, std::size_t b, const Rational& c) {
                                const Rational& x = f.values[block * V + b];
                                if (sgn(x) != 0)
                                    out.values[r * V + a] += c * x;
                            });
    return out;
}

Matrix differential_matrix(const Representation& rho, std::size_t k)
{
    return assemble_differential<true>(rho, k);
}

namespace reference {
Matrix differential_matrix(const Representation& rho, std::size_t k)
{
    return assemble_differential<false>(rho, k);
}
}  // namespace reference

std::size_t cohomology_dim(const Representation& rho, std::size_t k)
{
    const std::size_t n = rho.algebra().dim();
    if (k > n)
        return 0;
    const std::size_t cochains = binomial(n, k) * rho.dim();
    const std::size_t rank_k = rank(differential_matrix(rho, k));
    const std::size_t rank_prev = k == 0 ? 0 : rank(differential_matrix(rho, k - 1));
    return cochains - rank_k - rank_prev;
}

ClassCertificate class_is_zero(const Representation& rho, const Cochain& cocycle)
{
    check_coefficients(rho, cocycle);
    const Cochain d = ce_differential(rho, cocycle);
    if (!d.is_zero())
        throw NotClosed(to_string(d.values));
    ClassCertificate cert;
    if (cocycle.degree == 0) {
        cert.is_zero = cocycle.is_zero();
        return cert;
    }
    const Matrix dm = differential_matrix(rho, cocycle.degree - 1);
    const AffineSolution sol = solve_affine(dm, cocycle.values);
    cert.rank_d = sol.rank;
    cert.rank_augmented = sol.augmented_rank;
    cert.is_zero = sol.particular.has_value();
    if (cert.is_zero) {
        Cochain p(cocycle.algebra_dim, cocycle.degree - 1, cocycle.coeff_dim);
        p.values = *sol.particular;
        cert.primitive = std::move(p);
    }
    return cert;
}

void check_cocycle(const Representation& rho, const Cochain& c)
{
    check_coefficients(rho, c);
    const Cochain d = ce_differential(rho, c);
    const auto basis = ext_basis(c.algebra_dim, c.degree + 1);
    for (const auto& t : basis) {
        Vector v = d.value(t);
        if (!is_zero(v)) {
            std::array<std::size_t, 4> tuple{0, 0, 0, 0};
            for (std::size_t i = 0; i < t.size() && i < 4; ++i)
                tuple[i] = t[i];
            throw CocycleViolation(tuple, std::move(v));
        }
    }
}

Matrix killing_form(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i)
        ads.push_back(g.ad(i));
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational tr(0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    tr += ads[i](a, b) * ads[j](b, a);
            k(i, j) = tr;
        }
    return k;
}

Cochain cartan_cocycle(const LieAlgebra& g, const Matrix& form)
{
    const std::size_t n = g.dim();
    if (form.rows() != n || form.cols() != n)
        throw DimensionMismatch("bilinear form on R^" + std::to_string(n), form.shape());
    if (!(form == form.transpose()))
        throw FormNotInvariant("bilinear form is not symmetric");
    auto pair = [&](const Vector& x, const Vector& y) { return dot(x, form.apply(y)); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational lhs = pair(g.bracket(i, j), unit_vector(n, k)) +
                                     pair(unit_vector(n, j), g.bracket(i, k));
                if (sgn(lhs) != 0)
                    throw FormNotInvariant("<[e" + std::to_string(i) + ",e" + std::to_string(j) +
                                           "],e" + std::to_string(k) + "> + <e" +
                                           std::to_string(j) + ",[e" + std::to_string(i) +
                                           ",e" + std::to_string(k) + "]> = " + to_string(lhs));
            }

    auto theta = [&](std::size_t i, std::size_t j, std::size_t k) {
        return pair(unit_vector(n, i), g.bracket(j, k));
    };
    Cochain out(n, 3, 1);
    for (const auto& t : ext_basis(n, 3))
        out.at(t, 0) = theta(t[0], t[1], t[2]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (theta(i, j, k) != out.evaluate({i, j, k})[0])
                    throw InternalInvariantBreach("Cartan cocycle is not alternating");
    if (!ce_differential(trivial_representation(g, 1), out).is_zero())
        throw InternalInvariantBreach("Cartan cocycle is not closed");
    return out;
}

}  // namespace lie2mm
