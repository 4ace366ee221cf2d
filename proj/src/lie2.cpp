#include "lie2mm/lie2.hpp"

#include <algorithm>

#include "lie2mm/errors.hpp"

namespace lie2mm {

MinimalLie2Algebra build_minimal(const LieAlgebra& g, const Representation& h, Cochain c)
{
    if (!(h.algebra() == g))
        throw DimensionMismatch("representation of g (dim " + std::to_string(g.dim()) + ")",
                                "representation of a different algebra (dim " +
                                    std::to_string(h.algebra().dim()) + ")");
    const Cochain expected(g.dim(), 3, h.dim());
    if (c.algebra_dim != g.dim() || c.degree != 3 || c.coeff_dim != h.dim() ||
        c.values.size() != expected.values.size())
        throw DimensionMismatch(expected.shape(), c.shape());
    check_cocycle(h, c);
    return MinimalLie2Algebra(h, std::move(c));
}

void CECochain::add(const CEMonomial& m, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Rational CECochain::coefficient(const CEMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int CECochain::degree() const
{
    if (terms_.empty())
        return 0;
    const std::size_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            return -1;
    return static_cast<int>(d);
}

CECochain CECochain::component(std::size_t a, std::size_t b) const
{
    CECochain out(dim_g_, dim_h_);
    for (const auto& [m, c] : terms_)
        if (m.theta.size() == a && m.eta.size() == b)
            out.terms_.emplace(m, c);
    return out;
}

CECochain& CECochain::operator+=(const CECochain& o)
{
    if (o.dim_g_ != dim_g_ || o.dim_h_ != dim_h_)
        throw DimensionMismatch("CE cochain", "CE cochain over other spaces");
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

CECochain& CECochain::operator-=(const CECochain& o)
{
    if (o.dim_g_ != dim_g_ || o.dim_h_ != dim_h_)
        throw DimensionMismatch("CE cochain", "CE cochain over other spaces");
    for (const auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

CECochain operator*(const Rational& s, const CECochain& a)
{
    CECochain out(a.dim_g_, a.dim_h_);
    if (sgn(s) == 0)
        return out;
    for (const auto& [m, c] : a.terms_)
        out.terms_.emplace(m, s * c);
    return out;
}

CECochain ce_from_cochain(const MinimalLie2Algebra& L, const Cochain& f, std::size_t b)
{
    const std::size_t want = b == 0 ? 1 : L.dim_h();
    if (b > 1 || f.algebra_dim != L.dim_g() || f.coeff_dim != want)
        throw DimensionMismatch("Alt^a g* (x) S^" + std::to_string(b) + " h*", f.shape());
    CECochain out(L.dim_g(), L.dim_h());
    const auto basis = ext_basis(f.algebra_dim, f.degree);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t a = 0; a < want; ++a)
            out.add({basis[r], b == 0 ? SymIndex{} : SymIndex{a}}, f.values[r * want + a]);
    return out;
}

Cochain ce_to_cochain(const MinimalLie2Algebra& L, const CECochain& x, std::size_t a,
                      std::size_t b)
{
    if (b > 1)
        throw DimensionMismatch("bidegree with b <= 1", "b = " + std::to_string(b));
    const std::size_t V = b == 0 ? 1 : L.dim_h();
    Cochain out(L.dim_g(), a, V);
    for (const auto& [m, c] : x.terms())
        if (m.theta.size() == a && m.eta.size() == b)
            out.at(m.theta, b == 0 ? 0 : m.eta[0]) = c;
    return out;
}

CECochain ce_from_dual(const MinimalLie2Algebra& L, const Vector& xi)
{
    if (xi.size() != L.dim_h())
        throw DimensionMismatch("h* of dim " + std::to_string(L.dim_h()),
                                "vector of length " + std::to_string(xi.size()));
    CECochain out(L.dim_g(), L.dim_h());
    for (std::size_t b = 0; b < xi.size(); ++b)
        out.add({{}, {b}}, xi[b]);
    return out;
}

namespace {

struct Term1 {
    std::size_t i;
    std::size_t j;
    Rational c;
};
struct ThetaEtaTerm {
    std::size_t i;
    std::size_t beta;
    Rational c;
};
struct Term3 {
    ExtIndex ijk;
    Rational c;
};

// Coefficients of d on the generators, with the overall minus signs applied.
struct GeneratorDifferentials {
    std::vector<std::vector<Term1>> d_theta;        // per k
    std::vector<std::vector<ThetaEtaTerm>> d_eta2;  // per alpha, theta^i eta^beta part
    std::vector<std::vector<Term3>> d_eta3;         // per alpha, theta^3 part

    explicit GeneratorDifferentials(const MinimalLie2Algebra& L)
    {
        const std::size_t n = L.dim_g();
        const std::size_t m = L.dim_h();
        d_theta.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn(L.g().c(i, j, k)) != 0)
                        d_theta[k].push_back({i, j, -L.g().c(i, j, k)});
        d_eta2.resize(m);
        d_eta3.resize(m);
        for (std::size_t i = 0; i < n; ++i) {
            const Matrix& rho = L.h().matrix(i);
            for (std::size_t alpha = 0; alpha < m; ++alpha)
                for (std::size_t beta = 0; beta < m; ++beta)
                    if (sgn(rho(alpha, beta)) != 0)
                        d_eta2[alpha].push_back({i, beta, -rho(alpha, beta)});
        }
        for (const auto& t : ext_basis(n, 3))
            for (std::size_t alpha = 0; alpha < m; ++alpha) {
                const Rational& v = L.c().at(t, alpha);
                if (sgn(v) != 0)
                    d_eta3[alpha].push_back({t, -v});
            }
    }
};

void diff_monomial(const GeneratorDifferentials& G, const CEMonomial& mono, const Rational& coeff,
                   CECochain& out)
{
    const std::size_t a = mono.theta.size();
    for (std::size_t r = 0; r < a; ++r) {
        const Rational sr = (r % 2 == 0) ? coeff : Rational(-coeff);
        for (const auto& t : G.d_theta[mono.theta[r]]) {
            std::vector<std::size_t> tuple;
            tuple.reserve(a + 1);
            tuple.insert(tuple.end(), mono.theta.begin(), mono.theta.begin() + static_cast<std::ptrdiff_t>(r));
            tuple.push_back(t.i);
            tuple.push_back(t.j);
            tuple.insert(tuple.end(), mono.theta.begin() + static_cast<std::ptrdiff_t>(r + 1), mono.theta.end());
            const int s = sort_with_sign(tuple);
            if (s == 0)
                continue;
            out.add({std::move(tuple), mono.eta}, s * sr * t.c);
        }
    }

    const Rational sa = (a % 2 == 0) ? coeff : Rational(-coeff);
    for (std::size_t p = 0; p < mono.eta.size(); ++p) {
        SymIndex rest;
        for (std::size_t q = 0; q < mono.eta.size(); ++q)
            if (q != p)
                rest.push_back(mono.eta[q]);
        const std::size_t alpha = mono.eta[p];
        for (const auto& t : G.d_eta2[alpha]) {
            std::vector<std::size_t> tuple(mono.theta);
            tuple.push_back(t.i);
            const int s = sort_with_sign(tuple);
            if (s == 0)
                continue;
            SymIndex eta(rest);
            eta.insert(std::upper_bound(eta.begin(), eta.end(), t.beta), t.beta);
            out.add({std::move(tuple), std::move(eta)}, s * sa * t.c);
        }
        for (const auto& t : G.d_eta3[alpha]) {
            std::vector<std::size_t> tuple(mono.theta);
            tuple.insert(tuple.end(), t.ijk.begin(), t.ijk.end());
            const int s = sort_with_sign(tuple);
            if (s == 0)
                continue;
            out.add({std::move(tuple), rest}, s * sa * t.c);
        }
    }
}

void check_spaces(const MinimalLie2Algebra& L, const CECochain& x)
{
    if (x.dim_g() != L.dim_g() || x.dim_h() != L.dim_h())
        throw DimensionMismatch("CE(L) with dim g = " + std::to_string(L.dim_g()) +
                                    ", dim h = " + std::to_string(L.dim_h()),
                                "cochain with dim g = " + std::to_string(x.dim_g()) +
                                    ", dim h = " + std::to_string(x.dim_h()));
    for (const auto& [m, c] : x.terms()) {
        for (auto i : m.theta)
            if (i >= L.dim_g())
                throw DimensionMismatch("theta index < " + std::to_string(L.dim_g()),
                                        std::to_string(i));
        for (auto b : m.eta)
            if (b >= L.dim_h())
                throw DimensionMismatch("eta index < " + std::to_string(L.dim_h()),
                                        std::to_string(b));
    }
}

template <bool Parallel>
Matrix assemble_ce(const MinimalLie2Algebra& L, std::size_t degree)
{
    const auto cols = ce_basis(L.dim_g(), L.dim_h(), degree);
    const auto rows = ce_basis(L.dim_g(), L.dim_h(), degree + 1);
    std::map<CEMonomial, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_index.emplace(rows[r], r);
    const GeneratorDifferentials G(L);
    Matrix d(rows.size(), cols.size());
    auto fill = [&](std::size_t j) {
        CECochain image(L.dim_g(), L.dim_h());
        diff_monomial(G, cols[j], Rational(1), image);
        for (const auto& [m, c] : image.terms())
            d(row_index.at(m), j) = c;
    };
    const auto count = static_cast<std::ptrdiff_t>(cols.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic) if (count > 8)
        for (std::ptrdiff_t j = 0; j < count; ++j)
            fill(static_cast<std::size_t>(j));
    } else {
        for (std::ptrdiff_t j = 0; j < count; ++j)
            fill(static_cast<std::size_t>(j));
    }
    return d;
}

}  // namespace

CECochain ce_diff(const MinimalLie2Algebra& L, const CECochain& x)
{
    check_spaces(L, x);
    const GeneratorDifferentials G(L);
    CECochain out(L.dim_g(), L.dim_h());
    for (const auto& [m, c] : x.terms())
        diff_monomial(G, m, c, out);
    return out;
}

std::vector<CEMonomial> ce_basis(std::size_t dim_g, std::size_t dim_h, std::size_t degree)
{
    std::vector<CEMonomial> out;
    for (std::size_t b = 0; 2 * b <= degree; ++b) {
        const std::size_t a = degree - 2 * b;
        if (a > dim_g || (b > 0 && dim_h == 0))
            continue;
        const auto thetas = ext_basis(dim_g, a);
        const auto etas = sym_basis(dim_h, b);
        for (const auto& t : thetas)
            for (const auto& e : etas)
                out.push_back({t, e});
    }
    return out;
}

Matrix ce_diff_matrix(const MinimalLie2Algebra& L, std::size_t degree)
{
    return assemble_ce<true>(L, degree);
}

namespace reference {
Matrix ce_diff_matrix(const MinimalLie2Algebra& L, std::size_t degree)
{
    return assemble_ce<false>(L, degree);
}
}  // namespace reference

std::vector<Vector> bracket_annihilator(const MinimalLie2Algebra& L)
{
    const std::size_t n = L.dim_g();
    const std::size_t m = L.dim_h();
    // xi annihilates [g,h] iff xi(rho(e_i) h_b) = 0 for all i, b
    Matrix M(n * m, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t alpha = 0; alpha < m; ++alpha)
                M(i * m + b, alpha) = L.h().matrix(i)(alpha, b);
    return kernel_basis(M);
}

std::vector<Vector> bracket_image(const MinimalLie2Algebra& L)
{
    const std::size_t m = L.dim_h();
    const auto ann = bracket_annihilator(L);
    return kernel_basis(Matrix::from_rows(ann, m));
}

ReducedLie2Algebra reduce(const MinimalLie2Algebra& L)
{
    const auto ann = bracket_annihilator(L);
    Matrix P = Matrix::from_rows(ann, L.dim_h());
    Cochain c_red = push_coefficients(P, L.c());
    Representation h_red = trivial_representation(L.g(), ann.size());
    if (!ce_differential(h_red, c_red).is_zero())
        throw InternalInvariantBreach("reduced cocycle is not closed");
    return {std::move(h_red), std::move(c_red), std::move(P)};
}

}  // namespace lie2mm
