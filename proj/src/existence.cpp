#include "lie2mm/existence.hpp"

#include "lie2mm/errors.hpp"

namespace lie2mm {

namespace {

Representation scalars(const LieAlgebra& g) { return trivial_representation(g, 1); }

void check_omega_shape(const LieAlgebra& g, const Cochain& w)
{
    const Cochain expected(g.dim(), 3, 1);
    if (w.algebra_dim != g.dim() || w.degree != 3 || w.coeff_dim != 1 ||
        w.values.size() != expected.values.size())
        throw DimensionMismatch(expected.shape(), w.shape());
}

void require_closed(const LieAlgebra& g, const Cochain& w)
{
    const Cochain d = ce_differential(scalars(g), w);
    if (!d.is_zero())
        throw NotClosed(to_string(d.values));
}

bool omega_class_zero(const MinimalLie2Algebra& L, const OmegaThreeP& w)
{
    return class_is_zero(scalars(L.g()), w.values).is_zero;
}

void require_nonzero_class(const MinimalLie2Algebra& L, const OmegaThreeP& w)
{
    if (omega_class_zero(L, w))
        throw PreconditionFailed("the class of omega_3p in H^3(g) vanishes; the criterion "
                                 "only applies when it is nonzero");
}

// True when every component of [c_red] vanishes.
bool cred_class_zero(const MinimalLie2Algebra& L)
{
    const ReducedLie2Algebra red = reduce(L);
    const std::size_t r = red.h_red.dim();
    const Representation triv = scalars(L.g());
    for (std::size_t q = 0; q < r; ++q) {
        Matrix row(1, r);
        row(0, q) = 1;
        if (!class_is_zero(triv, push_coefficients(row, red.c_red)).is_zero)
            return false;
    }
    return true;
}

Rational pair(const Vector& xi, const Vector& h) { return dot(xi, h); }

}  // namespace

OmegaThreeP make_omega(const LieAlgebra& g, Cochain w, OmegaThreeP::Origin origin)
{
    check_omega_shape(g, w);
    require_closed(g, w);
    return {std::move(w), origin};
}

Matrix star_matrix(const MinimalLie2Algebra& L)
{
    const std::size_t n = L.dim_g();
    const std::size_t m = L.dim_h();
    const auto pairs = ext_basis(n, 2);
    const std::size_t n3 = binomial(n, 3);
    Matrix A(n3 + n * m, m + pairs.size());
    auto place = [&](std::size_t col, const CECochain& image) {
        for (const auto& [mono, c] : image.terms()) {
            if (mono.theta.size() == 3 && mono.eta.empty())
                A(ext_rank(mono.theta, n), col) = c;
            else if (mono.theta.size() == 1 && mono.eta.size() == 1)
                A(n3 + mono.theta[0] * m + mono.eta[0], col) = c;
            else
                throw InternalInvariantBreach("degree-2 differential left the degree-3 bidegrees");
        }
    };
    for (std::size_t a = 0; a < m; ++a) {
        CECochain x(n, m);
        x.add({{}, {a}}, 1);
        place(a, ce_diff(L, x));
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        CECochain x(n, m);
        x.add({pairs[p], {}}, 1);
        place(m + p, ce_diff(L, x));
    }
    return A;
}

bool satisfies_star(const MinimalLie2Algebra& L, const OmegaThreeP& w, const Vector& xi,
                    const Cochain& phi)
{
    const CECochain eta = ce_from_dual(L, xi) + ce_from_cochain(L, phi, 0);
    return ce_diff(L, eta) == ce_from_cochain(L, w.values, 0);
}

StarResult solve_star(const MinimalLie2Algebra& L, const OmegaThreeP& w)
{
    check_omega_shape(L.g(), w.values);
    require_closed(L.g(), w.values);
    const std::size_t n = L.dim_g();
    const std::size_t m = L.dim_h();
    const Matrix A = star_matrix(L);
    Vector b = zero_vector(A.rows());
    for (std::size_t r = 0; r < w.values.values.size(); ++r)
        b[r] = w.values.values[r];
    const AffineSolution sol = solve_affine(A, b);

    StarResult out;
    out.rank = sol.rank;
    out.augmented_rank = sol.augmented_rank;
    if (!sol.particular)
        return out;
    StarSolution s;
    s.xi.assign(sol.particular->begin(), sol.particular->begin() + static_cast<std::ptrdiff_t>(m));
    s.phi = Cochain(n, 2, 1);
    for (std::size_t p = 0; p < s.phi.values.size(); ++p)
        s.phi.values[p] = (*sol.particular)[m + p];
    s.kernel_basis = sol.kernel_basis;
    if (!satisfies_star(L, w, s.xi, s.phi))
        throw InternalInvariantBreach("solution of the linear system fails substitution");
    out.solution = std::move(s);
    return out;
}

Cochain d3(const MinimalLie2Algebra& L, const Vector& xi)
{
    return ce_to_cochain(L, ce_diff(L, ce_from_dual(L, xi)), 3, 0);
}

Cochain compose_cocycle(const MinimalLie2Algebra& L, const Vector& xi)
{
    if (xi.size() != L.dim_h())
        throw DimensionMismatch("h*", "vector of length " + std::to_string(xi.size()));
    return push_coefficients(Matrix::from_rows({xi}, L.dim_h()), L.c());
}

CohomologyClass psi(const MinimalLie2Algebra& L, const Vector& xi)
{
    if (xi.size() != L.dim_h())
        throw DimensionMismatch("h*", "vector of length " + std::to_string(xi.size()));
    for (std::size_t i = 0; i < L.dim_g(); ++i)
        for (std::size_t b = 0; b < L.dim_h(); ++b) {
            const Rational v = pair(xi, L.h().act(i, unit_vector(L.dim_h(), b)));
            if (sgn(v) != 0)
                throw NotInAnnihilator("xi(rho(e" + std::to_string(i) + ") h" +
                                       std::to_string(b) + ") = " + to_string(v));
        }
    CohomologyClass cls;
    cls.complex_tag = "H^3(g)";
    cls.representative = d3(L, xi);
    cls.is_zero = class_is_zero(scalars(L.g()), cls.representative).is_zero;
    return cls;
}

bool in_image_of_psi(const MinimalLie2Algebra& L, const OmegaThreeP& w)
{
    const Matrix D2 = differential_matrix(scalars(L.g()), 2);
    const auto ann = bracket_annihilator(L);
    Matrix A(D2.rows(), D2.cols() + ann.size());
    for (std::size_t r = 0; r < D2.rows(); ++r)
        for (std::size_t c = 0; c < D2.cols(); ++c)
            A(r, c) = D2(r, c);
    for (std::size_t k = 0; k < ann.size(); ++k)
        A.set_column(D2.cols() + k, psi(L, ann[k]).representative.values);
    return solve_affine(A, w.values.values).particular.has_value();
}

std::string to_string(Criterion c)
{
    switch (c) {
    case Criterion::NotExists:
        return "not-exists";
    case Criterion::Exists:
        return "exists";
    case Criterion::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

Criterion criterion_cred_zero(const MinimalLie2Algebra& L, const OmegaThreeP& w)
{
    require_nonzero_class(L, w);
    return cred_class_zero(L) ? Criterion::NotExists : Criterion::Inconclusive;
}

Criterion criterion_h3_onedim(const MinimalLie2Algebra& L, const OmegaThreeP& w)
{
    require_nonzero_class(L, w);
    if (cohomology_dim(scalars(L.g()), 3) == 1 && !cred_class_zero(L))
        return Criterion::Exists;
    return Criterion::Inconclusive;
}

AlgebraicMorphism eta_to_morphism(const MinimalLie2Algebra& L, const OmegaThreeP& w,
                                  const StarSolution& eta)
{
    const std::size_t n = L.dim_g();
    const std::size_t m = L.dim_h();
    if (eta.xi.size() != m || eta.phi.algebra_dim != n || eta.phi.degree != 2 ||
        eta.phi.coeff_dim != 1)
        throw DimensionMismatch("(h*, Alt^2 g*)", "solution of another shape");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b) {
            const Rational v = pair(eta.xi, L.h().act(i, unit_vector(m, b)));
            if (sgn(v) != 0)
                throw StarViolation("f1_h[h" + std::to_string(b) + ",e" + std::to_string(i) +
                                    "] = " + to_string(v) + " != 0");
        }

    // f2(x, [y,z]) for basis x and a bracket of basis vectors
    auto f2_br = [&](std::size_t x, std::size_t y, std::size_t z) {
        Rational s(0);
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(L.g().c(y, z, k)) != 0)
                s += L.g().c(y, z, k) * eta.phi.evaluate({x, k})[0];
        return s;
    };
    for (const auto& t : ext_basis(n, 3)) {
        const std::size_t x = t[0], y = t[1], z = t[2];
        const Rational lhs = pair(eta.xi, L.c().value(t)) - f2_br(x, y, z) + f2_br(y, x, z) -
                             f2_br(z, x, y);
        const Rational rhs = -w.values.at(t, 0);
        if (lhs != rhs)
            throw StarViolation("morphism equation fails on (e" + std::to_string(x) + ",e" +
                                std::to_string(y) + ",e" + std::to_string(z) + "): " +
                                to_string(lhs) + " != " + to_string(rhs));
    }
    return {eta.xi, eta.phi};
}

QuotientPresentation quotient_presentation(const MinimalLie2Algebra& L, const OmegaThreeP& w,
                                           const StarSolution& eta)
{
    const std::size_t n = L.dim_g();
    const std::size_t m = L.dim_h();
    if (eta.xi.size() != m)
        throw DimensionMismatch("h*", "vector of length " + std::to_string(eta.xi.size()));
    if (is_zero(eta.xi))
        throw XiZero();

    QuotientPresentation q;
    q.xi = eta.xi;
    q.kernel = kernel_basis(Matrix::from_rows({eta.xi}, m));
    std::size_t beta = 0;
    while (sgn(eta.xi[beta]) == 0)
        ++beta;
    const Rational inv = 1 / eta.xi[beta];
    q.section = inv * unit_vector(m, beta);

    // coordinates in h = R h0 + ker xi; the first coordinate is the class in h / ker xi
    Matrix frame(m, 1 + q.kernel.size());
    frame.set_column(0, q.section);
    for (std::size_t k = 0; k < q.kernel.size(); ++k)
        frame.set_column(1 + k, q.kernel[k]);
    auto quotient_coordinate = [&](const Vector& v) {
        const AffineSolution s = solve_affine(frame, v);
        if (!s.particular)
            throw InternalInvariantBreach("h0 and ker xi do not span h");
        return (*s.particular)[0];
    };

    q.ideal_ok = true;
    for (std::size_t i = 0; i < n && q.ideal_ok; ++i)
        for (const auto& k : q.kernel)
            if (sgn(pair(eta.xi, L.h().act(i, k))) != 0) {
                q.ideal_ok = false;
                break;
            }

    q.quotient_cocycle = Cochain(n, 3, 1);
    for (const auto& t : ext_basis(n, 3))
        q.quotient_cocycle.at(t, 0) = quotient_coordinate(L.c().value(t));
    q.target_cocycle = compose_cocycle(L, eta.xi);

    // (xi, id_g) is strict: xi-bar intertwines the induced action (which must be trivial)
    // and carries the induced cocycle to xi o c
    const Rational xi_bar = pair(eta.xi, q.section);
    q.strict_iso_ok = q.ideal_ok;
    for (std::size_t i = 0; i < n && q.strict_iso_ok; ++i)
        if (sgn(quotient_coordinate(L.h().act(i, q.section))) != 0)
            q.strict_iso_ok = false;
    if (q.strict_iso_ok)
        q.strict_iso_ok = xi_bar * q.quotient_cocycle == q.target_cocycle;

    q.class_relation_ok =
        class_is_zero(scalars(L.g()), q.target_cocycle + w.values).is_zero;
    return q;
}

ExistenceReport decide_existence(const MinimalLie2Algebra& L, const OmegaThreeP& w,
                                 bool h1_zero_geometry)
{
    const Representation triv = scalars(L.g());
    ExistenceReport rep;
    rep.h3_dim = cohomology_dim(triv, 3);
    rep.annihilator_dim = bracket_annihilator(L).size();
    const ClassCertificate wc = class_is_zero(triv, w.values);
    rep.omega_class_zero = wc.is_zero;
    rep.star = solve_star(L, w);
    const bool solvable = rep.star.solution.has_value();
    if (in_image_of_psi(L, w) != solvable)
        throw InternalInvariantBreach("image-of-Psi route and the linear system disagree");

    bool exists = false;
    if (wc.is_zero) {
        rep.reason = "class-zero";
        exists = true;
        if (!solvable)
            throw InternalInvariantBreach("class of omega_3p vanishes but the system is unsolvable");
        StarSolution s;
        s.xi = zero_vector(L.dim_h());
        s.phi = wc.primitive ? *wc.primitive : Cochain(L.dim_g(), 2, 1);
        s.kernel_basis = rep.star.solution->kernel_basis;
        if (!satisfies_star(L, w, s.xi, s.phi))
            throw InternalInvariantBreach("primitive of omega_3p fails the system");
        rep.certificate = std::move(s);
        rep.notes.push_back("omega_3p is exact in the Chevalley-Eilenberg complex of g; "
                            "a solution with xi = 0 exists");
    } else {
        const bool cred_zero = cred_class_zero(L);
        rep.cred_class_zero = cred_zero;
        if (cred_zero) {
            rep.reason = "c_red-zero";
            exists = false;
            if (solvable)
                throw InternalInvariantBreach("c_red criterion says no, but the system is solvable");
        } else if (rep.h3_dim == 1) {
            rep.reason = "H3-one-dim";
            exists = true;
            if (!solvable)
                throw InternalInvariantBreach("H^3 criterion says yes, but the system is unsolvable");
        } else {
            rep.reason = "direct-star";
            exists = solvable;
        }
        rep.certificate = rep.star.solution;
    }

    if (exists) {
        rep.verdict = h1_zero_geometry ? "exists" : "exists (algebraic)";
        rep.geometric_status = h1_zero_geometry ? "H1-zero" : "undecided-geometric";
        if (!h1_zero_geometry)
            rep.notes.push_back("omega_3p given directly: [omega_3p] vanishes in CE(L), "
                                "geometric existence needs a manifold with H^1 = 0");
    } else {
        rep.verdict = "not-exists";
        rep.geometric_status = "not-applicable";
        rep.notes.push_back("rank certificate: rank " + std::to_string(rep.star.rank) +
                            " < augmented rank " + std::to_string(rep.star.augmented_rank));
    }
    return rep;
}

}  // namespace lie2mm
