#include "lie2mm/moment_map.hpp"

#include <functional>
#include <tuple>

#include "lie2mm/errors.hpp"
#include "lie2mm/linear_algebra.hpp"

namespace lie2mm {

namespace {

void require(bool ok, const std::string& lhs, const std::string& rhs)
{
    if (!ok)
        throw DimensionMismatch(lhs, rhs);
}

template <class T>
T combine(const std::vector<T>& items, const Vector& x, T zero)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i]))
            zero += x[i] * items.at(i);
    return zero;
}

std::string tuple_string(const std::vector<std::size_t>& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

// mu2(e_a, y) for a vector y, antisymmetric extension of the pair table.
Poly mu2_at(const std::vector<Poly>& mu2, std::size_t n, std::size_t nvars, std::size_t a,
            const Vector& y)
{
    Poly r(nvars);
    for (std::size_t b = 0; b < n; ++b) {
        if (is_zero(y[b]) || a == b)
            continue;
        const Poly& v = mu2.at(ext_rank({std::min(a, b), std::max(a, b)}, n));
        r += (a < b ? y[b] : Rational(-y[b])) * v;
    }
    return r;
}

void check_candidate(const HamiltonianAction& a, const MinimalLie2Algebra& L,
                     const MomentMapCandidate& mu)
{
    require(L.g() == a.algebra, "algebra of the action", "algebra of L");
    const std::size_t n = L.dim_g(), N = a.nvars();
    require(mu.mu1_g.size() == n, "mu1_g of length " + std::to_string(n),
            "length " + std::to_string(mu.mu1_g.size()));
    require(mu.mu1_h.size() == L.dim_h(), "mu1_h of length " + std::to_string(L.dim_h()),
            "length " + std::to_string(mu.mu1_h.size()));
    require(mu.mu2.size() == binomial(n, 2), "mu2 of length " + std::to_string(binomial(n, 2)),
            "length " + std::to_string(mu.mu2.size()));
    for (const auto& f : mu.mu1_g)
        require(f.degree() == 1 && f.nvars() == N, "1-form on R^" + std::to_string(N), f.shape());
    for (const auto& f : mu.mu1_h)
        require(f.nvars() == N, "function on R^" + std::to_string(N),
                "function on R^" + std::to_string(f.nvars()));
    for (const auto& f : mu.mu2)
        require(f.nvars() == N, "function on R^" + std::to_string(N),
                "function on R^" + std::to_string(f.nvars()));
}

const std::vector<std::string> kEquationNames{"hamiltonian_g", "closed_h", "bracket_2",
                                               "invariant_h", "bracket_3"};

void record(Verification& v, std::size_t eq, std::vector<std::size_t> tuple, const std::string& defect)
{
    EquationStatus& s = v.equations[eq];
    if (!s.pass)
        return;
    s.pass = false;
    s.tuple = std::move(tuple);
    s.defect = defect;
}

Verification fresh_verification()
{
    Verification v;
    for (const auto& n : kEquationNames)
        v.equations.push_back({n, true, {}, ""});
    return v;
}

void finish(Verification& v)
{
    for (const auto& s : v.equations)
        if (!s.pass) {
            v.pass = false;
            v.first_failure = s.name;
            return;
        }
}

}  // namespace

PolyVectorField HamiltonianAction::field(const Vector& x) const
{
    return combine(fields, x, PolyVectorField(nvars()));
}

PolyForm HamiltonianAction::gamma1_of(const Vector& x) const
{
    return combine(gamma1, x, PolyForm(nvars(), 1));
}

HamiltonianAction build_action(const LieAlgebra& g, std::vector<PolyVectorField> fields,
                               const TwoPlecticForm& omega)
{
    require(fields.size() == g.dim(), std::to_string(g.dim()) + " vector fields",
            std::to_string(fields.size()) + " vector fields");
    for (const auto& v : fields)
        require(v.nvars() == omega.nvars(), "vector field on R^" + std::to_string(omega.nvars()),
                "vector field on R^" + std::to_string(v.nvars()));
    HamiltonianAction a{g, std::move(fields), omega, {}};
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const PolyVectorField defect =
                lie_bracket(a.fields[i], a.fields[j]) - a.field(g.bracket(i, j));
            if (!defect.is_zero())
                throw NotMorphism(i, j, defect.to_string());
        }
    for (std::size_t i = 0; i < g.dim(); ++i)
        a.gamma1.push_back(hamiltonian_pair(omega, a.fields[i], i).alpha);
    return a;
}

PolyForm omega_k(const HamiltonianAction& a, const std::vector<std::size_t>& indices)
{
    std::vector<PolyVectorField> vs;
    for (std::size_t i : indices)
        vs.push_back(a.fields.at(i));
    return contract(vs, a.omega.form());
}

PolyForm triple_identity_defect(const HamiltonianAction& a, std::size_t i, std::size_t j,
                                std::size_t k)
{
    const PolyForm& w = a.omega.form();
    const auto& g = a.algebra;
    auto pair = [&](std::size_t p, std::size_t q, std::size_t r) {
        const std::vector<PolyVectorField> vs{a.field(g.bracket(p, q)), a.fields[r]};
        return contract(vs, w);
    };
    return pair(i, j, k) - pair(i, k, j) + pair(j, k, i) - d_dR(omega_k(a, {i, j, k}));
}

OmegaThreeP omega_3p(const HamiltonianAction& a)
{
    const std::size_t n = a.algebra.dim();
    Cochain w(n, 3, 1);
    for (const auto& t : ext_basis(n, 3)) {
        const PolyForm defect = triple_identity_defect(a, t[0], t[1], t[2]);
        if (!defect.is_zero())
            throw InternalInvariantBreach("triple identity fails on " + tuple_string(t) + ": " +
                                          defect.to_string());
        w.at(t, 0) = omega_k(a, t).as_function().evaluate(a.base_point());
    }
    try {
        return make_omega(a.algebra, std::move(w), OmegaThreeP::Origin::EvaluatedAtPoint);
    } catch (const NotClosed& e) {
        throw InternalInvariantBreach(std::string("omega_3p not closed: ") + e.what());
    }
}

void DoubleCochain::add(const CEMonomial& m, const PolyForm& a)
{
    if (a.is_zero())
        return;
    if (a.nvars() != nvars_)
        throw DimensionMismatch("forms on R^" + std::to_string(nvars_), a.shape());
    const Key key{m, a.degree()};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, a);
        return;
    }
    it->second += a;
    if (it->second.is_zero())
        terms_.erase(it);
}

PolyForm DoubleCochain::component(const CEMonomial& m, std::size_t form_degree) const
{
    const auto it = terms_.find({m, form_degree});
    return it == terms_.end() ? PolyForm(nvars_, form_degree) : it->second;
}

int DoubleCochain::poly_degree() const
{
    int d = -1;
    for (const auto& [k, a] : terms_)
        d = std::max(d, a.poly_degree());
    return d;
}

DoubleCochain& DoubleCochain::operator+=(const DoubleCochain& o)
{
    const auto terms = o.terms_;
    for (const auto& [k, a] : terms)
        add(k.first, a);
    return *this;
}

DoubleCochain& DoubleCochain::operator-=(const DoubleCochain& o)
{
    const auto terms = o.terms_;
    for (const auto& [k, a] : terms)
        add(k.first, -a);
    return *this;
}

DoubleCochain operator*(const Rational& s, const DoubleCochain& a)
{
    DoubleCochain r(a.dim_g_, a.dim_h_, a.nvars_);
    for (const auto& [k, f] : a.terms_)
        r.add(k.first, s * f);
    return r;
}

DoubleCochain d_tot(const MinimalLie2Algebra& L, const DoubleCochain& x)
{
    require(x.dim_g() == L.dim_g() && x.dim_h() == L.dim_h(), "CE(L) (x) Omega",
            "cochain over other dimensions");
    DoubleCochain r(x.dim_g(), x.dim_h(), x.nvars());
    for (const auto& [key, a] : x.terms()) {
        const CEMonomial& m = key.first;
        CECochain single(x.dim_g(), x.dim_h());
        single.add(m, Rational(1));
        const CECochain dm = ce_diff(L, single);
        for (const auto& [m2, c] : dm.terms())
            r.add(m2, c * a);
        if (a.degree() < a.nvars()) {
            const PolyForm da = d_dR(a);
            r.add(m, m.degree() % 2 == 0 ? da : -da);
        }
    }
    return r;
}

OmegaTilde omega_tilde(const HamiltonianAction& a)
{
    const std::size_t n = a.algebra.dim();
    OmegaTilde w;
    for (std::size_t i = 0; i < n; ++i)
        w.omega1.push_back(omega_k(a, {i}));
    for (const auto& t : ext_basis(n, 2))
        w.omega2.emplace(t, omega_k(a, t));
    for (const auto& t : ext_basis(n, 3))
        w.omega3.emplace(t, omega_k(a, t).as_function());
    return w;
}

DoubleCochain to_double_cochain(const MinimalLie2Algebra& L, const OmegaTilde& w)
{
    const std::size_t N = w.omega1.empty() ? 0 : w.omega1.front().nvars();
    DoubleCochain r(L.dim_g(), L.dim_h(), N);
    for (std::size_t i = 0; i < w.omega1.size(); ++i)
        r.add({{i}, {}}, w.omega1[i]);
    for (const auto& [t, f] : w.omega2)
        r.add({t, {}}, -f);
    for (const auto& [t, f] : w.omega3)
        r.add({t, {}}, PolyForm::function(f));
    return r;
}

DoubleCochain to_double_cochain(const MinimalLie2Algebra& L, const MomentMapCandidate& mu)
{
    std::size_t N = 0;
    if (!mu.mu1_g.empty())
        N = mu.mu1_g.front().nvars();
    else if (!mu.mu1_h.empty())
        N = mu.mu1_h.front().nvars();
    else if (!mu.mu2.empty())
        N = mu.mu2.front().nvars();
    DoubleCochain r(L.dim_g(), L.dim_h(), N);
    for (std::size_t i = 0; i < mu.mu1_g.size(); ++i)
        r.add({{i}, {}}, mu.mu1_g[i]);
    for (std::size_t b = 0; b < mu.mu1_h.size(); ++b)
        r.add({{}, {b}}, PolyForm::function(mu.mu1_h[b]));
    const auto pairs = ext_basis(L.dim_g(), 2);
    for (std::size_t p = 0; p < mu.mu2.size(); ++p)
        r.add({pairs.at(p), {}}, PolyForm::function(mu.mu2[p]));
    return r;
}

MomentMapCandidate from_double_cochain(const MinimalLie2Algebra& L, const DoubleCochain& x)
{
    MomentMapCandidate mu;
    for (std::size_t i = 0; i < L.dim_g(); ++i)
        mu.mu1_g.push_back(x.component({{i}, {}}, 1));
    for (std::size_t b = 0; b < L.dim_h(); ++b)
        mu.mu1_h.push_back(x.component({{}, {b}}, 0).as_function());
    for (const auto& t : ext_basis(L.dim_g(), 2))
        mu.mu2.push_back(x.component({t, {}}, 0).as_function());
    if (!(to_double_cochain(L, mu) == x))
        throw DimensionMismatch("element of total degree 2 in the moment-map components",
                                "element with other components");
    return mu;
}

Verification verify_moment_map(const HamiltonianAction& a, const MinimalLie2Algebra& L,
                               const MomentMapCandidate& mu)
{
    check_candidate(a, L, mu);
    const std::size_t n = L.dim_g(), m = L.dim_h(), N = a.nvars();
    const PolyForm& w = a.omega.form();
    const LieAlgebra& g = L.g();
    Verification v = fresh_verification();

    for (std::size_t i = 0; i < n; ++i) {
        const PolyForm defect = d_dR(mu.mu1_g[i]) + omega_k(a, {i});
        if (!defect.is_zero())
            record(v, 0, {i}, defect.to_string());
    }
    for (std::size_t b = 0; b < m; ++b) {
        const PolyForm defect = d_dR(PolyForm::function(mu.mu1_h[b]));
        if (!defect.is_zero())
            record(v, 1, {b}, defect.to_string());
    }
    const auto pairs = ext_basis(n, 2);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const std::size_t i = pairs[p][0], j = pairs[p][1];
        const std::vector<PolyVectorField> vs{a.fields[i], a.fields[j]};
        const PolyForm rhs = combine(mu.mu1_g, g.bracket(i, j), PolyForm(N, 1)) -
                             Rational(zeta(2)) * contract(vs, w);
        const PolyForm defect = d_dR(PolyForm::function(mu.mu2[p])) - rhs;
        if (!defect.is_zero())
            record(v, 2, {i, j}, defect.to_string());
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b) {
            const Poly defect = combine(mu.mu1_h, L.h().act(i, unit_vector(m, b)), Poly(N));
            if (!defect.is_zero())
                record(v, 3, {i, b}, defect.to_string());
        }
    for (const auto& t : ext_basis(n, 3)) {
        const std::size_t x = t[0], y = t[1], z = t[2];
        const Poly lhs = combine(mu.mu1_h, L.c().value(t), Poly(N)) -
                         Rational(zeta(3)) * omega_k(a, t).as_function();
        const Poly rhs = mu2_at(mu.mu2, n, N, x, g.bracket(y, z)) -
                         mu2_at(mu.mu2, n, N, y, g.bracket(x, z)) +
                         mu2_at(mu.mu2, n, N, z, g.bracket(x, y));
        const Poly defect = lhs - rhs;
        if (!defect.is_zero())
            record(v, 4, t, defect.to_string());
    }
    finish(v);
    return v;
}

Verification verify_via_dtot(const HamiltonianAction& a, const MinimalLie2Algebra& L,
                             const MomentMapCandidate& mu)
{
    check_candidate(a, L, mu);
    const DoubleCochain diff =
        d_tot(L, to_double_cochain(L, mu)) - to_double_cochain(L, omega_tilde(a));
    Verification v = fresh_verification();
    for (const auto& [key, f] : diff.terms()) {
        const CEMonomial& m = key.first;
        const std::size_t ta = m.theta.size(), hb = m.eta.size(), k = key.second;
        std::vector<std::size_t> tuple = m.theta;
        tuple.insert(tuple.end(), m.eta.begin(), m.eta.end());
        std::size_t eq;
        if (ta == 1 && hb == 0 && k == 2)
            eq = 0;
        else if (ta == 0 && hb == 1 && k == 1)
            eq = 1;
        else if (ta == 2 && hb == 0 && k == 1)
            eq = 2;
        else if (ta == 1 && hb == 1 && k == 0)
            eq = 3;
        else if (ta == 3 && hb == 0 && k == 0)
            eq = 4;
        else
            throw InternalInvariantBreach("d_tot mu has a component outside total degree 3");
        record(v, eq, tuple, f.to_string());
    }
    finish(v);
    return v;
}

GammaMomentMap build_gamma(const HamiltonianAction& a)
{
    const LieAlgebra& g = a.algebra;
    const OmegaThreeP w = omega_3p(a);
    MinimalLie2Algebra L = build_minimal(g, trivial_representation(g, 1), Rational(-1) * w.values);
    MomentMapCandidate mu;
    mu.mu1_g = a.gamma1;
    mu.mu1_h = {Poly::constant(a.nvars(), 1)};
    std::vector<Poly> gamma2;
    for (const auto& t : ext_basis(g.dim(), 2)) {
        const std::vector<PolyVectorField> vs{a.fields[t[0]], a.fields[t[1]]};
        const PolyForm rhs = a.gamma1_of(g.bracket(t[0], t[1])) - contract(vs, a.omega.form());
        gamma2.push_back(primitive(rhs, a.base_point()).as_function());
    }
    mu.mu2 = gamma2;
    return {std::move(L), std::move(mu), std::move(gamma2)};
}

MomentMapCandidate build_phi_eta(const HamiltonianAction& a, const MinimalLie2Algebra& L,
                                 const StarSolution& eta)
{
    require(L.g() == a.algebra, "algebra of the action", "algebra of L");
    const OmegaThreeP w = omega_3p(a);
    if (!satisfies_star(L, w, eta.xi, eta.phi))
        throw StarViolation("eta does not solve the system for omega_3p of this action");
    const GammaMomentMap gamma = build_gamma(a);
    MomentMapCandidate mu;
    mu.mu1_g = a.gamma1;
    for (const auto& x : eta.xi)
        mu.mu1_h.push_back(Poly::constant(a.nvars(), x));
    const auto pairs = ext_basis(L.dim_g(), 2);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        mu.mu2.push_back(Poly::constant(a.nvars(), eta.phi.at(pairs[p], 0)) + gamma.gamma2[p]);
    return mu;
}

CECochain restrict_r(const MinimalLie2Algebra& L, const DoubleCochain& x, const Vector& p)
{
    CECochain r(L.dim_g(), L.dim_h());
    for (const auto& [key, f] : x.terms())
        if (key.second == 0)
            r.add(key.first, f.as_function().evaluate(p));
    return r;
}

CECochain restrict_r(const MinimalLie2Algebra& L, const MomentMapCandidate& mu, const Vector& p)
{
    return restrict_r(L, to_double_cochain(L, mu), p);
}

CECochain star_as_ce(const MinimalLie2Algebra& L, const Vector& xi, const Cochain& phi)
{
    return ce_from_dual(L, xi) + ce_from_cochain(L, phi, 0);
}

StarSolution star_from_ce(const MinimalLie2Algebra& L, const CECochain& x)
{
    StarSolution s;
    s.xi = zero_vector(L.dim_h());
    for (std::size_t b = 0; b < L.dim_h(); ++b)
        s.xi[b] = x.coefficient({{}, {b}});
    s.phi = ce_to_cochain(L, x, 2, 0);
    return s;
}

InnerEquivalence inner_equivalence(const MinimalLie2Algebra& L, const MomentMapCandidate& mu,
                                   const MomentMapCandidate& mu_prime,
                                   std::optional<unsigned> degree_bound)
{
    const DoubleCochain delta = to_double_cochain(L, mu) - to_double_cochain(L, mu_prime);
    const DoubleCochain closed = d_tot(L, delta);
    if (!closed.is_zero())
        throw NotClosedDifference("d_tot(mu - mu') != 0");
    const std::size_t N = delta.nvars();
    InnerEquivalence out;
    out.degree_bound = degree_bound ? *degree_bound
                                    : static_cast<unsigned>(std::max(delta.poly_degree(), -1) + 1);
    if (delta.is_zero()) {
        out.alpha = std::vector<Poly>(L.dim_g(), Poly(N));
        return out;
    }

    std::vector<Exponent> monomials;
    std::function<void(Exponent&, std::size_t, unsigned)> gen = [&](Exponent& e, std::size_t i,
                                                                    unsigned left) {
        if (i == N) {
            monomials.push_back(e);
            return;
        }
        for (unsigned d = 0; d <= left; ++d) {
            e[i] = d;
            gen(e, i + 1, left - d);
        }
        e[i] = 0;
    };
    Exponent e0(N, 0);
    gen(e0, 0, out.degree_bound);

    using RowKey = std::tuple<DoubleCochain::Key, ExtIndex, Exponent>;
    std::map<RowKey, std::size_t> rows;
    auto row_of = [&](const RowKey& k) {
        return rows.try_emplace(k, rows.size()).first->second;
    };
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
    for (std::size_t i = 0; i < L.dim_g(); ++i)
        for (const auto& e : monomials) {
            DoubleCochain a(L.dim_g(), L.dim_h(), N);
            a.add({{i}, {}}, PolyForm::function(Poly::monomial(e, Rational(1))));
            std::vector<std::pair<std::size_t, Rational>> col;
            const DoubleCochain da = d_tot(L, a);
            for (const auto& [key, f] : da.terms())
                for (const auto& [idx, c] : f.coefficients())
                    for (const auto& [ex, q] : c.terms())
                        col.emplace_back(row_of({key, idx, ex}), q);
            columns.push_back(std::move(col));
        }
    std::vector<std::pair<std::size_t, Rational>> rhs_entries;
    for (const auto& [key, f] : delta.terms())
        for (const auto& [idx, c] : f.coefficients())
            for (const auto& [ex, q] : c.terms())
                rhs_entries.emplace_back(row_of({key, idx, ex}), q);

    Matrix A(rows.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [r, q] : columns[j])
            A(r, j) = q;
    Vector b = zero_vector(rows.size());
    for (const auto& [r, q] : rhs_entries)
        b[r] = q;
    const AffineSolution s = solve_affine(A, b);
    if (!s.particular)
        return out;

    std::vector<Poly> alpha(L.dim_g(), Poly(N));
    DoubleCochain check(L.dim_g(), L.dim_h(), N);
    for (std::size_t i = 0; i < L.dim_g(); ++i) {
        for (std::size_t k = 0; k < monomials.size(); ++k)
            alpha[i].add_term(monomials[k], (*s.particular)[i * monomials.size() + k]);
        check.add({{i}, {}}, PolyForm::function(alpha[i]));
    }
    if (!(d_tot(L, check) == delta))
        throw InternalInvariantBreach("inner-equivalence solution fails substitution");
    out.alpha = std::move(alpha);
    return out;
}

}  // namespace lie2mm
