#include "lie2mm/poly.hpp"

#include <algorithm>

#include "lie2mm/errors.hpp"
#include "lie2mm/linear_algebra.hpp"

namespace lie2mm {

namespace {

std::string var_name(const std::vector<std::string>& names, std::size_t i)
{
    return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
}

void check_nvars(std::size_t a, std::size_t b)
{
    if (a != b)
        throw DimensionMismatch("R^" + std::to_string(a), "R^" + std::to_string(b));
}

Rational power(const Rational& x, unsigned e)
{
    Rational r(1);
    for (unsigned i = 0; i < e; ++i)
        r *= x;
    return r;
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c)
{
    Poly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i)
{
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e), Rational(1));
}

Poly Poly::monomial(Exponent e, const Rational& c)
{
    Poly p(e.size());
    p.add_term(e, c);
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned x) { return x == 0; }));
}

int Poly::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (unsigned x : e)
            s += static_cast<int>(x);
        d = std::max(d, s);
    }
    return d;
}

void Poly::add_term(const Exponent& e, const Rational& c)
{
    check_nvars(nvars_, e.size());
    if (lie2mm::is_zero(c))
        return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (lie2mm::is_zero(it->second))
            terms_.erase(it);
    }
}

Rational Poly::coefficient(const Exponent& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::evaluate(std::span<const Rational> point) const
{
    check_nvars(nvars_, point.size());
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            t *= power(point[i], e[i]);
        total += t;
    }
    return total;
}

Poly Poly::derivative(std::size_t i) const
{
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(i) == 0)
            continue;
        Exponent f = e;
        --f[i];
        r.add_term(f, c * e[i]);
    }
    return r;
}

Poly Poly::shifted(std::span<const Rational> s) const
{
    check_nvars(nvars_, s.size());
    std::vector<Poly> lin;
    for (std::size_t i = 0; i < nvars_; ++i)
        lin.push_back(variable(nvars_, i) + constant(nvars_, s[i]));
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Poly t = constant(nvars_, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k)
                t = t * lin[i];
        r += t;
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    check_nvars(nvars_, o.nvars_);
    const auto terms = o.terms_;
    for (const auto& [e, c] : terms)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    check_nvars(nvars_, o.nvars_);
    const auto terms = o.terms_;
    for (const auto& [e, c] : terms)
        add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& s)
{
    if (lie2mm::is_zero(s))
        terms_.clear();
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    check_nvars(a.nvars_, b.nvars_);
    Poly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(a.nvars_);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += var_name(names, i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string coeff = lie2mm::to_string(abs(c));
        std::string term = mono.empty() ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
        if (out.empty())
            out = sgn(c) < 0 ? "-" + term : term;
        else
            out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return out;
}

PolyForm::PolyForm(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree)
{
    if (degree > nvars)
        throw DegreeMismatch("form degree " + std::to_string(degree) + " exceeds dimension " +
                             std::to_string(nvars));
}

PolyForm PolyForm::function(const Poly& f)
{
    PolyForm a(f.nvars(), 0);
    a.add({}, f);
    return a;
}

PolyForm PolyForm::basis(std::size_t nvars, const ExtIndex& index, const Poly& coeff)
{
    PolyForm a(nvars, index.size());
    a.add(index, coeff);
    return a;
}

std::string PolyForm::shape() const
{
    return "Omega^" + std::to_string(degree_) + "(R^" + std::to_string(nvars_) + ")";
}

Poly PolyForm::coefficient(const ExtIndex& index) const
{
    const auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Poly(nvars_) : it->second;
}

void PolyForm::add(ExtIndex index, const Poly& c)
{
    if (index.size() != degree_)
        throw DegreeMismatch("index of length " + std::to_string(index.size()) + " in " + shape());
    check_nvars(nvars_, c.nvars());
    for (std::size_t i : index)
        if (i >= nvars_)
            throw DimensionMismatch(shape(), "coordinate index " + std::to_string(i));
    const int s = sort_with_sign(index);
    if (s == 0 || c.is_zero())
        return;
    Poly& slot = coeffs_.try_emplace(index, Poly(nvars_)).first->second;
    if (s > 0)
        slot += c;
    else
        slot -= c;
    if (slot.is_zero())
        coeffs_.erase(index);
}

Poly PolyForm::as_function() const
{
    if (degree_ != 0)
        throw DegreeMismatch("expected a function, got " + shape());
    return coefficient({});
}

int PolyForm::poly_degree() const
{
    int d = -1;
    for (const auto& [i, c] : coeffs_)
        d = std::max(d, c.degree());
    return d;
}

PolyForm& PolyForm::operator+=(const PolyForm& o)
{
    if (o.nvars_ != nvars_ || o.degree_ != degree_)
        throw DimensionMismatch(shape(), o.shape());
    const auto terms = o.coeffs_;
    for (const auto& [i, c] : terms)
        add(i, c);
    return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o)
{
    if (o.nvars_ != nvars_ || o.degree_ != degree_)
        throw DimensionMismatch(shape(), o.shape());
    const auto terms = o.coeffs_;
    for (const auto& [i, c] : terms)
        add(i, -c);
    return *this;
}

PolyForm& PolyForm::operator*=(const Rational& s)
{
    if (lie2mm::is_zero(s))
        coeffs_.clear();
    for (auto& [i, c] : coeffs_)
        c *= s;
    return *this;
}

PolyForm operator*(const Poly& f, const PolyForm& a)
{
    PolyForm r(a.nvars_, a.degree_);
    for (const auto& [i, c] : a.coeffs_)
        r.add(i, f * c);
    return r;
}

std::string PolyForm::to_string(const std::vector<std::string>& names) const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (const auto& [index, c] : coeffs_) {
        if (!out.empty())
            out += " + ";
        out += "(" + c.to_string(names) + ")";
        for (std::size_t k = 0; k < index.size(); ++k)
            out += (k == 0 ? " d" : "^d") + var_name(names, index[k]);
    }
    return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b)
{
    check_nvars(a.nvars(), b.nvars());
    if (a.degree() + b.degree() > a.nvars())
        return PolyForm(a.nvars(), a.nvars());
    PolyForm r(a.nvars(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.coefficients())
        for (const auto& [ib, cb] : b.coefficients()) {
            ExtIndex idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add(idx, ca * cb);
        }
    return r;
}

PolyVectorField::PolyVectorField(std::vector<Poly> components) : comps_(std::move(components))
{
    for (const auto& c : comps_)
        check_nvars(comps_.size(), c.nvars());
}

PolyVectorField PolyVectorField::coordinate(std::size_t nvars, std::size_t i)
{
    PolyVectorField v(nvars);
    v[i] = Poly::constant(nvars, 1);
    return v;
}

bool PolyVectorField::is_zero() const
{
    return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

int PolyVectorField::poly_degree() const
{
    int d = -1;
    for (const auto& c : comps_)
        d = std::max(d, c.degree());
    return d;
}

Poly PolyVectorField::apply(const Poly& f) const
{
    check_nvars(nvars(), f.nvars());
    Poly r(nvars());
    for (std::size_t i = 0; i < nvars(); ++i)
        if (!comps_[i].is_zero())
            r += comps_[i] * f.derivative(i);
    return r;
}

Vector PolyVectorField::evaluate(std::span<const Rational> point) const
{
    Vector v;
    for (const auto& c : comps_)
        v.push_back(c.evaluate(point));
    return v;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o)
{
    check_nvars(nvars(), o.nvars());
    for (std::size_t i = 0; i < nvars(); ++i)
        comps_[i] += o.comps_[i];
    return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o)
{
    check_nvars(nvars(), o.nvars());
    for (std::size_t i = 0; i < nvars(); ++i)
        comps_[i] -= o.comps_[i];
    return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Rational& s)
{
    for (auto& c : comps_)
        c *= s;
    return *this;
}

std::string PolyVectorField::to_string(const std::vector<std::string>& names) const
{
    std::string out;
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (comps_[i].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        out += "(" + comps_[i].to_string(names) + ") d/d" + var_name(names, i);
    }
    return out.empty() ? "0" : out;
}

PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w)
{
    check_nvars(v.nvars(), w.nvars());
    PolyVectorField r(v.nvars());
    for (std::size_t j = 0; j < v.nvars(); ++j)
        r[j] = v.apply(w[j]) - w.apply(v[j]);
    return r;
}

PolyForm d_dR(const PolyForm& a)
{
    if (a.degree() == a.nvars())
        return PolyForm(a.nvars(), a.nvars());
    PolyForm r(a.nvars(), a.degree() + 1);
    for (const auto& [index, c] : a.coefficients())
        for (std::size_t j = 0; j < a.nvars(); ++j) {
            Poly dc = c.derivative(j);
            if (dc.is_zero())
                continue;
            ExtIndex idx{j};
            idx.insert(idx.end(), index.begin(), index.end());
            r.add(idx, dc);
        }
    return r;
}

PolyForm interior(const PolyVectorField& v, const PolyForm& a)
{
    check_nvars(v.nvars(), a.nvars());
    if (a.degree() == 0)
        throw DegreeTooLow("cannot contract a vector field into a function");
    PolyForm r(a.nvars(), a.degree() - 1);
    for (const auto& [index, c] : a.coefficients())
        for (std::size_t k = 0; k < index.size(); ++k) {
            if (v[index[k]].is_zero())
                continue;
            ExtIndex rest = index;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            Poly t = v[index[k]] * c;
            if (k % 2 == 1)
                t *= Rational(-1);
            r.add(rest, t);
        }
    return r;
}

PolyForm contract(std::span<const PolyVectorField> vs, const PolyForm& a)
{
    if (vs.size() > a.degree())
        throw DegreeTooLow("contracting " + std::to_string(vs.size()) + " fields into " +
                           a.shape());
    PolyForm r = a;
    for (const auto& v : vs)
        r = interior(v, r);
    return r;
}

PolyForm primitive(const PolyForm& a, std::span<const Rational> p)
{
    check_nvars(a.nvars(), p.size());
    if (a.degree() == 0)
        throw DegreeTooLow("a function has no primitive");
    const PolyForm defect = d_dR(a);
    if (!defect.is_zero())
        throw NotClosed(defect.to_string());
    const std::size_t n = a.nvars();
    const std::size_t k = a.degree();
    Vector minus_p;
    for (const auto& x : p)
        minus_p.push_back(-x);
    // In coordinates y = x - p: H(c y^m dy^I) = c/(k+|m|) y^m i_E dy^I with E = y.
    PolyForm r(n, k - 1);
    for (const auto& [index, c] : a.coefficients()) {
        const Poly centered = c.shifted(p);
        for (const auto& [e, coeff] : centered.terms()) {
            unsigned total = 0;
            for (unsigned x : e)
                total += x;
            const Rational scale = coeff / Rational(static_cast<long>(k + total));
            for (std::size_t s = 0; s < index.size(); ++s) {
                Exponent f = e;
                ++f[index[s]];
                ExtIndex rest = index;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
                r.add(rest, Poly::monomial(f, s % 2 == 0 ? scale : Rational(-scale)));
            }
        }
    }
    PolyForm out(n, k - 1);
    for (const auto& [index, c] : r.coefficients())
        out.add(index, c.shifted(minus_p));
    return out;
}

bool nondegenerate_at(const PolyForm& w, std::span<const Rational> point)
{
    const std::size_t n = w.nvars();
    if (w.degree() == 0)
        return false;
    const auto cols = ext_basis(n, w.degree() - 1);
    Matrix m(n, cols.size());
    for (std::size_t i = 0; i < n; ++i) {
        const PolyForm c = interior(PolyVectorField::coordinate(n, i), w);
        for (std::size_t j = 0; j < cols.size(); ++j)
            m(i, j) = c.coefficient(cols[j]).evaluate(point);
    }
    return rank(m) == n;
}

TwoPlecticForm make_two_plectic(PolyForm form, Vector p, std::vector<Vector> witnesses)
{
    if (form.degree() != 3)
        throw DegreeMismatch("a 2-plectic form has degree 3, got " + form.shape());
    check_nvars(form.nvars(), p.size());
    for (const auto& q : witnesses)
        check_nvars(form.nvars(), q.size());
    const PolyForm defect = d_dR(form);
    if (!defect.is_zero())
        throw NotClosed(defect.to_string());
    if (!nondegenerate_at(form, p))
        throw Degenerate("v -> i_v omega is not injective at the base point " + to_string(p));
    for (const auto& q : witnesses)
        if (!nondegenerate_at(form, q))
            throw Degenerate("v -> i_v omega is not injective at witness point " + to_string(q));
    TwoPlecticForm w;
    w.form_ = std::move(form);
    w.p_ = std::move(p);
    w.witnesses_ = std::move(witnesses);
    return w;
}

HamiltonianPair hamiltonian_pair(const TwoPlecticForm& w, const PolyVectorField& v,
                                 std::size_t generator)
{
    const PolyForm iv = interior(v, w.form());
    const PolyForm defect = d_dR(iv);
    if (!defect.is_zero())
        throw NotHamiltonian(generator, defect.to_string());
    return {primitive(-iv, w.base_point()), v};
}

int zeta(std::size_t k)
{
    const std::size_t t = k * (k + 1) / 2;
    return t % 2 == 0 ? -1 : 1;
}

PolyForm linfty_bracket(const TwoPlecticForm& w, std::span<const HamiltonianPair> args)
{
    if (args.size() != 2 && args.size() != 3)
        throw DegreeMismatch("bracket arity must be 2 or 3, got " + std::to_string(args.size()));
    std::vector<PolyVectorField> vs;
    for (const auto& a : args) {
        if (a.alpha.degree() != 1)
            throw DegreeMismatch("bracket argument must be a 1-form, got " + a.alpha.shape());
        vs.push_back(a.v);
    }
    return Rational(zeta(args.size())) * contract(vs, w.form());
}

}  // namespace lie2mm
