#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lie2mm/multi_index.hpp"
#include "lie2mm/rational.hpp"

namespace lie2mm {

using Exponent = std::vector<unsigned>;

/// Polynomial in n variables with rational coefficients. Zero coefficients are never stored.
class Poly {
public:
    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t i);
    static Poly monomial(Exponent e, const Rational& c);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;

    Rational evaluate(std::span<const Rational> point) const;
    Poly derivative(std::size_t i) const;
    /// x -> f(x + s).
    Poly shifted(std::span<const Rational> s) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Human-readable, using x1..xn unless names are given.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t nvars_;
    std::map<Exponent, Rational> terms_;
};

/// Differential k-form on R^n with polynomial coefficients, keyed by increasing index tuples.
class PolyForm {
public:
    PolyForm(std::size_t nvars = 0, std::size_t degree = 0);

    static PolyForm function(const Poly& f);
    /// dx^{i1} ^ ... ^ dx^{ik} with i increasing.
    static PolyForm basis(std::size_t nvars, const ExtIndex& index, const Poly& coeff);

    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t degree() const noexcept { return degree_; }
    std::string shape() const;
    const std::map<ExtIndex, Poly>& coefficients() const noexcept { return coeffs_; }
    Poly coefficient(const ExtIndex& index) const;
    /// Adds c * dx^{index}; index need not be sorted.
    void add(ExtIndex index, const Poly& c);
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// The 0-form as a polynomial.
    Poly as_function() const;
    int poly_degree() const;

    PolyForm& operator+=(const PolyForm& o);
    PolyForm& operator-=(const PolyForm& o);
    PolyForm& operator*=(const Rational& s);
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    friend PolyForm operator-(PolyForm a) { return a *= Rational(-1); }
    friend PolyForm operator*(const Rational& s, PolyForm a) { return a *= s; }
    friend PolyForm operator*(const Poly& f, const PolyForm& a);
    friend bool operator==(const PolyForm& a, const PolyForm& b) = default;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t nvars_;
    std::size_t degree_;
    std::map<ExtIndex, Poly> coeffs_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);

class PolyVectorField {
public:
    explicit PolyVectorField(std::size_t nvars = 0) : comps_(nvars, Poly(nvars)) {}
    explicit PolyVectorField(std::vector<Poly> components);
    static PolyVectorField coordinate(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return comps_.size(); }
    const std::vector<Poly>& components() const noexcept { return comps_; }
    const Poly& operator[](std::size_t i) const { return comps_.at(i); }
    Poly& operator[](std::size_t i) { return comps_.at(i); }
    bool is_zero() const;
    int poly_degree() const;

    /// v(f) = sum v^i d_i f.
    Poly apply(const Poly& f) const;
    Vector evaluate(std::span<const Rational> point) const;

    PolyVectorField& operator+=(const PolyVectorField& o);
    PolyVectorField& operator-=(const PolyVectorField& o);
    PolyVectorField& operator*=(const Rational& s);
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
    friend PolyVectorField operator*(const Rational& s, PolyVectorField a) { return a *= s; }
    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) = default;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::vector<Poly> comps_;
};

/// [v,w]f = v(wf) - w(vf).
PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w);

PolyForm d_dR(const PolyForm& a);

/// i_v a.
PolyForm interior(const PolyVectorField& v, const PolyForm& a);
/// i(v1 ^ ... ^ vk) a = i_{vk} ... i_{v1} a. Throws DegreeTooLow if k > deg a.
PolyForm contract(std::span<const PolyVectorField> vs, const PolyForm& a);

/// Line-segment homotopy operator based at p. For closed a of degree >= 1 returns b with
/// d b = a; when a is a 1-form, b(p) = 0. Throws NotClosed or DegreeTooLow.
PolyForm primitive(const PolyForm& a, std::span<const Rational> p);

/// Closed 3-form with nondegeneracy checked at the base point and the witness points.
class TwoPlecticForm {
public:
    const PolyForm& form() const noexcept { return form_; }
    std::size_t nvars() const noexcept { return form_.nvars(); }
    const Vector& base_point() const noexcept { return p_; }
    const std::vector<Vector>& witnesses() const noexcept { return witnesses_; }

private:
    friend TwoPlecticForm make_two_plectic(PolyForm, Vector, std::vector<Vector>);
    PolyForm form_;
    Vector p_;
    std::vector<Vector> witnesses_;
};

/// Throws DegreeMismatch, DimensionMismatch, NotClosed or Degenerate.
TwoPlecticForm make_two_plectic(PolyForm form, Vector p, std::vector<Vector> witnesses = {});

/// Whether v -> i_v w is injective at the point.
bool nondegenerate_at(const PolyForm& w, std::span<const Rational> point);

struct HamiltonianPair {
    PolyForm alpha;
    PolyVectorField v;
};

/// alpha = primitive(-i_v w) at the base point. Throws NotHamiltonian with d(i_v w).
HamiltonianPair hamiltonian_pair(const TwoPlecticForm& w, const PolyVectorField& v,
                                 std::size_t generator = 0);

/// -(-1)^{k(k+1)/2}.
int zeta(std::size_t k);

/// zeta(k) i(v1 ^ ... ^ vk) w for k in {2,3}: a 1-form, or a 0-form when k = 3.
/// Throws DegreeMismatch on other arities or on a pair that is not a 1-form.
PolyForm linfty_bracket(const TwoPlecticForm& w, std::span<const HamiltonianPair> args);

}  // namespace lie2mm
