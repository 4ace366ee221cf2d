#pragma once

#include <compare>
#include <map>
#include <vector>

#include "lie2mm/lie_algebra.hpp"

namespace lie2mm {

/// A minimal Lie 2-algebra h[1] + g: a Lie algebra, a representation on h, and an h-valued
/// 3-cocycle c (the trinary bracket).
class MinimalLie2Algebra {
public:
    const LieAlgebra& g() const noexcept { return h_.algebra(); }
    const Representation& h() const noexcept { return h_; }
    const Cochain& c() const noexcept { return c_; }
    std::size_t dim_g() const noexcept { return h_.algebra().dim(); }
    std::size_t dim_h() const noexcept { return h_.dim(); }

private:
    friend MinimalLie2Algebra build_minimal(const LieAlgebra&, const Representation&, Cochain);
    MinimalLie2Algebra(Representation h, Cochain c) : h_(std::move(h)), c_(std::move(c)) {}

    Representation h_;
    Cochain c_;
};

/// Checks that h is a representation of g and that d c = 0.
/// Throws DimensionMismatch, RepViolation or CocycleViolation.
MinimalLie2Algebra build_minimal(const LieAlgebra& g, const Representation& h, Cochain c);

/// A monomial theta^{I} eta^{B} of CE(L): theta^i (degree 1, odd) dual to e_i in g,
/// eta^b (degree 2, even) dual to the basis of h.
struct CEMonomial {
    ExtIndex theta;
    SymIndex eta;
    std::size_t degree() const { return theta.size() + 2 * eta.size(); }
    friend auto operator<=>(const CEMonomial&, const CEMonomial&) = default;
};

/// An element of CE(L) as a sparse combination of monomials.
///
/// For b <= 1 the coefficient of theta^{i_1..i_a} eta^{beta} equals the value of the
/// corresponding multilinear map on (e_{i_1},..,e_{i_a}; h_beta); for b >= 2 coefficients are
/// those of the symmetric monomial.
class CECochain {
public:
    CECochain() = default;
    CECochain(std::size_t dim_g, std::size_t dim_h) : dim_g_(dim_g), dim_h_(dim_h) {}

    std::size_t dim_g() const noexcept { return dim_g_; }
    std::size_t dim_h() const noexcept { return dim_h_; }
    const std::map<CEMonomial, Rational>& terms() const noexcept { return terms_; }

    void add(const CEMonomial& m, const Rational& c);
    Rational coefficient(const CEMonomial& m) const;
    bool is_zero() const { return terms_.empty(); }
    /// Total degree if homogeneous, -1 if mixed, 0 if zero.
    int degree() const;
    /// The part in Alt^a g* (x) S^b h*.
    CECochain component(std::size_t a, std::size_t b) const;

    CECochain& operator+=(const CECochain& o);
    CECochain& operator-=(const CECochain& o);
    friend CECochain operator+(CECochain a, const CECochain& b) { return a += b; }
    friend CECochain operator-(CECochain a, const CECochain& b) { return a -= b; }
    friend CECochain operator*(const Rational& s, const CECochain& a);
    friend bool operator==(const CECochain& a, const CECochain& b) = default;

private:
    std::size_t dim_g_ = 0;
    std::size_t dim_h_ = 0;
    std::map<CEMonomial, Rational> terms_;
};

/// Lifts an ordinary cochain in Alt^a g* (x) V, with V = R (b = 0) or V = h* (b = 1).
CECochain ce_from_cochain(const MinimalLie2Algebra& L, const Cochain& f, std::size_t b);
/// Extracts the (a, b) component as an ordinary cochain, b in {0, 1}.
Cochain ce_to_cochain(const MinimalLie2Algebra& L, const CECochain& x, std::size_t a,
                      std::size_t b);
/// eta-part generator: sum_beta xi_beta eta^beta.
CECochain ce_from_dual(const MinimalLie2Algebra& L, const Vector& xi);

/// d_{CE(L)} = -d2 + d3, extended as a derivation of the free graded-commutative algebra:
///   d theta^k = - sum_{i<j} c^k_{ij} theta^i theta^j
///   d eta^a   = - sum_{i,b} rho(e_i)^a_b theta^i eta^b - sum_{i<j<k} c^a(e_i,e_j,e_k) theta^i theta^j theta^k
CECochain ce_diff(const MinimalLie2Algebra& L, const CECochain& x);

/// Basis monomials of total degree d in lex order of (theta, eta) grouped by bidegree
/// (a descending).
std::vector<CEMonomial> ce_basis(std::size_t dim_g, std::size_t dim_h, std::size_t degree);

/// Matrix of d_{CE(L)} from degree d to d+1 in the ce_basis orders. Columns are assembled in
/// parallel (OpenMP); reference::ce_diff_matrix is the serial twin.
Matrix ce_diff_matrix(const MinimalLie2Algebra& L, std::size_t degree);
namespace reference {
Matrix ce_diff_matrix(const MinimalLie2Algebra& L, std::size_t degree);
}

/// Rows form a basis of the annihilator [g,h]° in h*.
std::vector<Vector> bracket_annihilator(const MinimalLie2Algebra& L);
/// A basis of [g,h] = span{rho(e_i) h_j}.
std::vector<Vector> bracket_image(const MinimalLie2Algebra& L);

/// The reduced Lie 2-algebra: g acting trivially on h/[g,h], with c_red = pr o c.
/// The quotient is identified with R^r through the annihilator basis, so pr has the
/// annihilator vectors as rows.
struct ReducedLie2Algebra {
    Representation h_red;
    Cochain c_red;
    Matrix projection;
};

ReducedLie2Algebra reduce(const MinimalLie2Algebra& L);

}  // namespace lie2mm
