#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie2mm/linear_algebra.hpp"
#include "lie2mm/multi_index.hpp"
#include "lie2mm/rational.hpp"

namespace lie2mm {

/// Raw structure constants c^k_{ij}, with [e_i, e_j] = sum_k c^k_{ij} e_k.
struct StructureConstants {
    explicit StructureConstants(std::size_t dim = 0) : dim(dim), values(dim * dim * dim) {}

    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return values[(i * dim + j) * dim + k]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const
    {
        return values[(i * dim + j) * dim + k];
    }
    /// Sets c^k_{ij} = v and c^k_{ji} = -v.
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& v)
    {
        at(i, j, k) = v;
        at(j, i, k) = -v;
    }

    std::size_t dim;
    Vector values;
};

/// A validated finite-dimensional Lie algebra. Only obtainable through check_lie_algebra.
class LieAlgebra {
public:
    std::size_t dim() const noexcept { return sc_.dim; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }
    const StructureConstants& structure_constants() const noexcept { return sc_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return sc_.at(i, j, k); }

    Vector bracket(std::size_t i, std::size_t j) const;
    Vector bracket(const Vector& x, const Vector& y) const;
    /// Matrix of ad(e_i) acting on column vectors.
    Matrix ad(std::size_t i) const;
    bool is_abelian() const { return is_zero(sc_.values); }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.sc_.dim == b.sc_.dim && a.sc_.values == b.sc_.values;
    }

private:
    friend LieAlgebra check_lie_algebra(StructureConstants, std::vector<std::string>);
    LieAlgebra(StructureConstants sc, std::vector<std::string> names)
        : sc_(std::move(sc)), names_(std::move(names)) {}

    StructureConstants sc_;
    std::vector<std::string> names_;
};

/// Validates antisymmetry and the Jacobi identity on all basis triples.
/// Throws AntisymmetryViolation or JacobiViolation for the first offending tuple.
/// Empty names default to e1, e2, ...
LieAlgebra check_lie_algebra(StructureConstants sc, std::vector<std::string> names = {});

/// A representation rho of a Lie algebra g on R^dim.
class Representation {
public:
    const LieAlgebra& algebra() const noexcept { return g_; }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& matrix(std::size_t i) const { return mats_.at(i); }
    const std::vector<Matrix>& matrices() const noexcept { return mats_; }
    /// rho(e_i) applied to h.
    Vector act(std::size_t i, const Vector& h) const { return mats_.at(i).apply(h); }
    bool is_trivial() const;

private:
    friend Representation check_representation(const LieAlgebra&, std::vector<Matrix>, std::size_t);
    Representation(LieAlgebra g, std::vector<Matrix> mats, std::size_t dim)
        : g_(std::move(g)), mats_(std::move(mats)), dim_(dim) {}

    LieAlgebra g_;
    std::vector<Matrix> mats_;
    std::size_t dim_;
};

/// Validates rho([e_i,e_j]) = [rho(e_i), rho(e_j)] on all basis pairs (RepViolation otherwise).
/// `dim` is only consulted when g has dimension 0.
Representation check_representation(const LieAlgebra& g, std::vector<Matrix> matrices,
                                    std::size_t dim = 0);
Representation trivial_representation(const LieAlgebra& g, std::size_t dim);
Representation adjoint_representation(const LieAlgebra& g);
/// rho*(x) = -rho(x)^T.
Representation dual_representation(const Representation& rho);
Representation direct_sum(const Representation& a, const Representation& b);

/// An element of Alt^k(g*) (x) V. For each increasing k-tuple I the value f(e_I) in V is stored
/// at values[ext_rank(I) * coeff_dim + a].
struct Cochain {
    Cochain() = default;
    Cochain(std::size_t algebra_dim, std::size_t degree, std::size_t coeff_dim)
        : algebra_dim(algebra_dim), degree(degree), coeff_dim(coeff_dim),
          values(binomial(algebra_dim, degree) * coeff_dim) {}

    std::size_t size() const { return values.size(); }
    std::string shape() const;

    Vector value(const ExtIndex& sorted) const;
    void set_value(const ExtIndex& sorted, const Vector& v);
    Rational& at(const ExtIndex& sorted, std::size_t a)
    {
        return values[ext_rank(sorted, algebra_dim) * coeff_dim + a];
    }
    const Rational& at(const ExtIndex& sorted, std::size_t a) const
    {
        return values[ext_rank(sorted, algebra_dim) * coeff_dim + a];
    }
    /// Value on an arbitrary ordered tuple of basis indices (antisymmetric extension).
    Vector evaluate(std::vector<std::size_t> tuple) const;
    bool is_zero() const { return lie2mm::is_zero(values); }

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& s, Cochain a)
    {
        for (auto& x : a.values)
            x *= s;
        return a;
    }
    friend bool operator==(const Cochain& a, const Cochain& b) = default;

    std::size_t algebra_dim = 0;
    std::size_t degree = 0;
    std::size_t coeff_dim = 0;
    Vector values;
};

/// Applies a linear map A: V -> W (W x V matrix) to the coefficients of a cochain.
Cochain push_coefficients(const Matrix& a, const Cochain& f);

/// (df)(x_0..x_k) = sum_i (-1)^i rho(x_i) f(..^x_i..) + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..^x_i..^x_j..)
Cochain ce_differential(const Representation& rho, const Cochain& f);

/// Matrix of d: Alt^k g* (x) V -> Alt^{k+1} g* (x) V in the storage order of Cochain.
/// Rows are assembled in parallel (OpenMP); reference::differential_matrix is the serial twin.
Matrix differential_matrix(const Representation& rho, std::size_t k);
namespace reference {
Matrix differential_matrix(const Representation& rho, std::size_t k);
}

/// dim H^k(g; V) = dim ker d_k - rank d_{k-1}.
std::size_t cohomology_dim(const Representation& rho, std::size_t k);

struct ClassCertificate {
    bool is_zero = false;
    std::optional<Cochain> primitive;  ///< d(primitive) = cocycle, when is_zero and degree > 0
    std::size_t rank_d = 0;            ///< rank of d_{k-1}
    std::size_t rank_augmented = 0;    ///< rank of [d_{k-1} | cocycle]
};

/// Decides whether a closed k-cochain is exact. Throws NotClosed if d(cocycle) != 0.
ClassCertificate class_is_zero(const Representation& rho, const Cochain& cocycle);

/// A closed cochain standing for its cohomology class.
struct CohomologyClass {
    std::string complex_tag;
    Cochain representative;
    bool is_zero = false;
};

/// Throws CocycleViolation on the first basis 4-tuple where d c != 0.
void check_cocycle(const Representation& rho, const Cochain& c);

/// kappa(e_i, e_j) = tr(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& g);
/// theta(x,y,z) = <x,[y,z]>. Throws FormNotInvariant if the form is not symmetric and
/// ad-invariant; the result is checked antisymmetric and closed.
Cochain cartan_cocycle(const LieAlgebra& g, const Matrix& form);

}  // namespace lie2mm
