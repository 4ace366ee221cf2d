#pragma once

// Independent reference computations used as test oracles. Nothing here calls the elimination
// or differential code of the library.

#include <optional>
#include <vector>

#include "lie2mm/exterior.hpp"
#include "lie2mm/lie_algebra.hpp"
#include "lie2mm/poly.hpp"

namespace oracle {

using lie2mm::Rational;
using lie2mm::Vector;
using Mat = std::vector<std::vector<Rational>>;

/// Gauss-Jordan elimination choosing, in each column, the last available nonzero row.
std::size_t rank(Mat a);
bool solvable(const Mat& a, const Vector& b);
/// One solution of a x = b by Gauss-Jordan, if any.
std::optional<Vector> solve(const Mat& a, const Vector& b);

Mat to_mat(const lie2mm::Matrix& m);

/// A V-valued k-linear map stored on all ordered k-tuples (n^k entries).
struct FullCochain {
    std::size_t n = 0, k = 0, V = 0;
    std::vector<Vector> values;
    const Vector& at(const std::vector<std::size_t>& t) const;
    Vector& at(const std::vector<std::size_t>& t);
};

/// Antisymmetric extension of the basis cochain with a single 1 at (tuple, a).
FullCochain basis_cochain(std::size_t n, std::size_t k, std::size_t V,
                          const std::vector<std::size_t>& increasing, std::size_t a);
/// The CE formula evaluated literally on every ordered tuple.
FullCochain brute_differential(const lie2mm::LieAlgebra& g, const std::vector<lie2mm::Matrix>& rho,
                               const FullCochain& f);
/// Matrix of the CE differential d_k built column-by-column with brute_differential, in the
/// library's (increasing tuple, coefficient) ordering.
Mat brute_differential_matrix(const lie2mm::LieAlgebra& g, const std::vector<lie2mm::Matrix>& rho,
                              std::size_t V, std::size_t k);

/// dim H^k through brute-force matrices and the Gauss-Jordan rank above.
std::size_t brute_cohomology_dim(const lie2mm::LieAlgebra& g,
                                 const std::vector<lie2mm::Matrix>& rho, std::size_t V,
                                 std::size_t k);

/// Sign of a permutation given as a vector of distinct indices.
int permutation_sign(const std::vector<std::size_t>& p);

/// Pointwise value of a polynomial form as an alternating form on R^n.
lie2mm::AltForm form_at(const lie2mm::PolyForm& a, const Vector& point);
/// Value of a k-form on k vectors at a point, by the permutation sum over all index tuples.
Rational evaluate_form(const lie2mm::PolyForm& a, const Vector& point, const std::vector<Vector>& vs);
/// (d a)(u_0..u_k) at a point for constant vectors u_i:
/// sum_i (-1)^i D_{u_i}[a(u_0..^u_i..u_k)], with directional derivatives taken term by term.
Rational palais_d(const lie2mm::PolyForm& a, const Vector& point, const std::vector<Vector>& us);

}  // namespace oracle
