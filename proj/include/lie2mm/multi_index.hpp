#pragma once

#include <cstddef>
#include <vector>

namespace lie2mm {

/// Strictly increasing basis indices labelling a basis element of an exterior power.
using ExtIndex = std::vector<std::size_t>;
/// Weakly increasing basis indices labelling a basis element of a symmetric power.
using SymIndex = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);
/// Number of multisets of size k drawn from n elements.
std::size_t multichoose(std::size_t n, std::size_t k);

/// All strictly increasing k-tuples in [0, dim), lexicographic.
std::vector<ExtIndex> ext_basis(std::size_t dim, std::size_t degree);
/// Position of `index` in ext_basis(dim, index.size()).
std::size_t ext_rank(const ExtIndex& index, std::size_t dim);

/// All weakly increasing k-tuples in [0, dim), lexicographic.
std::vector<SymIndex> sym_basis(std::size_t dim, std::size_t degree);
std::size_t sym_rank(const SymIndex& index, std::size_t dim);

/// Sorts `indices` ascending and returns the sign of the sorting permutation,
/// or 0 if an index repeats.
int sort_with_sign(std::vector<std::size_t>& indices);

/// Sign of the shuffle that merges two disjoint increasing tuples into increasing order,
/// 0 if they intersect.
int shuffle_sign(const ExtIndex& a, const ExtIndex& b);

}  // namespace lie2mm
