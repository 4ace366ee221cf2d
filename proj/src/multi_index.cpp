#include "lie2mm/multi_index.hpp"

#include <algorithm>

namespace lie2mm {

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::size_t multichoose(std::size_t n, std::size_t k)
{
    if (n == 0)
        return k == 0 ? 1 : 0;
    return binomial(n + k - 1, k);
}

namespace {

void ext_recurse(std::size_t dim, std::size_t degree, std::size_t next, ExtIndex& cur,
                 std::vector<ExtIndex>& out)
{
    if (cur.size() == degree) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = next; v + (degree - cur.size()) <= dim; ++v) {
        cur.push_back(v);
        ext_recurse(dim, degree, v + 1, cur, out);
        cur.pop_back();
    }
}

void sym_recurse(std::size_t dim, std::size_t degree, std::size_t next, SymIndex& cur,
                 std::vector<SymIndex>& out)
{
    if (cur.size() == degree) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = next; v < dim; ++v) {
        cur.push_back(v);
        sym_recurse(dim, degree, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ExtIndex> ext_basis(std::size_t dim, std::size_t degree)
{
    std::vector<ExtIndex> out;
    out.reserve(binomial(dim, degree));
    ExtIndex cur;
    ext_recurse(dim, degree, 0, cur, out);
    return out;
}

std::size_t ext_rank(const ExtIndex& index, std::size_t dim)
{
    const std::size_t k = index.size();
    std::size_t rank = 0;
    std::size_t lo = 0;
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t v = lo; v < index[r]; ++v)
            rank += binomial(dim - 1 - v, k - 1 - r);
        lo = index[r] + 1;
    }
    return rank;
}

std::vector<SymIndex> sym_basis(std::size_t dim, std::size_t degree)
{
    std::vector<SymIndex> out;
    out.reserve(multichoose(dim, degree));
    SymIndex cur;
    sym_recurse(dim, degree, 0, cur, out);
    return out;
}

std::size_t sym_rank(const SymIndex& index, std::size_t dim)
{
    const std::size_t k = index.size();
    std::size_t rank = 0;
    std::size_t lo = 0;
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t v = lo; v < index[r]; ++v)
            rank += multichoose(dim - v, k - 1 - r);
        lo = index[r];
    }
    return rank;
}

int sort_with_sign(std::vector<std::size_t>& indices)
{
    int sign = 1;
    // insertion sort; tuples here are short
    for (std::size_t i = 1; i < indices.size(); ++i) {
        for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i] == indices[i - 1])
            return 0;
    return sign;
}

int shuffle_sign(const ExtIndex& a, const ExtIndex& b)
{
    std::vector<std::size_t> merged(a);
    merged.insert(merged.end(), b.begin(), b.end());
    return sort_with_sign(merged);
}

}  // namespace lie2mm
