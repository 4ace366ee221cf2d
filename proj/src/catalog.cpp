#include "lie2mm/catalog.hpp"

namespace lie2mm::catalog {

LieAlgebra abelian(std::size_t n) { return check_lie_algebra(StructureConstants(n)); }

LieAlgebra heisenberg()
{
    StructureConstants sc(3);
    sc.set_bracket(0, 1, 2, 1);
    return check_lie_algebra(sc, {"X", "Y", "Z"});
}

LieAlgebra su2()
{
    StructureConstants sc(3);
    sc.set_bracket(0, 1, 2, 1);
    sc.set_bracket(1, 2, 0, 1);
    sc.set_bracket(2, 0, 1, 1);
    return check_lie_algebra(sc);
}

LieAlgebra sl2()
{
    StructureConstants sc(3);
    sc.set_bracket(0, 1, 1, 2);
    sc.set_bracket(0, 2, 2, -2);
    sc.set_bracket(1, 2, 0, 1);
    return check_lie_algebra(sc, {"H", "E", "F"});
}

LieAlgebra affine_line()
{
    StructureConstants sc(2);
    sc.set_bracket(0, 1, 1, 1);
    return check_lie_algebra(sc);
}

LieAlgebra euclidean2()
{
    StructureConstants sc(3);
    sc.set_bracket(0, 1, 2, 1);
    sc.set_bracket(0, 2, 1, -1);
    return check_lie_algebra(sc, {"J", "P1", "P2"});
}

LieAlgebra filiform4()
{
    StructureConstants sc(4);
    sc.set_bracket(0, 1, 2, 1);
    sc.set_bracket(0, 2, 3, 1);
    return check_lie_algebra(sc);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b)
{
    const std::size_t na = a.dim();
    const std::size_t n = na + b.dim();
    StructureConstants sc(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k)
                sc.at(i, j, k) = a.c(i, j, k);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                sc.at(na + i, na + j, na + k) = b.c(i, j, k);
    std::vector<std::string> names = a.basis_names();
    for (const auto& s : b.basis_names())
        names.push_back(s + "'");
    return check_lie_algebra(sc, names);
}

Representation heisenberg_matrix_rep()
{
    std::vector<Matrix> mats(3, Matrix(3, 3));
    mats[0](0, 1) = 1;
    mats[1](1, 2) = 1;
    mats[2](0, 2) = 1;
    return check_representation(heisenberg(), std::move(mats));
}

Representation scaling_rep(const LieAlgebra& g, const Vector& lambda, std::size_t dim)
{
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < g.dim(); ++i)
        mats.push_back(lambda.at(i) * Matrix::identity(dim));
    return check_representation(g, std::move(mats), dim);
}

Cochain volume_cocycle(std::size_t n)
{
    Cochain c(n, 3, 1);
    c.at({0, 1, 2}, 0) = 1;
    return c;
}

}  // namespace lie2mm::catalog
