#include "lie2mm/geometries.hpp"

#include "lie2mm/catalog.hpp"

namespace lie2mm::catalog {

namespace {

Poly x(std::size_t n, std::size_t i) { return Poly::variable(n, i); }

}  // namespace

PolyForm volume_form3() { return PolyForm::basis(3, {0, 1, 2}, Poly::constant(3, 1)); }

HamiltonianAction translations(const Vector& p)
{
    std::vector<PolyVectorField> v;
    for (std::size_t i = 0; i < 3; ++i)
        v.push_back(PolyVectorField::coordinate(3, i));
    return build_action(abelian(3), std::move(v), make_two_plectic(volume_form3(), p));
}

HamiltonianAction heisenberg_frame(const Vector& p)
{
    PolyVectorField Y = PolyVectorField::coordinate(3, 1);
    Y[2] = x(3, 0);
    return build_action(heisenberg(),
                        {PolyVectorField::coordinate(3, 0), Y, PolyVectorField::coordinate(3, 2)},
                        make_two_plectic(volume_form3(), p));
}

HamiltonianAction rotations(const Vector& p)
{
    // v_i(u) = u x e_i, so [v_1, v_2] = v_3 for the cyclic basis
    std::vector<PolyVectorField> v(3, PolyVectorField(3));
    v[0][1] = x(3, 2);
    v[0][2] = -x(3, 1);
    v[1][2] = x(3, 0);
    v[1][0] = -x(3, 2);
    v[2][0] = x(3, 1);
    v[2][1] = -x(3, 0);
    return build_action(su2(), std::move(v), make_two_plectic(volume_form3(), p));
}

HamiltonianAction translations_r6(const Vector& p)
{
    PolyForm w = PolyForm::basis(6, {0, 1, 2}, Poly::constant(6, 1));
    w += PolyForm::basis(6, {3, 4, 5}, Poly::constant(6, 1));
    std::vector<PolyVectorField> v;
    for (std::size_t i = 0; i < 4; ++i)
        v.push_back(PolyVectorField::coordinate(6, i));
    return build_action(abelian(4), std::move(v), make_two_plectic(std::move(w), p));
}

}  // namespace lie2mm::catalog
