#include <doctest.h>

#include "gradla/oracles.hpp"
#include "helpers.hpp"

using namespace gradla;
using testing_helpers::code_of;
using testing_helpers::mat;

TEST_SUITE("oracles") {

TEST_CASE("commutative Leibniz")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero();
    GradedMatrix x = mat(h, {o, o}, {h.basis("i"), h.basis("j"), h.one(), h.one()});
    CHECK(code_of([&] { leibniz_det_commutative(x); }) == ErrorCode::NonCommutingEntries);
    GradedAlgebra c = presets::clock_shift(2);
    GradedMatrix y = mat(c, {c.group().zero(), c.group().zero()}, {c.one(), c.basis("X"), c.basis("X"), c.one()});
    std::mt19937_64 rng(1);
    CHECK(leibniz_det_commutative(y, rng).is_zero());
}

TEST_CASE("quaternion embedding is multiplicative")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero();
    RandomSource rs(12);
    for (int rep = 0; rep < 20; ++rep) {
        AlgebraElement p = rs.element(h, 0.8), q = rs.element(h, 0.8);
        auto chi = [&](const AlgebraElement& a) { return quaternion_embedding(mat(h, {o}, {a})); };
        ScalarMatrix cp = chi(p), cq = chi(q), cpq = chi(p * q);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(cp[i][0] * cq[0][j] + cp[i][1] * cq[1][j] == cpq[i][j]);
        CHECK(determinant(cp) == CycloScalar(quaternion_norm(p)));
    }
    CHECK(code_of([] { quaternion_embedding(GradedMatrix::identity(presets::clifford(0, 2), {})); }) ==
          ErrorCode::NotQuaternionic);
}

TEST_CASE("row decomposition matches on small cases")
{
    GradedAlgebra h = presets::quaternions();
    RandomSource rs(21);
    auto pool = h.support_subgroup();
    for (const auto& s : ns_multipliers(h))
        for (int rep = 0; rep < 3; ++rep) {
            auto nu = rs.degrees(pool, 2);
            GradedMatrix x = rs.inhomogeneous(h, nu, nu, 0.4);
            CHECK(gdet_via_row_decomposition(x, s) == gdet_sigma(x, s));
        }
}

TEST_CASE("Dieudonne check on one example")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero(), jt = h.group().element({1, 0, 1});
    GradedMatrix x = mat(h, {o, jt}, {h.one(), h.basis("j"), h.basis("j"), h.one()});
    SweepReport r = dieudonne_norm_check(x, ns_multipliers(h));
    CHECK(r.instances == 8);
    CHECK(r.ok());
}

TEST_CASE("unit extension")
{
    GradedAlgebra d = presets::clifford(1, 1);
    UnitExtension ext = adjoin_units(d, {});
    for (const auto& h : ext.subgroup)
        CHECK(try_invert_element(ext.unit(h)));
    GradedAlgebra dn = presets::dual_numbers(1);
    CHECK(code_of([&] { adjoin_units(dn, {}); }) == ErrorCode::NotCrossedProduct);
}

}
