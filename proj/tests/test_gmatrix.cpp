#include <doctest.h>

#include "gradla/gmatrix.hpp"
#include "gradla/oracles.hpp"
#include "helpers.hpp"

using namespace gradla;
using testing_helpers::code_of;
using testing_helpers::mat;

TEST_SUITE("gmatrix") {

TEST_CASE("quaternion inverse example")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero(), jt = h.group().element({1, 0, 1});
    AlgebraElement one = h.one(), j = h.basis("j");
    GradedMatrix x = mat(h, {o, jt}, {one, j, j, one});
    CHECK(x.homogeneous_degree() == o);
    GradedMatrix inv = invert_matrix(x);
    CycloScalar half(Rational(1, 2));
    CHECK(inv == mat(h, {o, jt}, {one * half, -j * half, -j * half, one * half}));
    CHECK(x * inv == GradedMatrix::identity(h, {o, jt}));
    GradedMatrix y = mat(h, {o, jt}, {one, j, -j, one});
    CHECK_FALSE(try_invert_matrix(y));
    CHECK(code_of([&] { invert_matrix(y); }) == ErrorCode::Singular);
}

TEST_CASE("trace examples")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero(), jt = h.group().element({1, 0, 1}), it = h.group().element({0, 1, 1});
    AlgebraElement i = h.basis("i");
    GradedMatrix d = mat(h, {o, jt}, {i, h.zero(), h.zero(), i});
    CHECK(d.homogeneous_degree() == it);
    CHECK(graded_trace(d).is_zero());

    GradedAlgebra dn = presets::dual_numbers(2);
    std::vector<GroupElement> nu = {dn.group().zero(), dn.group().element({1, 0})};
    CHECK(graded_trace(GradedMatrix::identity(dn, nu)).is_zero());
    CHECK(code_of([&] { graded_trace(GradedMatrix(dn, nu, {nu[0], nu[0]})); }) == ErrorCode::NotSquare);
}

TEST_CASE("scalar action and permutation matrices")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero(), jt = h.group().element({1, 0, 1});
    AlgebraElement i = h.basis("i"), j = h.basis("j");
    GradedMatrix a = scalar_action(i, GradedMatrix::identity(h, {o, jt}));
    CHECK(a == mat(h, {o, jt}, {i, h.zero(), h.zero(), -i}));
    CHECK(code_of([&] { scalar_action(h.one() + i, GradedMatrix::identity(h, {o})); }) == ErrorCode::InhomogeneousScalar);

    GradedMatrix p = permutation_matrix(h, {1, 0}, {o, jt}, {h.one(), j});
    CHECK(p == mat(h, {o, jt}, {h.zero(), j, -j, h.zero()}));
    CHECK(p.homogeneous_degree() == o);
    GradedAlgebra dn = presets::dual_numbers(1);
    CHECK(code_of([&] { permutation_matrix(dn, {1, 0}, {dn.group().zero(), dn.group().generator(0)}); }) ==
          ErrorCode::MissingUnit);
}

TEST_CASE("products check degree vectors")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero(), jt = h.group().element({1, 0, 1});
    GradedMatrix a = GradedMatrix::identity(h, {o, jt}), b = GradedMatrix::identity(h, {o, o});
    CHECK(code_of([&] { (void)(a * b); }) == ErrorCode::DegreeMismatch);
    CHECK(code_of([&] { (void)(a + b); }) == ErrorCode::DegreeMismatch);
    GradedMatrix c = GradedMatrix::identity(presets::clifford(0, 2), {o, o});
    CHECK(code_of([&] { (void)(b * c); }) == ErrorCode::MixedAlgebras);
}

TEST_CASE("J_sigma laws on random matrices")
{
    RandomSource rs(3);
    for (const char* name : {"quaternions", "clifford:1,1", "dual_numbers:2", "clock_shift:3"}) {
        GradedAlgebra a = presets::by_name(name);
        auto sigmas = ns_multipliers(a);
        std::vector<GroupElement> pool = a.group().subgroup_generated(a.support_degrees());
        for (int rep = 0; rep < 12; ++rep) {
            int n = 1 + rs.below(3);
            auto nu = rs.degrees(pool, n);
            GroupElement x = pool[rs.below((int)pool.size())], y = pool[rs.below((int)pool.size())];
            GradedMatrix X = rs.homogeneous(a, nu, nu, x), Y = rs.homogeneous(a, nu, nu, y);
            const Multiplier& s = sigmas[rs.below((int)sigmas.size())];
            GradedAlgebra tw = twist(a, s);
            int N = a.root_order();
            INFO(name << " rep " << rep);
            // J(XY) = sigma(x,y)^{-1} J(X) J(Y)
            CHECK(j_sigma(X * Y, s, tw) * s.value_in(x, y, N) == j_sigma(X, s, tw) * j_sigma(Y, s, tw));
            CHECK(j_sigma_inverse(j_sigma(X, s, tw), s, a) == X);
            // Tr(XY) = lambda(x,y) Tr(YX), and the trace factors through J_sigma
            CHECK(graded_trace(X * Y) == graded_trace(Y * X) * a.lambda().value_in(x, y, N));
            CHECK(graded_trace(X) == graded_trace_via_sigma(X, s));
            if (auto inv = try_invert_matrix(X)) {
                // J(X^{-1}) = sigma(x,-x) J(X)^{-1}
                GradedMatrix lhs = j_sigma(*inv, s, tw);
                GradedMatrix rhs = invert_matrix(j_sigma(X, s, tw));
                CHECK(lhs == rhs * s.value_in(x, -x, N));
            }
        }
    }
}

TEST_CASE("components reassemble")
{
    RandomSource rs(9);
    GradedAlgebra h = presets::quaternions();
    auto pool = h.support_subgroup();
    for (int rep = 0; rep < 10; ++rep) {
        auto nu = rs.degrees(pool, 3);
        GradedMatrix x = rs.inhomogeneous(h, nu, nu);
        GradedMatrix sum(h, nu, nu);
        for (const auto& [deg, part] : x.components()) {
            CHECK(part.is_homogeneous_of(deg));
            CHECK(part == x.component(deg));
            sum += part;
        }
        CHECK(sum == x);
    }
}

}
