#include <doctest.h>

#include "gradla/gdet.hpp"
#include "gradla/oracles.hpp"
#include "helpers.hpp"

using namespace gradla;
using testing_helpers::code_of;
using testing_helpers::mat;

TEST_SUITE("gdet") {

TEST_CASE("orderings")
{
    // (14)(253) in 0-based form
    Permutation pi = {3, 4, 1, 0, 2};
    CHECK(canonical_ordering(pi) == Ordering{0, 3, 1, 4, 2});
    CHECK(is_valid_ordering(pi, {1, 4, 2, 3, 0}));
    CHECK(is_valid_ordering(pi, {4, 2, 1, 0, 3}));
    CHECK_FALSE(is_valid_ordering(pi, {0, 3, 1, 2, 4}));
    CHECK_FALSE(is_valid_ordering(pi, {0, 3, 1, 4}));
    CHECK(sign(pi) == -1);
    CHECK(sign(identity_permutation(4)) == 1);
    CHECK(all_permutations(4).size() == 24);
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 50; ++rep)
        CHECK(is_valid_ordering(pi, random_ordering(pi, rng)));
}

TEST_CASE("quaternion worked values")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero(), jt = h.group().element({1, 0, 1});
    AlgebraElement one = h.one(), j = h.basis("j");
    GradedMatrix x = mat(h, {o, jt}, {one, j, j, one});
    GradedMatrix y = mat(h, {o, jt}, {one, j, -j, one});
    CHECK(gdet0(x) == h.scalar(CycloScalar(2)));
    CHECK(gdet0_leibniz(x) == h.scalar(CycloScalar(2)));
    CHECK(gdet0(y).is_zero());
    CHECK(gdet0_via_crossed(x) == h.scalar(CycloScalar(2)));

    // same entries with nu = (0,0): inhomogeneous, and the answer depends on sigma
    GradedMatrix x0 = mat(h, {o, o}, {one, j, j, one});
    GradedMatrix y0 = mat(h, {o, o}, {one, j, -j, one});
    auto sigmas = ns_multipliers(h);
    REQUIRE(sigmas.size() == 8);
    int plus = 0;
    for (const auto& s : sigmas) {
        CycloScalar sjj = s(jt, jt);
        CHECK(gdet_sigma(x0, s) == h.scalar(CycloScalar(1) + sjj));
        CHECK(gdet_sigma(y0, s) == h.scalar(CycloScalar(1) - sjj));
        plus += sjj.is_one();
    }
    CHECK(plus == 4);
    CHECK(code_of([&] { gdet0(x0); }) == ErrorCode::NotDegreeZero);
}

TEST_CASE("precondition errors")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero();
    GradedMatrix x = GradedMatrix::identity(h, {o, o});
    CHECK(code_of([&] { gdet0(GradedMatrix(h, {o}, {o, o})); }) == ErrorCode::NotSquare);
    CHECK(code_of([&] { gdet_sigma(x, Multiplier::trivial(h.group())); }) == ErrorCode::InvalidMultiplier);
    CHECK(code_of([&] { gdet0_leibniz(x, [](const Permutation& p) { return Ordering(p.size(), 0); }); }) ==
          ErrorCode::InvalidOrdering);

    GradedAlgebra d = presets::dual_numbers(2);
    GroupElement e1 = d.group().element({1, 0}), e12 = d.group().element({1, 1});
    GradedMatrix odd = mat(d, {d.group().zero(), e1}, {d.one(), d.basis("e1"), d.zero(), d.one()});
    CHECK(odd.homogeneous_degree() == d.group().zero());
    CHECK(code_of([&] { gdet0(odd); }) == ErrorCode::OddEntries);
    GradedMatrix even = GradedMatrix::identity(d, {d.group().zero(), e12});
    CHECK(gdet0(even).is_one());
    CHECK(code_of([&] { gdet0_via_crossed(even); }) == ErrorCode::NotCrossedProduct);
}

TEST_CASE("permutation matrices over S3")
{
    GradedAlgebra h = presets::quaternions();
    const auto& g = h.group();
    std::vector<GroupElement> nu = {g.element({0, 1, 1}), g.zero(), g.element({1, 1, 0})};
    for (const auto& p : all_permutations(3)) {
        GradedMatrix pp = permutation_matrix(h, p, nu);
        CHECK(gdet0(pp) == h.scalar(CycloScalar((long)sign(p))));
        for (const auto& q : all_permutations(3))
            CHECK(pp * permutation_matrix(h, q, nu) == permutation_matrix(h, compose(p, q), nu));
    }
}

TEST_CASE("clock-shift determinant of a diagonal")
{
    GradedAlgebra c = presets::clock_shift(3);
    GroupElement o = c.group().zero();
    AlgebraElement two = c.scalar(CycloScalar(2));
    GradedMatrix d = GradedMatrix::diagonal(c, {o, o}, {two, c.one() + c.one() * CycloScalar::root_of_unity(1, 3)});
    CHECK(gdet0(d) == two * (c.one() + c.one() * CycloScalar::root_of_unity(1, 3)));
    CHECK(gdet0(d) == gdet0_via_crossed(d));
}

}
