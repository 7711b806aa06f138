#include <doctest.h>

#include "gradla/error.hpp"
#include "gradla/grading.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace gradla;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::VerificationFailed;
}

// random commutation factor: skew off-diagonal, diagonal in {0, N/2}, respecting torsion
Bicharacter random_commutation_factor(std::mt19937_64& rng, const GradingGroup& g, int n)
{
    int k = g.rank();
    std::vector<std::vector<int>> b(k, std::vector<int>(k, 0));
    auto step = [&](int i, int j) {
        // smallest exponent unit compatible with both torsions
        int s = n / std::gcd(n, g.moduli()[i]);
        return std::lcm(s, n / std::gcd(n, g.moduli()[j]));
    };
    for (int i = 0; i < k; ++i) {
        if (n % 2 == 0 && (step(i, i) == 1 || (n / 2) % step(i, i) == 0) && rng() % 2)
            b[i][i] = n / 2;
        for (int j = i + 1; j < k; ++j) {
            int s = step(i, j);
            b[i][j] = s * (int)(rng() % (n / s));
            b[j][i] = -b[i][j];
        }
    }
    return Bicharacter(g, n, b);
}

} // namespace

TEST_SUITE("grading") {

TEST_CASE("group enumeration and arithmetic")
{
    GradingGroup g({2, 3});
    auto els = g.elements();
    REQUIRE(els.size() == 6);
    CHECK(els[1].residues() == std::vector<int>{0, 1});
    CHECK(els[3].residues() == std::vector<int>{1, 0});
    for (long i = 0; i < g.order(); ++i)
        CHECK(g.index_of(g.element_at(i)) == i);
    GroupElement x = g.element({1, 2});
    CHECK((x + x).residues() == std::vector<int>{0, 1});
    CHECK((x - x).is_zero());
    CHECK((-x).residues() == std::vector<int>{1, 1});
    CHECK(x.times(3).residues() == std::vector<int>{1, 0});
    CHECK(g.element({-1, 7}).residues() == std::vector<int>{1, 1});
    CHECK(code_of([] { GradingGroup({2, 0}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([&] { (void)(x + GradingGroup({2, 2}).zero()); }) == ErrorCode::IncompatibleGroups);
}

TEST_CASE("subgroup generation")
{
    GradingGroup g({2, 2, 2});
    auto h = g.subgroup_generated({g.element({0, 1, 1}), g.element({1, 0, 1})});
    REQUIRE(h.size() == 4);
    CHECK(std::find(h.begin(), h.end(), g.element({1, 1, 0})) != h.end());
    GradingGroup c({6});
    CHECK(c.subgroup_generated({c.element({4})}).size() == 3);
}

TEST_CASE("well-definedness and commutation factors")
{
    GradingGroup z2({2});
    CHECK(code_of([&] { Bicharacter(z2, 4, {{1}}); }) == ErrorCode::IllDefinedBicharacter);
    CHECK_NOTHROW(Bicharacter(z2, 4, {{2}}));
    CHECK(is_commutation_factor(super_sign()));
    GradingGroup z4({4});
    Bicharacter bad(z4, 4, {{1}});
    CHECK_FALSE(is_commutation_factor(bad));
    CHECK(code_of([&] { solve_ns_multiplier(bad); }) == ErrorCode::InvalidCommutationFactor);
    CHECK(code_of([&] { parity(bad, z4.generator(0)); }) == ErrorCode::InvalidCommutationFactor);
    CHECK(parity(super_sign(), GradingGroup({2}).generator(0)) == 1);
}

TEST_CASE("NS multiplier counts")
{
    GradingGroup q({2, 2, 2});
    Bicharacter lq = standard_sign(q);
    auto support = q.subgroup_generated({q.element({0, 1, 1}), q.element({1, 0, 1})});
    CHECK(enumerate_ns_multipliers(lq, support).size() == 8);
    CHECK(enumerate_ns_multipliers(lq).size() == 64);
    CHECK(enumerate_ns_multipliers(super_sign()).size() == 2);
    CHECK(enumerate_ns_multipliers(trivial_bicharacter(GradingGroup({1}))).size() == 1);
    CHECK(enumerate_ns_multipliers(standard_sign(GradingGroup({2, 2}))).size() == 8);
    CHECK(code_of([] { enumerate_ns_multipliers(trivial_bicharacter(GradingGroup({3}))); }) ==
          ErrorCode::UnsupportedGroup);
    for (const auto& s : enumerate_ns_multipliers(lq, support))
        CHECK(is_ns_multiplier(lq, s));
}

TEST_CASE("the two printed quaternion multipliers are NS")
{
    GradingGroup q({2, 2, 2});
    Bicharacter lq = standard_sign(q);
    Multiplier s1(q, 2, {{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
    Multiplier s2(q, 2, {{0, 0, 1}, {1, 1, 1}, {0, 0, 0}});
    CHECK(is_ns_multiplier(lq, s1));
    CHECK(is_ns_multiplier(lq, s2));
    CHECK_FALSE(is_ns_multiplier(lq, Multiplier::trivial(q)));
    auto support = q.subgroup_generated({q.element({0, 1, 1}), q.element({1, 0, 1})});
    auto all = enumerate_ns_multipliers(lq, support);
    for (const auto& s : {s1, s2})
        CHECK(std::any_of(all.begin(), all.end(), [&](const Multiplier& m) { return m.same_values_on(s, support); }));
}

TEST_CASE("twisting by an NS multiplier gives the super sign")
{
    GradingGroup q({2, 2, 2});
    Bicharacter lq = standard_sign(q);
    Multiplier s = solve_ns_multiplier(lq);
    Bicharacter t = lambda_twist(lq, s);
    for (const auto& x : q.elements())
        for (const auto& y : q.elements())
            CHECK(t(x, y) == CycloScalar(parity(lq, x) * parity(lq, y) ? -1 : 1));
    Bicharacter back = lambda_twist(t, inverse(s));
    CHECK(back.same_values(lq));
    CHECK(product(s, inverse(s)).same_values(Multiplier::trivial(q)));
}

TEST_CASE("solver on random commutation factors")
{
    std::mt19937_64 rng(5);
    std::vector<std::vector<int>> groups = {{2}, {4}, {2, 2}, {2, 4}, {3, 3}, {4, 2, 2}, {6}, {2, 6}, {4, 4}};
    int solved = 0;
    for (const auto& mod : groups) {
        GradingGroup g(mod);
        for (int n : {2, 3, 4, 6, 8, 12}) {
            for (int rep = 0; rep < 4; ++rep) {
                Bicharacter lambda = random_commutation_factor(rng, g, n);
                REQUIRE(is_commutation_factor(lambda));
                Multiplier s = solve_ns_multiplier(lambda);
                CHECK(is_ns_multiplier(lambda, s));
                ++solved;
            }
        }
    }
    CHECK(solved == 9 * 6 * 4);
}

TEST_CASE("clock-shift commutation factor")
{
    GradingGroup g({3, 3});
    Bicharacter lambda(g, 3, {{0, -1}, {1, 0}});
    CHECK(is_commutation_factor(lambda));
    CHECK(is_purely_even(lambda, g.elements()));
    Multiplier s = solve_ns_multiplier(lambda);
    CHECK(is_ns_multiplier(lambda, s));
    CHECK(lambda_twist(lambda, s).same_values(trivial_bicharacter(g)));
}

}
