#include <doctest.h>

#include "gradla/error.hpp"
#include "gradla/scalars.hpp"

#include <random>

using namespace gradla;

namespace {

CycloScalar z(long k, int n) { return CycloScalar::root_of_unity(k, n); }

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::VerificationFailed;
}

// elements of Q[x]/(x^N - 1) multiplied by cyclic convolution, then pushed into Q(zeta_N)
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, int n)
{
    std::vector<Rational> c(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c[(i + j) % n] += a[i] * b[j];
    return c;
}

std::vector<Rational> random_poly(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> d(-6, 6), q(1, 4);
    std::vector<Rational> p(n);
    for (auto& c : p) {
        c = Rational(d(rng), q(rng));
        c.canonicalize();
    }
    return p;
}

} // namespace

TEST_SUITE("scalars") {

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    const auto& p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    CHECK(p105[41] == -2);
    CHECK(euler_phi(105) == 48);
}

TEST_CASE("roots of unity")
{
    CHECK(z(2, 4) == CycloScalar(-1));
    CHECK(z(3, 3).is_one());
    CHECK(z(-1, 5) == z(4, 5));
    CHECK((CycloScalar(1) + z(1, 3)) * (CycloScalar(1) + z(2, 3)) == CycloScalar(1));
    CHECK(z(1, 3) + z(2, 3) == CycloScalar(-1));
    // zeta_6^2 = zeta_6 - 1
    CHECK(z(2, 6) == z(1, 6) - CycloScalar(1));
}

TEST_CASE("coercion between fields")
{
    CHECK(z(1, 3).coerce(6) == z(2, 6));
    CHECK(z(1, 3) == z(2, 6));
    CHECK(CycloScalar::root_of_unity_in(1, 2, 3) == CycloScalar(-1));
    CHECK(CycloScalar::root_of_unity_in(1, 6, 3) == -z(2, 3));
    CHECK(CycloScalar::root_of_unity_in(1, 4, 8) == z(2, 8));
    CHECK(code_of([] { CycloScalar::root_of_unity_in(1, 4, 6); }) == ErrorCode::IncompatibleRootOrders);
    CHECK(code_of([] { z(1, 4).coerce(3); }) == ErrorCode::IncompatibleRootOrders);

    CycloScalar out;
    CHECK(z(4, 12).try_coerce_down(3, out));
    CHECK(out == z(1, 3));
    CHECK(out.root_order() == 3);
    CHECK_FALSE(z(1, 12).try_coerce_down(3, out));
    CHECK((z(1, 8) + z(7, 8)).try_coerce_down(2, out) == false);
    CHECK((z(1, 8) * z(7, 8)).try_coerce_down(1, out));
    CHECK(out.is_one());
}

TEST_CASE("mixed root orders join")
{
    CycloScalar s = z(1, 3) + z(1, 4);
    CHECK(s.root_order() == 12);
    CHECK((CycloScalar(Rational(1, 2)) + z(1, 5)).root_order() == 5);
    CHECK(code_of([] { add(z(1, 3), z(1, 4), Coercion::Strict); }) == ErrorCode::IncompatibleRootOrders);
    CHECK(code_of([] { mul(z(1, 3), z(1, 6), Coercion::Strict); }) == ErrorCode::IncompatibleRootOrders);
    CHECK(mul(z(1, 3), z(2, 3), Coercion::Strict).is_one());
}

TEST_CASE("inverse and division")
{
    CHECK(code_of([] { CycloScalar(0).inverse(); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { (CycloScalar(0, 5) * z(1, 5)).inverse(); }) == ErrorCode::DivisionByZero);
    CHECK(z(1, 7).inverse() == z(6, 7));
    CycloScalar a = CycloScalar(2) + z(1, 5);
    CHECK((a * a.inverse()).is_one());
    CHECK(z(1, 5).pow(-3) == z(2, 5));
}

TEST_CASE("arithmetic agrees with cyclic convolution")
{
    std::mt19937_64 rng(11);
    for (int n : {3, 4, 5, 7, 8, 9, 12, 15}) {
        for (int rep = 0; rep < 25; ++rep) {
            auto pa = random_poly(rng, n), pb = random_poly(rng, n), pc = random_poly(rng, n);
            auto a = CycloScalar::from_polynomial(n, pa), b = CycloScalar::from_polynomial(n, pb),
                 c = CycloScalar::from_polynomial(n, pc);
            CHECK(a * b == CycloScalar::from_polynomial(n, convolve(pa, pb, n)));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero())
                CHECK((a / a).is_one());
        }
    }
}

TEST_CASE("text round trip")
{
    CycloScalar s = CycloScalar::parse("1/2 + 3*z^2", 5);
    CHECK(s.to_string() == "1/2 + 3*z^2");
    CHECK(CycloScalar::parse(s.to_string(), 5) == s);
    CHECK(CycloScalar::parse("-z", 4) == -z(1, 4));
    CHECK(CycloScalar::parse("z^2", 4) == CycloScalar(-1));
    CHECK(CycloScalar::parse("z^-1", 3) == z(2, 3));
    CHECK(CycloScalar::parse("4/6", 1).to_string() == "2/3");
    CHECK(CycloScalar::parse(" - 2 ", 1) == CycloScalar(-2));
    CHECK(CycloScalar(0).to_string() == "0");
    CHECK(z(3, 4).to_string() == "-z");
    CHECK(code_of([] { CycloScalar::parse("1/0", 1); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { CycloScalar::parse("abc", 1); }) == ErrorCode::ParseError);
    CHECK(code_of([] { CycloScalar::parse("", 1); }) == ErrorCode::ParseError);
    CHECK(code_of([] { CycloScalar::parse("2z", 3); }) == ErrorCode::ParseError);
}

TEST_CASE("linear algebra over the field")
{
    ScalarMatrix m = {{CycloScalar(1), z(1, 3)}, {z(2, 3), CycloScalar(1)}};
    CHECK(determinant(m).is_zero());
    ScalarMatrix m2 = {{CycloScalar(2), z(1, 4)}, {z(1, 4), CycloScalar(1)}};
    CHECK(determinant(m2) == CycloScalar(3));
    ScalarMatrix aug = {{CycloScalar(2), z(1, 4), CycloScalar(1), CycloScalar(0)},
                        {z(1, 4), CycloScalar(1), CycloScalar(0), CycloScalar(1)}};
    REQUIRE(solve_in_place(aug));
    CHECK(aug[0][2] * CycloScalar(3) == CycloScalar(1));
    CHECK(aug[0][3] * CycloScalar(3) == -z(1, 4));
}

}
