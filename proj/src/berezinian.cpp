#include "gradla/berezinian.hpp"

#include "gradla/error.hpp"

namespace gradla {

ParityBlocks parity_blocks(const GradedMatrix& x)
{
    if (!x.is_square())
        fail(ErrorCode::NotSquare, "Berezinian needs a square matrix with equal row and column degrees");
    const auto& lambda = x.algebra().lambda();
    const auto& nu = x.row_degrees();
    ParityBlocks b;
    bool seen_odd = false;
    for (const auto& v : nu) {
        int p = parity(lambda, v);
        if (p)
            seen_odd = true;
        else if (seen_odd)
            fail(ErrorCode::NotParitySorted, "even degrees must precede odd ones");
        (p ? b.r1 : b.r0)++;
    }
    int n = b.r0 + b.r1;
    b.x00 = x.block(0, b.r0, 0, b.r0);
    b.x01 = x.block(0, b.r0, b.r0, n);
    b.x10 = x.block(b.r0, n, 0, b.r0);
    b.x11 = x.block(b.r0, n, b.r0, n);
    return b;
}

namespace {

GroupElement even_degree(const GradedMatrix& x)
{
    auto deg = x.homogeneous_degree();
    if (!deg)
        fail(ErrorCode::OddDegree, "matrix is not homogeneous");
    if (parity(x.algebra().lambda(), *deg))
        fail(ErrorCode::OddDegree, "matrix has odd degree");
    return *deg;
}

GradedMatrix invert_odd_block(const GradedMatrix& x11)
{
    auto inv = try_invert_matrix(x11);
    if (!inv)
        fail(ErrorCode::SingularOddBlock, "odd-odd block is not invertible");
    return *inv;
}

} // namespace

UDL udl(const GradedMatrix& x)
{
    even_degree(x);
    ParityBlocks b = parity_blocks(x);
    const auto& alg = x.algebra();
    const auto& nu = x.row_degrees();
    int n = b.r0 + b.r1;
    GradedMatrix inv11 = invert_odd_block(b.x11);
    GradedMatrix upper = b.x01 * inv11; // X01 X11^{-1}
    GradedMatrix lower = inv11 * b.x10; // X11^{-1} X10
    GradedMatrix schur = b.x00 - upper * b.x10;
    UDL r{GradedMatrix::identity(alg, nu), GradedMatrix(alg, nu, nu), GradedMatrix::identity(alg, nu)};
    for (int i = 0; i < b.r0; ++i)
        for (int j = 0; j < b.r1; ++j)
            r.u.at(i, b.r0 + j) = upper.at(i, j);
    for (int i = 0; i < b.r1; ++i)
        for (int j = 0; j < b.r0; ++j)
            r.l.at(b.r0 + i, j) = lower.at(i, j);
    for (int i = 0; i < b.r0; ++i)
        for (int j = 0; j < b.r0; ++j)
            r.d.at(i, j) = schur.at(i, j);
    for (int i = b.r0; i < n; ++i)
        for (int j = b.r0; j < n; ++j)
            r.d.at(i, j) = b.x11.at(i - b.r0, j - b.r0);
    return r;
}

AlgebraElement gber(const GradedMatrix& x, const Multiplier& sigma)
{
    GroupElement deg = even_degree(x);
    ParityBlocks b = parity_blocks(x);
    const auto& alg = x.algebra();
    AlgebraElement top = alg.one(), bottom_inv = alg.one();
    GradedMatrix schur = b.x00;
    if (b.r1 > 0) {
        GradedMatrix inv11 = invert_odd_block(b.x11);
        schur = b.x00 - b.x01 * inv11 * b.x10;
        auto g11 = try_invert_element(gdet_sigma(b.x11, sigma));
        if (!g11)
            fail(ErrorCode::SingularOddBlock, "Gdet of the odd-odd block is not invertible");
        bottom_inv = *g11;
    }
    if (b.r0 > 0)
        top = gdet_sigma(schur, sigma);
    if (!try_invert_element(top))
        fail(ErrorCode::Singular, "matrix is not invertible");
    long e = -(long)b.r1 * (b.r0 - b.r1);
    CycloScalar pref = CycloScalar::root_of_unity_in(e * sigma.exponent(deg, deg), sigma.root_order(), alg.root_order());
    return top * bottom_inv * pref;
}

AlgebraElement gber0(const GradedMatrix& x)
{
    if (!x.is_homogeneous_of(x.algebra().group().zero()))
        fail(ErrorCode::NotDegreeZero, "matrix is not homogeneous of degree 0");
    return gber(x, canonical_multiplier(x.algebra()));
}

AlgebraElement ber_super(const GradedMatrix& y)
{
    even_degree(y);
    ParityBlocks b = parity_blocks(y);
    const auto& alg = y.algebra();
    AlgebraElement top = alg.one(), bottom_inv = alg.one();
    GradedMatrix schur = b.x00;
    if (b.r1 > 0) {
        GradedMatrix inv11 = invert_odd_block(b.x11);
        schur = b.x00 - b.x01 * inv11 * b.x10;
        require_commuting_entries(b.x11);
        auto g11 = try_invert_element(leibniz_row_order(b.x11));
        if (!g11)
            fail(ErrorCode::SingularOddBlock, "determinant of the odd-odd block is not invertible");
        bottom_inv = *g11;
    }
    if (b.r0 > 0) {
        require_commuting_entries(schur);
        top = leibniz_row_order(schur);
    }
    if (!try_invert_element(top))
        fail(ErrorCode::Singular, "matrix is not invertible");
    return top * bottom_inv;
}

AlgebraElement gdet_sigma_shifted(const GradedMatrix& x11, const Multiplier& sigma, const GroupElement& pi)
{
    auto deg = x11.homogeneous_degree();
    if (!deg)
        fail(ErrorCode::OddDegree, "block is not homogeneous");
    const auto& alg = x11.algebra();
    CycloScalar f = alg.lambda().value_in(*deg, pi, alg.root_order()).pow(x11.nrows());
    return gdet_sigma(shift_degrees(x11, pi), sigma) * f;
}

} // namespace gradla
