#include "gradla/gdet.hpp"

#include "gradla/error.hpp"

namespace gradla {

std::vector<Multiplier> ns_multipliers(const GradedAlgebra& a)
{
    bool two_torsion = a.lambda().root_order() <= 2;
    for (int m : a.group().moduli())
        two_torsion = two_torsion && m <= 2;
    if (two_torsion)
        return enumerate_ns_multipliers(a.lambda(), a.support_subgroup());
    return {solve_ns_multiplier(a.lambda())};
}

Multiplier canonical_multiplier(const GradedAlgebra& a)
{
    return solve_ns_multiplier(a.lambda());
}

AlgebraElement leibniz_row_order(const GradedMatrix& y)
{
    int n = y.nrows();
    if (n != y.ncols())
        fail(ErrorCode::NotSquare, "determinant of a non-square matrix");
    const auto& alg = y.algebra();
    AlgebraElement det = alg.zero();
    for (const auto& pi : all_permutations(n)) {
        AlgebraElement term = alg.one();
        for (int i = 0; i < n && !term.is_zero(); ++i)
            term = term * y.at(i, pi[i]);
        if (term.is_zero())
            continue;
        det += sign(pi) > 0 ? term : -term;
    }
    return det;
}

void require_commuting_entries(const GradedMatrix& y)
{
    std::vector<const AlgebraElement*> nz;
    for (int i = 0; i < y.nrows(); ++i)
        for (int j = 0; j < y.ncols(); ++j)
            if (!y.at(i, j).is_zero())
                nz.push_back(&y.at(i, j));
    for (size_t p = 0; p < nz.size(); ++p)
        for (size_t q = p + 1; q < nz.size(); ++q)
            if (*nz[p] * *nz[q] != *nz[q] * *nz[p])
                fail(ErrorCode::NonCommutingEntries, nz[p]->to_string() + " and " + nz[q]->to_string() + " do not commute");
}

namespace {

void require_square(const GradedMatrix& x)
{
    if (!x.is_square())
        fail(ErrorCode::NotSquare, "graded determinant needs a square matrix with equal row and column degrees");
}

void require_degree_zero(const GradedMatrix& x)
{
    if (!x.is_homogeneous_of(x.algebra().group().zero()))
        fail(ErrorCode::NotDegreeZero, "matrix is not homogeneous of degree 0");
}

} // namespace

AlgebraElement gdet0(const GradedMatrix& x)
{
    require_square(x);
    require_degree_zero(x);
    return gdet_sigma(x, canonical_multiplier(x.algebra()));
}

AlgebraElement gdet0_leibniz(const GradedMatrix& x)
{
    return gdet0_leibniz(x, [](const Permutation& pi) { return canonical_ordering(pi); });
}

AlgebraElement gdet0_leibniz(const GradedMatrix& x, const std::function<Ordering(const Permutation&)>& choose)
{
    require_square(x);
    require_degree_zero(x);
    const auto& alg = x.algebra();
    int n = x.nrows();
    AlgebraElement det = alg.zero();
    for (const auto& pi : all_permutations(n)) {
        Ordering ord = choose(pi);
        if (!is_valid_ordering(pi, ord))
            fail(ErrorCode::InvalidOrdering, "ordering does not follow the cycles of the permutation");
        AlgebraElement term = alg.one();
        for (int k = 0; k < n && !term.is_zero(); ++k)
            term = term * x.at(ord[k], pi[ord[k]]);
        if (!term.is_zero())
            det += sign(pi) > 0 ? term : -term;
    }
    return det;
}

AlgebraElement gdet_sigma(const GradedMatrix& x, const Multiplier& sigma)
{
    require_square(x);
    const auto& alg = x.algebra();
    const auto& lambda = alg.lambda();
    for (int i = 0; i < x.nrows(); ++i)
        for (int j = 0; j < x.ncols(); ++j)
            for (const auto& [k, c] : x.at(i, j).terms())
                if (parity(lambda, alg.degree(k)))
                    fail(ErrorCode::OddEntries, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") has an odd component");
    std::vector<GroupElement> gens = alg.support_degrees();
    gens.insert(gens.end(), x.row_degrees().begin(), x.row_degrees().end());
    if (!is_ns_multiplier_on(lambda, sigma, alg.group().subgroup_generated(gens)))
        fail(ErrorCode::InvalidMultiplier, "sigma is not an NS-multiplier for lambda");
    GradedAlgebra tw = twist(alg, sigma);
    return leibniz_row_order(j_sigma(x, sigma, tw)).rebind(alg);
}

AlgebraElement gdet0_via_crossed(const GradedMatrix& x)
{
    require_square(x);
    require_degree_zero(x);
    const auto& alg = x.algebra();
    int n = x.nrows();
    std::vector<AlgebraElement> t, tinv;
    for (const auto& nu : x.row_degrees()) {
        auto u = find_homogeneous_unit(alg, nu);
        if (!u)
            fail(ErrorCode::NotCrossedProduct, "no homogeneous unit in degree " + nu.to_string());
        t.push_back(*u);
        tinv.push_back(invert_element(*u));
    }
    std::vector<GroupElement> zeros(n, alg.group().zero());
    GradedMatrix z(alg, zeros, zeros);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!x.at(i, j).is_zero())
                z.at(i, j) = t[i] * x.at(i, j) * tinv[j];
    require_commuting_entries(z);
    return leibniz_row_order(z);
}

} // namespace gradla
