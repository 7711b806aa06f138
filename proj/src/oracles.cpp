#include "gradla/oracles.hpp"

#include "gradla/error.hpp"
#include "gradla/presets.hpp"

#include <algorithm>
#include <cstdio>

namespace gradla {

void SweepReport::check(bool good, const std::string& dig, const std::string& expected, const std::string& got)
{
    ++instances;
    if (!good)
        failures.push_back({dig, expected, got});
}

AlgebraElement leibniz_det_commutative(const GradedMatrix& y)
{
    require_commuting_entries(y);
    return leibniz_row_order(y);
}

AlgebraElement leibniz_det_commutative(const GradedMatrix& y, std::mt19937_64& rng)
{
    require_commuting_entries(y);
    const auto& alg = y.algebra();
    int n = y.nrows();
    AlgebraElement det = alg.zero();
    for (const auto& pi : all_permutations(n)) {
        std::vector<int> rows = identity_permutation(n);
        std::shuffle(rows.begin(), rows.end(), rng);
        AlgebraElement term = alg.one(), ordered = alg.one();
        for (int i = 0; i < n; ++i) {
            term = term * y.at(rows[i], pi[rows[i]]);
            ordered = ordered * y.at(i, pi[i]);
        }
        if (term != ordered)
            fail(ErrorCode::NonCommutingEntries, "monomial depends on the factor order");
        det += sign(pi) > 0 ? term : -term;
    }
    return det;
}

namespace {

void require_quaternionic(const GradedAlgebra& a)
{
    static const GradedAlgebra h = presets::quaternions();
    if (!a.structurally_equal(h))
        fail(ErrorCode::NotQuaternionic, "algebra is not the quaternion preset");
}

} // namespace

ScalarMatrix quaternion_embedding(const GradedMatrix& x)
{
    require_quaternionic(x.algebra());
    int n = x.nrows(), m = x.ncols();
    CycloScalar zero(Rational(0), 4), z = CycloScalar::root_of_unity(1, 4);
    ScalarMatrix out(2 * n, std::vector<CycloScalar>(2 * m, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const auto& q = x.at(i, j);
            CycloScalar a = q.coefficient(0), b = q.coefficient(1), c = q.coefficient(2), d = q.coefficient(3);
            out[2 * i][2 * j] = a + b * z;
            out[2 * i][2 * j + 1] = c + d * z;
            out[2 * i + 1][2 * j] = -c + d * z;
            out[2 * i + 1][2 * j + 1] = a - b * z;
        }
    return out;
}

Rational quaternion_norm(const AlgebraElement& q)
{
    require_quaternionic(q.algebra());
    Rational s = 0;
    for (const auto& [k, c] : q.terms()) {
        if (!c.is_rational())
            fail(ErrorCode::NotQuaternionic, "quaternion coefficients must be rational");
        s += c.rational_part() * c.rational_part();
    }
    return s;
}

SweepReport dieudonne_norm_check(const GradedMatrix& x, const std::vector<Multiplier>& sigmas)
{
    SweepReport r;
    r.property = "dieudonne_norm";
    CycloScalar det = determinant(quaternion_embedding(x));
    for (const auto& s : sigmas) {
        Rational norm = quaternion_norm(gdet_sigma(x, s));
        r.check(det == CycloScalar(norm, 4), digest(x.to_string()), det.to_string(), norm.get_str());
    }
    return r;
}

AlgebraElement UnitExtension::unit(const GroupElement& h) const
{
    const auto& c = tensor.right;
    const auto& idx = c.basis_of_degree(h);
    if (idx.empty())
        fail(ErrorCode::MissingUnit, "degree " + h.to_string() + " is outside the adjoined subgroup");
    return tensor.embed_right(c.basis(idx[0]));
}

UnitExtension adjoin_units(const GradedAlgebra& a, const std::vector<GroupElement>& extra)
{
    std::vector<GroupElement> gens = a.support_degrees();
    gens.insert(gens.end(), extra.begin(), extra.end());
    std::vector<GroupElement> h = a.group().subgroup_generated(gens);
    if (!is_purely_even(a.lambda(), h))
        fail(ErrorCode::NotCrossedProduct, "adjoining units needs a purely even subgroup");
    Multiplier tau = inverse(solve_ns_multiplier(a.lambda()));
    GradedAlgebra c = presets::crossed_product(a.lambda(), tau, h);
    return UnitExtension{graded_tensor(a, c), h};
}

AlgebraElement gdet_via_row_decomposition(const GradedMatrix& x, const Multiplier& sigma)
{
    if (!x.is_square())
        fail(ErrorCode::NotSquare, "row decomposition needs a square matrix");
    const auto& alg = x.algebra();
    const auto& nu = x.row_degrees();
    int n = x.nrows();
    UnitExtension ext = adjoin_units(alg, nu);
    const GradedAlgebra& b = ext.tensor.algebra;
    int nb = b.root_order();
    const auto& lambda = alg.lambda();
    std::vector<AlgebraElement> t, tinv;
    for (const auto& v : nu) {
        t.push_back(ext.unit(v));
        tinv.push_back(invert_element(t.back()));
    }
    AlgebraElement total = b.zero();
    for (const auto& pi : all_permutations(n)) {
        // homogeneous pieces of each entry (pi(j), j), already conjugated into D(alpha, pi)
        std::vector<std::vector<std::pair<GroupElement, AlgebraElement>>> pieces(n);
        bool empty = false;
        for (int j = 0; j < n && !empty; ++j) {
            AlgebraElement e = ext.tensor.embed_left(x.at(pi[j], j));
            for (auto& [deg, part] : e.components())
                pieces[j].push_back({deg, tinv[j] * t[pi[j]] * part});
            empty = pieces[j].empty();
        }
        if (empty)
            continue;
        std::vector<size_t> choice(n, 0);
        while (true) {
            AlgebraElement g = b.one();
            GroupElement gdeg = alg.group().zero();
            for (int m = 0; m < n; ++m) {
                const auto& [dummy, d] = pieces[m][choice[m]];
                GroupElement c_deg = d.degree();
                AlgebraElement c = d * lambda.value_in(c_deg, nu[m], nb).inverse();
                g = c * g * sigma.value_in(c_deg, gdeg, nb);
                gdeg = gdeg + c_deg;
            }
            total += sign(pi) > 0 ? g : -g;
            int m = 0;
            while (m < n && ++choice[m] == pieces[m].size())
                choice[m++] = 0;
            if (m == n)
                break;
        }
    }
    return ext.tensor.project_left(total);
}

long RandomSource::coefficient()
{
    std::uniform_int_distribution<long> d(-10, 9);
    long v = d(rng);
    return v >= 0 ? v + 1 : v;
}

bool RandomSource::chance(double p)
{
    return std::bernoulli_distribution(p)(rng);
}

int RandomSource::below(int n)
{
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

AlgebraElement RandomSource::element_of_degree(const GradedAlgebra& a, const GroupElement& x, double density)
{
    std::vector<std::pair<int, CycloScalar>> ts;
    for (int i : a.basis_of_degree(x))
        if (chance(density))
            ts.push_back({i, CycloScalar(coefficient())});
    return AlgebraElement(a, std::move(ts));
}

AlgebraElement RandomSource::element(const GradedAlgebra& a, double density)
{
    std::vector<std::pair<int, CycloScalar>> ts;
    for (int i = 0; i < a.dim(); ++i)
        if (chance(density))
            ts.push_back({i, CycloScalar(coefficient())});
    return AlgebraElement(a, std::move(ts));
}

GradedMatrix RandomSource::homogeneous(const GradedAlgebra& a, const std::vector<GroupElement>& rows,
                                       const std::vector<GroupElement>& cols, const GroupElement& x, double density)
{
    GradedMatrix m(a, rows, cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            m.at((int)i, (int)j) = element_of_degree(a, x - rows[i] + cols[j], density);
    return m;
}

GradedMatrix RandomSource::inhomogeneous(const GradedAlgebra& a, const std::vector<GroupElement>& rows,
                                         const std::vector<GroupElement>& cols, double density)
{
    GradedMatrix m(a, rows, cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            m.at((int)i, (int)j) = element(a, density);
    return m;
}

std::optional<GradedMatrix> RandomSource::invertible(const GradedAlgebra& a, const std::vector<GroupElement>& nu,
                                                     const GroupElement& x, int tries)
{
    for (int t = 0; t < tries; ++t) {
        GradedMatrix m = homogeneous(a, nu, nu, x, t < tries / 2 ? 0.75 : 0.95);
        if (try_invert_matrix(m))
            return m;
    }
    return std::nullopt;
}

std::vector<GroupElement> RandomSource::degrees(const std::vector<GroupElement>& pool, int n)
{
    std::vector<GroupElement> out;
    for (int i = 0; i < n; ++i)
        out.push_back(pool[below((int)pool.size())]);
    return out;
}

std::string digest(const std::string& text)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

} // namespace gradla
