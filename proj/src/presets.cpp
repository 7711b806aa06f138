#include "gradla/presets.hpp"

#include "gradla/error.hpp"

#include <algorithm>
#include <sstream>

namespace gradla::presets {

namespace {

std::string monomial_label(const std::string& letter, int mask, int n)
{
    if (mask == 0)
        return "1";
    std::string s = letter;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1)
            s += std::to_string(i + 1);
    return s;
}

// sign of e_I e_J after sorting generators, counting inversions
int merge_sign(int a, int b, int n)
{
    int inv = 0;
    for (int i = 0; i < n; ++i)
        if (b >> i & 1)
            for (int j = i + 1; j < n; ++j)
                if (a >> j & 1)
                    ++inv;
    return inv % 2 ? -1 : 1;
}

std::string residue_label(const std::string& letter, const GroupElement& x)
{
    std::string s = letter;
    for (int i = 0; i < x.rank(); ++i)
        s += (i ? "_" : "") + std::to_string(x[i]);
    return s;
}

// mask-indexed monomial algebras share this builder; square(i) is e_i^2 (0 for nilpotent generators)
GradedAlgebra monomials(const GradingGroup& g, const Bicharacter& lambda, int n, const std::string& letter,
                        const std::vector<GroupElement>& gen_degrees, const std::vector<int>& square, bool anticommuting)
{
    AlgebraSpec s;
    s.group = g;
    s.lambda = lambda;
    s.root_order = 2;
    int d = 1 << n;
    for (int m = 0; m < d; ++m) {
        s.labels.push_back(monomial_label(letter, m, n));
        GroupElement x = g.zero();
        for (int i = 0; i < n; ++i)
            if (m >> i & 1)
                x = x + gen_degrees[i];
        s.degrees.push_back(x);
    }
    // order labels by size of the monomial, then lexicographically
    std::vector<int> order(d);
    for (int m = 0; m < d; ++m)
        order[m] = m;
    std::stable_sort(order.begin(), order.end(), [](int a, int b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb)
            return pa < pb;
        for (int i = 0; i < 32; ++i) {
            int ba = a >> i & 1, bb = b >> i & 1;
            if (ba != bb)
                return ba > bb;
        }
        return false;
    });
    std::vector<int> pos(d);
    for (int i = 0; i < d; ++i)
        pos[order[i]] = i;
    AlgebraSpec t;
    t.group = s.group;
    t.lambda = s.lambda;
    t.root_order = 2;
    for (int i = 0; i < d; ++i) {
        t.labels.push_back(s.labels[order[i]]);
        t.degrees.push_back(s.degrees[order[i]]);
    }
    t.table.resize((size_t)d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            long coef = anticommuting ? merge_sign(a, b, n) : 1;
            for (int i = 0; i < n; ++i)
                if ((a & b) >> i & 1)
                    coef *= square[i];
            if (coef == 0)
                continue;
            t.table[(size_t)pos[a] * d + pos[b]].push_back({pos[a ^ b], CycloScalar(coef)});
        }
    return make_algebra(std::move(t));
}

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad preset argument '" + item + "'");
        }
    }
    return v;
}

} // namespace

GradedAlgebra quaternions()
{
    GradingGroup g({2, 2, 2});
    AlgebraSpec s;
    s.group = g;
    s.lambda = standard_sign(g);
    s.root_order = 2;
    s.labels = {"1", "i", "j", "k"};
    s.degrees = {g.zero(), g.element({0, 1, 1}), g.element({1, 0, 1}), g.element({1, 1, 0})};
    s.table.resize(16);
    // products of units: (index, sign)
    const int tab[4][4][2] = {
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
        {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
        {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
        {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
    };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            s.table[a * 4 + b].push_back({tab[a][b][0], CycloScalar((long)tab[a][b][1])});
    return make_algebra(std::move(s));
}

GradedAlgebra clifford(int p, int q)
{
    if (p < 0 || q < 0 || p + q > kMaxRank - 1)
        fail(ErrorCode::InvalidParams, "clifford(p,q) needs p, q >= 0 and p + q < " + std::to_string(kMaxRank));
    int n = p + q;
    GradingGroup g(std::vector<int>(n + 1, 2));
    std::vector<GroupElement> gens;
    std::vector<int> sq;
    for (int i = 0; i < n; ++i) {
        std::vector<int> r(n + 1, 0);
        r[i] = 1;
        r[n] = 1;
        gens.push_back(g.element(r));
        sq.push_back(i < p ? 1 : -1);
    }
    return monomials(g, standard_sign(g), n, "e", gens, sq, true);
}

GradedAlgebra dual_numbers(int n)
{
    if (n < 1 || n > kMaxRank)
        fail(ErrorCode::InvalidParams, "dual_numbers(n) needs 1 <= n <= " + std::to_string(kMaxRank));
    GradingGroup g(std::vector<int>(n, 2));
    std::vector<GroupElement> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(g.generator(i));
    return monomials(g, standard_sign(g), n, "e", gens, std::vector<int>(n, 0), false);
}

GradedAlgebra grassmann(int n)
{
    if (n < 1 || n > 10)
        fail(ErrorCode::InvalidParams, "grassmann(n) needs 1 <= n <= 10");
    GradingGroup g({2});
    std::vector<GroupElement> gens(n, g.generator(0));
    return monomials(g, super_sign(), n, "x", gens, std::vector<int>(n, 0), true);
}

GradedAlgebra group_algebra(const GradingGroup& g)
{
    return crossed_product(trivial_bicharacter(g), Multiplier::trivial(g), g.elements());
}

GradedAlgebra crossed_product(const Bicharacter& lambda, const Multiplier& sigma, const std::vector<GroupElement>& support)
{
    const GradingGroup& g = lambda.group();
    AlgebraSpec s;
    s.group = g;
    s.lambda = lambda;
    s.root_order = join_root_orders(lambda.root_order(), sigma.root_order());
    std::vector<GroupElement> h = g.subgroup_generated(support);
    for (const auto& x : h) {
        s.labels.push_back(x.is_zero() ? "1" : residue_label("t", x));
        s.degrees.push_back(x);
    }
    int d = (int)h.size();
    s.table.resize((size_t)d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            int c = (int)(std::find(h.begin(), h.end(), h[a] + h[b]) - h.begin());
            s.table[(size_t)a * d + b].push_back({c, sigma.value_in(h[a], h[b], s.root_order)});
        }
    // lambda values must agree with sigma/sigma^T on the support
    for (const auto& x : h)
        for (const auto& y : h)
            if (sigma.value_in(x, y, s.root_order) != lambda.value_in(x, y, s.root_order) * sigma.value_in(y, x, s.root_order))
                fail(ErrorCode::NotLambdaCommutative, "sigma/sigma^T differs from lambda at " + x.to_string() + ", " + y.to_string());
    return make_algebra(std::move(s));
}

GradedAlgebra crossed_product(const Multiplier& sigma)
{
    const GradingGroup& g = sigma.group();
    int k = g.rank();
    auto c = sigma.exponents();
    std::vector<std::vector<int>> b(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            b[i][j] = c[i][j] - c[j][i];
    return crossed_product(Bicharacter(g, sigma.root_order(), b), sigma, g.elements());
}

GradedAlgebra clock_shift(int n)
{
    if (n < 2 || n > 12)
        fail(ErrorCode::InvalidParams, "clock_shift(n) needs 2 <= n <= 12");
    GradingGroup g({n, n});
    AlgebraSpec s;
    s.group = g;
    s.lambda = Bicharacter(g, n, {{0, -1}, {1, 0}});
    s.root_order = n;
    for (const auto& x : g.elements()) {
        std::string l;
        if (x[0])
            l += x[0] == 1 ? "X" : "X^" + std::to_string(x[0]);
        if (x[1])
            l += x[1] == 1 ? "Z" : "Z^" + std::to_string(x[1]);
        s.labels.push_back(l.empty() ? "1" : l);
        s.degrees.push_back(x);
    }
    int d = n * n;
    s.table.resize((size_t)d * d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            const auto &x = s.degrees[p], &y = s.degrees[q];
            s.table[(size_t)p * d + q].push_back({(int)g.index_of(x + y), CycloScalar::root_of_unity((long)x[1] * y[0], n)});
        }
    return make_algebra(std::move(s));
}

GradedAlgebra odd_line(const Bicharacter& lambda, const GroupElement& degree)
{
    if (parity(lambda, degree) != 1)
        fail(ErrorCode::InvalidParams, "odd_line needs an odd degree");
    AlgebraSpec s;
    s.group = lambda.group();
    s.lambda = lambda;
    s.root_order = std::max(2, lambda.root_order());
    s.labels = {"1", "e"};
    s.degrees = {s.group.zero(), degree};
    s.table = {{{0, CycloScalar(1)}}, {{1, CycloScalar(1)}}, {{1, CycloScalar(1)}}, {}};
    return make_algebra(std::move(s));
}

GradedAlgebra by_name(const std::string& spec)
{
    std::string name = spec, args;
    size_t colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    std::vector<int> v = args.empty() ? std::vector<int>{} : parse_ints(args);
    auto want = [&](size_t k) {
        if (v.size() != k)
            fail(ErrorCode::ParseError, "preset '" + name + "' takes " + std::to_string(k) + " argument(s)");
    };
    if (name == "quaternions") {
        want(0);
        return quaternions();
    }
    if (name == "clifford") {
        want(2);
        return clifford(v[0], v[1]);
    }
    if (name == "dual_numbers") {
        want(1);
        return dual_numbers(v[0]);
    }
    if (name == "grassmann") {
        want(1);
        return grassmann(v[0]);
    }
    if (name == "clock_shift") {
        want(1);
        return clock_shift(v[0]);
    }
    if (name == "group_algebra") {
        if (v.empty())
            fail(ErrorCode::ParseError, "group_algebra needs moduli");
        return group_algebra(GradingGroup(v));
    }
    fail(ErrorCode::ParseError, "unknown preset '" + name + "'");
}

} // namespace gradla::presets
