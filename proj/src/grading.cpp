#include "gradla/grading.hpp"

#include "gradla/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gradla {

namespace {

int mod(long a, int m)
{
    long r = a % m;
    return (int)(r < 0 ? r + m : r);
}

} // namespace

GroupElement::GroupElement(const std::vector<int>& moduli, const std::vector<int>& residues)
{
    if (moduli.size() != residues.size())
        fail(ErrorCode::IncompatibleGroups, "residue count does not match group rank");
    if ((int)moduli.size() > kMaxRank)
        fail(ErrorCode::InvalidParams, "group rank above " + std::to_string(kMaxRank));
    rank_ = (int)moduli.size();
    for (int i = 0; i < rank_; ++i) {
        m_[i] = moduli[i];
        r_[i] = mod(residues[i], moduli[i]);
    }
}

bool GroupElement::is_zero() const
{
    for (int i = 0; i < rank_; ++i)
        if (r_[i])
            return false;
    return true;
}

void GroupElement::check_same(const GroupElement& o) const
{
    if (rank_ != o.rank_ || m_ != o.m_)
        fail(ErrorCode::IncompatibleGroups, "group elements from different groups");
}

GroupElement GroupElement::operator+(const GroupElement& o) const
{
    check_same(o);
    GroupElement r(*this);
    for (int i = 0; i < rank_; ++i) {
        r.r_[i] += o.r_[i];
        if (r.r_[i] >= m_[i])
            r.r_[i] -= m_[i];
    }
    return r;
}

GroupElement GroupElement::operator-() const
{
    GroupElement r(*this);
    for (int i = 0; i < rank_; ++i)
        r.r_[i] = r_[i] ? m_[i] - r_[i] : 0;
    return r;
}

GroupElement GroupElement::operator-(const GroupElement& o) const
{
    return *this + (-o);
}

GroupElement GroupElement::times(long k) const
{
    GroupElement r(*this);
    for (int i = 0; i < rank_; ++i)
        r.r_[i] = mod((long)r_[i] * (k % m_[i]), m_[i]);
    return r;
}

std::string GroupElement::to_string() const
{
    std::string s = "(";
    for (int i = 0; i < rank_; ++i)
        s += (i ? "," : "") + std::to_string(r_[i]);
    return s + ")";
}

GradingGroup::GradingGroup(std::vector<int> moduli) : moduli_(std::move(moduli))
{
    if ((int)moduli_.size() > kMaxRank)
        fail(ErrorCode::InvalidParams, "group rank above " + std::to_string(kMaxRank));
    for (int m : moduli_)
        if (m < 1)
            fail(ErrorCode::InvalidParams, "moduli must be positive (free factors are not supported)");
}

long GradingGroup::order() const
{
    long o = 1;
    for (int m : moduli_)
        o *= m;
    return o;
}

GroupElement GradingGroup::zero() const
{
    return GroupElement(moduli_, std::vector<int>(moduli_.size(), 0));
}

GroupElement GradingGroup::element(const std::vector<int>& residues) const
{
    return GroupElement(moduli_, residues);
}

GroupElement GradingGroup::generator(int i) const
{
    std::vector<int> r(moduli_.size(), 0);
    r.at(i) = 1;
    return element(r);
}

long GradingGroup::index_of(const GroupElement& x) const
{
    long idx = 0;
    for (int i = 0; i < rank(); ++i)
        idx = idx * moduli_[i] + x[i];
    return idx;
}

GroupElement GradingGroup::element_at(long index) const
{
    std::vector<int> r(moduli_.size());
    for (int i = rank() - 1; i >= 0; --i) {
        r[i] = (int)(index % moduli_[i]);
        index /= moduli_[i];
    }
    return element(r);
}

std::vector<GroupElement> GradingGroup::elements() const
{
    std::vector<GroupElement> out;
    long n = order();
    out.reserve(n);
    for (long i = 0; i < n; ++i)
        out.push_back(element_at(i));
    return out;
}

std::vector<GroupElement> GradingGroup::subgroup_generated(const std::vector<GroupElement>& gens) const
{
    std::set<GroupElement> seen{zero()};
    std::vector<GroupElement> frontier{zero()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                GroupElement y = x + g;
                if (seen.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool GradingGroup::contains(const GroupElement& x) const
{
    if (x.rank() != rank())
        return false;
    for (int i = 0; i < rank(); ++i)
        if (x.modulus(i) != moduli_[i])
            return false;
    return true;
}

BiadditiveMap::BiadditiveMap(GradingGroup group, int root_order, std::vector<std::vector<int>> exponents)
    : group_(std::move(group)), n_(root_order), e_(std::move(exponents))
{
    if (n_ < 1)
        fail(ErrorCode::InvalidParams, "root order must be positive");
    int k = group_.rank();
    if ((int)e_.size() != k)
        fail(ErrorCode::InvalidParams, "exponent matrix must be k x k");
    for (int i = 0; i < k; ++i) {
        if ((int)e_[i].size() != k)
            fail(ErrorCode::InvalidParams, "exponent matrix must be k x k");
        for (int j = 0; j < k; ++j) {
            e_[i][j] = mod(e_[i][j], n_);
            long mi = group_.moduli()[i], mj = group_.moduli()[j];
            if ((mi * e_[i][j]) % n_ != 0 || (mj * e_[i][j]) % n_ != 0)
                fail(ErrorCode::IllDefinedBicharacter,
                     "exponent (" + std::to_string(i) + "," + std::to_string(j) + ") is not compatible with the group torsion");
        }
    }
}

int BiadditiveMap::exponent(const GroupElement& x, const GroupElement& y) const
{
    long s = 0;
    int k = group_.rank();
    for (int i = 0; i < k; ++i) {
        if (!x[i])
            continue;
        for (int j = 0; j < k; ++j)
            s += (long)x[i] * e_[i][j] * y[j];
    }
    return mod(s, n_);
}

CycloScalar BiadditiveMap::operator()(const GroupElement& x, const GroupElement& y) const
{
    return CycloScalar::root_of_unity(exponent(x, y), n_);
}

CycloScalar BiadditiveMap::value_in(const GroupElement& x, const GroupElement& y, int n) const
{
    return CycloScalar::root_of_unity_in(exponent(x, y), n_, n);
}

std::vector<std::vector<int>> BiadditiveMap::exponents_at(int n) const
{
    if (n % n_ != 0)
        fail(ErrorCode::IncompatibleRootOrders, "target root order is not a multiple");
    auto e = e_;
    for (auto& row : e)
        for (auto& v : row)
            v *= n / n_;
    return e;
}

bool BiadditiveMap::same_values(const BiadditiveMap& o) const
{
    return same_values_on(o, group_.elements());
}

bool BiadditiveMap::same_values_on(const BiadditiveMap& o, const std::vector<GroupElement>& subset) const
{
    if (group_ != o.group_)
        return false;
    int l = std::lcm(n_, o.n_);
    for (const auto& x : subset)
        for (const auto& y : subset)
            if ((long)exponent(x, y) * (l / n_) != (long)o.exponent(x, y) * (l / o.n_))
                return false;
    return true;
}

Multiplier Multiplier::trivial(const GradingGroup& g)
{
    return Multiplier(g, 1, std::vector<std::vector<int>>(g.rank(), std::vector<int>(g.rank(), 0)));
}

bool is_commutation_factor(const Bicharacter& lambda)
{
    auto els = lambda.group().elements();
    int n = lambda.root_order();
    for (const auto& x : els)
        for (const auto& y : els)
            if ((lambda.exponent(x, y) + lambda.exponent(y, x)) % n != 0)
                return false;
    return true;
}

void require_commutation_factor(const Bicharacter& lambda)
{
    if (!is_commutation_factor(lambda))
        fail(ErrorCode::InvalidCommutationFactor, "lambda(x,y) lambda(y,x) != 1 for some x, y");
}

int parity(const Bicharacter& lambda, const GroupElement& x)
{
    int e = lambda.exponent(x, x), n = lambda.root_order();
    if (e == 0)
        return 0;
    if (2 * e == n)
        return 1;
    fail(ErrorCode::InvalidCommutationFactor, "lambda(x,x) is not +-1 at x=" + x.to_string());
}

bool is_purely_even(const Bicharacter& lambda, const std::vector<GroupElement>& subset)
{
    for (const auto& x : subset)
        if (parity(lambda, x))
            return false;
    return true;
}

Bicharacter lambda_twist(const Bicharacter& lambda, const Multiplier& sigma)
{
    if (lambda.group() != sigma.group())
        fail(ErrorCode::IncompatibleGroups, "lambda and sigma live on different groups");
    int l = std::lcm(lambda.root_order(), sigma.root_order());
    auto b = lambda.exponents_at(l), c = sigma.exponents_at(l);
    int k = lambda.group().rank();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            b[i][j] += c[i][j] - c[j][i];
    return Bicharacter(lambda.group(), l, b);
}

bool is_ns_multiplier_on(const Bicharacter& lambda, const Multiplier& sigma, const std::vector<GroupElement>& subset)
{
    Bicharacter t = lambda_twist(lambda, sigma);
    int n = t.root_order();
    for (const auto& x : subset) {
        int px = parity(lambda, x);
        for (const auto& y : subset) {
            int want = (px && parity(lambda, y)) ? n / 2 : 0;
            if (t.exponent(x, y) != want)
                return false;
        }
    }
    return true;
}

bool is_ns_multiplier(const Bicharacter& lambda, const Multiplier& sigma)
{
    return is_ns_multiplier_on(lambda, sigma, lambda.group().elements());
}

namespace {

std::vector<int> generator_parities(const Bicharacter& lambda)
{
    std::vector<int> f;
    for (int i = 0; i < lambda.group().rank(); ++i)
        f.push_back(parity(lambda, lambda.group().generator(i)));
    return f;
}

} // namespace

Multiplier solve_ns_multiplier(const Bicharacter& lambda)
{
    require_commutation_factor(lambda);
    const auto& g = lambda.group();
    int n = lambda.root_order(), k = g.rank();
    auto f = generator_parities(lambda);
    bool odd = std::any_of(f.begin(), f.end(), [](int v) { return v != 0; });
    if (odd && n % 2 != 0)
        fail(ErrorCode::NoSolutionAtThisRootOrder, "odd generators need an even root order");
    const auto& b = lambda.exponents();
    // C strictly upper triangular with C_ij = (N/2) f_i f_j - B_ij; this already meets the torsion constraints
    std::vector<std::vector<int>> c(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            c[i][j] = mod((n / 2) * f[i] * f[j] - b[i][j], n);
    Multiplier sigma(g, n, c);
    if (!is_ns_multiplier(lambda, sigma))
        fail(ErrorCode::NoSolutionAtThisRootOrder, "solved multiplier failed verification");
    return sigma;
}

std::vector<Multiplier> enumerate_ns_multipliers(const Bicharacter& lambda)
{
    return enumerate_ns_multipliers(lambda, lambda.group().elements());
}

std::vector<Multiplier> enumerate_ns_multipliers(const Bicharacter& lambda, const std::vector<GroupElement>& support)
{
    const auto& g = lambda.group();
    for (int m : g.moduli())
        if (m > 2)
            fail(ErrorCode::UnsupportedGroup, "enumeration needs an elementary abelian 2-group");
    if (lambda.root_order() > 2)
        fail(ErrorCode::UnsupportedGroup, "enumeration needs lambda with values +-1");
    Bicharacter lam(g, 2, lambda.exponents_at(2));
    Multiplier base = solve_ns_multiplier(lam);
    int k = g.rank();
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            slots.push_back({i, j});
    std::vector<Multiplier> out;
    for (long mask = 0; mask < (1L << slots.size()); ++mask) {
        auto c = base.exponents_at(2);
        for (size_t s = 0; s < slots.size(); ++s) {
            if (!(mask >> s & 1))
                continue;
            auto [i, j] = slots[s];
            c[i][j] += 1;
            if (i != j)
                c[j][i] += 1;
        }
        // zero out exponents on trivial coordinates so the torsion check passes
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (g.moduli()[i] == 1 || g.moduli()[j] == 1)
                    c[i][j] = 0;
        Multiplier cand(g, 2, c);
        bool dup = std::any_of(out.begin(), out.end(), [&](const Multiplier& m) { return m.same_values_on(cand, support); });
        if (!dup)
            out.push_back(cand);
    }
    return out;
}

Multiplier inverse(const Multiplier& sigma)
{
    auto e = sigma.exponents();
    for (auto& row : e)
        for (auto& v : row)
            v = -v;
    return Multiplier(sigma.group(), sigma.root_order(), e);
}

Multiplier product(const Multiplier& a, const Multiplier& b)
{
    if (a.group() != b.group())
        fail(ErrorCode::IncompatibleGroups, "multipliers on different groups");
    int l = std::lcm(a.root_order(), b.root_order());
    auto ea = a.exponents_at(l), eb = b.exponents_at(l);
    for (size_t i = 0; i < ea.size(); ++i)
        for (size_t j = 0; j < ea.size(); ++j)
            ea[i][j] += eb[i][j];
    return Multiplier(a.group(), l, ea);
}

Bicharacter trivial_bicharacter(const GradingGroup& g)
{
    return Bicharacter(g, 1, std::vector<std::vector<int>>(g.rank(), std::vector<int>(g.rank(), 0)));
}

Bicharacter standard_sign(const GradingGroup& g)
{
    std::vector<std::vector<int>> e(g.rank(), std::vector<int>(g.rank(), 0));
    for (int i = 0; i < g.rank(); ++i)
        e[i][i] = 1;
    return Bicharacter(g, 2, e);
}

Bicharacter super_sign()
{
    return Bicharacter(GradingGroup({2}), 2, {{1}});
}

} // namespace gradla
