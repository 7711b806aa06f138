#include "gradla/algebra.hpp"

#include "gradla/error.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <random>

namespace gradla {

struct GradedAlgebra::Impl {
    GradingGroup group;
    Bicharacter lambda;
    int n = 1;
    std::vector<std::string> labels;
    std::vector<GroupElement> degrees;
    std::vector<std::vector<Term>> table;
    int unit = -1;
    std::map<std::string, int> label_index;
    std::map<long, std::vector<int>> by_degree;
    std::vector<GroupElement> support, subgroup;
    std::vector<int> empty;

    mutable std::mutex unit_mu;
    // coefficient vectors rather than elements, which would hold a reference back to this Impl
    mutable std::map<long, std::optional<std::vector<std::pair<int, CycloScalar>>>> unit_cache;
};

namespace {

std::string triple(const GradedAlgebra::Impl& a, int i, int j, int k = -1)
{
    std::string s = "(" + a.labels[i] + ", " + a.labels[j];
    if (k >= 0)
        s += ", " + a.labels[k];
    return s + ")";
}

std::shared_ptr<GradedAlgebra::Impl> build(AlgebraSpec spec)
{
    auto a = std::make_shared<GradedAlgebra::Impl>();
    size_t d = spec.labels.size();
    if (d == 0)
        fail(ErrorCode::InvalidParams, "algebra needs at least one basis element");
    if (spec.degrees.size() != d || spec.table.size() != d * d)
        fail(ErrorCode::InvalidParams, "basis, degrees and table sizes disagree");
    if (spec.lambda.group() != spec.group)
        fail(ErrorCode::IncompatibleGroups, "lambda is defined on a different group");
    if (!field_contains(spec.root_order, spec.lambda.root_order()))
        fail(ErrorCode::IncompatibleRootOrders, "lambda values are not in the scalar field");
    a->group = spec.group;
    a->lambda = spec.lambda;
    a->n = spec.root_order;
    a->labels = std::move(spec.labels);
    a->degrees = std::move(spec.degrees);
    for (size_t i = 0; i < d; ++i) {
        const auto& l = a->labels[i];
        if (l.empty() || l.find(',') != std::string::npos)
            fail(ErrorCode::InvalidParams, "basis labels must be nonempty and comma-free: '" + l + "'");
        if (!a->label_index.emplace(l, (int)i).second)
            fail(ErrorCode::InvalidParams, "duplicate basis label '" + l + "'");
        if (!a->group.contains(a->degrees[i]))
            fail(ErrorCode::IncompatibleGroups, "degree of '" + l + "' is not in the grading group");
        a->by_degree[a->group.index_of(a->degrees[i])].push_back((int)i);
    }
    a->table.resize(d * d);
    for (size_t p = 0; p < d * d; ++p) {
        std::vector<CycloScalar> acc(d, CycloScalar(Rational(0), a->n));
        for (auto& t : spec.table[p]) {
            if (t.k < 0 || (size_t)t.k >= d)
                fail(ErrorCode::InvalidParams, "structure constant refers to a missing basis element");
            acc[t.k] += t.c.coerce(a->n);
        }
        for (size_t k = 0; k < d; ++k)
            if (!acc[k].is_zero())
                a->table[p].push_back({(int)k, acc[k]});
    }
    for (const auto& [idx, v] : a->by_degree)
        a->support.push_back(a->group.element_at(idx));
    a->subgroup = a->group.subgroup_generated(a->support);
    for (size_t u = 0; u < d && a->unit < 0; ++u) {
        if (!a->degrees[u].is_zero())
            continue;
        bool ok = true;
        for (size_t j = 0; j < d && ok; ++j) {
            const auto& l = a->table[u * d + j];
            const auto& r = a->table[j * d + u];
            ok = l.size() == 1 && l[0].k == (int)j && l[0].c.is_one() && r.size() == 1 && r[0].k == (int)j &&
                 r[0].c.is_one();
        }
        if (ok)
            a->unit = (int)u;
    }
    if (a->unit < 0)
        fail(ErrorCode::NoUnit, "no basis element of degree 0 acts as the identity");
    return a;
}

} // namespace

GradedAlgebra make_algebra_unchecked(AlgebraSpec spec)
{
    GradedAlgebra g;
    g.impl_ = build(std::move(spec));
    return g;
}

GradedAlgebra make_algebra(AlgebraSpec spec)
{
    require_commutation_factor(spec.lambda);
    GradedAlgebra g = make_algebra_unchecked(std::move(spec));
    const auto& a = *g.id();
    int d = g.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& t : g.product(i, j))
                if (a.degrees[t.k] != a.degrees[i] + a.degrees[j])
                    fail(ErrorCode::DegreeViolation, "product " + triple(a, i, j) + " has a term in the wrong degree");
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            AlgebraElement lhs = g.basis(i) * g.basis(j);
            AlgebraElement rhs = g.basis(j) * g.basis(i) * a.lambda.value_in(a.degrees[i], a.degrees[j], a.n);
            if (lhs != rhs)
                fail(ErrorCode::NotLambdaCommutative, "pair " + triple(a, i, j) + " violates lambda-commutativity");
        }
    std::vector<AlgebraElement> b;
    for (int i = 0; i < d; ++i)
        b.push_back(g.basis(i));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            AlgebraElement ij = b[i] * b[j];
            for (int k = 0; k < d; ++k)
                if (ij * b[k] != b[i] * (b[j] * b[k]))
                    fail(ErrorCode::NotAssociative, "triple " + triple(a, i, j, k) + " is not associative");
        }
    return g;
}

const GradingGroup& GradedAlgebra::group() const { return impl_->group; }
const Bicharacter& GradedAlgebra::lambda() const { return impl_->lambda; }
int GradedAlgebra::root_order() const { return impl_->n; }
int GradedAlgebra::dim() const { return (int)impl_->labels.size(); }
const std::string& GradedAlgebra::label(int i) const { return impl_->labels.at(i); }
const GroupElement& GradedAlgebra::degree(int i) const { return impl_->degrees.at(i); }
int GradedAlgebra::unit_index() const { return impl_->unit; }

int GradedAlgebra::index_of(const std::string& label) const
{
    auto it = impl_->label_index.find(label);
    if (it == impl_->label_index.end())
        fail(ErrorCode::ParseError, "unknown basis label '" + label + "'");
    return it->second;
}

const std::vector<Term>& GradedAlgebra::product(int i, int j) const
{
    return impl_->table[(size_t)i * impl_->labels.size() + j];
}

const std::vector<int>& GradedAlgebra::basis_of_degree(const GroupElement& x) const
{
    auto it = impl_->by_degree.find(impl_->group.index_of(x));
    return it == impl_->by_degree.end() ? impl_->empty : it->second;
}

const std::vector<GroupElement>& GradedAlgebra::support_degrees() const { return impl_->support; }
const std::vector<GroupElement>& GradedAlgebra::support_subgroup() const { return impl_->subgroup; }

AlgebraSpec GradedAlgebra::spec() const
{
    return AlgebraSpec{impl_->group, impl_->lambda, impl_->n, impl_->labels, impl_->degrees, impl_->table};
}

AlgebraElement GradedAlgebra::zero() const { return AlgebraElement(*this, {}); }
AlgebraElement GradedAlgebra::one() const { return basis(unit_index()); }

AlgebraElement GradedAlgebra::basis(int i) const
{
    return AlgebraElement(*this, {{i, CycloScalar(Rational(1), impl_->n)}});
}

AlgebraElement GradedAlgebra::basis(const std::string& label) const { return basis(index_of(label)); }

AlgebraElement GradedAlgebra::scalar(const CycloScalar& c) const { return one() * c; }

bool GradedAlgebra::structurally_equal(const GradedAlgebra& o) const
{
    if (impl_ == o.impl_)
        return true;
    const auto &a = *impl_, &b = *o.impl_;
    if (a.n != b.n || a.labels != b.labels || a.degrees != b.degrees || a.group != b.group ||
        !a.lambda.same_values(b.lambda))
        return false;
    for (size_t p = 0; p < a.table.size(); ++p) {
        if (a.table[p].size() != b.table[p].size())
            return false;
        for (size_t q = 0; q < a.table[p].size(); ++q)
            if (a.table[p][q].k != b.table[p][q].k || a.table[p][q].c != b.table[p][q].c)
                return false;
    }
    return true;
}

void require_same_algebra(const GradedAlgebra& a, const GradedAlgebra& b)
{
    if (!a.valid() || !b.valid())
        fail(ErrorCode::MixedAlgebras, "uninitialised algebra");
    if (a.id() != b.id() && !a.structurally_equal(b))
        fail(ErrorCode::MixedAlgebras, "operands belong to different algebras");
}

AlgebraElement::AlgebraElement(GradedAlgebra alg, std::vector<std::pair<int, CycloScalar>> terms)
    : alg_(std::move(alg))
{
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    int n = alg_.root_order();
    for (auto& [k, c] : terms) {
        if (k < 0 || k >= alg_.dim())
            fail(ErrorCode::InvalidParams, "basis index out of range");
        if (!t_.empty() && t_.back().first == k)
            t_.back().second += c.coerce(n);
        else
            t_.push_back({k, c.coerce(n)});
        if (t_.back().second.is_zero())
            t_.pop_back();
    }
}

CycloScalar AlgebraElement::coefficient(int i) const
{
    for (const auto& [k, c] : t_)
        if (k == i)
            return c;
    return CycloScalar(Rational(0), alg_.root_order());
}

bool AlgebraElement::is_one() const
{
    return t_.size() == 1 && t_[0].first == alg_.unit_index() && t_[0].second.is_one();
}

std::optional<GroupElement> AlgebraElement::homogeneous_degree() const
{
    if (t_.empty())
        return alg_.group().zero();
    GroupElement x = alg_.degree(t_[0].first);
    for (const auto& [k, c] : t_)
        if (alg_.degree(k) != x)
            return std::nullopt;
    return x;
}

GroupElement AlgebraElement::degree() const
{
    auto x = homogeneous_degree();
    if (!x)
        fail(ErrorCode::InhomogeneousScalar, "element " + to_string() + " is not homogeneous");
    return *x;
}

std::vector<std::pair<GroupElement, AlgebraElement>> AlgebraElement::components() const
{
    std::map<long, std::vector<std::pair<int, CycloScalar>>> parts;
    for (const auto& t : t_)
        parts[alg_.group().index_of(alg_.degree(t.first))].push_back(t);
    std::vector<std::pair<GroupElement, AlgebraElement>> out;
    for (auto& [idx, ts] : parts)
        out.push_back({alg_.group().element_at(idx), AlgebraElement(alg_, std::move(ts))});
    return out;
}

AlgebraElement AlgebraElement::component(const GroupElement& x) const
{
    std::vector<std::pair<int, CycloScalar>> ts;
    for (const auto& t : t_)
        if (alg_.degree(t.first) == x)
            ts.push_back(t);
    return AlgebraElement(alg_, std::move(ts));
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement r(*this);
    for (auto& t : r.t_)
        t.second = -t.second;
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
    if (o.t_.empty())
        return *this;
    if (!alg_.valid()) {
        *this = o;
        return *this;
    }
    require_same_algebra(alg_, o.alg_);
    std::vector<std::pair<int, CycloScalar>> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
            out.push_back(std::move(t_[i++]));
        } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
            out.push_back(o.t_[j++]);
        } else {
            CycloScalar s = t_[i].second + o.t_[j].second;
            if (!s.is_zero())
                out.push_back({t_[i].first, std::move(s)});
            ++i;
            ++j;
        }
    }
    t_ = std::move(out);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
    return *this += -o;
}

AlgebraElement& AlgebraElement::operator*=(const CycloScalar& c)
{
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    CycloScalar cc = c.coerce(alg_.root_order());
    for (auto& t : t_)
        t.second *= cc;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    if (!a.alg_.valid())
        return a;
    require_same_algebra(a.alg_, b.alg_);
    const GradedAlgebra& alg = a.alg_;
    if (a.t_.empty() || b.t_.empty())
        return alg.zero();
    int d = alg.dim(), u = alg.unit_index();
    if (a.t_.size() == 1 && a.t_[0].first == u) {
        AlgebraElement r(b);
        return r *= a.t_[0].second;
    }
    if (b.t_.size() == 1 && b.t_[0].first == u) {
        AlgebraElement r(a);
        return r *= b.t_[0].second;
    }
    std::vector<CycloScalar> acc(d, CycloScalar(Rational(0), alg.root_order()));
    std::vector<char> touched(d, 0);
    for (const auto& [i, ci] : a.t_)
        for (const auto& [j, cj] : b.t_) {
            const auto& prod = alg.product(i, j);
            if (prod.empty())
                continue;
            CycloScalar c = ci * cj;
            for (const auto& t : prod) {
                acc[t.k].add_product(c, t.c);
                touched[t.k] = 1;
            }
        }
    AlgebraElement r;
    r.alg_ = alg;
    for (int k = 0; k < d; ++k)
        if (touched[k] && !acc[k].is_zero())
            r.t_.push_back({k, std::move(acc[k])});
    return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.t_.size() != b.t_.size())
        return false;
    if (a.t_.empty())
        return true;
    require_same_algebra(a.alg_, b.alg_);
    for (size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].first != b.t_[i].first || a.t_[i].second != b.t_[i].second)
            return false;
    return true;
}

AlgebraElement AlgebraElement::rebind(const GradedAlgebra& target) const
{
    if (target.dim() != alg_.dim())
        fail(ErrorCode::MixedAlgebras, "rebind between algebras of different dimension");
    std::vector<std::pair<int, CycloScalar>> ts;
    for (const auto& [k, c] : t_) {
        CycloScalar out;
        if (!c.try_coerce_down(target.root_order(), out))
            fail(ErrorCode::IncompatibleRootOrders, "coefficient " + c.to_string() + " is outside the target field");
        ts.push_back({k, out});
    }
    return AlgebraElement(target, std::move(ts));
}

std::string AlgebraElement::to_string() const
{
    if (t_.empty())
        return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.to_string() + ")" + alg_.label(k);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a)
{
    return os << a.to_string();
}

ScalarMatrix left_regular(const AlgebraElement& a)
{
    const GradedAlgebra& alg = a.algebra();
    int d = alg.dim();
    ScalarMatrix m(d, std::vector<CycloScalar>(d, CycloScalar(Rational(0), alg.root_order())));
    for (int j = 0; j < d; ++j) {
        AlgebraElement col = a * alg.basis(j);
        for (const auto& [k, c] : col.terms())
            m[k][j] = c;
    }
    return m;
}

std::optional<AlgebraElement> try_invert_element(const AlgebraElement& a)
{
    const GradedAlgebra& alg = a.algebra();
    if (!alg.valid() || a.is_zero())
        return std::nullopt;
    if (a.terms().size() == 1 && a.terms()[0].first == alg.unit_index())
        return alg.scalar(a.terms()[0].second.inverse());
    ScalarMatrix m = left_regular(a);
    int d = alg.dim();
    for (int i = 0; i < d; ++i)
        m[i].push_back(CycloScalar(Rational(i == alg.unit_index() ? 1 : 0), alg.root_order()));
    if (!solve_in_place(m))
        return std::nullopt;
    std::vector<std::pair<int, CycloScalar>> ts;
    for (int i = 0; i < d; ++i)
        if (!m[i][d].is_zero())
            ts.push_back({i, m[i][d]});
    AlgebraElement b(alg, std::move(ts));
    if (!(b * a).is_one())
        return std::nullopt;
    return b;
}

AlgebraElement invert_element(const AlgebraElement& a)
{
    auto b = try_invert_element(a);
    if (!b)
        fail(ErrorCode::NotInvertible, "element " + a.to_string() + " has no inverse");
    return *b;
}

std::optional<AlgebraElement> find_homogeneous_unit(const GradedAlgebra& a, const GroupElement& x)
{
    const auto& impl = *a.id();
    long key = a.group().index_of(x);
    {
        std::lock_guard<std::mutex> lock(impl.unit_mu);
        auto it = impl.unit_cache.find(key);
        if (it != impl.unit_cache.end()) {
            if (!it->second)
                return std::nullopt;
            return AlgebraElement(a, *it->second);
        }
    }
    std::optional<AlgebraElement> found;
    const auto& idx = a.basis_of_degree(x);
    if (x.is_zero())
        found = a.one();
    for (size_t i = 0; i < idx.size() && !found; ++i)
        if (try_invert_element(a.basis(idx[i])))
            found = a.basis(idx[i]);
    if (!found && idx.size() > 1) {
        std::mt19937_64 rng(0x5eed + key);
        std::uniform_int_distribution<int> coef(-5, 5);
        for (int attempt = 0; attempt < 6 && !found; ++attempt) {
            std::vector<std::pair<int, CycloScalar>> ts;
            for (int i : idx)
                ts.push_back({i, CycloScalar(attempt == 0 ? 1L : (long)coef(rng))});
            AlgebraElement c(a, ts);
            if (try_invert_element(c))
                found = c;
        }
    }
    std::lock_guard<std::mutex> lock(impl.unit_mu);
    if (found)
        impl.unit_cache[key] = found->terms();
    else
        impl.unit_cache[key] = std::nullopt;
    return found;
}

std::vector<GroupElement> unit_degrees(const GradedAlgebra& a)
{
    std::vector<GroupElement> out;
    for (const auto& x : a.support_degrees())
        if (find_homogeneous_unit(a, x))
            out.push_back(x);
    return out;
}

std::optional<Admissibility> degree_admissible(const GradedAlgebra& a, const std::vector<GroupElement>& mu,
                                               const std::vector<GroupElement>& nu)
{
    size_t n = nu.size();
    if (mu.size() != n)
        return std::nullopt;
    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    std::vector<AlgebraElement> units(n);
    // depth-first in increasing order gives the lexicographically least solution
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == n)
            return true;
        for (size_t j = 0; j < n; ++j) {
            if (used[j])
                continue;
            auto u = find_homogeneous_unit(a, nu[i] - mu[j]);
            if (!u)
                continue;
            used[j] = 1;
            perm[i] = (int)j;
            units[i] = *u;
            if (self(self, i + 1))
                return true;
            used[j] = 0;
        }
        return false;
    };
    if (!rec(rec, 0))
        return std::nullopt;
    return Admissibility{perm, units};
}

GradedAlgebra twist(const GradedAlgebra& a, const Multiplier& sigma)
{
    if (sigma.group() != a.group())
        fail(ErrorCode::IncompatibleGroups, "multiplier is defined on a different group");
    int n = a.root_order();
    if (!field_contains(n, sigma.root_order()))
        fail(ErrorCode::IncompatibleRootOrders, "multiplier values are not in the scalar field of the algebra");
    AlgebraSpec s = a.spec();
    int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            CycloScalar f = sigma.value_in(a.degree(i), a.degree(j), n);
            for (auto& t : s.table[(size_t)i * d + j])
                t.c *= f;
        }
    s.lambda = lambda_twist(a.lambda(), sigma);
    return make_algebra_unchecked(std::move(s));
}

TensorProduct graded_tensor(const GradedAlgebra& a, const GradedAlgebra& b)
{
    if (a.group() != b.group())
        fail(ErrorCode::IncompatibleGroups, "tensor factors have different grading groups");
    if (!a.lambda().same_values(b.lambda()))
        fail(ErrorCode::IncompatibleGroups, "tensor factors have different commutation factors");
    int n = join_root_orders(a.root_order(), b.root_order());
    int da = a.dim(), db = b.dim();
    AlgebraSpec s;
    s.group = a.group();
    s.lambda = a.lambda();
    s.root_order = n;
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            s.labels.push_back(a.label(i) + "*" + b.label(j));
            s.degrees.push_back(a.degree(i) + b.degree(j));
        }
    int d = da * db;
    s.table.resize((size_t)d * d);
    for (int a1 = 0; a1 < da; ++a1)
        for (int b1 = 0; b1 < db; ++b1)
            for (int a2 = 0; a2 < da; ++a2) {
                const auto& pa = a.product(a1, a2);
                if (pa.empty())
                    continue;
                CycloScalar sign = a.lambda().value_in(b.degree(b1), a.degree(a2), n);
                for (int b2 = 0; b2 < db; ++b2) {
                    auto& cell = s.table[(size_t)(a1 * db + b1) * d + (a2 * db + b2)];
                    for (const auto& ta : pa)
                        for (const auto& tb : b.product(b1, b2))
                            cell.push_back({ta.k * db + tb.k, sign * ta.c * tb.c});
                }
            }
    TensorProduct t;
    t.algebra = make_algebra_unchecked(std::move(s));
    t.left = a;
    t.right = b;
    return t;
}

AlgebraElement TensorProduct::embed_left(const AlgebraElement& x) const
{
    require_same_algebra(x.algebra(), left);
    int db = right.dim(), u = right.unit_index();
    std::vector<std::pair<int, CycloScalar>> ts;
    for (const auto& [k, c] : x.terms())
        ts.push_back({k * db + u, c});
    return AlgebraElement(algebra, std::move(ts));
}

AlgebraElement TensorProduct::embed_right(const AlgebraElement& y) const
{
    require_same_algebra(y.algebra(), right);
    int db = right.dim(), u = left.unit_index();
    std::vector<std::pair<int, CycloScalar>> ts;
    for (const auto& [k, c] : y.terms())
        ts.push_back({u * db + k, c});
    return AlgebraElement(algebra, std::move(ts));
}

AlgebraElement TensorProduct::project_left(const AlgebraElement& x) const
{
    require_same_algebra(x.algebra(), algebra);
    int db = right.dim(), u = right.unit_index();
    std::vector<std::pair<int, CycloScalar>> ts;
    for (const auto& [k, c] : x.terms()) {
        if (k % db != u)
            fail(ErrorCode::InvalidParams, "element is not in the image of the left factor");
        CycloScalar out;
        if (!c.try_coerce_down(left.root_order(), out))
            fail(ErrorCode::IncompatibleRootOrders, "coefficient outside the left factor's field");
        ts.push_back({k / db, out});
    }
    return AlgebraElement(left, std::move(ts));
}

} // namespace gradla
