#include "gradla/gmatrix.hpp"

#include "gradla/error.hpp"

#include <map>
#include <ostream>

namespace gradla {

GradedMatrix::GradedMatrix(GradedAlgebra alg, std::vector<GroupElement> row_degrees, std::vector<GroupElement> col_degrees)
    : alg_(std::move(alg)), rows_(std::move(row_degrees)), cols_(std::move(col_degrees)),
      e_(rows_.size() * cols_.size(), alg_.zero())
{
    for (const auto& x : rows_)
        if (!alg_.group().contains(x))
            fail(ErrorCode::IncompatibleGroups, "row degree outside the grading group");
    for (const auto& x : cols_)
        if (!alg_.group().contains(x))
            fail(ErrorCode::IncompatibleGroups, "column degree outside the grading group");
}

GradedMatrix::GradedMatrix(GradedAlgebra alg, std::vector<GroupElement> row_degrees, std::vector<GroupElement> col_degrees,
                           std::vector<AlgebraElement> entries)
    : GradedMatrix(std::move(alg), std::move(row_degrees), std::move(col_degrees))
{
    if (entries.size() != e_.size())
        fail(ErrorCode::DegreeMismatch, "entry count does not match the degree vectors");
    for (auto& a : entries) {
        if (!a.algebra().valid())
            a = alg_.zero();
        require_same_algebra(a.algebra(), alg_);
    }
    e_ = std::move(entries);
}

GradedMatrix GradedMatrix::identity(const GradedAlgebra& alg, const std::vector<GroupElement>& nu)
{
    GradedMatrix m(alg, nu, nu);
    for (int i = 0; i < m.nrows(); ++i)
        m.at(i, i) = alg.one();
    return m;
}

GradedMatrix GradedMatrix::diagonal(const GradedAlgebra& alg, const std::vector<GroupElement>& nu,
                                    const std::vector<AlgebraElement>& diag)
{
    if (diag.size() != nu.size())
        fail(ErrorCode::DegreeMismatch, "diagonal length differs from the degree vector");
    GradedMatrix m(alg, nu, nu);
    for (int i = 0; i < m.nrows(); ++i)
        m.at(i, i) = diag[i];
    return m;
}

std::optional<GroupElement> GradedMatrix::homogeneous_degree() const
{
    std::optional<GroupElement> x;
    for (int i = 0; i < nrows(); ++i)
        for (int j = 0; j < ncols(); ++j)
            for (const auto& [k, c] : at(i, j).terms()) {
                GroupElement y = alg_.degree(k) + rows_[i] - cols_[j];
                if (!x)
                    x = y;
                else if (*x != y)
                    return std::nullopt;
            }
    return x ? *x : alg_.group().zero();
}

bool GradedMatrix::is_homogeneous_of(const GroupElement& x) const
{
    for (int i = 0; i < nrows(); ++i)
        for (int j = 0; j < ncols(); ++j)
            for (const auto& [k, c] : at(i, j).terms())
                if (alg_.degree(k) + rows_[i] - cols_[j] != x)
                    return false;
    return true;
}

std::vector<std::pair<GroupElement, GradedMatrix>> GradedMatrix::components() const
{
    std::map<long, GradedMatrix> parts;
    const auto& g = alg_.group();
    for (int i = 0; i < nrows(); ++i)
        for (int j = 0; j < ncols(); ++j)
            for (const auto& [k, c] : at(i, j).terms()) {
                long key = g.index_of(alg_.degree(k) + rows_[i] - cols_[j]);
                auto it = parts.find(key);
                if (it == parts.end())
                    it = parts.emplace(key, GradedMatrix(alg_, rows_, cols_)).first;
                it->second.at(i, j) += AlgebraElement(alg_, {{k, c}});
            }
    std::vector<std::pair<GroupElement, GradedMatrix>> out;
    for (auto& [key, m] : parts)
        out.push_back({g.element_at(key), std::move(m)});
    return out;
}

GradedMatrix GradedMatrix::component(const GroupElement& x) const
{
    GradedMatrix m(alg_, rows_, cols_);
    for (int i = 0; i < nrows(); ++i)
        for (int j = 0; j < ncols(); ++j)
            m.at(i, j) = at(i, j).component(x - rows_[i] + cols_[j]);
    return m;
}

bool GradedMatrix::is_zero() const
{
    for (const auto& a : e_)
        if (!a.is_zero())
            return false;
    return true;
}

GradedMatrix GradedMatrix::operator-() const
{
    GradedMatrix r(*this);
    for (auto& a : r.e_)
        a = -a;
    return r;
}

GradedMatrix& GradedMatrix::operator+=(const GradedMatrix& o)
{
    require_same_algebra(alg_, o.alg_);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(ErrorCode::DegreeMismatch, "sum of matrices with different degree vectors");
    for (size_t p = 0; p < e_.size(); ++p)
        e_[p] += o.e_[p];
    return *this;
}

GradedMatrix& GradedMatrix::operator-=(const GradedMatrix& o)
{
    return *this += -o;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b)
{
    require_same_algebra(a.alg_, b.alg_);
    if (a.cols_ != b.rows_)
        fail(ErrorCode::DegreeMismatch, "inner degree vectors differ");
    GradedMatrix r(a.alg_, a.rows_, b.cols_);
    for (int i = 0; i < a.nrows(); ++i)
        for (int k = 0; k < a.ncols(); ++k) {
            const auto& x = a.at(i, k);
            if (x.is_zero())
                continue;
            for (int j = 0; j < b.ncols(); ++j)
                if (!b.at(k, j).is_zero())
                    r.at(i, j) += x * b.at(k, j);
        }
    return r;
}

GradedMatrix operator*(GradedMatrix a, const CycloScalar& c)
{
    for (auto& e : a.e_)
        e *= c;
    return a;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    for (size_t p = 0; p < a.e_.size(); ++p)
        if (a.e_[p] != b.e_[p])
            return false;
    return true;
}

GradedMatrix GradedMatrix::rebind(const GradedAlgebra& target) const
{
    GradedMatrix r(target, rows_, cols_);
    for (size_t p = 0; p < e_.size(); ++p)
        r.e_[p] = e_[p].rebind(target);
    return r;
}

GradedMatrix GradedMatrix::with_degrees(std::vector<GroupElement> rows, std::vector<GroupElement> cols) const
{
    if (rows.size() != rows_.size() || cols.size() != cols_.size())
        fail(ErrorCode::DegreeMismatch, "degree vectors of the wrong length");
    return GradedMatrix(alg_, std::move(rows), std::move(cols), e_);
}

GradedMatrix GradedMatrix::block(int r0, int r1, int c0, int c1) const
{
    GradedMatrix m(alg_, {rows_.begin() + r0, rows_.begin() + r1}, {cols_.begin() + c0, cols_.begin() + c1});
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j)
            m.at(i - r0, j - c0) = at(i, j);
    return m;
}

std::string GradedMatrix::to_string() const
{
    std::string s = "[";
    for (int i = 0; i < nrows(); ++i) {
        s += i ? ", [" : "[";
        for (int j = 0; j < ncols(); ++j)
            s += (j ? ", " : "") + at(i, j).to_string();
        s += "]";
    }
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const GradedMatrix& m)
{
    return os << m.to_string();
}

GradedMatrix scalar_action(const AlgebraElement& a, const GradedMatrix& x)
{
    require_same_algebra(a.algebra(), x.algebra());
    GroupElement da = a.degree();
    const auto& alg = x.algebra();
    GradedMatrix r(alg, x.row_degrees(), x.col_degrees());
    for (int i = 0; i < x.nrows(); ++i) {
        AlgebraElement ai = a * alg.lambda().value_in(da, x.row_degrees()[i], alg.root_order());
        for (int j = 0; j < x.ncols(); ++j)
            r.at(i, j) = ai * x.at(i, j);
    }
    return r;
}

namespace {

// applies sigma(x, nu_j)^s sigma(mu_i, delta)^{-s} termwise, x the component degree of the term
GradedMatrix scale_by_sigma(const GradedMatrix& m, const Multiplier& sigma, const GradedAlgebra& target, int s)
{
    const auto& src = m.algebra();
    if (sigma.group() != src.group())
        fail(ErrorCode::IncompatibleGroups, "multiplier is defined on a different group");
    int n = target.root_order(), order = sigma.root_order();
    GradedMatrix r(target, m.row_degrees(), m.col_degrees());
    for (int i = 0; i < m.nrows(); ++i)
        for (int j = 0; j < m.ncols(); ++j) {
            std::vector<std::pair<int, CycloScalar>> ts;
            for (const auto& [k, c] : m.at(i, j).terms()) {
                const GroupElement& delta = src.degree(k);
                GroupElement x = delta + m.row_degrees()[i] - m.col_degrees()[j];
                long e = (long)sigma.exponent(x, m.col_degrees()[j]) - sigma.exponent(m.row_degrees()[i], delta);
                ts.push_back({k, c * CycloScalar::root_of_unity_in(s * e, order, n)});
            }
            r.at(i, j) = AlgebraElement(target, std::move(ts));
        }
    return r;
}

} // namespace

GradedMatrix j_sigma(const GradedMatrix& x, const Multiplier& sigma)
{
    return j_sigma(x, sigma, twist(x.algebra(), sigma));
}

GradedMatrix j_sigma(const GradedMatrix& x, const Multiplier& sigma, const GradedAlgebra& twisted)
{
    return scale_by_sigma(x, sigma, twisted, 1);
}

GradedMatrix j_sigma_inverse(const GradedMatrix& y, const Multiplier& sigma, const GradedAlgebra& base)
{
    GradedMatrix back = scale_by_sigma(y, sigma, y.algebra(), -1);
    return back.rebind(base);
}

AlgebraElement graded_trace(const GradedMatrix& x)
{
    if (!x.is_square())
        fail(ErrorCode::NotSquare, "trace needs a square matrix with equal degree vectors");
    const auto& alg = x.algebra();
    const auto& nu = x.row_degrees();
    AlgebraElement t = alg.zero();
    for (int i = 0; i < x.nrows(); ++i)
        for (const auto& [delta, part] : x.at(i, i).components())
            t += part * alg.lambda().value_in(nu[i], delta + nu[i], alg.root_order());
    return t;
}

AlgebraElement supertrace(const GradedMatrix& y)
{
    if (!y.is_square())
        fail(ErrorCode::NotSquare, "supertrace needs a square matrix with equal degree vectors");
    const auto& alg = y.algebra();
    const auto& nu = y.row_degrees();
    AlgebraElement t = alg.zero();
    for (int i = 0; i < y.nrows(); ++i) {
        int pi = parity(alg.lambda(), nu[i]);
        for (const auto& [delta, part] : y.at(i, i).components()) {
            bool neg = pi && (parity(alg.lambda(), delta) + pi) % 2;
            t += neg ? -part : part;
        }
    }
    return t;
}

AlgebraElement graded_trace_via_sigma(const GradedMatrix& x, const Multiplier& sigma)
{
    return supertrace(j_sigma(x, sigma)).rebind(x.algebra());
}

std::optional<GradedMatrix> try_invert_matrix(const GradedMatrix& x)
{
    if (x.nrows() != x.ncols())
        fail(ErrorCode::NotSquare, "inverse needs a square matrix");
    const auto& alg = x.algebra();
    int n = x.nrows(), d = alg.dim(), N = alg.root_order();
    if (n == 0)
        return x;
    // scalar system: block (i,j) of size d x d is the left-regular matrix of X_ij
    int size = n * d;
    CycloScalar zero(Rational(0), N);
    ScalarMatrix m(size, std::vector<CycloScalar>(size + n, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (x.at(i, j).is_zero())
                continue;
            ScalarMatrix l = left_regular(x.at(i, j));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    if (!l[r][c].is_zero())
                        m[i * d + r][j * d + c] = l[r][c];
        }
    for (int c = 0; c < n; ++c)
        m[c * d + alg.unit_index()][size + c] = CycloScalar(Rational(1), N);
    if (!solve_in_place(m))
        return std::nullopt;
    GradedMatrix y(alg, x.col_degrees(), x.row_degrees());
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < n; ++c) {
            std::vector<std::pair<int, CycloScalar>> ts;
            for (int l = 0; l < d; ++l)
                if (!m[j * d + l][size + c].is_zero())
                    ts.push_back({l, m[j * d + l][size + c]});
            y.at(j, c) = AlgebraElement(alg, std::move(ts));
        }
    if (y * x != GradedMatrix::identity(alg, x.col_degrees()))
        return std::nullopt;
    return y;
}

GradedMatrix invert_matrix(const GradedMatrix& x)
{
    auto y = try_invert_matrix(x);
    if (!y)
        fail(ErrorCode::Singular, "matrix is not invertible");
    return *y;
}

GradedMatrix permutation_matrix(const GradedAlgebra& alg, const std::vector<int>& pi, const std::vector<GroupElement>& nu,
                                const std::vector<AlgebraElement>& units)
{
    size_t n = nu.size();
    if (pi.size() != n || units.size() != n)
        fail(ErrorCode::InvalidParams, "permutation, degrees and units must have equal length");
    std::vector<AlgebraElement> inv(n);
    for (size_t i = 0; i < n; ++i) {
        if (units[i].homogeneous_degree() != nu[i] || units[i].is_zero())
            fail(ErrorCode::MissingUnit, "unit " + std::to_string(i) + " has the wrong degree");
        inv[i] = invert_element(units[i]);
    }
    GradedMatrix p(alg, nu, nu);
    for (size_t j = 0; j < n; ++j)
        p.at(pi[j], (int)j) = inv[pi[j]] * units[j];
    return p;
}

GradedMatrix permutation_matrix(const GradedAlgebra& alg, const std::vector<int>& pi, const std::vector<GroupElement>& nu)
{
    std::vector<AlgebraElement> units;
    for (const auto& x : nu) {
        auto u = find_homogeneous_unit(alg, x);
        if (!u)
            fail(ErrorCode::MissingUnit, "no homogeneous unit of degree " + x.to_string());
        units.push_back(*u);
    }
    return permutation_matrix(alg, pi, nu, units);
}

GradedMatrix change_basis(const GradedMatrix& x, const GradedMatrix& p)
{
    return invert_matrix(p) * x * p;
}

GradedMatrix shift_degrees(const GradedMatrix& x, const GroupElement& pi)
{
    auto rows = x.row_degrees(), cols = x.col_degrees();
    for (auto& r : rows)
        r = r + pi;
    for (auto& c : cols)
        c = c + pi;
    return x.with_degrees(rows, cols);
}

} // namespace gradla
