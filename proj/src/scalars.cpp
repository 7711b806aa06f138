#include "gradla/scalars.hpp"

#include "gradla/error.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gradla {

int euler_phi(int n)
{
    if (n < 1)
        fail(ErrorCode::InvalidParams, "root order must be positive");
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

namespace {

// exact division of integer polynomials by a monic divisor
std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den)
{
    size_t dn = den.size() - 1;
    std::vector<long long> q(num.size() - dn, 0);
    for (size_t k = num.size(); k-- > dn;) {
        long long c = num[k];
        q[k - dn] = c;
        for (size_t i = 0; i <= dn; ++i)
            num[k - dn + i] -= c * den[i];
    }
    return q;
}

} // namespace

const std::vector<long long>& cyclotomic_polynomial(int n)
{
    static std::recursive_mutex mu;
    static std::map<int, std::vector<long long>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    if (n < 1)
        fail(ErrorCode::InvalidParams, "root order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<long long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = divide_monic(p, cyclotomic_polynomial(d));
    return cache[n] = p;
}

int join_root_orders(int a, int b)
{
    bool ra = euler_phi(a) == 1, rb = euler_phi(b) == 1;
    if (ra && rb)
        return std::max(a, b);
    if (ra)
        return b;
    if (rb)
        return a;
    return std::lcm(a, b);
}

bool field_contains(int n, int m)
{
    if (euler_phi(m) == 1)
        return true;
    int eff = (n % 2 == 1) ? 2 * n : n;
    return eff % m == 0;
}

CycloScalar::CycloScalar() : n_(1), c_(1) {}

CycloScalar::CycloScalar(long v) : n_(1), c_(1, Rational(v)) {}

CycloScalar::CycloScalar(const Rational& q, int root_order) : n_(root_order), c_(euler_phi(root_order))
{
    c_[0] = q;
    c_[0].canonicalize();
}

CycloScalar::CycloScalar(int root_order, Coeffs coeffs) : n_(root_order), c_(std::move(coeffs))
{
    if ((int)c_.size() != euler_phi(n_))
        fail(ErrorCode::InvalidParams, "coefficient count does not match phi(N)");
    for (auto& c : c_)
        c.canonicalize();
}

CycloScalar CycloScalar::from_polynomial(int root_order, const std::vector<Rational>& poly)
{
    CycloScalar r(Rational(0), root_order);
    std::vector<Rational> p(poly);
    if ((int)p.size() < euler_phi(root_order))
        p.resize(euler_phi(root_order));
    r.reduce_poly(p);
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = p[i];
    return r;
}

void CycloScalar::reduce_poly(std::vector<Rational>& p) const
{
    const auto& phi = cyclotomic_polynomial(n_);
    size_t d = phi.size() - 1;
    for (size_t k = p.size(); k-- > d;) {
        if (sgn(p[k]) == 0)
            continue;
        Rational c = p[k];
        for (size_t i = 0; i < d; ++i)
            if (phi[i] != 0)
                p[k - d + i] -= c * (long)phi[i];
        p[k] = 0;
    }
}

CycloScalar CycloScalar::root_of_unity(long k, int root_order)
{
    long e = ((k % root_order) + root_order) % root_order;
    std::vector<Rational> p(std::max<long>(e + 1, euler_phi(root_order)));
    p[e] = 1;
    return from_polynomial(root_order, p);
}

CycloScalar CycloScalar::root_of_unity_in(long k, int m, int n)
{
    k = ((k % m) + m) % m;
    if (n % m == 0)
        return root_of_unity(k * (n / m), n);
    if (m == 1)
        return CycloScalar(Rational(1), n);
    if (m == 2)
        return CycloScalar(Rational(k == 0 ? 1 : -1), n);
    if (n % 2 == 1 && (2 * n) % m == 0) {
        // zeta_{2n}^t = (-1)^t zeta_n^{t(n+1)/2}
        long t = k * (2 * n / m);
        CycloScalar r = root_of_unity(t * ((n + 1) / 2), n);
        return (t % 2) ? -r : r;
    }
    fail(ErrorCode::IncompatibleRootOrders,
         "zeta_" + std::to_string(m) + " is not in Q(zeta_" + std::to_string(n) + ")");
}

bool CycloScalar::is_zero() const
{
    for (const auto& c : c_)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool CycloScalar::is_one() const
{
    if (c_[0] != 1)
        return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            return false;
    return true;
}

bool CycloScalar::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0)
            return false;
    return true;
}

CycloScalar CycloScalar::coerce(int n) const
{
    if (n == n_)
        return *this;
    if (is_rational())
        return CycloScalar(c_[0], n);
    if (!field_contains(n, n_))
        fail(ErrorCode::IncompatibleRootOrders,
             "cannot coerce Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" + std::to_string(n) + ")");
    CycloScalar r(Rational(0), n);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        CycloScalar z = root_of_unity_in((long)i, n_, n);
        for (auto& zc : z.c_)
            zc *= c_[i];
        r += z;
    }
    return r;
}

bool CycloScalar::try_coerce_down(int n, CycloScalar& out) const
{
    if (n == n_) {
        out = *this;
        return true;
    }
    if (is_rational()) {
        out = CycloScalar(c_[0], n);
        return true;
    }
    if (!field_contains(n_, n))
        return false;
    // solve for the coefficients in the basis 1, zeta_n, ..., zeta_n^{phi(n)-1} mapped into Q(zeta_N)
    int d = euler_phi(n), D = (int)c_.size();
    std::vector<std::vector<Rational>> a(D, std::vector<Rational>(d + 1));
    for (int j = 0; j < d; ++j) {
        CycloScalar z = root_of_unity_in(j, n, n_);
        for (int i = 0; i < D; ++i)
            a[i][j] = z.c_[i];
    }
    for (int i = 0; i < D; ++i)
        a[i][d] = c_[i];
    int row = 0;
    std::vector<int> pivcol;
    for (int col = 0; col < d && row < D; ++col) {
        int p = row;
        while (p < D && sgn(a[p][col]) == 0)
            ++p;
        if (p == D)
            continue;
        std::swap(a[p], a[row]);
        for (int i = 0; i < D; ++i) {
            if (i == row || sgn(a[i][col]) == 0)
                continue;
            Rational f = a[i][col] / a[row][col];
            for (int j = col; j <= d; ++j)
                a[i][j] -= f * a[row][j];
        }
        pivcol.push_back(col);
        ++row;
    }
    for (int i = row; i < D; ++i)
        if (sgn(a[i][d]) != 0)
            return false;
    Coeffs res(d);
    for (int i = 0; i < row; ++i)
        res[pivcol[i]] = a[i][d] / a[i][pivcol[i]];
    out = CycloScalar(n, std::move(res));
    return true;
}

CycloScalar CycloScalar::inverse() const
{
    if (is_zero())
        fail(ErrorCode::DivisionByZero, "inverse of zero");
    if (c_.size() == 1) {
        CycloScalar r(*this);
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // solve M u = e_0, M the multiplication-by-this matrix in the power basis
    int d = (int)c_.size();
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    for (int j = 0; j < d; ++j) {
        std::vector<Rational> p(2 * d, Rational(0));
        for (int i = 0; i < d; ++i)
            p[i + j] = c_[i];
        reduce_poly(p);
        for (int i = 0; i < d; ++i)
            m[i][j] = p[i];
    }
    m[0][d] = 1;
    for (int col = 0; col < d; ++col) {
        int p = col;
        while (p < d && sgn(m[p][col]) == 0)
            ++p;
        if (p == d)
            fail(ErrorCode::DivisionByZero, "singular multiplication matrix");
        std::swap(m[p], m[col]);
        Rational inv = 1 / m[col][col];
        for (int j = col; j <= d; ++j)
            m[col][j] *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == col || sgn(m[i][col]) == 0)
                continue;
            Rational f = m[i][col];
            for (int j = col; j <= d; ++j)
                m[i][j] -= f * m[col][j];
        }
    }
    Coeffs res(d);
    for (int i = 0; i < d; ++i)
        res[i] = m[i][d];
    return CycloScalar(n_, std::move(res));
}

CycloScalar CycloScalar::pow(long e) const
{
    CycloScalar base = e < 0 ? inverse() : *this;
    if (e < 0)
        e = -e;
    CycloScalar r(Rational(1), n_);
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

CycloScalar CycloScalar::operator-() const
{
    CycloScalar r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o)
{
    if (o.n_ != n_) {
        int n = join_root_orders(n_, o.n_);
        if (n != n_)
            *this = coerce(n);
        if (o.n_ != n)
            return *this += o.coerce(n);
    }
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(o.c_[i]) != 0)
            c_[i] += o.c_[i];
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o)
{
    return *this += -o;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o)
{
    if (o.n_ != n_) {
        int n = join_root_orders(n_, o.n_);
        if (n != n_)
            *this = coerce(n);
        if (o.n_ != n)
            return *this *= o.coerce(n);
    }
    if (c_.size() == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    size_t d = c_.size();
    std::vector<Rational> p(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        for (size_t j = 0; j < d; ++j)
            if (sgn(o.c_[j]) != 0)
                p[i + j] += c_[i] * o.c_[j];
    }
    reduce_poly(p);
    for (size_t i = 0; i < d; ++i)
        c_[i] = p[i];
    return *this;
}

void CycloScalar::add_product(const CycloScalar& a, const CycloScalar& b)
{
    if (a.n_ == n_ && b.n_ == n_ && c_.size() == 1) {
        if (sgn(a.c_[0]) != 0 && sgn(b.c_[0]) != 0)
            c_[0] += a.c_[0] * b.c_[0];
        return;
    }
    *this += a * b;
}

bool operator==(const CycloScalar& a, const CycloScalar& b)
{
    if (a.n_ == b.n_)
        return a.c_ == b.c_;
    int n = join_root_orders(a.n_, b.n_);
    return a.coerce(n).c_ == b.coerce(n).c_;
}

std::string CycloScalar::to_string() const
{
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (sgn(c) == 0)
            continue;
        bool neg = sgn(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        std::string term;
        if (i == 0) {
            term = mag.get_str();
        } else {
            std::string z = (i == 1) ? "z" : "z^" + std::to_string(i);
            term = (mag == 1) ? z : mag.get_str() + "*" + z;
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& s)
{
    return os << s.to_string();
}

Rational parse_rational(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch))
            t += ch;
    if (t.empty())
        fail(ErrorCode::ParseError, "empty rational");
    if (t[0] == '+')
        t.erase(0, 1);
    size_t slash = t.find('/');
    auto valid_int = [](const std::string& s) {
        size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit((unsigned char)s[i]))
                return false;
        return true;
    };
    std::string num = t.substr(0, slash), den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        fail(ErrorCode::ParseError, "malformed rational '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0)
        fail(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

CycloScalar CycloScalar::parse(const std::string& text, int root_order)
{
    std::string t;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch))
            t += ch;
    if (t.empty())
        fail(ErrorCode::ParseError, "empty scalar");
    std::vector<Rational> poly(euler_phi(root_order));
    size_t pos = 0;
    while (pos < t.size()) {
        int sign = 1;
        if (t[pos] == '+' || t[pos] == '-') {
            sign = t[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail(ErrorCode::ParseError, "expected sign in '" + text + "'");
        }
        size_t end = pos;
        while (end < t.size() && t[end] != '+' && t[end] != '-')
            ++end;
        if (end > 0 && end < t.size() && t[end - 1] == '^') // exponent sign like z^-1
            while (end < t.size() && t[end] != '+' && (t[end] != '-' || t[end - 1] == '^'))
                ++end;
        std::string term = t.substr(pos, end - pos);
        if (term.empty())
            fail(ErrorCode::ParseError, "empty term in '" + text + "'");
        size_t z = term.find('z');
        Rational coef(1);
        long power = 0;
        if (z == std::string::npos) {
            coef = parse_rational(term);
        } else {
            std::string head = term.substr(0, z), tail = term.substr(z + 1);
            if (!head.empty()) {
                if (head.back() != '*')
                    fail(ErrorCode::ParseError, "expected '*' before z in '" + text + "'");
                coef = parse_rational(head.substr(0, head.size() - 1));
            }
            power = 1;
            if (!tail.empty()) {
                if (tail[0] != '^')
                    fail(ErrorCode::ParseError, "expected '^' after z in '" + text + "'");
                try {
                    size_t used = 0;
                    power = std::stol(tail.substr(1), &used);
                    if (used != tail.size() - 1)
                        throw std::invalid_argument("trailing");
                } catch (const std::exception&) {
                    fail(ErrorCode::ParseError, "bad exponent in '" + text + "'");
                }
            }
        }
        long e = ((power % root_order) + root_order) % root_order;
        if ((long)poly.size() <= e)
            poly.resize(e + 1);
        poly[e] += sign * coef;
        pos = end;
    }
    return from_polynomial(root_order, poly);
}

CycloScalar add(const CycloScalar& a, const CycloScalar& b, Coercion policy)
{
    if (policy == Coercion::Strict && a.root_order() != b.root_order())
        fail(ErrorCode::IncompatibleRootOrders, "root orders differ");
    return a + b;
}

CycloScalar mul(const CycloScalar& a, const CycloScalar& b, Coercion policy)
{
    if (policy == Coercion::Strict && a.root_order() != b.root_order())
        fail(ErrorCode::IncompatibleRootOrders, "root orders differ");
    return a * b;
}

} // namespace gradla

namespace gradla {

bool solve_in_place(ScalarMatrix& a)
{
    size_t n = a.size();
    if (n == 0)
        return true;
    size_t w = a[0].size();
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && a[p][col].is_zero())
            ++p;
        if (p == n)
            return false;
        std::swap(a[p], a[col]);
        CycloScalar inv = a[col][col].inverse();
        for (size_t j = col; j < w; ++j)
            if (!a[col][j].is_zero())
                a[col][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero())
                continue;
            CycloScalar f = -a[i][col];
            for (size_t j = col; j < w; ++j)
                if (!a[col][j].is_zero())
                    a[i][j].add_product(f, a[col][j]);
        }
    }
    return true;
}

CycloScalar determinant(ScalarMatrix a)
{
    size_t n = a.size();
    CycloScalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && a[p][col].is_zero())
            ++p;
        if (p == n)
            return CycloScalar(0);
        if (p != col) {
            std::swap(a[p], a[col]);
            det = -det;
        }
        det *= a[col][col];
        CycloScalar inv = a[col][col].inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero())
                continue;
            CycloScalar f = -(a[i][col] * inv);
            for (size_t j = col; j < n; ++j)
                if (!a[col][j].is_zero())
                    a[i][j].add_product(f, a[col][j]);
        }
    }
    return det;
}

} // namespace gradla
