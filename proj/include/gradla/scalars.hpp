#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gradla {

using Rational = mpq_class;

// phi(N), and the coefficients of the N-th cyclotomic polynomial (ascending powers, monic).
int euler_phi(int n);
const std::vector<long long>& cyclotomic_polynomial(int n);

// Smallest root order whose field contains both Q(zeta_a) and Q(zeta_b).
int join_root_orders(int a, int b);
// True if Q(zeta_m) is a subfield of Q(zeta_n).
bool field_contains(int n, int m);

// Exact element of Q(zeta_N), stored as a residue modulo Phi_N.
// N = 1 and N = 2 both give Q.
class CycloScalar {
public:
    using Coeffs = boost::container::small_vector<Rational, 4>;

    CycloScalar();
    CycloScalar(long v); // NOLINT: integers convert implicitly
    CycloScalar(const Rational& q, int root_order = 1);
    CycloScalar(int root_order, Coeffs coeffs); // coeffs of 1, z, ..., z^{phi-1}

    // zeta_N^k
    static CycloScalar root_of_unity(long k, int root_order);
    // zeta_m^k as an element of Q(zeta_n)
    static CycloScalar root_of_unity_in(long k, int m, int n);
    // Any polynomial in zeta_N (coefficient i multiplies zeta^i), reduced.
    static CycloScalar from_polynomial(int root_order, const std::vector<Rational>& poly);
    static CycloScalar parse(const std::string& text, int root_order);

    int root_order() const { return n_; }
    const Coeffs& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_part() const { return c_[0]; }

    // Re-express in Q(zeta_n); requires field_contains(n, root_order()).
    CycloScalar coerce(int n) const;
    // Express in the smaller field Q(zeta_n) when the value lies there.
    bool try_coerce_down(int n, CycloScalar& out) const;

    CycloScalar inverse() const;
    CycloScalar pow(long e) const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    CycloScalar& operator/=(const CycloScalar& o) { return *this *= o.inverse(); }

    // this += a * b, the hot path of every algebra product
    void add_product(const CycloScalar& a, const CycloScalar& b);

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
    friend bool operator==(const CycloScalar& a, const CycloScalar& b);
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    void reduce_poly(std::vector<Rational>& p) const;
    int n_;
    Coeffs c_;
};

enum class Coercion { Lcm, Strict };

// Arithmetic with explicit coercion policy; Strict throws IncompatibleRootOrders on mismatch.
CycloScalar add(const CycloScalar& a, const CycloScalar& b, Coercion policy);
CycloScalar mul(const CycloScalar& a, const CycloScalar& b, Coercion policy);

std::ostream& operator<<(std::ostream& os, const CycloScalar& s);

Rational parse_rational(const std::string& text);

} // namespace gradla

namespace gradla {

using ScalarMatrix = std::vector<std::vector<CycloScalar>>;

// Gauss-Jordan on the augmented matrix [A | B] with A square (n = a.size()).
// On success the right block holds A^{-1} B; returns false if A is singular.
bool solve_in_place(ScalarMatrix& augmented);
CycloScalar determinant(ScalarMatrix a);

} // namespace gradla
