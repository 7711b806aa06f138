#pragma once

#include "gradla/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradla {

// Matrix over a graded algebra with row degrees mu and column degrees nu.
// It is homogeneous of degree x when entry (i,j) lies in A^{x - mu_i + nu_j}.
class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(GradedAlgebra alg, std::vector<GroupElement> row_degrees, std::vector<GroupElement> col_degrees);
    GradedMatrix(GradedAlgebra alg, std::vector<GroupElement> row_degrees, std::vector<GroupElement> col_degrees,
                 std::vector<AlgebraElement> entries);

    static GradedMatrix identity(const GradedAlgebra& alg, const std::vector<GroupElement>& nu);
    static GradedMatrix diagonal(const GradedAlgebra& alg, const std::vector<GroupElement>& nu,
                                 const std::vector<AlgebraElement>& diag);

    const GradedAlgebra& algebra() const { return alg_; }
    const std::vector<GroupElement>& row_degrees() const { return rows_; }
    const std::vector<GroupElement>& col_degrees() const { return cols_; }
    int nrows() const { return (int)rows_.size(); }
    int ncols() const { return (int)cols_.size(); }
    bool is_square() const { return rows_.size() == cols_.size() && rows_ == cols_; }

    const AlgebraElement& at(int i, int j) const { return e_[(size_t)i * cols_.size() + j]; }
    AlgebraElement& at(int i, int j) { return e_[(size_t)i * cols_.size() + j]; }

    // nullopt when inhomogeneous; the zero matrix reports degree 0
    std::optional<GroupElement> homogeneous_degree() const;
    bool is_homogeneous_of(const GroupElement& x) const;
    std::vector<std::pair<GroupElement, GradedMatrix>> components() const;
    GradedMatrix component(const GroupElement& x) const;
    bool is_zero() const;

    GradedMatrix operator-() const;
    GradedMatrix& operator+=(const GradedMatrix& o);
    GradedMatrix& operator-=(const GradedMatrix& o);
    friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
    friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }
    friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
    // multiplication by a field element (central)
    friend GradedMatrix operator*(GradedMatrix a, const CycloScalar& c);
    friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);
    friend bool operator!=(const GradedMatrix& a, const GradedMatrix& b) { return !(a == b); }

    GradedMatrix rebind(const GradedAlgebra& target) const;
    // same entries, new degree vectors
    GradedMatrix with_degrees(std::vector<GroupElement> rows, std::vector<GroupElement> cols) const;
    GradedMatrix block(int r0, int r1, int c0, int c1) const;

    std::string to_string() const;

private:
    GradedAlgebra alg_;
    std::vector<GroupElement> rows_, cols_;
    std::vector<AlgebraElement> e_;
};

std::ostream& operator<<(std::ostream& os, const GradedMatrix& m);

// (a.X)_ij = lambda(deg a, mu_i) a X_ij
GradedMatrix scalar_action(const AlgebraElement& a, const GradedMatrix& x);

// J_sigma into Mat over twist(A, sigma); the twisted algebra can be passed to avoid rebuilding it.
GradedMatrix j_sigma(const GradedMatrix& x, const Multiplier& sigma);
GradedMatrix j_sigma(const GradedMatrix& x, const Multiplier& sigma, const GradedAlgebra& twisted);
// Inverse of J_sigma: Y over twist(A, sigma) back to a matrix over `base`.
GradedMatrix j_sigma_inverse(const GradedMatrix& y, const Multiplier& sigma, const GradedAlgebra& base);

// Tr(X) = sum over components x, sum_i lambda(nu_i, x + nu_i) X_ii
AlgebraElement graded_trace(const GradedMatrix& x);
// Supertrace over an algebra whose lambda factors through parity: sum_i (-1)^{p_i (p_x + p_i)} Y_ii.
AlgebraElement supertrace(const GradedMatrix& y);
// str(J_sigma(X)) read back in A
AlgebraElement graded_trace_via_sigma(const GradedMatrix& x, const Multiplier& sigma);

GradedMatrix invert_matrix(const GradedMatrix& x);
std::optional<GradedMatrix> try_invert_matrix(const GradedMatrix& x);

// P(pi)_ij = delta_{i, pi(j)} t_i^{-1} t_j with t_i a unit of degree nu_i.
GradedMatrix permutation_matrix(const GradedAlgebra& alg, const std::vector<int>& pi, const std::vector<GroupElement>& nu,
                                const std::vector<AlgebraElement>& units);
// Units found with find_homogeneous_unit; throws MissingUnit.
GradedMatrix permutation_matrix(const GradedAlgebra& alg, const std::vector<int>& pi, const std::vector<GroupElement>& nu);

// P^{-1} X P
GradedMatrix change_basis(const GradedMatrix& x, const GradedMatrix& p);

// Shifts every row and column degree by pi (entries unchanged).
GradedMatrix shift_degrees(const GradedMatrix& x, const GroupElement& pi);

} // namespace gradla
