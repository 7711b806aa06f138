#pragma once

#include "gradla/gmatrix.hpp"
#include "gradla/permutation.hpp"

#include <functional>
#include <vector>

namespace gradla {

// NS-multipliers used for sweeps: the enumeration over the algebra's support subgroup
// when the group is 2-torsion, otherwise just the solved one.
std::vector<Multiplier> ns_multipliers(const GradedAlgebra& a);
// The multiplier gdet0 and gber0 use internally (first of ns_multipliers).
Multiplier canonical_multiplier(const GradedAlgebra& a);

// sum_pi sgn(pi) Y_{0,pi(0)} ... Y_{n-1,pi(n-1)}, products taken in row order in Y's algebra
AlgebraElement leibniz_row_order(const GradedMatrix& y);
// Throws NonCommutingEntries unless all nonzero entries commute pairwise.
void require_commuting_entries(const GradedMatrix& y);

// Degree-zero graded determinant.
AlgebraElement gdet0(const GradedMatrix& x);
// Ordering formula: each term multiplied along a valid ordering of pi's cycles.
AlgebraElement gdet0_leibniz(const GradedMatrix& x);
AlgebraElement gdet0_leibniz(const GradedMatrix& x, const std::function<Ordering(const Permutation&)>& choose);
// Gdet_sigma for arbitrary (possibly inhomogeneous) square X with even entry components.
AlgebraElement gdet_sigma(const GradedMatrix& x, const Multiplier& sigma);
// det over A^0 of diag(t_i) X diag(t_i)^{-1}; needs a homogeneous unit in every degree nu_i.
AlgebraElement gdet0_via_crossed(const GradedMatrix& x);

} // namespace gradla
