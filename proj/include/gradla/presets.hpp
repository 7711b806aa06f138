#pragma once

#include "gradla/algebra.hpp"

#include <string>
#include <vector>

namespace gradla::presets {

// H graded by (Z_2)^3 with lambda = (-1)^{<x,y>}; i, j, k in degrees (0,1,1), (1,0,1), (1,1,0).
GradedAlgebra quaternions();

// Cl(p,q) graded by (Z_2)^{p+q+1}: e_i has degree std_i + (0,...,0,1); e_i^2 = +1 for i <= p, -1 after.
GradedAlgebra clifford(int p, int q);

// Q[e_1..e_n]/(e_i^2) graded by (Z_2)^n with e_i in degree std_i and lambda = (-1)^{<x,y>}.
GradedAlgebra dual_numbers(int n);

// Exterior algebra on n odd generators, Z_2-graded with the super sign.
GradedAlgebra grassmann(int n);

// K[Gamma] with trivial lambda.
GradedAlgebra group_algebra(const GradingGroup& g);

// Basis t_h (h in support), t_a t_b = sigma(a,b) t_{a+b}; needs sigma/sigma^T = lambda on the support.
GradedAlgebra crossed_product(const Bicharacter& lambda, const Multiplier& sigma, const std::vector<GroupElement>& support);
// Whole group, lambda := sigma / sigma^T.
GradedAlgebra crossed_product(const Multiplier& sigma);

// Z_n x Z_n graded matrix algebra: X^a Z^b with (a,b)(c,d) = omega^{bc} (a+c, b+d), omega = zeta_n.
GradedAlgebra clock_shift(int n);

// K[e]/(e^2) with e placed in a chosen degree of lambda's group.
GradedAlgebra odd_line(const Bicharacter& lambda, const GroupElement& degree);

// "quaternions", "clifford:1,3", "dual_numbers:2", "grassmann:2", "clock_shift:3", "group_algebra:2,2"
GradedAlgebra by_name(const std::string& spec);

} // namespace gradla::presets
