#pragma once

#include "gradla/gdet.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gradla {

struct SweepFailure {
    std::string digest, expected, got;
};

struct SweepReport {
    SweepReport() = default;
    explicit SweepReport(std::string name) : property(std::move(name)) {}
    std::string property;
    long instances = 0;
    std::vector<SweepFailure> failures;
    bool ok() const { return failures.empty(); }
    void check(bool good, const std::string& digest, const std::string& expected, const std::string& got);
};

// Classical Leibniz determinant; rejects entries that do not commute pairwise.
// With a generator, every monomial is multiplied in a shuffled order and compared with row order.
AlgebraElement leibniz_det_commutative(const GradedMatrix& y);
AlgebraElement leibniz_det_commutative(const GradedMatrix& y, std::mt19937_64& rng);

// q = a + bi + cj + dk  ->  [[a + b z, c + d z], [-c + d z, a - b z]] over Q(zeta_4)
ScalarMatrix quaternion_embedding(const GradedMatrix& x);
// a^2 + b^2 + c^2 + d^2
Rational quaternion_norm(const AlgebraElement& q);
// N(Gdet_sigma(X)) against det of the 2n x 2n complex embedding, once per sigma.
SweepReport dieudonne_norm_check(const GradedMatrix& x, const std::vector<Multiplier>& sigmas);

// A tensored with a crossed product on the subgroup H generated by its support and `extra`,
// so every degree of H carries the unit 1 (x) t_h. Needs H purely even.
struct UnitExtension {
    TensorProduct tensor;
    std::vector<GroupElement> subgroup;
    AlgebraElement unit(const GroupElement& h) const;
};
UnitExtension adjoin_units(const GradedAlgebra& a, const std::vector<GroupElement>& extra);

// Sum over row-degree components alpha and permutations pi of sgn(pi) Delta(D(alpha, pi)),
// with Delta evaluated by the heredity recursion in the unit extension and mapped back to A.
AlgebraElement gdet_via_row_decomposition(const GradedMatrix& x, const Multiplier& sigma);

// Random data: sparse integer coefficients in [-10, 10].
struct RandomSource {
    std::mt19937_64 rng;
    explicit RandomSource(std::uint64_t seed) : rng(seed) {}
    long coefficient();
    bool chance(double p);
    int below(int n);
    AlgebraElement element_of_degree(const GradedAlgebra& a, const GroupElement& x, double density = 0.7);
    AlgebraElement element(const GradedAlgebra& a, double density = 0.5);
    GradedMatrix homogeneous(const GradedAlgebra& a, const std::vector<GroupElement>& rows,
                             const std::vector<GroupElement>& cols, const GroupElement& x, double density = 0.75);
    GradedMatrix inhomogeneous(const GradedAlgebra& a, const std::vector<GroupElement>& rows,
                               const std::vector<GroupElement>& cols, double density = 0.5);
    std::optional<GradedMatrix> invertible(const GradedAlgebra& a, const std::vector<GroupElement>& nu,
                                           const GroupElement& x, int tries = 40);
    std::vector<GroupElement> degrees(const std::vector<GroupElement>& pool, int n);
};

std::string digest(const std::string& text);

} // namespace gradla
