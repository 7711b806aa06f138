#pragma once

#include "gradla/grading.hpp"
#include "gradla/scalars.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gradla {

struct Term {
    int k;
    CycloScalar c;
};

// Everything needed to build a finite-dimensional graded algebra from structure constants.
struct AlgebraSpec {
    GradingGroup group;
    Bicharacter lambda;
    int root_order = 1;
    std::vector<std::string> labels;
    std::vector<GroupElement> degrees;
    // table[i * dim + j] = e_i e_j
    std::vector<std::vector<Term>> table;
};

class AlgebraElement;

class GradedAlgebra {
public:
    struct Impl;

    GradedAlgebra() = default;

    const GradingGroup& group() const;
    const Bicharacter& lambda() const;
    int root_order() const;
    int dim() const;
    const std::string& label(int i) const;
    const GroupElement& degree(int i) const;
    int unit_index() const;
    int index_of(const std::string& label) const;
    const std::vector<Term>& product(int i, int j) const;
    const std::vector<int>& basis_of_degree(const GroupElement& x) const;
    // distinct basis degrees, sorted
    const std::vector<GroupElement>& support_degrees() const;
    const std::vector<GroupElement>& support_subgroup() const;
    AlgebraSpec spec() const;

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement basis(int i) const;
    AlgebraElement basis(const std::string& label) const;
    AlgebraElement scalar(const CycloScalar& c) const;

    const Impl* id() const { return impl_.get(); }
    bool valid() const { return impl_ != nullptr; }
    // identical structure (degrees, labels, root order, lambda values, table)
    bool structurally_equal(const GradedAlgebra& o) const;

    friend GradedAlgebra make_algebra(AlgebraSpec spec);
    friend GradedAlgebra make_algebra_unchecked(AlgebraSpec spec);

private:
    std::shared_ptr<const Impl> impl_;
};

// Validates degree additivity, unit, associativity and lambda-commutativity.
GradedAlgebra make_algebra(AlgebraSpec spec);
// For structures that are valid by construction (twists, tensor products).
GradedAlgebra make_algebra_unchecked(AlgebraSpec spec);

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(GradedAlgebra alg, std::vector<std::pair<int, CycloScalar>> terms);

    const GradedAlgebra& algebra() const { return alg_; }
    const std::vector<std::pair<int, CycloScalar>>& terms() const { return t_; }
    CycloScalar coefficient(int i) const;
    bool is_zero() const { return t_.empty(); }
    bool is_one() const;

    // nullopt when inhomogeneous; the zero element reports degree 0
    std::optional<GroupElement> homogeneous_degree() const;
    // throws InhomogeneousScalar
    GroupElement degree() const;
    std::vector<std::pair<GroupElement, AlgebraElement>> components() const;
    AlgebraElement component(const GroupElement& x) const;

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const CycloScalar& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(AlgebraElement a, const CycloScalar& c) { return a *= c; }
    friend AlgebraElement operator*(const CycloScalar& c, AlgebraElement a) { return a *= c; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    // same coefficient vector viewed in another algebra with the same basis
    AlgebraElement rebind(const GradedAlgebra& target) const;

    std::string to_string() const;

private:
    GradedAlgebra alg_;
    std::vector<std::pair<int, CycloScalar>> t_; // sorted, nonzero
};

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a);

void require_same_algebra(const GradedAlgebra& a, const GradedAlgebra& b);

// Left-regular representation: column j holds the coordinates of a e_j.
ScalarMatrix left_regular(const AlgebraElement& a);

AlgebraElement invert_element(const AlgebraElement& a);
std::optional<AlgebraElement> try_invert_element(const AlgebraElement& a);

// A homogeneous unit of degree x, if the search finds one.
std::optional<AlgebraElement> find_homogeneous_unit(const GradedAlgebra& a, const GroupElement& x);
std::vector<GroupElement> unit_degrees(const GradedAlgebra& a);

struct Admissibility {
    std::vector<int> permutation;    // nu_i - mu_{pi(i)} carries a unit
    std::vector<AlgebraElement> units; // units[i] has degree nu_i - mu_{pi(i)}
};
// Lexicographically least admissible permutation, if any.
std::optional<Admissibility> degree_admissible(const GradedAlgebra& a, const std::vector<GroupElement>& mu,
                                               const std::vector<GroupElement>& nu);

// Structure constants multiplied by sigma(deg e_i, deg e_j); lambda becomes lambda^sigma.
GradedAlgebra twist(const GradedAlgebra& a, const Multiplier& sigma);

struct TensorProduct {
    GradedAlgebra algebra, left, right;
    AlgebraElement embed_left(const AlgebraElement& a) const;
    AlgebraElement embed_right(const AlgebraElement& b) const;
    // inverse of embed_left on its image; throws InvalidParams outside it
    AlgebraElement project_left(const AlgebraElement& x) const;
};

// (a1 (x) b1)(a2 (x) b2) = lambda(deg b1, deg a2) a1 a2 (x) b1 b2
TensorProduct graded_tensor(const GradedAlgebra& a, const GradedAlgebra& b);

} // namespace gradla
