#pragma once

#include "gradla/scalars.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gradla {

inline constexpr int kMaxRank = 8;

// Element of Z_{m1} x ... x Z_{mk}; residues are kept reduced.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(const std::vector<int>& moduli, const std::vector<int>& residues);

    int rank() const { return rank_; }
    int operator[](int i) const { return r_[i]; }
    int modulus(int i) const { return m_[i]; }
    std::vector<int> residues() const { return {r_.begin(), r_.begin() + rank_}; }
    bool is_zero() const;

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-(const GroupElement& o) const;
    GroupElement operator-() const;
    GroupElement times(long k) const;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.rank_ == b.rank_ && a.r_ == b.r_; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.r_ < b.r_; }

    std::string to_string() const;

private:
    void check_same(const GroupElement& o) const;
    int rank_ = 0;
    std::array<int, kMaxRank> r_{};
    std::array<int, kMaxRank> m_{};
};

class GradingGroup {
public:
    GradingGroup() = default;
    explicit GradingGroup(std::vector<int> moduli);

    const std::vector<int>& moduli() const { return moduli_; }
    int rank() const { return (int)moduli_.size(); }
    long order() const;

    GroupElement zero() const;
    GroupElement element(const std::vector<int>& residues) const;
    GroupElement generator(int i) const;
    // lexicographic enumeration, first coordinate most significant
    std::vector<GroupElement> elements() const;
    long index_of(const GroupElement& x) const;
    GroupElement element_at(long index) const;
    // the subgroup generated by gens, sorted lexicographically
    std::vector<GroupElement> subgroup_generated(const std::vector<GroupElement>& gens) const;
    bool contains(const GroupElement& x) const;

    friend bool operator==(const GradingGroup& a, const GradingGroup& b) { return a.moduli_ == b.moduli_; }
    friend bool operator!=(const GradingGroup& a, const GradingGroup& b) { return !(a == b); }

private:
    std::vector<int> moduli_;
};

// f(x, y) = zeta_N^{x^T E y}, E an integer k x k exponent matrix taken mod N.
class BiadditiveMap {
public:
    BiadditiveMap() = default;
    BiadditiveMap(GradingGroup group, int root_order, std::vector<std::vector<int>> exponents);

    const GradingGroup& group() const { return group_; }
    int root_order() const { return n_; }
    const std::vector<std::vector<int>>& exponents() const { return e_; }

    // exponent of zeta_N in f(x, y), in [0, N)
    int exponent(const GroupElement& x, const GroupElement& y) const;
    CycloScalar operator()(const GroupElement& x, const GroupElement& y) const;
    // value as an element of Q(zeta_n)
    CycloScalar value_in(const GroupElement& x, const GroupElement& y, int n) const;

    // same map, exponents rescaled to a root order that is a multiple of N
    std::vector<std::vector<int>> exponents_at(int n) const;

    bool same_values(const BiadditiveMap& o) const;
    bool same_values_on(const BiadditiveMap& o, const std::vector<GroupElement>& subset) const;

private:
    GradingGroup group_;
    int n_ = 1;
    std::vector<std::vector<int>> e_;
};

class Bicharacter : public BiadditiveMap {
public:
    using BiadditiveMap::BiadditiveMap;
};

class Multiplier : public BiadditiveMap {
public:
    using BiadditiveMap::BiadditiveMap;
    static Multiplier trivial(const GradingGroup& g);
};

// Checks f(x,y) f(y,x) = 1 for all x, y (exhaustively).
bool is_commutation_factor(const Bicharacter& lambda);
// Throws InvalidCommutationFactor unless lambda is a commutation factor.
void require_commutation_factor(const Bicharacter& lambda);

// 0 if lambda(x,x) = 1, 1 if lambda(x,x) = -1
int parity(const Bicharacter& lambda, const GroupElement& x);
bool is_purely_even(const Bicharacter& lambda, const std::vector<GroupElement>& subset);

// lambda^sigma(x,y) = lambda(x,y) sigma(x,y) sigma(y,x)^{-1}
Bicharacter lambda_twist(const Bicharacter& lambda, const Multiplier& sigma);
// lambda^sigma(x,y) = (-1)^{phi(x) phi(y)} for all x, y (or for x, y in the subset)
bool is_ns_multiplier(const Bicharacter& lambda, const Multiplier& sigma);
bool is_ns_multiplier_on(const Bicharacter& lambda, const Multiplier& sigma, const std::vector<GroupElement>& subset);

Multiplier solve_ns_multiplier(const Bicharacter& lambda);
// All NS-multipliers for 2-torsion groups with root order 2.
std::vector<Multiplier> enumerate_ns_multipliers(const Bicharacter& lambda);
// Same, keeping one representative per distinct restriction to the subgroup `support`.
std::vector<Multiplier> enumerate_ns_multipliers(const Bicharacter& lambda, const std::vector<GroupElement>& support);

Multiplier inverse(const Multiplier& sigma);
Multiplier product(const Multiplier& a, const Multiplier& b);

Bicharacter trivial_bicharacter(const GradingGroup& g);
// (-1)^{x.y} on (Z_2)^k
Bicharacter standard_sign(const GradingGroup& g);
// Z_2 with lambda(1,1) = -1
Bicharacter super_sign();

} // namespace gradla
