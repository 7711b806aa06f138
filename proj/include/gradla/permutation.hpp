#pragma once

#include <random>
#include <vector>

namespace gradla {

// pi[i] is the image of i (0-based).
using Permutation = std::vector<int>;
// A sequence visiting every index once, cycle by cycle along pi.
using Ordering = std::vector<int>;

int sign(const Permutation& pi);
Permutation identity_permutation(int n);
// (a o b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& pi);
// all of S_n in lexicographic order
std::vector<Permutation> all_permutations(int n);
// cycles sorted by least element, each starting at its least element
std::vector<std::vector<int>> cycles(const Permutation& pi);

// e.g. (14)(253) gives (1,4,2,5,3)
Ordering canonical_ordering(const Permutation& pi);
bool is_valid_ordering(const Permutation& pi, const Ordering& order);
// cycles in random order, each started at a random point
Ordering random_ordering(const Permutation& pi, std::mt19937_64& rng);

} // namespace gradla
