#include "gradla/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace gradla {

int sign(const Permutation& pi)
{
    int s = 1;
    for (const auto& c : cycles(pi))
        if (c.size() % 2 == 0)
            s = -s;
    return s;
}

Permutation identity_permutation(int n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    Permutation r(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

Permutation inverse(const Permutation& pi)
{
    Permutation r(pi.size());
    for (size_t i = 0; i < pi.size(); ++i)
        r[pi[i]] = (int)i;
    return r;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    Permutation p = identity_permutation(n);
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<int>> cycles(const Permutation& pi)
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(pi.size(), 0);
    for (size_t s = 0; s < pi.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> c;
        for (int i = (int)s; !seen[i]; i = pi[i]) {
            seen[i] = 1;
            c.push_back(i);
        }
        out.push_back(c);
    }
    return out;
}

Ordering canonical_ordering(const Permutation& pi)
{
    Ordering o;
    for (const auto& c : cycles(pi))
        o.insert(o.end(), c.begin(), c.end());
    return o;
}

bool is_valid_ordering(const Permutation& pi, const Ordering& order)
{
    size_t n = pi.size();
    if (order.size() != n)
        return false;
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || (size_t)v >= n || seen[v])
            return false;
        seen[v] = 1;
    }
    size_t p = 0;
    while (p < n) {
        int start = order[p];
        while (pi[order[p]] != start) {
            if (p + 1 >= n || order[p + 1] != pi[order[p]])
                return false;
            ++p;
        }
        ++p;
    }
    return true;
}

Ordering random_ordering(const Permutation& pi, std::mt19937_64& rng)
{
    auto cs = cycles(pi);
    std::shuffle(cs.begin(), cs.end(), rng);
    Ordering o;
    for (auto& c : cs) {
        std::uniform_int_distribution<size_t> start(0, c.size() - 1);
        std::rotate(c.begin(), c.begin() + start(rng), c.end());
        o.insert(o.end(), c.begin(), c.end());
    }
    return o;
}

} // namespace gradla
