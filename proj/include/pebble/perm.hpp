#ifndef PEBBLE_PERM_HPP
#define PEBBLE_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace pebble {

using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Permutation compose(const Permutation& a, const Permutation& b) {
    // (a*b)(x) = a(b(x))
    Permutation r(a.size());
    for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
    return r;
}

inline Permutation inverse(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
    return r;
}

// Closure of a generator set under composition, BFS from the identity.
// Stops and returns an incomplete (but composition-reachable) subset once
// `cap` elements have been produced; every returned element is a genuine
// group member either way.
inline std::vector<Permutation> generate_group(const std::vector<Permutation>& generators,
                                               int n, std::size_t cap = 500000) {
    std::set<Permutation> seen;
    std::vector<Permutation> frontier;
    seen.insert(identity_permutation(n));
    frontier.push_back(identity_permutation(n));
    std::size_t head = 0;
    while (head < frontier.size() && seen.size() < cap) {
        Permutation cur = frontier[head++];
        for (const auto& g : generators) {
            Permutation next = compose(g, cur);
            if (seen.insert(next).second) frontier.push_back(next);
            if (seen.size() >= cap) break;
        }
    }
    return {seen.begin(), seen.end()};
}

// Orbits of {0..n-1} under the group generated by `generators`.
// Union-find over generator images; no full group enumeration needed.
inline std::vector<std::vector<int>> vertex_orbits_of(const std::vector<Permutation>& generators, int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : generators)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(g[v]);
            if (a != b) parent[a] = b;
        }
    std::vector<std::vector<int>> buckets(n);
    for (int v = 0; v < n; ++v) buckets[find(v)].push_back(v);
    std::vector<std::vector<int>> orbits;
    for (auto& b : buckets)
        if (!b.empty()) orbits.push_back(std::move(b));
    return orbits;
}

} // namespace pebble

#endif
