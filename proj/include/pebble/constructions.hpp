#ifndef PEBBLE_CONSTRUCTIONS_HPP
#define PEBBLE_CONSTRUCTIONS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "distribution.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace pebble {

// The t-solvable witness behind the pi*_t(K_n) formula: 2q+2r pebbles on one
// vertex and 2q on the rest; in the r = n case, 2q+1 on one vertex and 2q+2
// on the rest.
inline Distribution kn_optimal_distribution(std::int64_t n, std::int64_t t,
                                            const GraphLimits& limits = {}) {
    if (n < 1 || t < 1) throw invalid_parameter("kn_optimal_distribution requires n, t >= 1");
    auto g = complete_graph(static_cast<int>(n), limits);
    std::int64_t q = t / (n + 1);
    std::int64_t r = t % (n + 1);
    std::vector<std::int64_t> counts(n);
    if (r < n) {
        counts.assign(n, 2 * q);
        counts[0] = 2 * q + 2 * r;
    } else {
        counts.assign(n, 2 * q + 2);
        counts[0] = 2 * q + 1;
    }
    return Distribution(g, std::move(counts));
}

enum class C5C5Kind { A1, A2, A4, B };

// A_1: 4 on (v0,v0), 2 each on (v2,v2) and (v3,v3).
// A_2: 4 on each of those three vertices.
// A_4: 4 on each (v_i, v_{2i mod 5});  B = (1/4) A_4.
inline Distribution c5c5_distribution(C5C5Kind which, GraphPtr g = nullptr,
                                      const GraphLimits& limits = {}) {
    if (!g) {
        auto c5 = cycle_graph(5, limits);
        g = cartesian_product(c5, c5, limits);
    }
    if (!g->is_product() || g->left->n != 5 || g->right->n != 5)
        throw invalid_argument_error("c5c5_distribution requires a C5 x C5 graph");
    std::vector<std::int64_t> counts(25, 0);
    auto at = [&](int i, int j) -> std::int64_t& { return counts[g->product_index(i, j)]; };
    switch (which) {
        case C5C5Kind::A1:
            at(0, 0) = 4;
            at(2, 2) = 2;
            at(3, 3) = 2;
            break;
        case C5C5Kind::A2:
            at(0, 0) = at(2, 2) = at(3, 3) = 4;
            break;
        case C5C5Kind::A4:
            for (int i = 0; i < 5; ++i) at(i, (2 * i) % 5) = 4;
            break;
        case C5C5Kind::B:
            for (int i = 0; i < 5; ++i) at(i, (2 * i) % 5) = 1;
            break;
    }
    return Distribution(g, std::move(counts));
}

// Delta((v,w)) = family(d(v))(w) on G x G'; d(v) = 0 means the empty
// distribution.
inline Distribution delta_composition(
    const Distribution& d, const std::function<Distribution(std::int64_t)>& family,
    const GraphPtr& product) {
    if (!product->is_product() || product->left != d.graph())
        throw invalid_argument_error("delta_composition product graph does not match d");
    std::vector<std::int64_t> counts(product->n, 0);
    std::map<std::int64_t, Distribution> cache;
    for (int v = 0; v < d.graph()->n; ++v) {
        std::int64_t r = d[v];
        if (r == 0) continue;
        auto it = cache.find(r);
        if (it == cache.end()) {
            Distribution member = family(r);
            if (member.graph() != product->right)
                throw invalid_argument_error("family member lives on the wrong graph");
            it = cache.emplace(r, std::move(member)).first;
        }
        for (int w = 0; w < product->right->n; ++w)
            counts[product->product_index(v, w)] = it->second[w];
    }
    return Distribution(product, std::move(counts));
}

// F on C5^4: the A_1-shaped composition of A_0/A_2/A_4 blocks, 44 pebbles.
inline Distribution f_distribution(GraphPtr g4 = nullptr, const GraphLimits& limits = {}) {
    if (!g4) {
        auto c5 = cycle_graph(5, limits);
        auto c5c5 = cartesian_product(c5, c5, limits);
        g4 = cartesian_product(c5c5, c5c5, limits);
    }
    if (!g4->is_product())
        throw invalid_argument_error("f_distribution requires (C5 x C5) x (C5 x C5)");
    auto a1 = c5c5_distribution(C5C5Kind::A1, g4->left);
    auto family = [&](std::int64_t r) {
        switch (r) {
            case 2: return c5c5_distribution(C5C5Kind::A2, g4->right);
            case 4: return c5c5_distribution(C5C5Kind::A4, g4->right);
            default: throw invalid_argument_error("f_distribution: unexpected block value");
        }
    };
    return delta_composition(a1, family, g4);
}

// Iterate D -> B.D m times; hypothesis: every count of the base is a multiple
// of four.  Result lives on C5^{2m} x G and keeps the multiple-of-four
// property, with size 5^m |base|.
inline Distribution b_tower(int m, const Distribution& base, const GraphLimits& limits = {}) {
    if (m < 0) throw invalid_parameter("b_tower requires m >= 0");
    for (auto c : base.counts())
        if (c % 4 != 0)
            throw invalid_argument_error("b_tower base must have every count a multiple of 4");
    Distribution cur = base;
    auto c5 = cycle_graph(5, limits);
    auto c5c5 = cartesian_product(c5, c5, limits);
    auto b = c5c5_distribution(C5C5Kind::B, c5c5);
    for (int i = 0; i < m; ++i) {
        auto prod = cartesian_product(c5c5, cur.graph(), limits);
        cur = product_distribution(b, cur, prod);
    }
    return cur;
}

// 2^d k pebbles on every vertex of K_{n_1} x ... x K_{n_d}; solvable at level
// k * prod(n_i + 1).
struct UniformCompleteProduct {
    Distribution distribution;
    std::int64_t claimed_t = 0;
};

inline UniformCompleteProduct uniform_complete_product(std::int64_t k,
                                                       const std::vector<std::int64_t>& ns,
                                                       const GraphLimits& limits = {}) {
    if (k < 1) throw invalid_parameter("uniform_complete_product requires k >= 1");
    GraphPtr g = complete_graph(1, limits);
    bool first = true;
    for (auto n : ns) {
        auto kn = complete_graph(static_cast<int>(n), limits);
        g = first ? kn : cartesian_product(g, kn, limits);
        first = false;
    }
    int d = static_cast<int>(ns.size());
    std::int64_t per_vertex = k << d;
    if (d > 0 && per_vertex / k != (std::int64_t{1} << d))
        throw resource_limit("uniform_complete_product overflows");
    std::int64_t t = k;
    for (auto n : ns) t *= n + 1;
    return {Distribution(g, std::vector<std::int64_t>(g->n, per_vertex)), t};
}

// Antipodal distributions on Q^d: 2^k / 2^{k-1} on the two all-equal
// bitstrings (even d), 2^k on both (odd d).
inline Distribution antipodal_hypercube(int d, const GraphLimits& limits = {}) {
    if (d < 1) throw invalid_parameter("antipodal_hypercube requires d >= 1");
    auto g = hypercube(d, limits);
    std::vector<std::int64_t> counts(g->n, 0);
    int k = d / 2;
    if (d % 2 == 0) {
        counts[0] = std::int64_t{1} << k;
        counts[g->n - 1] = std::int64_t{1} << (k - 1);
    } else {
        counts[0] = counts[g->n - 1] = std::int64_t{1} << k;
    }
    return Distribution(g, std::move(counts));
}

// The K_2 family D_r: r-solvable pairs of total size ceil(4r/3).
struct SplitFamily {
    std::int64_t r = 0;
    std::pair<std::int64_t, std::int64_t> pair{0, 0};
};

inline SplitFamily split_family(std::int64_t r) {
    if (r < 0) throw invalid_parameter("split_family requires r >= 0");
    std::int64_t k = r / 3;
    switch (r % 3) {
        case 0: return {r, {2 * k, 2 * k}};
        case 1: return {r, {2 * k + 2, 2 * k}};
        default: return {r, {2 * k + 2, 2 * k + 1}};
    }
}

inline Distribution split_family_distribution(std::int64_t r, const GraphLimits& limits = {}) {
    auto fam = split_family(r);
    return Distribution(complete_graph(2, limits), {fam.pair.first, fam.pair.second});
}

// Lift a t-solvable distribution on G to G x K_2 by replacing each count r
// with the pair D_r on the new coordinate.
inline Distribution split_once(const Distribution& d, const GraphLimits& limits = {}) {
    auto prod = cartesian_product(d.graph(), complete_graph(2, limits), limits);
    std::vector<std::int64_t> counts(prod->n, 0);
    for (int v = 0; v < d.graph()->n; ++v) {
        auto fam = split_family(d[v]);
        counts[prod->product_index(v, 0)] = fam.pair.first;
        counts[prod->product_index(v, 1)] = fam.pair.second;
    }
    return Distribution(prod, std::move(counts));
}

// Antipodal distribution on Q^{2k+1} split m times, landing on (a relabeled)
// Q^{2k+m+1}.  The size bound (4/3)^m 2^{k+1} + 2^{m+1} - 2 (4/3)^m is
// checked exactly.
inline Distribution split_tower(int k, int m, const GraphLimits& limits = {}) {
    if (k < 0 || m < 0) throw invalid_parameter("split_tower requires k, m >= 0");
    Distribution cur = antipodal_hypercube(2 * k + 1, limits);
    for (int i = 0; i < m; ++i) cur = split_once(cur, limits);
    Rational ft = Rational(4, 3);
    Rational bound(0);
    {
        Rational p(1);
        for (int i = 0; i < m; ++i) p *= ft;
        bound = p * Rational(BigInt(1) << (k + 1)) + Rational(BigInt(1) << (m + 1)) - Rational(2) * p;
    }
    if (Rational(BigInt(cur.size())) > bound)
        throw std::logic_error("split_tower size exceeds its closed-form bound");
    return cur;
}

struct WgmParameters {
    int k = 0;
    int m = 0;
    bool clamped = false; // k reduced to keep m nonnegative at tiny d
};

// k = ceil( (log2 1.5 / log2 4.5) (d-1) ), m = d-1-2k, decided by exact
// integer comparison of (9/2)^k against (3/2)^{d-1}.
inline WgmParameters wgm_parameters(int d) {
    if (d < 1) throw invalid_parameter("wgm_parameters requires d >= 1");
    using boost::multiprecision::pow;
    int e = d - 1;
    int k = 0;
    // smallest k with 9^k 2^e >= 3^e 2^k
    BigInt rhs = pow(BigInt(3), e);
    while (pow(BigInt(9), k) * pow(BigInt(2), e) < rhs * pow(BigInt(2), k)) ++k;
    WgmParameters out;
    out.k = k;
    while (e - 2 * out.k < 0) {
        --out.k;
        out.clamped = true;
    }
    out.m = e - 2 * out.k;
    return out;
}

// ---------------------------------------------------------------------------
// Registry: constructions addressable by name + integer parameters.

struct NamedConstruction {
    std::string name;
    std::map<std::string, std::int64_t> params;
    Distribution output;
    std::int64_t claimed_t = 0; // 0 = building block with no direct claim
    std::optional<std::int64_t> claimed_size;
};

inline std::vector<std::string> construction_names() {
    return {"kn-optimal", "A1", "A2", "A4", "B", "F", "b-tower", "uniform-complete-product",
            "antipodal", "split-family", "split-tower"};
}

inline NamedConstruction build_construction(const std::string& name,
                                            std::map<std::string, std::int64_t> params,
                                            const GraphLimits& limits = {}) {
    auto need = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw invalid_parameter("construction '" + name + "' requires parameter " + key);
        return it->second;
    };
    if (name == "kn-optimal") {
        auto n = need("n"), t = need("t");
        return {name, params, kn_optimal_distribution(n, t, limits), t,
                pi_t_star_complete_formula(n, t)};
    }
    if (name == "A1" || name == "A2" || name == "A4" || name == "B") {
        C5C5Kind kind = name == "A1"   ? C5C5Kind::A1
                        : name == "A2" ? C5C5Kind::A2
                        : name == "A4" ? C5C5Kind::A4
                                       : C5C5Kind::B;
        std::int64_t t = name == "A1" ? 1 : name == "A2" ? 2 : name == "A4" ? 4 : 0;
        std::int64_t size = name == "A1" ? 8 : name == "A2" ? 12 : name == "A4" ? 20 : 5;
        return {name, params, c5c5_distribution(kind, nullptr, limits), t, size};
    }
    if (name == "F") return {name, params, f_distribution(nullptr, limits), 1, 44};
    if (name == "b-tower") {
        auto m = need("m");
        auto c5 = cycle_graph(5, limits);
        auto base = Distribution::zero(c5).with_count(0, 4);
        std::int64_t size = 4;
        for (int i = 0; i < m; ++i) size *= 5;
        return {name, params, b_tower(static_cast<int>(m), base, limits), 1, size};
    }
    if (name == "uniform-complete-product") {
        auto k = need("k");
        std::vector<std::int64_t> ns;
        for (int i = 1; params.count("n" + std::to_string(i)); ++i)
            ns.push_back(params["n" + std::to_string(i)]);
        auto built = uniform_complete_product(k, ns, limits);
        return {name, params, built.distribution, built.claimed_t, built.distribution.size()};
    }
    if (name == "antipodal") {
        auto d = need("d");
        auto out = antipodal_hypercube(static_cast<int>(d), limits);
        return {name, params, out, 1, out.size()};
    }
    if (name == "split-family") {
        auto r = need("r");
        return {name, params, split_family_distribution(r, limits), r, (4 * r + 2) / 3};
    }
    if (name == "split-tower") {
        auto k = need("k"), m = need("m");
        auto out = split_tower(static_cast<int>(k), static_cast<int>(m), limits);
        return {name, params, out, 1, out.size()};
    }
    throw invalid_parameter("unknown construction: " + name);
}

} // namespace pebble

#endif
