#ifndef PEBBLE_GRAPH_HPP
#define PEBBLE_GRAPH_HPP

#include <algorithm>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "perm.hpp"

namespace pebble {

struct GraphLimits {
    int max_vertices = 10000;   // protects the O(n^2) distance matrix
    int max_hypercube_dim = 20;
};

class Graph;
using GraphPtr = std::shared_ptr<const Graph>;

// Immutable undirected graph with precomputed all-pairs hop distances and
// generator-supplied automorphisms.  Vertices are dense indices 0..n-1;
// labels are display metadata only.
class Graph {
public:
    int n = 0;
    std::vector<std::vector<int>> adj;     // sorted neighbor lists
    std::vector<std::string> labels;
    std::vector<std::vector<int>> dist;
    std::vector<Permutation> automorphisms; // generator list, possibly empty
    std::string family;                     // family string when generator-built, e.g. "K:4"

    // Set when built by cartesian_product: vertex (x,y) has index x*right->n + y.
    GraphPtr left, right;

    static GraphPtr make(int n, std::vector<std::pair<int, int>> edges,
                         std::vector<std::string> labels = {},
                         std::vector<Permutation> autos = {},
                         std::string family = {},
                         const GraphLimits& limits = {}) {
        if (n <= 0) throw invalid_parameter("graph must have at least one vertex");
        if (n > limits.max_vertices)
            throw resource_limit("graph exceeds vertex cap (" + std::to_string(limits.max_vertices) + ")");
        auto g = std::make_shared<Graph>();
        g->n = n;
        g->adj.assign(n, {});
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw invalid_argument_error("edge endpoint out of range");
            if (u == v) throw invalid_argument_error("loops are not allowed");
            g->adj[u].push_back(v);
            g->adj[v].push_back(u);
        }
        for (auto& nb : g->adj) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        if (labels.empty()) {
            for (int v = 0; v < n; ++v) g->labels.push_back("v" + std::to_string(v));
        } else {
            if (static_cast<int>(labels.size()) != n)
                throw invalid_argument_error("label count does not match vertex count");
            g->labels = std::move(labels);
        }
        g->family = std::move(family);
        g->compute_distances();
        g->automorphisms = std::move(autos);
        g->check_automorphisms();
        return g;
    }

    bool adjacent(int u, int v) const {
        const auto& nb = adj[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int diameter() const {
        int d = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) d = std::max(d, dist[u][v]);
        return d;
    }

    int eccentricity(int r) const {
        int e = 0;
        for (int v = 0; v < n; ++v) e = std::max(e, dist[r][v]);
        return e;
    }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& nb : adj) m += nb.size();
        return m / 2;
    }

    bool is_product() const { return left != nullptr && right != nullptr; }
    int product_index(int x, int y) const { return x * right->n + y; }
    int left_coord(int v) const { return v / right->n; }
    int right_coord(int v) const { return v % right->n; }

    // Partition of vertices into orbits under the attached generators.
    // An empty generator list yields singleton orbits.
    std::vector<std::vector<int>> vertex_orbits() const {
        return vertex_orbits_of(automorphisms, n);
    }

private:
    void compute_distances() {
        const int INF = -1;
        dist.assign(n, std::vector<int>(n, INF));
        std::deque<int> queue;
        for (int s = 0; s < n; ++s) {
            auto& ds = dist[s];
            ds[s] = 0;
            queue.push_back(s);
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int v : adj[u])
                    if (ds[v] == INF) {
                        ds[v] = ds[u] + 1;
                        queue.push_back(v);
                    }
            }
            for (int v = 0; v < n; ++v)
                if (ds[v] == INF) throw invalid_argument_error("graph must be connected");
        }
    }

    void check_automorphisms() const {
        for (const auto& p : automorphisms) {
            if (static_cast<int>(p.size()) != n)
                throw invalid_argument_error("automorphism has wrong length");
            std::vector<bool> hit(n, false);
            for (int v : p) {
                if (v < 0 || v >= n || hit[v])
                    throw invalid_argument_error("automorphism is not a permutation");
                hit[v] = true;
            }
            for (int u = 0; u < n; ++u)
                for (int v : adj[u])
                    if (!adjacent(p[u], p[v]))
                        throw invalid_argument_error("listed permutation does not preserve adjacency");
        }
    }
};

inline GraphPtr complete_graph(int n, const GraphLimits& limits = {}) {
    if (n < 1) throw invalid_parameter("complete_graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    std::vector<Permutation> autos;
    for (int i = 0; i + 1 < n; ++i) {
        auto p = identity_permutation(n);
        std::swap(p[i], p[i + 1]);
        autos.push_back(std::move(p));
    }
    return Graph::make(n, std::move(edges), {}, std::move(autos), "K:" + std::to_string(n), limits);
}

inline GraphPtr cycle_graph(int n, const GraphLimits& limits = {}) {
    if (n < 3) throw invalid_parameter("cycle_graph requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    Permutation rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return Graph::make(n, std::move(edges), {}, {rot, refl}, "C:" + std::to_string(n), limits);
}

inline GraphPtr hypercube(int d, const GraphLimits& limits = {}) {
    if (d < 0) throw invalid_parameter("hypercube requires d >= 0");
    if (d > limits.max_hypercube_dim)
        throw resource_limit("hypercube dimension exceeds cap (" +
                             std::to_string(limits.max_hypercube_dim) + ")");
    int n = 1 << d;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) {
        std::string bits(std::max(d, 1), '0');
        if (d == 0) bits = "";
        for (int b = 0; b < d; ++b) {
            if (v & (1 << b)) bits[d - 1 - b] = '1';
            if (v < (v ^ (1 << b))) edges.emplace_back(v, v ^ (1 << b));
        }
        labels[v] = d == 0 ? "e" : bits;
    }
    std::vector<Permutation> autos;
    for (int b = 0; b + 1 < d; ++b) {
        // swap adjacent bit coordinates
        Permutation p(n);
        for (int v = 0; v < n; ++v) {
            int x = v & ~((1 << b) | (1 << (b + 1)));
            if (v & (1 << b)) x |= 1 << (b + 1);
            if (v & (1 << (b + 1))) x |= 1 << b;
            p[v] = x;
        }
        autos.push_back(std::move(p));
    }
    if (d >= 1) {
        Permutation flip(n);
        for (int v = 0; v < n; ++v) flip[v] = v ^ 1;
        autos.push_back(std::move(flip));
    }
    return Graph::make(n, std::move(edges), std::move(labels), std::move(autos),
                       "Q:" + std::to_string(d), limits);
}

inline GraphPtr cartesian_product(const GraphPtr& g, const GraphPtr& h, const GraphLimits& limits = {}) {
    if (!g || !h) throw invalid_argument_error("cartesian_product requires two graphs");
    long long nn = static_cast<long long>(g->n) * h->n;
    if (nn > limits.max_vertices)
        throw resource_limit("product exceeds vertex cap (" + std::to_string(limits.max_vertices) + ")");
    int n = static_cast<int>(nn);
    auto idx = [&](int x, int y) { return x * h->n + y; };
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(n);
    for (int x = 0; x < g->n; ++x)
        for (int y = 0; y < h->n; ++y) {
            labels[idx(x, y)] = "(" + g->labels[x] + "," + h->labels[y] + ")";
            for (int x2 : g->adj[x])
                if (x2 > x) edges.emplace_back(idx(x, y), idx(x2, y));
            for (int y2 : h->adj[y])
                if (y2 > y) edges.emplace_back(idx(x, y), idx(x, y2));
        }
    std::vector<Permutation> autos;
    for (const auto& a : g->automorphisms) {
        Permutation p(n);
        for (int x = 0; x < g->n; ++x)
            for (int y = 0; y < h->n; ++y) p[idx(x, y)] = idx(a[x], y);
        autos.push_back(std::move(p));
    }
    for (const auto& a : h->automorphisms) {
        Permutation p(n);
        for (int x = 0; x < g->n; ++x)
            for (int y = 0; y < h->n; ++y) p[idx(x, y)] = idx(x, a[y]);
        autos.push_back(std::move(p));
    }
    std::string fam;
    if (!g->family.empty() && !h->family.empty()) {
        auto strip = [](const std::string& f) {
            return f.rfind("prod:", 0) == 0 ? f.substr(5) : f;
        };
        fam = "prod:" + strip(g->family) + "," + strip(h->family);
    }
    auto result = Graph::make(n, std::move(edges), std::move(labels), std::move(autos), fam, limits);
    auto mut = std::const_pointer_cast<Graph>(result);
    mut->left = g;
    mut->right = h;
    return result;
}

} // namespace pebble

#endif
