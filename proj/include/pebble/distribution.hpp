#ifndef PEBBLE_DISTRIBUTION_HPP
#define PEBBLE_DISTRIBUTION_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace pebble {

// Removing 2*multiplicity pebbles from `from` places `multiplicity` pebbles
// on the adjacent vertex `to`.
struct PebblingMove {
    int from = 0;
    int to = 0;
    std::int64_t multiplicity = 1;

    bool operator==(const PebblingMove&) const = default;
};

using MoveSequence = std::vector<PebblingMove>;

// Nonnegative pebble count per vertex of a fixed host graph.
class Distribution {
public:
    Distribution() = default;
    Distribution(GraphPtr graph, std::vector<std::int64_t> counts)
        : graph_(std::move(graph)), counts_(std::move(counts)) {
        if (!graph_) throw invalid_argument_error("distribution requires a host graph");
        if (static_cast<int>(counts_.size()) != graph_->n)
            throw invalid_argument_error("count vector does not match vertex count");
        for (auto c : counts_)
            if (c < 0) throw invalid_argument_error("pebble counts must be nonnegative");
    }

    static Distribution zero(GraphPtr graph) {
        int n = graph->n;
        return Distribution(std::move(graph), std::vector<std::int64_t>(n, 0));
    }

    const GraphPtr& graph() const { return graph_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::int64_t operator[](int v) const { return counts_[v]; }

    std::int64_t size() const {
        std::int64_t s = 0;
        for (auto c : counts_) s += c;
        return s;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int v = 0; v < graph_->n; ++v)
            if (counts_[v] > 0) s.push_back(v);
        return s;
    }

    bool contains(const Distribution& other) const {
        require_same_graph(other);
        for (int v = 0; v < graph_->n; ++v)
            if (other.counts_[v] > counts_[v]) return false;
        return true;
    }

    bool operator==(const Distribution& other) const {
        return graph_ == other.graph_ && counts_ == other.counts_;
    }

    Distribution with_count(int v, std::int64_t c) const {
        auto counts = counts_;
        counts[v] = c;
        return Distribution(graph_, std::move(counts));
    }

    void require_same_graph(const Distribution& other) const {
        if (graph_ != other.graph_)
            throw invalid_argument_error("distributions live on different graphs");
    }

private:
    GraphPtr graph_;
    std::vector<std::int64_t> counts_;
};

inline Distribution apply_move(const Distribution& d, const PebblingMove& m) {
    const auto& g = *d.graph();
    if (m.from < 0 || m.to < 0 || m.from >= g.n || m.to >= g.n)
        throw illegal_move("move endpoint out of range");
    if (!g.adjacent(m.from, m.to)) throw illegal_move("move endpoints are not adjacent");
    if (m.multiplicity < 1) throw illegal_move("move multiplicity must be positive");
    if (d[m.from] < 2 * m.multiplicity)
        throw illegal_move("insufficient pebbles on source vertex");
    auto counts = d.counts();
    counts[m.from] -= 2 * m.multiplicity;
    counts[m.to] += m.multiplicity;
    return Distribution(d.graph(), std::move(counts));
}

inline Distribution replay(const Distribution& start, const MoveSequence& moves) {
    Distribution cur = start;
    for (const auto& m : moves) cur = apply_move(cur, m);
    return cur;
}

inline Distribution scalar_multiple(std::int64_t s, const Distribution& d) {
    if (s < 1) throw invalid_parameter("scalar must be positive");
    auto counts = d.counts();
    for (auto& c : counts) {
        if (c != 0 && c > std::numeric_limits<std::int64_t>::max() / s)
            throw resource_limit("scalar multiple overflows 64-bit counts");
        c *= s;
    }
    return Distribution(d.graph(), std::move(counts));
}

// (D.E)((x,y)) = D(x) E(y) on the already-constructed product graph.
inline Distribution product_distribution(const Distribution& d, const Distribution& e,
                                         const GraphPtr& product) {
    if (!product->is_product() || product->left != d.graph() || product->right != e.graph())
        throw invalid_argument_error("product graph does not match the factor distributions");
    std::vector<std::int64_t> counts(product->n, 0);
    for (int x = 0; x < d.graph()->n; ++x)
        for (int y = 0; y < e.graph()->n; ++y)
            counts[product->product_index(x, y)] = d[x] * e[y];
    return Distribution(product, std::move(counts));
}

// f_S: push a distribution on G x G' down to G, counting pebbles over S twice.
inline Distribution project_f(const Distribution& d, const std::vector<int>& s) {
    const auto& g = *d.graph();
    if (!g.is_product()) throw invalid_argument_error("project_f requires a product graph");
    if (s.empty()) throw invalid_argument_error("projection subset must be nonempty");
    std::vector<bool> in_s(g.right->n, false);
    for (int v : s) {
        if (v < 0 || v >= g.right->n)
            throw invalid_argument_error("projection subset vertex out of range");
        in_s[v] = true;
    }
    std::vector<std::int64_t> counts(g.left->n, 0);
    for (int u = 0; u < g.left->n; ++u)
        for (int v = 0; v < g.right->n; ++v)
            counts[u] += (in_s[v] ? 2 : 1) * d[g.product_index(u, v)];
    return Distribution(g.left, std::move(counts));
}

// Merge the last two K_{n+1} columns of a distribution on G x K_{n+1} into one,
// yielding a distribution on G x K_n.  Size is preserved.
inline Distribution collapse_last_pair(const Distribution& d, const GraphLimits& limits = {}) {
    const auto& g = *d.graph();
    if (!g.is_product() || g.right->family != "K:" + std::to_string(g.right->n) || g.right->n < 2)
        throw invalid_argument_error("collapse_last_pair requires a G x K_{n+1} product with n+1 >= 2");
    auto smaller = cartesian_product(g.left, complete_graph(g.right->n - 1, limits), limits);
    std::vector<std::int64_t> counts(smaller->n, 0);
    for (int u = 0; u < g.left->n; ++u) {
        for (int w = 0; w + 1 < g.right->n; ++w)
            counts[smaller->product_index(u, w)] = d[g.product_index(u, w)];
        counts[smaller->product_index(u, g.right->n - 2)] += d[g.product_index(u, g.right->n - 1)];
    }
    return Distribution(smaller, std::move(counts));
}

} // namespace pebble

#endif
