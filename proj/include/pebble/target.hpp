#ifndef PEBBLE_TARGET_HPP
#define PEBBLE_TARGET_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "distribution.hpp"

namespace pebble {

// A set of target distributions: S_t(G), an explicit list, or a lazy product
// of two target sets on the factors of a product graph.
class TargetSet {
public:
    static TargetSet single_vertex(GraphPtr graph, std::int64_t t) {
        if (t < 1) throw invalid_parameter("S_t requires t >= 1");
        TargetSet s;
        s.graph_ = std::move(graph);
        s.t_ = t;
        return s;
    }

    static TargetSet explicit_list(std::vector<Distribution> members) {
        if (members.empty()) throw invalid_argument_error("explicit target set must be nonempty");
        TargetSet s;
        s.graph_ = members.front().graph();
        for (const auto& m : members)
            if (m.graph() != s.graph_)
                throw invalid_argument_error("target distributions live on different graphs");
        s.members_ = std::move(members);
        return s;
    }

    // Pairs (a, b) are materialized one at a time during enumeration.
    static TargetSet product(TargetSet a, TargetSet b, GraphPtr product_graph) {
        if (!product_graph->is_product() || product_graph->left != a.graph_ ||
            product_graph->right != b.graph_)
            throw invalid_argument_error("product graph does not match the factor target sets");
        TargetSet s;
        s.graph_ = std::move(product_graph);
        s.factors_ = std::make_shared<std::pair<TargetSet, TargetSet>>(std::move(a), std::move(b));
        return s;
    }

    const GraphPtr& graph() const { return graph_; }

    // Visit every member; the visitor returns false to stop early.
    // Returns false iff the visitor stopped the enumeration.
    bool for_each(const std::function<bool(const Distribution&)>& visit) const {
        if (factors_) {
            const auto& [a, b] = *factors_;
            return a.for_each([&](const Distribution& da) {
                return b.for_each([&](const Distribution& db) {
                    return visit(product_distribution(da, db, graph_));
                });
            });
        }
        if (t_ > 0) {
            auto zero = Distribution::zero(graph_);
            for (int v = 0; v < graph_->n; ++v)
                if (!visit(zero.with_count(v, t_))) return false;
            return true;
        }
        for (const auto& m : members_)
            if (!visit(m)) return false;
        return true;
    }

    bool is_single_vertex_set() const { return t_ > 0; }
    std::int64_t t() const { return t_; }

private:
    TargetSet() = default;
    GraphPtr graph_;
    std::int64_t t_ = 0;                         // > 0 for S_t(G)
    std::vector<Distribution> members_;          // explicit list
    std::shared_ptr<std::pair<TargetSet, TargetSet>> factors_; // lazy product
};

} // namespace pebble

#endif
