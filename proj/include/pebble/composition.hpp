#ifndef PEBBLE_COMPOSITION_HPP
#define PEBBLE_COMPOSITION_HPP

#include <vector>

#include "constructions.hpp"
#include "distribution.hpp"
#include "solver.hpp"

namespace pebble {

// Lift a move sequence on the left factor into the slice {right = h} of a
// product, and symmetrically for the right factor inside the block {left = v}.
inline MoveSequence lift_left(const MoveSequence& moves, const Graph& product, int h) {
    if (!product.is_product() || h < 0 || h >= product.right->n)
        throw invalid_argument_error("lift_left needs a product graph and a right vertex");
    MoveSequence out;
    out.reserve(moves.size());
    for (const auto& m : moves)
        out.push_back({product.product_index(m.from, h), product.product_index(m.to, h),
                       m.multiplicity});
    return out;
}

inline MoveSequence lift_right(const MoveSequence& moves, const Graph& product, int v) {
    if (!product.is_product() || v < 0 || v >= product.left->n)
        throw invalid_argument_error("lift_right needs a product graph and a left vertex");
    MoveSequence out;
    out.reserve(moves.size());
    for (const auto& m : moves)
        out.push_back({product.product_index(v, m.from), product.product_index(v, m.to),
                       m.multiplicity});
    return out;
}

struct CompositionReport {
    Verdict verdict = Verdict::solvable;
    std::optional<int> failing_root;
    std::vector<std::pair<int, MoveSequence>> witnesses; // per root, replay-verified
    SearchStats stats;
};

namespace detail {

// Delivery witnesses for one distribution to every root of its graph.
inline std::vector<MoveSequence> all_root_witnesses(const Distribution& d, std::int64_t t,
                                                    const SolverBudget& budget,
                                                    SearchStats& stats) {
    std::vector<MoveSequence> out(d.graph()->n);
    for (int r = 0; r < d.graph()->n; ++r) {
        auto rep = can_deliver(d, r, t, budget);
        stats.merge(rep.stats);
        if (rep.verdict != Verdict::solvable)
            throw resource_limit("sub-witness search failed for a building block");
        out[r] = std::move(*rep.witness);
    }
    return out;
}

} // namespace detail

// 1-solvability of the 44-pebble distribution on (C5 x C5) x (C5 x C5), proved
// by assembling, for each target (g,h): per-block witnesses that stack the
// small pattern into the slice {right = h}, then that pattern's own witness
// toward g.  Every assembled sequence is replayed for an exact check.
inline CompositionReport verify_f_solvable(const Distribution& f,
                                           const SolverBudget& budget = {}) {
    auto product = f.graph();
    if (!product->is_product() || !product->left->is_product() ||
        !product->right->is_product())
        throw invalid_argument_error("verify_f_solvable requires (C5 x C5) x (C5 x C5)");
    auto a1 = c5c5_distribution(C5C5Kind::A1, product->left);
    auto a2 = c5c5_distribution(C5C5Kind::A2, product->right);
    auto a4 = c5c5_distribution(C5C5Kind::A4, product->right);

    CompositionReport report;
    auto w1 = detail::all_root_witnesses(a1, 1, budget, report.stats);
    auto w2 = detail::all_root_witnesses(a2, 2, budget, report.stats);
    auto w4 = detail::all_root_witnesses(a4, 4, budget, report.stats);

    for (int root = 0; root < product->n; ++root) {
        int g = root / product->right->n;
        int h = root % product->right->n;
        MoveSequence moves;
        for (int v : a1.support()) {
            const auto& block = a1[v] == 4 ? w4[h] : w2[h];
            auto lifted = lift_right(block, *product, v);
            moves.insert(moves.end(), lifted.begin(), lifted.end());
        }
        auto finish = lift_left(w1[g], *product, h);
        moves.insert(moves.end(), finish.begin(), finish.end());
        if (replay(f, moves)[root] < 1) {
            report.verdict = Verdict::unsolvable;
            report.failing_root = root;
            return report;
        }
        report.witnesses.emplace_back(root, std::move(moves));
    }
    return report;
}

// 1-solvability of the height-one tower on (C5 x C5) x C5: the slice
// {right = 0} carries four pebbles on each of the five diagonal vertices, so
// its 4-delivery witness puts four pebbles on (g, 0), and at most two further
// halvings walk one pebble along the cycle to (g, h).
inline CompositionReport verify_b_tower_solvable(const Distribution& bt,
                                                 const SolverBudget& budget = {}) {
    auto product = bt.graph();
    if (!product->is_product() || !product->left->is_product() || product->right->n != 5)
        throw invalid_argument_error("verify_b_tower_solvable requires (C5 x C5) x C5");
    auto a4 = c5c5_distribution(C5C5Kind::A4, product->left);
    for (int v = 0; v < product->left->n; ++v)
        if (bt[product->product_index(v, 0)] != a4[v])
            throw invalid_argument_error("slice {right = 0} does not carry the diagonal pattern");

    CompositionReport report;
    auto w4 = detail::all_root_witnesses(a4, 4, budget, report.stats);
    const auto& c5 = *product->right;

    for (int root = 0; root < product->n; ++root) {
        int g = root / c5.n;
        int h = root % c5.n;
        MoveSequence moves = lift_left(w4[g], *product, 0);
        int at = 0;
        std::int64_t carrying = 4;
        while (at != h) {
            int next = -1;
            for (int nb : c5.adj[at])
                if (c5.dist[nb][h] < c5.dist[at][h]) { next = nb; break; }
            moves.push_back({product->product_index(g, at), product->product_index(g, next),
                             carrying / 2});
            carrying /= 2;
            at = next;
        }
        if (replay(bt, moves)[root] < 1) {
            report.verdict = Verdict::unsolvable;
            report.failing_root = root;
            return report;
        }
        report.witnesses.emplace_back(root, std::move(moves));
    }
    return report;
}

} // namespace pebble

#endif
