#ifndef PEBBLE_SOLVER_HPP
#define PEBBLE_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "distribution.hpp"
#include "enumeration.hpp"
#include "formulas.hpp"
#include "lp.hpp"
#include "target.hpp"

namespace pebble {

struct SolverBudget {
    std::uint64_t max_nodes = 100'000'000;
    std::int64_t max_ms = 60'000;
};

struct SearchStats {
    std::uint64_t nodes_explored = 0;
    std::uint64_t states_memoized = 0;

    void merge(const SearchStats& other) {
        nodes_explored += other.nodes_explored;
        states_memoized += other.states_memoized;
    }
};

enum class Verdict { solvable, unsolvable, resource_limit };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::solvable: return "solvable";
        case Verdict::unsolvable: return "unsolvable";
        default: return "resource-limit";
    }
}

// Lemma-style infeasibility certificate: |f_S(D)| < pi*_{2t}(G) on the left
// factor proves D is not t-solvable on the product.
struct ProjectionCertificate {
    std::vector<int> subset;            // S, as vertices of the right factor
    int failing_root = -1;              // vertex of the left factor that 2t pebbles cannot reach
    std::int64_t projected_size = 0;    // |f_S(D)| (after lone-pebble removal, if any)
    std::int64_t required = 0;          // pi*_{2t}(left factor)
    std::optional<int> removed_lone_pebble; // right-factor copy whose single pebble was dropped
};

struct SolveReport {
    Verdict verdict = Verdict::unsolvable;
    std::optional<MoveSequence> witness;
    SearchStats stats;
    std::optional<int> failing_root;
    std::optional<ProjectionCertificate> certificate;
};

namespace detail {

struct budget_exhausted {};

struct CountsHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

class BudgetClock {
public:
    explicit BudgetClock(const SolverBudget& budget, SearchStats& stats)
        : budget_(budget), stats_(stats),
          deadline_(std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.max_ms)) {}

    void tick() {
        if (++stats_.nodes_explored > budget_.max_nodes) throw budget_exhausted{};
        if ((stats_.nodes_explored & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > deadline_)
            throw budget_exhausted{};
    }

private:
    const SolverBudget& budget_;
    SearchStats& stats_;
    std::chrono::steady_clock::time_point deadline_;
};

// Depth-first search for "deliver t pebbles to root", memoizing failed count
// vectors.  Moves off the root are never useful for a single-root target and
// are not generated.
class DeliverySearch {
public:
    // toward_only restricts to distance-decreasing moves: complete enough to
    // find most witnesses cheaply, but its failures prove nothing.
    DeliverySearch(const Graph& g, int root, std::int64_t t,
                   const SolverBudget& budget, SearchStats& stats, bool toward_only = false)
        : g_(g), root_(root), t_(t), clock_(budget, stats), stats_(stats),
          toward_only_(toward_only) {
        ecc_ = g.eccentricity(root);
        weight_.resize(g.n);
        for (int u = 0; u < g.n; ++u) weight_[u] = std::int64_t{1} << (ecc_ - g.dist[u][root]);
        threshold_ = t << ecc_;
        // moves from u, nearest-to-root destinations first
        moves_by_src_.resize(g.n);
        for (int u = 0; u < g.n; ++u) {
            if (u == root) continue;
            auto nb = g.adj[u];
            std::sort(nb.begin(), nb.end(), [&](int a, int b) {
                if (g.dist[a][root] != g.dist[b][root]) return g.dist[a][root] < g.dist[b][root];
                return a < b;
            });
            moves_by_src_[u] = std::move(nb);
        }
    }

    bool run(std::vector<std::int64_t> counts, MoveSequence& witness) {
        std::int64_t phi = 0;
        for (int u = 0; u < g_.n; ++u) phi += counts[u] * weight_[u];
        witness.clear();
        bool ok = dfs(counts, phi, witness);
        if (ok) compress(witness);
        return ok;
    }

private:
    bool dfs(std::vector<std::int64_t>& counts, std::int64_t phi, MoveSequence& witness) {
        if (counts[root_] >= t_) return true;
        if (phi < threshold_) return false;
        clock_.tick();
        if (failed_.contains(counts)) return false;

        // distance-decreasing moves first across all sources
        int passes = toward_only_ ? 1 : 2;
        for (int pass = 0; pass < passes; ++pass) {
            for (int u = 0; u < g_.n; ++u) {
                if (u == root_ || counts[u] < 2) continue;
                for (int v : moves_by_src_[u]) {
                    bool toward = g_.dist[v][root_] < g_.dist[u][root_];
                    if (toward != (pass == 0)) continue;
                    std::int64_t phi2 = phi - 2 * weight_[u] + weight_[v];
                    if (phi2 < threshold_) continue;
                    counts[u] -= 2;
                    counts[v] += 1;
                    witness.push_back({u, v, 1});
                    if (dfs(counts, phi2, witness)) return true;
                    witness.pop_back();
                    counts[u] += 2;
                    counts[v] -= 1;
                }
            }
        }
        failed_.insert(counts);
        ++stats_.states_memoized;
        return false;
    }

    static void compress(MoveSequence& moves) {
        MoveSequence out;
        for (const auto& m : moves) {
            if (!out.empty() && out.back().from == m.from && out.back().to == m.to)
                out.back().multiplicity += m.multiplicity;
            else
                out.push_back(m);
        }
        moves = std::move(out);
    }

    const Graph& g_;
    int root_;
    std::int64_t t_;
    BudgetClock clock_;
    SearchStats& stats_;
    int ecc_ = 0;
    std::int64_t threshold_ = 0;
    std::vector<std::int64_t> weight_;
    std::vector<std::vector<int>> moves_by_src_;
    bool toward_only_ = false;
    std::unordered_set<std::vector<std::int64_t>, CountsHash> failed_;
};

// Reachability search toward an arbitrary target distribution.  Prunes on the
// per-root potential of the target, which every intermediate state must still
// dominate.
class ReachSearch {
public:
    ReachSearch(const Graph& g, const Distribution& target,
                const SolverBudget& budget, SearchStats& stats)
        : g_(g), target_(target.counts()), clock_(budget, stats), stats_(stats) {
        diam_ = g.diameter();
        weight_.assign(g.n, std::vector<std::int64_t>(g.n));
        threshold_.assign(g.n, 0);
        for (int r = 0; r < g.n; ++r) {
            for (int u = 0; u < g.n; ++u)
                weight_[r][u] = std::int64_t{1} << (diam_ - g.dist[u][r]);
            for (int u = 0; u < g.n; ++u) threshold_[r] += target_[u] * weight_[r][u];
        }
        target_size_ = 0;
        for (auto c : target_) target_size_ += c;
    }

    bool run(std::vector<std::int64_t> counts, MoveSequence& witness) {
        std::vector<std::int64_t> phi(g_.n, 0);
        for (int r = 0; r < g_.n; ++r)
            for (int u = 0; u < g_.n; ++u) phi[r] += counts[u] * weight_[r][u];
        witness.clear();
        return dfs(counts, phi, witness);
    }

private:
    bool contains_target(const std::vector<std::int64_t>& counts) const {
        for (int u = 0; u < g_.n; ++u)
            if (counts[u] < target_[u]) return false;
        return true;
    }

    bool dfs(std::vector<std::int64_t>& counts, std::vector<std::int64_t>& phi,
             MoveSequence& witness) {
        if (contains_target(counts)) return true;
        clock_.tick();
        if (failed_.contains(counts)) return false;

        for (int u = 0; u < g_.n; ++u) {
            if (counts[u] < 2) continue;
            for (int v : g_.adj[u]) {
                bool feasible = true;
                for (int r = 0; r < g_.n && feasible; ++r)
                    if (phi[r] - 2 * weight_[r][u] + weight_[r][v] < threshold_[r])
                        feasible = false;
                if (!feasible) continue;
                counts[u] -= 2;
                counts[v] += 1;
                for (int r = 0; r < g_.n; ++r) phi[r] += weight_[r][v] - 2 * weight_[r][u];
                witness.push_back({u, v, 1});
                if (dfs(counts, phi, witness)) return true;
                witness.pop_back();
                for (int r = 0; r < g_.n; ++r) phi[r] -= weight_[r][v] - 2 * weight_[r][u];
                counts[u] += 2;
                counts[v] -= 1;
            }
        }
        failed_.insert(counts);
        ++stats_.states_memoized;
        return false;
    }

    const Graph& g_;
    std::vector<std::int64_t> target_;
    BudgetClock clock_;
    SearchStats& stats_;
    int diam_ = 0;
    std::int64_t target_size_ = 0;
    std::vector<std::vector<std::int64_t>> weight_;
    std::vector<std::int64_t> threshold_;
    std::unordered_set<std::vector<std::int64_t>, CountsHash> failed_;
};

} // namespace detail

// Scaled potential floor(sum_u d(u) 2^{-dist(u,root)}), the hard ceiling on
// pebbles deliverable to root.
inline std::int64_t potential_floor(const Distribution& d, int root) {
    const auto& g = *d.graph();
    int ecc = g.eccentricity(root);
    std::int64_t num = 0;
    for (int u = 0; u < g.n; ++u)
        num += d[u] << (ecc - g.dist[u][root]);
    return num >> ecc;
}

// Decide whether t pebbles can be delivered to root, with a witness.
inline SolveReport can_deliver(const Distribution& d, int root, std::int64_t t,
                               const SolverBudget& budget = {}) {
    if (t < 1) throw invalid_parameter("can_deliver requires t >= 1");
    SolveReport report;
    if (potential_floor(d, root) < t) {
        report.verdict = Verdict::unsolvable;
        return report;
    }
    MoveSequence witness;
    // Cheap first pass with distance-decreasing moves only: any witness it
    // finds is sound, and its failures are ignored.
    try {
        SolverBudget greedy{std::min<std::uint64_t>(budget.max_nodes / 4 + 1, 250'000),
                            std::max<std::int64_t>(budget.max_ms / 4, 1)};
        detail::DeliverySearch fast(*d.graph(), root, t, greedy, report.stats, true);
        if (fast.run(d.counts(), witness)) {
            report.verdict = Verdict::solvable;
            report.witness = std::move(witness);
            return report;
        }
    } catch (const detail::budget_exhausted&) {
    }
    detail::DeliverySearch search(*d.graph(), root, t, budget, report.stats);
    try {
        if (search.run(d.counts(), witness)) {
            report.verdict = Verdict::solvable;
            report.witness = std::move(witness);
        }
    } catch (const detail::budget_exhausted&) {
        report.verdict = Verdict::resource_limit;
    }
    return report;
}

struct MaxDeliverResult {
    std::int64_t value = 0;
    MoveSequence witness;
    Verdict verdict = Verdict::solvable; // resource_limit when the search was cut short
    std::int64_t upper_bound = 0;        // certified ceiling (potential or clean failures)
    SearchStats stats;
};

// Maximum t deliverable to root, by iterative deepening downward from the
// potential ceiling.
inline MaxDeliverResult max_deliverable(const Distribution& d, int root,
                                        const SolverBudget& budget = {}) {
    MaxDeliverResult result;
    result.upper_bound = potential_floor(d, root);
    for (std::int64_t t = result.upper_bound; t >= 1; --t) {
        auto rep = can_deliver(d, root, t, budget);
        result.stats.merge(rep.stats);
        if (rep.verdict == Verdict::solvable) {
            result.value = t;
            result.witness = std::move(*rep.witness);
            return result;
        }
        if (rep.verdict == Verdict::resource_limit) {
            result.verdict = Verdict::resource_limit;
            result.upper_bound = t; // everything above t failed cleanly
            result.value = 0;
            return result;
        }
        result.upper_bound = t - 1;
    }
    result.value = 0;
    return result;
}

// Is a distribution that contains d2 reachable from d1?
inline SolveReport is_reachable(const Distribution& d1, const Distribution& d2,
                                const SolverBudget& budget = {}) {
    d1.require_same_graph(d2);
    SolveReport report;
    if (d1.size() < d2.size()) {
        report.verdict = Verdict::unsolvable;
        return report;
    }
    detail::ReachSearch search(*d1.graph(), d2, budget, report.stats);
    MoveSequence witness;
    try {
        if (search.run(d1.counts(), witness)) {
            report.verdict = Verdict::solvable;
            report.witness = std::move(witness);
        }
    } catch (const detail::budget_exhausted&) {
        report.verdict = Verdict::resource_limit;
    }
    return report;
}

struct TSolvReport {
    Verdict verdict = Verdict::solvable;
    std::optional<int> failing_root;
    std::vector<std::pair<int, MoveSequence>> witnesses; // per checked root
    std::vector<int> checked_roots;
    SearchStats stats;
    std::optional<ProjectionCertificate> certificate;
};

// Roots equivalent under automorphisms that fix d; checking one per class
// suffices for t-solvability.
inline std::vector<int> solvability_root_representatives(const Distribution& d) {
    const auto& g = *d.graph();
    std::vector<Permutation> stabilizing;
    for (const auto& p : g.automorphisms) {
        bool fixes = true;
        for (int v = 0; v < g.n && fixes; ++v)
            if (d[p[v]] != d[v]) fixes = false;
        if (fixes) stabilizing.push_back(p);
    }
    std::vector<int> reps;
    for (const auto& orbit : vertex_orbits_of(stabilizing, g.n)) reps.push_back(orbit.front());
    std::sort(reps.begin(), reps.end());
    return reps;
}

inline TSolvReport is_t_solvable(const Distribution& d, std::int64_t t,
                                 const SolverBudget& budget = {}) {
    if (t < 1) throw invalid_parameter("is_t_solvable requires t >= 1");
    TSolvReport report;
    report.checked_roots = solvability_root_representatives(d);
    for (int root : report.checked_roots) {
        auto rep = can_deliver(d, root, t, budget);
        report.stats.merge(rep.stats);
        if (rep.verdict == Verdict::solvable) {
            report.witnesses.emplace_back(root, std::move(*rep.witness));
            continue;
        }
        report.verdict = rep.verdict;
        report.failing_root = root;
        return report;
    }
    return report;
}

struct SetSolvReport {
    Verdict verdict = Verdict::solvable;
    std::optional<std::size_t> failing_member;
    std::vector<MoveSequence> witnesses; // one per member, in enumeration order
    SearchStats stats;
};

inline SetSolvReport is_set_solvable(const Distribution& d, const TargetSet& targets,
                                     const SolverBudget& budget = {}) {
    if (d.graph() != targets.graph())
        throw invalid_argument_error("target set lives on a different graph");
    SetSolvReport report;
    std::size_t index = 0;
    targets.for_each([&](const Distribution& member) {
        auto rep = is_reachable(d, member, budget);
        report.stats.merge(rep.stats);
        if (rep.verdict == Verdict::solvable) {
            report.witnesses.push_back(std::move(*rep.witness));
            ++index;
            return true;
        }
        report.verdict = rep.verdict;
        report.failing_member = index;
        return false;
    });
    return report;
}

struct OptimalNumberResult {
    std::int64_t value = 0;
    std::optional<Distribution> witness_distribution;
    Verdict verdict = Verdict::solvable;
    std::int64_t lower_bound = 0; // certified even under resource_limit
    std::int64_t upper_bound = -1;
    std::string lower_bound_source;
    SearchStats stats;
};

// Exhaustive optimal t-pebbling number: ascending size, canonical weak
// compositions only, first t-solvable hit wins (and is the lexicographically
// least solvable canonical distribution of that size).
inline OptimalNumberResult optimal_t_pebbling(const GraphPtr& g, std::int64_t t,
                                              const SolverBudget& budget = {},
                                              bool use_lp_floor = true) {
    if (t < 1) throw invalid_parameter("optimal_t_pebbling requires t >= 1");
    OptimalNumberResult result;
    if (use_lp_floor) {
        result.lower_bound = std::max<std::int64_t>(1, fractional_lower_bound(g, t));
        result.lower_bound_source = "fractional-LP floor";
    } else {
        result.lower_bound = 1;
        result.lower_bound_source = "exhaustion";
    }

    auto group = generate_group(g->automorphisms, g->n, 100000);
    auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.max_ms);

    for (std::int64_t size = result.lower_bound;; ++size) {
        bool found = false;
        bool exhausted = weak_compositions(size, g->n, [&](const std::vector<std::int64_t>& counts) {
            if (!is_canonical_under(counts, group)) return true;
            if (std::chrono::steady_clock::now() > deadline ||
                result.stats.nodes_explored > budget.max_nodes) return false;
            Distribution cand(g, counts);
            auto rep = is_t_solvable(cand, t, budget);
            result.stats.merge(rep.stats);
            if (rep.verdict == Verdict::resource_limit) return false;
            if (rep.verdict == Verdict::solvable) {
                // re-verify the witnesses by independent replay
                for (const auto& [root, moves] : rep.witnesses)
                    if (replay(cand, moves)[root] < t)
                        throw std::logic_error("witness replay does not deliver t pebbles");
                result.value = size;
                result.witness_distribution = cand;
                found = true;
                return false;
            }
            return true;
        });
        if (found) {
            result.upper_bound = result.value;
            return result;
        }
        if (!exhausted) { // budget interrupted this size level
            result.verdict = Verdict::resource_limit;
            result.lower_bound = size; // all smaller sizes exhausted
            return result;
        }
        result.lower_bound = size + 1;
    }
}

// Search for a Lemma-style projection certificate that d is not t-solvable on
// a product graph: some singleton S (optionally after removing a lone pebble
// from another copy) with |f_S(d)| < pi*_{2t}(left factor).
inline std::optional<ProjectionCertificate> projection_infeasibility_certificate(
    const Distribution& d, std::int64_t t, const SolverBudget& budget = {}) {
    const auto& g = *d.graph();
    if (!g.is_product())
        throw invalid_argument_error("projection certificate requires a product graph");

    // pi*_{2t} of the left factor: closed form for complete graphs, otherwise
    // recursive exhaustion.
    std::int64_t required;
    if (g.left->family.rfind("K:", 0) == 0) {
        required = pi_t_star_complete_formula(g.left->n, 2 * t);
    } else {
        auto sub = optimal_t_pebbling(g.left, 2 * t, budget);
        if (sub.verdict != Verdict::solvable) return std::nullopt; // not applicable
        required = sub.value;
    }

    auto check = [&](const Distribution& dd, int copy,
                     std::optional<int> removed) -> std::optional<ProjectionCertificate> {
        auto f = project_f(dd, {copy});
        if (f.size() >= required) return std::nullopt;
        ProjectionCertificate cert;
        cert.subset = {copy};
        cert.projected_size = f.size();
        cert.required = required;
        cert.removed_lone_pebble = removed;
        for (int x = 0; x < g.left->n; ++x)
            if (can_deliver(f, x, 2 * t, budget).verdict == Verdict::unsolvable) {
                cert.failing_root = x;
                break;
            }
        return cert;
    };

    // copy sizes p_i
    std::vector<std::pair<std::int64_t, int>> copies;
    for (int i = 0; i < g.right->n; ++i) {
        std::int64_t p = 0;
        for (int u = 0; u < g.left->n; ++u) p += d[g.product_index(u, i)];
        copies.emplace_back(p, i);
    }
    std::sort(copies.begin(), copies.end());

    for (int i = 0; i < g.right->n; ++i)
        if (auto cert = check(d, i, std::nullopt)) return cert;

    // lone-pebble variant: p_1 = p_2 = 1, drop the pebble over the second copy
    if (copies.size() >= 2 && copies[0].first == 1 && copies[1].first == 1) {
        int lone_copy = copies[1].second;
        auto counts = d.counts();
        for (int u = 0; u < g.left->n; ++u)
            if (counts[g.product_index(u, lone_copy)] == 1) {
                counts[g.product_index(u, lone_copy)] = 0;
                break;
            }
        Distribution stripped(d.graph(), std::move(counts));
        if (auto cert = check(stripped, copies[0].second, lone_copy)) return cert;
    }
    return std::nullopt;
}

} // namespace pebble

#endif
