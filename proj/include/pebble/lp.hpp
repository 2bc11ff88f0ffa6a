#ifndef PEBBLE_LP_HPP
#define PEBBLE_LP_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "distribution.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace pebble {

// Exact simplex (Bland's rule) for  min c.x  s.t.  A x >= b, x >= 0.
// Returns the optimum with a primal solution and a verified dual certificate.
struct SimplexResult {
    Rational value;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
};

inline SimplexResult simplex_min(const std::vector<std::vector<Rational>>& A,
                                 const std::vector<Rational>& b,
                                 const std::vector<Rational>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    const int cols = n + 2 * m; // x | surplus | artificial
    const int rhs = cols;

    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = Rational(-1);
        T[i][n + m + i] = Rational(1);
        T[i][rhs] = b[i]; // b >= 0 by construction here
        basis[i] = n + m + i;
    }

    std::vector<Rational> obj(cols + 1, Rational(0));
    auto recompute_obj = [&](const std::vector<Rational>& cost) {
        for (int j = 0; j <= cols; ++j) {
            Rational z(0);
            for (int i = 0; i < m; ++i) z += cost[basis[i]] * T[i][j];
            obj[j] = (j < cols ? cost[j] : Rational(0)) - z;
        }
    };

    auto pivot = [&](int prow, int pcol) {
        Rational inv = T[prow][pcol];
        for (int j = 0; j <= cols; ++j) T[prow][j] /= inv;
        for (int i = 0; i < m; ++i) {
            if (i == prow || T[i][pcol] == Rational(0)) continue;
            Rational f = T[i][pcol];
            for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[prow][j];
        }
        Rational f = obj[pcol];
        if (f != Rational(0))
            for (int j = 0; j <= cols; ++j) obj[j] -= f * T[prow][j];
        basis[prow] = pcol;
    };

    auto optimize = [&](bool allow_artificial) {
        for (;;) {
            int enter = -1;
            int limit = allow_artificial ? cols : n + m;
            for (int j = 0; j < limit; ++j)
                if (obj[j] < Rational(0)) {
                    enter = j;
                    break;
                }
            if (enter < 0) return;
            int leave = -1;
            Rational best(0);
            for (int i = 0; i < m; ++i) {
                if (T[i][enter] <= Rational(0)) continue;
                Rational ratio = T[i][rhs] / T[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw std::logic_error("LP is unbounded");
            pivot(leave, enter);
        }
    };

    // Phase 1: drive out the artificial basis.
    std::vector<Rational> cost1(cols, Rational(0));
    for (int i = 0; i < m; ++i) cost1[n + m + i] = Rational(1);
    recompute_obj(cost1);
    optimize(true);
    {
        Rational phase1(0);
        for (int i = 0; i < m; ++i)
            if (basis[i] >= n + m) phase1 += T[i][rhs];
        if (phase1 != Rational(0)) throw std::logic_error("LP is infeasible");
    }

    // Phase 2 on the real objective; artificial columns stay only as dual probes.
    std::vector<Rational> cost2(cols, Rational(0));
    for (int j = 0; j < n; ++j) cost2[j] = c[j];
    recompute_obj(cost2);
    optimize(false);

    SimplexResult result;
    result.primal.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) result.primal[basis[i]] = T[i][rhs];
    result.value = Rational(0);
    for (int j = 0; j < n; ++j) result.value += c[j] * result.primal[j];
    result.dual.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) result.dual[i] = -obj[n + m + i];

    // Exact certificate: primal feasible, dual feasible, objectives equal.
    for (int j = 0; j < n; ++j)
        if (result.primal[j] < Rational(0)) throw std::logic_error("negative primal value");
    for (int i = 0; i < m; ++i) {
        Rational row(0);
        for (int j = 0; j < n; ++j) row += A[i][j] * result.primal[j];
        if (row < b[i]) throw std::logic_error("primal constraint violated");
        if (result.dual[i] < Rational(0)) throw std::logic_error("negative dual value");
    }
    Rational dual_value(0);
    for (int i = 0; i < m; ++i) dual_value += b[i] * result.dual[i];
    for (int j = 0; j < n; ++j) {
        Rational col(0);
        for (int i = 0; i < m; ++i) col += A[i][j] * result.dual[i];
        if (col > c[j]) throw std::logic_error("dual constraint violated");
    }
    if (dual_value != result.value) throw std::logic_error("duality gap in exact simplex");
    return result;
}

// Optimal fractional pebbling: minimize total pebbles subject to, for every
// root r, sum_u x_u 2^{-dist(u,r)} >= 1.  The optimum equals pi-hat*(G).
struct LPSolution {
    Rational value;
    std::vector<Rational> distribution;
    std::vector<int> tight_vertices;
    std::vector<Rational> dual;
};

inline LPSolution fractional_optimal(const GraphPtr& g, bool symmetrize = false) {
    const int n = g->n;
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    for (int r = 0; r < n; ++r)
        for (int u = 0; u < n; ++u) A[r][u] = pow2_inverse(g->dist[u][r]);
    std::vector<Rational> b(n, Rational(1)), c(n, Rational(1));
    auto res = simplex_min(A, b, c);

    LPSolution sol;
    sol.value = res.value;
    sol.distribution = std::move(res.primal);
    sol.dual = std::move(res.dual);

    if (symmetrize && !g->automorphisms.empty()) {
        auto group = generate_group(g->automorphisms, n);
        std::vector<Rational> avg(n, Rational(0));
        for (const auto& p : group)
            for (int v = 0; v < n; ++v) avg[p[v]] += sol.distribution[v];
        Rational inv(1, BigInt(group.size()));
        for (auto& x : avg) x *= inv;
        sol.distribution = std::move(avg);
    }

    for (int r = 0; r < n; ++r) {
        Rational row(0);
        for (int u = 0; u < n; ++u) row += A[r][u] * sol.distribution[u];
        if (row == Rational(1)) sol.tight_vertices.push_back(r);
    }
    return sol;
}

// pi-hat*(K_n) = 2n / (n+1)
inline Rational fractional_optimal_formula_Kn(std::int64_t n) {
    if (n < 1) throw invalid_parameter("fractional_optimal_formula_Kn requires n >= 1");
    return Rational(2 * n, n + 1);
}

inline std::int64_t fractional_lower_bound_from_value(const Rational& pihat, std::int64_t t) {
    if (t < 1) throw invalid_parameter("fractional_lower_bound requires t >= 1");
    return to_int64(ceil_rational(pihat * Rational(t)));
}

// ceil(pi-hat*(g) * t), the search floor for the exact optimal-number search
inline std::int64_t fractional_lower_bound(const GraphPtr& g, std::int64_t t) {
    return fractional_lower_bound_from_value(fractional_optimal(g).value, t);
}

struct Theorem44Result {
    Distribution distribution;
    std::int64_t k = 0; // 2^diam * lcm of optimal-solution denominators
    std::int64_t q = 0;
    std::int64_t r = 0;
};

// Integer distribution kq * Dhat + r built from an optimal fractional
// distribution; t-solvable with size at most pi-hat* t + n(k-1).
inline Theorem44Result theorem44_distribution(const GraphPtr& g, std::int64_t t,
                                              const LPSolution* precomputed = nullptr) {
    if (t < 1) throw invalid_parameter("theorem44_distribution requires t >= 1");
    LPSolution local;
    const LPSolution& sol = precomputed ? *precomputed : (local = fractional_optimal(g), local);

    BigInt l = 1;
    for (const auto& x : sol.distribution)
        l = boost::multiprecision::lcm(l, x.denominator());
    int diam = g->diameter();
    if (diam > 40) throw resource_limit("diameter too large for theorem44 scaling");
    BigInt k_big = l << diam;
    if (k_big > (BigInt(1) << 60)) throw resource_limit("theorem44 scale factor overflows");
    std::int64_t k = to_int64(k_big);

    Theorem44Result out{Distribution::zero(g), k, t / k, t % k};
    std::vector<std::int64_t> counts(g->n);
    for (int v = 0; v < g->n; ++v) {
        Rational scaled = sol.distribution[v] * Rational(k_big * out.q);
        if (scaled.denominator() != 1)
            throw std::logic_error("kq * Dhat(v) must be an integer");
        counts[v] = to_int64(scaled.numerator()) + out.r;
    }
    out.distribution = Distribution(g, std::move(counts));
    return out;
}

// Theorem: pi-hat*(G x G') = pi-hat*(G) pi-hat*(G')
inline bool multiplicativity_check(const GraphPtr& g, const GraphPtr& h,
                                   const GraphLimits& limits = {}) {
    auto prod = cartesian_product(g, h, limits);
    return fractional_optimal(prod).value == fractional_optimal(g).value * fractional_optimal(h).value;
}

} // namespace pebble

#endif
