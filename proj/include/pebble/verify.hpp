#ifndef PEBBLE_VERIFY_HPP
#define PEBBLE_VERIFY_HPP

#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "composition.hpp"
#include "constructions.hpp"
#include "formulas.hpp"
#include "lp.hpp"
#include "solver.hpp"

namespace pebble {

enum class ItemStatus { pass, fail, skipped_resource };

inline const char* to_string(ItemStatus s) {
    switch (s) {
        case ItemStatus::pass: return "pass";
        case ItemStatus::fail: return "fail";
        default: return "skipped(resource)";
    }
}

struct VerificationItem {
    std::string claim_id;
    std::string anchor;   // claim family; exactly one per claim id
    std::string expected;
    std::string computed;
    ItemStatus status = ItemStatus::fail;
    std::int64_t runtime_ms = 0;
};

struct VerificationReport {
    std::vector<VerificationItem> items;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    std::string fingerprint;
};

struct VerifyOptions {
    std::string only;          // claim-id prefix filter
    SolverBudget budget{2'000'000, 30'000};
    int threads = 0;           // 0 = auto (hardware, capped by PEBBLEKIT_THREADS)
    int n_max = 5;             // complete-graph range for the formula-vs-oracle sweep
    int t_max = 10;
};

namespace detail {

// One claim: fills expected/computed and decides the status.
struct VerifyJob {
    std::string claim_id;
    std::string anchor;
    std::function<void(VerificationItem&)> run;
};

inline void item_equal(VerificationItem& item, const std::string& expected,
                       const std::string& computed) {
    item.expected = expected;
    item.computed = computed;
    item.status = expected == computed ? ItemStatus::pass : ItemStatus::fail;
}

template <typename T>
inline void item_equal_val(VerificationItem& item, const T& expected, const T& computed) {
    std::ostringstream e, c;
    e << expected;
    c << computed;
    item_equal(item, e.str(), c.str());
}

inline std::string describe(Verdict v) { return to_string(v); }

inline int worker_count(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("PEBBLEKIT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

} // namespace detail

// The reproduction suite: every quantitative claim as one deterministic item.
inline VerificationReport run_verification(const VerifyOptions& opt = {}) {
    using detail::VerifyJob;
    using detail::item_equal;
    using detail::item_equal_val;
    std::vector<VerifyJob> jobs;
    const SolverBudget budget = opt.budget;

    auto add = [&](std::string id, std::string anchor,
                   std::function<void(VerificationItem&)> fn) {
        if (!opt.only.empty() && id.rfind(opt.only, 0) != 0) return;
        jobs.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };

    // ---- formula vs exhaustive oracle on complete graphs -------------------
    for (int n = 1; n <= opt.n_max; ++n)
        for (int t = 1; t <= opt.t_max; ++t)
            add("thm3.2.n" + std::to_string(n) + ".t" + std::to_string(t), "thm3.2",
                [n, t, budget](VerificationItem& item) {
                    auto g = complete_graph(n);
                    auto res = optimal_t_pebbling(g, t, budget);
                    if (res.verdict != Verdict::solvable) throw resource_limit("search cut");
                    item_equal_val(item, pi_t_star_complete_formula(n, t), res.value);
                });

    // ---- the two small-product tables --------------------------------------
    struct TableRow {
        std::int64_t t;
        std::int64_t value;
        std::vector<std::int64_t> counts;
    };
    static const std::vector<TableRow> table1 = {
        {2, 4, {2, 0, 0, 2}},   {3, 6, {2, 1, 1, 2}},   {4, 8, {2, 2, 2, 2}},
        {5, 10, {3, 2, 2, 3}},  {6, 11, {4, 2, 2, 3}},  {7, 13, {4, 3, 3, 3}},
        {8, 15, {4, 4, 3, 4}},  {9, 16, {4, 4, 4, 4}},  {10, 18, {5, 4, 4, 5}}};
    for (const auto& row : table1)
        add("table1.t" + std::to_string(row.t), "table1", [row, budget](VerificationItem& item) {
            std::int64_t bound = (2 * pi_t_star_complete_formula(2, 2 * row.t) + 2) / 3;
            auto g = cartesian_product(complete_graph(2), complete_graph(2));
            Distribution listed(g, row.counts);
            auto solv = is_t_solvable(listed, row.t, budget);
            auto exact = optimal_t_pebbling(g, row.t, budget);
            if (solv.verdict == Verdict::resource_limit ||
                exact.verdict == Verdict::resource_limit)
                throw resource_limit("search cut");
            std::ostringstream e, c;
            e << row.value << " solvable " << row.value;
            c << bound << ' ' << (solv.verdict == Verdict::solvable ? "solvable" : "unsolvable")
              << ' ' << exact.value;
            item_equal(item, e.str(), c.str());
        });

    static const std::vector<TableRow> table2 = {
        {1, 3, {2, 0, 0, 1, 0, 0}},  {2, 5, {2, 0, 1, 0, 2, 0}},
        {3, 7, {2, 0, 2, 1, 2, 0}},  {4, 9, {2, 2, 2, 1, 1, 1}},
        {5, 11, {2, 2, 2, 2, 2, 1}}, {6, 12, {2, 2, 2, 2, 2, 2}}};
    for (const auto& row : table2)
        add("table2.t" + std::to_string(row.t), "table2", [row, budget](VerificationItem& item) {
            std::int64_t b2 = (3 * pi_t_star_complete_formula(2, 2 * row.t) + 3) / 4;
            std::int64_t b3 = (2 * pi_t_star_complete_formula(3, 2 * row.t) + 2) / 3;
            std::int64_t formula = k2k3_formula(row.t);
            auto g = cartesian_product(complete_graph(2), complete_graph(3));
            Distribution listed(g, row.counts);
            auto solv = is_t_solvable(listed, row.t, budget);
            auto exact = optimal_t_pebbling(g, row.t, budget);
            if (solv.verdict == Verdict::resource_limit ||
                exact.verdict == Verdict::resource_limit)
                throw resource_limit("search cut");
            std::ostringstream e, c;
            e << row.value << ' ' << row.value << " solvable " << row.value;
            c << formula << ' ' << std::max(b2, b3) << ' '
              << (solv.verdict == Verdict::solvable ? "solvable" : "unsolvable") << ' '
              << exact.value;
            item_equal(item, e.str(), c.str());
        });

    // ---- closed form vs exhaustion, K2 x K2, wider t range ------------------
    for (std::int64_t t = 1; t <= 12; ++t)
        add("prop3.11.t" + std::to_string(t), "prop3.11", [t, budget](VerificationItem& item) {
            auto res = optimal_t_pebbling(cartesian_product(complete_graph(2), complete_graph(2)), t, budget);
            if (res.verdict != Verdict::solvable) throw resource_limit("search cut");
            item_equal_val(item, k2k2_formula(t), res.value);
        });

    // ---- 2^d boundary -------------------------------------------------------
    add("cor3.10.k3k3", "cor3.10", [budget](VerificationItem& item) {
        auto g = cartesian_product(complete_graph(3), complete_graph(3));
        auto res = optimal_t_pebbling(g, 1, budget);
        if (res.verdict != Verdict::solvable) throw resource_limit("search cut");
        item_equal_val<std::int64_t>(item, 4, res.value);
    });
    add("cor3.10.k2k2", "cor3.10", [budget](VerificationItem& item) {
        auto res = optimal_t_pebbling(cartesian_product(complete_graph(2), complete_graph(2)), 1, budget);
        if (res.verdict != Verdict::solvable) throw resource_limit("search cut");
        item_equal_val<std::int64_t>(item, 3, res.value);
    });

    // ---- uniform configuration on a product of complete graphs -------------
    add("lemma3.13.k1", "lemma3.13", [budget](VerificationItem& item) {
        auto built = uniform_complete_product(1, {2, 2});
        auto solv = is_t_solvable(built.distribution, built.claimed_t, budget);
        if (solv.verdict == Verdict::resource_limit) throw resource_limit("search cut");
        std::ostringstream e, c;
        e << "size 16 t 9 solvable";
        c << "size " << built.distribution.size() << " t " << built.claimed_t << ' '
          << (solv.verdict == Verdict::solvable ? "solvable" : "unsolvable");
        item_equal(item, e.str(), c.str());
    });

    // ---- fractional optima --------------------------------------------------
    for (int n = 1; n <= 8; ++n)
        add("frac.kn.n" + std::to_string(n), "frac", [n](VerificationItem& item) {
            item_equal(item, to_string(fractional_optimal_formula_Kn(n)),
                       to_string(fractional_optimal(complete_graph(n)).value));
        });
    add("frac.k2k2", "frac", [](VerificationItem& item) {
        item_equal(item, "16/9", to_string(fractional_optimal(cartesian_product(complete_graph(2), complete_graph(2))).value));
    });
    add("frac.k2k3", "frac", [](VerificationItem& item) {
        auto g = cartesian_product(complete_graph(2), complete_graph(3));
        item_equal(item, "2", to_string(fractional_optimal(g).value));
    });
    add("frac.c5", "frac", [](VerificationItem& item) {
        item_equal(item, "2", to_string(fractional_optimal(cycle_graph(5)).value));
    });
    add("frac.k2", "frac", [](VerificationItem& item) {
        item_equal(item, "4/3", to_string(fractional_optimal(complete_graph(2)).value));
    });
    {
        static const std::vector<std::pair<std::string, std::string>> small = {
            {"K:2", "K:2"}, {"K:2", "K:3"}, {"K:2", "C:5"},
            {"K:3", "K:3"}, {"K:3", "C:5"}, {"C:5", "C:5"}};
        auto atom = [](const std::string& s) {
            return s == "K:2"   ? complete_graph(2)
                   : s == "K:3" ? complete_graph(3)
                                : cycle_graph(5);
        };
        for (const auto& [a, b] : small) {
            std::string ida = a.substr(0, 1) + a.substr(2), idb = b.substr(0, 1) + b.substr(2);
            for (auto& c : ida) c = std::tolower(c);
            for (auto& c : idb) c = std::tolower(c);
            add("thm4.2." + ida + "-" + idb, "thm4.2", [a, b, atom](VerificationItem& item) {
                item_equal_val(item, true, multiplicativity_check(atom(a), atom(b)));
            });
        }
    }

    // ---- integer distributions scaled from the fractional optimum ----------
    for (int n : {2, 3})
        for (std::int64_t t = 1; t <= 30; ++t)
            add("thm4.4.k" + std::to_string(n) + ".t" + std::to_string(t), "thm4.4",
                [n, t, budget](VerificationItem& item) {
                    auto g = complete_graph(n);
                    Rational pihat = fractional_optimal_formula_Kn(n);
                    std::int64_t exact = pi_t_star_complete_formula(n, t);
                    bool gap_ok = Rational(BigInt(exact)) >= pihat * Rational(t);
                    auto built = theorem44_distribution(g, t);
                    auto solv = is_t_solvable(built.distribution, t, budget);
                    if (solv.verdict == Verdict::resource_limit)
                        throw resource_limit("search cut");
                    bool size_ok = Rational(BigInt(built.distribution.size())) <=
                                   pihat * Rational(t) + Rational(n * (built.k - 1));
                    std::ostringstream c;
                    c << (gap_ok ? "gap>=0" : "gap<0") << ' '
                      << (solv.verdict == Verdict::solvable ? "solvable" : "unsolvable") << ' '
                      << (size_ok ? "size-ok" : "size-exceeded");
                    item_equal(item, "gap>=0 solvable size-ok", c.str());
                });

    // ---- the three diagonal patterns on C5 x C5 -----------------------------
    for (const auto& [name, kind, t] :
         {std::tuple{"A1", C5C5Kind::A1, std::int64_t{1}},
          std::tuple{"A2", C5C5Kind::A2, std::int64_t{2}},
          std::tuple{"A4", C5C5Kind::A4, std::int64_t{4}}})
        add(std::string("prop5.1.") + name, "prop5.1", [kind, t, budget](VerificationItem& item) {
            auto d = c5c5_distribution(kind);
            auto solv = is_t_solvable(d, t, budget);
            if (solv.verdict == Verdict::resource_limit) throw resource_limit("search cut");
            for (const auto& [root, moves] : solv.witnesses)
                if (replay(d, moves)[root] < t)
                    throw std::logic_error("witness replay lost pebbles");
            item_equal(item, "solvable", detail::describe(solv.verdict));
        });

    // ---- the 44-pebble distribution on C5^4 ---------------------------------
    add("prop5.4.F", "prop5.4", [budget](VerificationItem& item) {
        auto f = f_distribution();
        auto rep = verify_f_solvable(f, budget);
        std::ostringstream c;
        c << "size " << f.size() << ' ' << detail::describe(rep.verdict);
        item_equal(item, "size 44 solvable", c.str());
    });
    add("prop5.4.F-direct", "prop5.4", [](VerificationItem& item) {
        auto f = f_distribution();
        auto rep = is_t_solvable(f, 1, SolverBudget{4'000'000, 20'000});
        if (rep.verdict == Verdict::resource_limit) throw resource_limit("direct search cut");
        item_equal(item, "solvable", detail::describe(rep.verdict));
    });

    // ---- height-one tower on C5^3 -------------------------------------------
    add("thm5.2.m1", "thm5.2", [budget](VerificationItem& item) {
        auto bt = b_tower(1, Distribution::zero(cycle_graph(5)).with_count(0, 4));
        bool mult4 = true;
        for (auto c : bt.counts())
            if (c % 4 != 0) mult4 = false;
        auto rep = verify_b_tower_solvable(bt, budget);
        std::ostringstream c;
        c << "size " << bt.size() << (mult4 ? " mult4" : " not-mult4") << ' '
          << detail::describe(rep.verdict);
        item_equal(item, "size 20 mult4 solvable", c.str());
    });
    add("thm5.2.m1-direct", "thm5.2", [](VerificationItem& item) {
        auto bt = b_tower(1, Distribution::zero(cycle_graph(5)).with_count(0, 4));
        auto rep = is_t_solvable(bt, 1, SolverBudget{4'000'000, 20'000});
        if (rep.verdict == Verdict::resource_limit) throw resource_limit("direct search cut");
        item_equal(item, "solvable", detail::describe(rep.verdict));
    });

    // ---- hypercube families -------------------------------------------------
    for (int d = 1; d <= 6; ++d)
        add("prop6.2.d" + std::to_string(d), "prop6.2", [d, budget](VerificationItem& item) {
            auto a = antipodal_hypercube(d);
            auto solv = is_t_solvable(a, 1, budget);
            if (solv.verdict == Verdict::resource_limit) throw resource_limit("search cut");
            item_equal(item, "solvable", detail::describe(solv.verdict));
        });
    for (std::int64_t r = 0; r <= 30; ++r)
        add("prop6.3.r" + std::to_string(r), "prop6.3", [r, budget](VerificationItem& item) {
            auto d = split_family_distribution(r);
            bool size_ok = d.size() == (4 * r + 2) / 3;
            bool solv_ok = true;
            if (r >= 1) {
                auto solv = is_t_solvable(d, r, budget);
                if (solv.verdict == Verdict::resource_limit) throw resource_limit("search cut");
                solv_ok = solv.verdict == Verdict::solvable;
            }
            std::ostringstream c;
            c << (size_ok ? "size-ok" : "size-wrong") << ' '
              << (solv_ok ? "solvable" : "unsolvable");
            item_equal(item, "size-ok solvable", c.str());
        });
    for (int k = 0; k <= 2; ++k)
        for (int m = 0; 2 * k + m + 1 <= 6; ++m)
            add("thm6.6.k" + std::to_string(k) + ".m" + std::to_string(m), "thm6.6",
                [k, m, budget](VerificationItem& item) {
                    auto d = split_tower(k, m); // throws if the size bound breaks
                    auto solv = is_t_solvable(d, 1, budget);
                    if (solv.verdict == Verdict::resource_limit)
                        throw resource_limit("search cut");
                    item_equal(item, "solvable", detail::describe(solv.verdict));
                });

    // ---- parameter choice for the general upper bound -----------------------
    for (int d : {1, 2, 3, 5, 10, 25, 50, 100, 150, 200})
        add("thm6.8.d" + std::to_string(d), "thm6.8", [d](VerificationItem& item) {
            auto p = wgm_parameters(d);
            bool relation = d == 2 * p.k + p.m + 1;
            double target = 0.2696 * (d - 1);
            bool near = std::abs(p.k - target) <= 1.0 + 1e-9 || p.clamped;
            // high-precision cross-check of the integer comparison
            long double ratio = std::log2(1.5L) / std::log2(4.5L);
            int k_hp = static_cast<int>(std::ceil(ratio * (d - 1) - 1e-12L));
            while (2 * k_hp > d - 1) --k_hp;
            bool agrees = k_hp == p.k;
            std::ostringstream c;
            c << (relation ? "relation-ok" : "relation-broken") << ' '
              << (near ? "near" : "far") << ' ' << (agrees ? "agrees" : "disagrees");
            item_equal(item, "relation-ok near agrees", c.str());
        });

    // ---- run ----------------------------------------------------------------
    VerificationReport report;
    report.items.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            VerificationItem& item = report.items[i];
            item.claim_id = jobs[i].claim_id;
            item.anchor = jobs[i].anchor;
            auto start = std::chrono::steady_clock::now();
            try {
                jobs[i].run(item);
            } catch (const resource_limit& e) {
                item.status = ItemStatus::skipped_resource;
                item.computed = e.what();
            } catch (const std::exception& e) {
                item.status = ItemStatus::fail;
                item.computed = std::string("error: ") + e.what();
            }
            item.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
        }
    };
    int threads = detail::worker_count(opt.threads);
    if (threads <= 1 || jobs.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    for (const auto& item : report.items) {
        if (item.status == ItemStatus::pass) ++report.passed;
        else if (item.status == ItemStatus::fail) ++report.failed;
        else ++report.skipped;
    }
    std::ostringstream fp;
    fp << "compiler=" << __VERSION__ << ";threads=" << threads
       << ";budget-nodes=" << budget.max_nodes << ";budget-ms=" << budget.max_ms;
    report.fingerprint = fp.str();
    return report;
}

} // namespace pebble

#endif
