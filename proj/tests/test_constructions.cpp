#include <catch2/catch_amalgamated.hpp>

#include <pebble/pebble.hpp>

using namespace pebble;

TEST_CASE("complete-graph witness distribution hits the closed form") {
    for (std::int64_t n = 1; n <= 5; ++n)
        for (std::int64_t t = 1; t <= 12; ++t) {
            auto d = kn_optimal_distribution(n, t);
            REQUIRE(d.size() == pi_t_star_complete_formula(n, t));
            if (n <= 3 && t <= 6)
                REQUIRE(is_t_solvable(d, t).verdict == Verdict::solvable);
        }
    REQUIRE_THROWS_AS(kn_optimal_distribution(0, 1), invalid_parameter);
}

TEST_CASE("diagonal patterns on C5 x C5") {
    auto a1 = c5c5_distribution(C5C5Kind::A1);
    auto a2 = c5c5_distribution(C5C5Kind::A2);
    auto a4 = c5c5_distribution(C5C5Kind::A4);
    auto b = c5c5_distribution(C5C5Kind::B);
    REQUIRE(a1.size() == 8);
    REQUIRE(a2.size() == 12);
    REQUIRE(a4.size() == 20);
    REQUIRE(b.size() == 5);
    REQUIRE(a1.support().size() == 3);
    REQUIRE(a4.support().size() == 5);
    // B is the quarter of A4
    REQUIRE(scalar_multiple(4, b).counts() == a4.counts());
    // the A4/B support is the (i, 2i) diagonal
    const auto& g = *a4.graph();
    for (int i = 0; i < 5; ++i)
        REQUIRE(a4[g.product_index(i, (2 * i) % 5)] == 4);
    REQUIRE_THROWS_AS(c5c5_distribution(C5C5Kind::A1, complete_graph(4)),
                      invalid_argument_error);
}

TEST_CASE("delta composition stacks family members into blocks") {
    auto c5 = cycle_graph(5);
    auto c5c5 = cartesian_product(c5, c5);
    auto f = f_distribution();
    REQUIRE(f.size() == 44);
    const auto& g4 = *f.graph();
    auto a1 = c5c5_distribution(C5C5Kind::A1, g4.left);
    auto a2 = c5c5_distribution(C5C5Kind::A2, g4.right);
    auto a4 = c5c5_distribution(C5C5Kind::A4, g4.right);
    for (int v = 0; v < g4.left->n; ++v)
        for (int w = 0; w < g4.right->n; ++w) {
            std::int64_t want = a1[v] == 4 ? a4[w] : a1[v] == 2 ? a2[w] : 0;
            REQUIRE(f[g4.product_index(v, w)] == want);
        }

    // mismatched family graphs are rejected
    auto prod = cartesian_product(c5, c5);
    Distribution base(c5, {1, 0, 0, 0, 0});
    REQUIRE_THROWS_AS(
        delta_composition(base, [&](std::int64_t) { return Distribution(complete_graph(2), {1, 0}); }, prod),
        invalid_argument_error);
}

TEST_CASE("tower construction") {
    auto c5 = cycle_graph(5);
    auto base = Distribution::zero(c5).with_count(0, 4);
    REQUIRE(b_tower(0, base) == base);
    auto bt1 = b_tower(1, base);
    REQUIRE(bt1.size() == 20);
    REQUIRE(bt1.graph()->n == 125);
    for (auto c : bt1.counts()) REQUIRE(c % 4 == 0);
    auto bt2 = b_tower(2, base);
    REQUIRE(bt2.size() == 100);
    REQUIRE(bt2.graph()->n == 5 * 5 * 125);
    for (auto c : bt2.counts()) REQUIRE(c % 4 == 0);
    REQUIRE_THROWS_AS(b_tower(-1, base), invalid_parameter);
    REQUIRE_THROWS_AS(b_tower(1, Distribution::zero(c5).with_count(0, 3)),
                      invalid_argument_error);
}

TEST_CASE("compositional solvability proofs") {
    auto f = f_distribution();
    auto fr = verify_f_solvable(f);
    REQUIRE(fr.verdict == Verdict::solvable);
    REQUIRE(fr.witnesses.size() == 625);
    for (const auto& [root, moves] : fr.witnesses)
        REQUIRE(replay(f, moves)[root] >= 1);

    auto bt = b_tower(1, Distribution::zero(cycle_graph(5)).with_count(0, 4));
    auto br = verify_b_tower_solvable(bt);
    REQUIRE(br.verdict == Verdict::solvable);
    REQUIRE(br.witnesses.size() == 125);

    REQUIRE_THROWS_AS(verify_f_solvable(bt), invalid_argument_error);
    REQUIRE_THROWS_AS(verify_b_tower_solvable(f), invalid_argument_error);
}

TEST_CASE("uniform distributions on products of complete graphs") {
    auto built = uniform_complete_product(1, {2, 2});
    REQUIRE(built.distribution.size() == 16);
    REQUIRE(built.claimed_t == 9);
    auto built2 = uniform_complete_product(2, {2, 3});
    REQUIRE(built2.distribution.size() == 8 * 6);
    REQUIRE(built2.claimed_t == 2 * 3 * 4);
    // d = 0: one vertex, k pebbles, k-solvable
    auto trivial = uniform_complete_product(3, {});
    REQUIRE(trivial.distribution.size() == 3);
    REQUIRE(trivial.claimed_t == 3);
    REQUIRE_THROWS_AS(uniform_complete_product(0, {2}), invalid_parameter);
}

TEST_CASE("antipodal hypercube distributions") {
    // odd d = 2k+1: 2^k on both corners; even d = 2k: 2^k and 2^{k-1}
    REQUIRE(antipodal_hypercube(1).counts() == std::vector<std::int64_t>{1, 1});
    auto a3 = antipodal_hypercube(3);
    REQUIRE(a3[0] == 2);
    REQUIRE(a3[7] == 2);
    REQUIRE(a3.size() == 4);
    auto a4 = antipodal_hypercube(4);
    REQUIRE(a4.size() == 6);
    REQUIRE(a4[0] == 4);
    REQUIRE(a4[15] == 2);
    for (int d = 1; d <= 5; ++d)
        REQUIRE(is_t_solvable(antipodal_hypercube(d), 1).verdict == Verdict::solvable);
    REQUIRE_THROWS_AS(antipodal_hypercube(0), invalid_parameter);
}

TEST_CASE("the K2 splitting family") {
    REQUIRE(split_family(0).pair == std::pair<std::int64_t, std::int64_t>{0, 0});
    REQUIRE(split_family(1).pair == std::pair<std::int64_t, std::int64_t>{2, 0});
    REQUIRE(split_family(2).pair == std::pair<std::int64_t, std::int64_t>{2, 1});
    REQUIRE(split_family(3).pair == std::pair<std::int64_t, std::int64_t>{2, 2});
    REQUIRE(split_family(7).pair == std::pair<std::int64_t, std::int64_t>{6, 4});
    for (std::int64_t r = 1; r <= 12; ++r) {
        auto d = split_family_distribution(r);
        REQUIRE(d.size() == (4 * r + 2) / 3);
        REQUIRE(is_t_solvable(d, r).verdict == Verdict::solvable);
    }
    REQUIRE_THROWS_AS(split_family(-1), invalid_parameter);
}

TEST_CASE("splitting lifts solvable distributions") {
    auto q1 = hypercube(1);
    Distribution d(q1, {2, 2}); // 2-solvable on K2
    auto lifted = split_once(d);
    REQUIRE(lifted.graph()->n == 4);
    // each count r becomes the pair D_r on the new coordinate
    const auto& g = *lifted.graph();
    REQUIRE(lifted[g.product_index(0, 0)] == 2);
    REQUIRE(lifted[g.product_index(0, 1)] == 1);
    REQUIRE(is_t_solvable(lifted, 1).verdict == Verdict::solvable);
}

TEST_CASE("split towers satisfy the exact size bound") {
    for (int k = 0; k <= 2; ++k)
        for (int m = 0; 2 * k + m + 1 <= 6; ++m) {
            auto d = split_tower(k, m); // throws on a bound violation
            REQUIRE(d.graph()->n == 1 << (2 * k + m + 1));
        }
    REQUIRE(split_tower(1, 0).counts() == antipodal_hypercube(3).counts());
    REQUIRE(split_tower(0, 0).size() == 2);
    REQUIRE_THROWS_AS(split_tower(-1, 0), invalid_parameter);
}

TEST_CASE("parameter choice for the general hypercube bound") {
    for (int d = 1; d <= 60; ++d) {
        auto p = wgm_parameters(d);
        REQUIRE(d == 2 * p.k + p.m + 1);
        REQUIRE(p.m >= 0);
        REQUIRE(p.k >= 0);
        if (!p.clamped) {
            double target = 0.26959 * (d - 1);
            REQUIRE(std::abs(p.k - target) <= 1.0);
        }
    }
    REQUIRE(wgm_parameters(1).k == 0);
    REQUIRE_THROWS_AS(wgm_parameters(0), invalid_parameter);
}

TEST_CASE("construction registry") {
    auto names = construction_names();
    REQUIRE(std::find(names.begin(), names.end(), "F") != names.end());

    auto f = build_construction("F", {});
    REQUIRE(f.output.size() == 44);
    REQUIRE(f.claimed_t == 1);
    REQUIRE(f.claimed_size == 44);

    auto kn = build_construction("kn-optimal", {{"n", 3}, {"t", 4}});
    REQUIRE(kn.output.size() == pi_t_star_complete_formula(3, 4));

    auto b = build_construction("B", {});
    REQUIRE(b.claimed_t == 0); // building block only; no direct claim

    auto bt = build_construction("b-tower", {{"m", 1}});
    REQUIRE(bt.output.size() == 20);

    auto ucp = build_construction("uniform-complete-product", {{"k", 1}, {"n1", 2}, {"n2", 2}});
    REQUIRE(ucp.output.size() == 16);
    REQUIRE(ucp.claimed_t == 9);

    auto anti = build_construction("antipodal", {{"d", 4}});
    REQUIRE(anti.output.size() == 6);

    auto split = build_construction("split-family", {{"r", 2}});
    REQUIRE(split.output.counts() == std::vector<std::int64_t>{2, 1});

    auto tower = build_construction("split-tower", {{"k", 1}, {"m", 2}});
    REQUIRE(tower.output.graph()->n == 32);

    REQUIRE_THROWS_AS(build_construction("no-such-thing", {}), invalid_parameter);
    REQUIRE_THROWS_AS(build_construction("kn-optimal", {{"n", 3}}), invalid_parameter);
}
