#include <catch2/catch_amalgamated.hpp>

#include <pebble/pebble.hpp>

using namespace pebble;

TEST_CASE("distribution construction and accessors") {
    auto c5 = cycle_graph(5);
    Distribution d(c5, {4, 0, 1, 0, 2});
    REQUIRE(d.size() == 7);
    REQUIRE(d.support() == std::vector<int>{0, 2, 4});
    REQUIRE(d[0] == 4);
    REQUIRE(d.with_count(1, 3).size() == 10);
    REQUIRE_THROWS_AS(Distribution(c5, {1, 2, 3}), invalid_argument_error);
    REQUIRE_THROWS_AS(Distribution(c5, {1, -1, 0, 0, 0}), invalid_argument_error);
    REQUIRE(Distribution::zero(c5).size() == 0);
}

TEST_CASE("contains orders distributions pointwise") {
    auto k3 = complete_graph(3);
    Distribution big(k3, {2, 2, 1}), small(k3, {1, 2, 0});
    REQUIRE(big.contains(small));
    REQUIRE_FALSE(small.contains(big));
    REQUIRE(big.contains(big));
    Distribution other(complete_graph(3), {0, 0, 0});
    REQUIRE_THROWS_AS(big.contains(other), invalid_argument_error);
}

TEST_CASE("apply_move enforces the rules of the game") {
    auto c5 = cycle_graph(5);
    Distribution d(c5, {4, 0, 0, 0, 0});
    auto d2 = apply_move(d, {0, 1, 1});
    REQUIRE(d2.counts() == std::vector<std::int64_t>{2, 1, 0, 0, 0});
    auto d3 = apply_move(d, {0, 1, 2});
    REQUIRE(d3.counts() == std::vector<std::int64_t>{0, 2, 0, 0, 0});
    REQUIRE_THROWS_AS(apply_move(d, {0, 2, 1}), illegal_move);   // not adjacent
    REQUIRE_THROWS_AS(apply_move(d, {1, 2, 1}), illegal_move);   // no pebbles
    REQUIRE_THROWS_AS(apply_move(d, {0, 1, 0}), illegal_move);   // zero multiplicity
    REQUIRE_THROWS_AS(apply_move(d, {0, 7, 1}), illegal_move);   // out of range
    REQUIRE_THROWS_AS(apply_move(d, {0, 1, 3}), illegal_move);   // 6 > 4 pebbles
}

TEST_CASE("replay conserves size minus one per unit move") {
    auto c5 = cycle_graph(5);
    Distribution d(c5, {8, 0, 0, 0, 0});
    MoveSequence moves{{0, 1, 2}, {1, 2, 1}, {0, 4, 1}};
    auto end = replay(d, moves);
    std::int64_t units = 0;
    for (const auto& m : moves) units += m.multiplicity;
    REQUIRE(end.size() == d.size() - units);
    REQUIRE(end.counts() == std::vector<std::int64_t>{2, 0, 1, 0, 1});
}

TEST_CASE("scalar multiples") {
    auto k2 = complete_graph(2);
    Distribution d(k2, {3, 1});
    REQUIRE(scalar_multiple(4, d).counts() == std::vector<std::int64_t>{12, 4});
    REQUIRE_THROWS_AS(scalar_multiple(0, d), invalid_parameter);
    Distribution huge(k2, {std::int64_t{1} << 62, 0});
    REQUIRE_THROWS_AS(scalar_multiple(4, huge), resource_limit);
}

TEST_CASE("product distribution multiplies counts and sizes") {
    auto k2 = complete_graph(2);
    auto k3 = complete_graph(3);
    auto p = cartesian_product(k2, k3);
    Distribution d(k2, {2, 1}), e(k3, {1, 0, 3});
    auto prod = product_distribution(d, e, p);
    REQUIRE(prod.size() == d.size() * e.size());
    REQUIRE(prod[p->product_index(0, 2)] == 6);
    REQUIRE(prod[p->product_index(1, 0)] == 1);
    REQUIRE(prod[p->product_index(1, 1)] == 0);
    auto wrong = cartesian_product(k3, k2);
    REQUIRE_THROWS_AS(product_distribution(d, e, wrong), invalid_argument_error);
}

TEST_CASE("projection counts pebbles over the subset twice") {
    auto k2 = complete_graph(2);
    auto k3 = complete_graph(3);
    auto p = cartesian_product(k2, k3);
    std::vector<std::int64_t> counts(6, 0);
    counts[p->product_index(0, 0)] = 2;
    counts[p->product_index(0, 2)] = 1;
    counts[p->product_index(1, 1)] = 3;
    Distribution d(p, counts);
    auto f0 = project_f(d, {0});
    REQUIRE(f0.graph() == k2);
    REQUIRE(f0.counts() == std::vector<std::int64_t>{2 * 2 + 1, 3});
    // size accounting: |f_S(D)| = |D| + pebbles over S
    std::int64_t over = 2;
    REQUIRE(f0.size() == d.size() + over);
    auto f12 = project_f(d, {1, 2});
    REQUIRE(f12.size() == d.size() + 1 + 3);
    REQUIRE_THROWS_AS(project_f(d, {}), invalid_argument_error);
    REQUIRE_THROWS_AS(project_f(d, {5}), invalid_argument_error);
    Distribution flat(k2, {1, 1});
    REQUIRE_THROWS_AS(project_f(flat, {0}), invalid_argument_error);
}

TEST_CASE("collapsing the last complete-graph pair preserves size") {
    auto g = cartesian_product(cycle_graph(5), complete_graph(3));
    std::vector<std::int64_t> counts(g->n, 1);
    Distribution d(g, counts);
    auto collapsed = collapse_last_pair(d);
    REQUIRE(collapsed.size() == d.size());
    REQUIRE(collapsed.graph()->right->n == 2);
    for (int v = 0; v < 5; ++v) {
        REQUIRE(collapsed[collapsed.graph()->product_index(v, 0)] == 1);
        REQUIRE(collapsed[collapsed.graph()->product_index(v, 1)] == 2);
    }
    auto notk = cartesian_product(complete_graph(2), cycle_graph(5));
    REQUIRE_THROWS_AS(collapse_last_pair(Distribution::zero(notk)), invalid_argument_error);
}

TEST_CASE("collapse preserves t-solvability on a worked example") {
    // a 1-solvable distribution on C3 x K3 stays 1-solvable after collapsing
    auto g = cartesian_product(cycle_graph(3), complete_graph(3));
    Distribution d(g, {4, 0, 0, 0, 2, 0, 0, 0, 2});
    REQUIRE(is_t_solvable(d, 1).verdict == Verdict::solvable);
    auto collapsed = collapse_last_pair(d);
    REQUIRE(is_t_solvable(collapsed, 1).verdict == Verdict::solvable);
}

TEST_CASE("distribution JSON round-trip") {
    auto c5 = cycle_graph(5);
    Distribution d(c5, {4, 0, 1, 0, 2});
    auto j = distribution_to_json(d);
    REQUIRE(j["graph"] == "C:5");
    auto back = distribution_from_json(j);
    REQUIRE(back.counts() == d.counts());
    REQUIRE(back.graph()->family == "C:5");
    // sparse counts on a known graph
    auto sparse = distribution_from_counts_json(Json{{"0", 4}}, c5);
    REQUIRE(sparse.counts() == std::vector<std::int64_t>{4, 0, 0, 0, 0});
    REQUIRE_THROWS_AS(distribution_from_counts_json(Json{{"9", 1}}, c5), invalid_parameter);
}

TEST_CASE("witness JSON round-trip") {
    MoveSequence moves{{0, 1, 2}, {1, 2, 1}};
    auto j = witness_to_json(moves);
    REQUIRE(witness_from_json(j) == moves);
}

TEST_CASE("target sets enumerate as promised") {
    auto k3 = complete_graph(3);
    auto st = TargetSet::single_vertex(k3, 2);
    int seen = 0;
    st.for_each([&](const Distribution& d) {
        REQUIRE(d.size() == 2);
        ++seen;
        return true;
    });
    REQUIRE(seen == 3);

    auto ex = TargetSet::explicit_list({Distribution(k3, {1, 1, 0})});
    seen = 0;
    ex.for_each([&](const Distribution&) { ++seen; return true; });
    REQUIRE(seen == 1);

    auto k2 = complete_graph(2);
    auto p = cartesian_product(k3, k2);
    auto prod = TargetSet::product(TargetSet::single_vertex(k3, 1),
                                   TargetSet::single_vertex(k2, 1), p);
    seen = 0;
    prod.for_each([&](const Distribution& d) {
        REQUIRE(d.size() == 1);
        ++seen;
        return true;
    });
    REQUIRE(seen == 6);

    // early stop propagates
    seen = 0;
    bool finished = st.for_each([&](const Distribution&) { return ++seen < 2; });
    REQUIRE_FALSE(finished);
    REQUIRE(seen == 2);
}
