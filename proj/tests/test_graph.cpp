#include <catch2/catch_amalgamated.hpp>

#include <pebble/pebble.hpp>

#include <algorithm>
#include <bit>

using namespace pebble;

TEST_CASE("complete graph shape") {
    for (int n = 1; n <= 8; ++n) {
        auto g = complete_graph(n);
        REQUIRE(g->n == n);
        REQUIRE(g->edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2);
        REQUIRE(g->family == "K:" + std::to_string(n));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                REQUIRE(g->dist[u][v] == (u == v ? 0 : 1));
        REQUIRE(g->diameter() == (n == 1 ? 0 : 1));
    }
    REQUIRE_THROWS_AS(complete_graph(0), invalid_parameter);
    REQUIRE_THROWS_AS(complete_graph(-3), invalid_parameter);
}

TEST_CASE("cycle graph distances match the circular metric") {
    for (int n = 3; n <= 11; ++n) {
        auto g = cycle_graph(n);
        REQUIRE(g->edge_count() == static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                int around = std::abs(u - v);
                REQUIRE(g->dist[u][v] == std::min(around, n - around));
            }
        REQUIRE(g->diameter() == n / 2);
    }
    REQUIRE_THROWS_AS(cycle_graph(2), invalid_parameter);
}

TEST_CASE("hypercube distances are Hamming distances") {
    for (int d = 0; d <= 6; ++d) {
        auto g = hypercube(d);
        REQUIRE(g->n == (1 << d));
        REQUIRE(g->edge_count() == static_cast<std::size_t>(d) * (1 << d) / 2);
        for (int u = 0; u < g->n; ++u)
            for (int v = 0; v < g->n; ++v)
                REQUIRE(g->dist[u][v] == std::popcount(static_cast<unsigned>(u ^ v)));
    }
    REQUIRE(hypercube(3)->labels[5] == "101");
    REQUIRE_THROWS_AS(hypercube(-1), invalid_parameter);
    REQUIRE_THROWS_AS(hypercube(25), resource_limit);
}

TEST_CASE("explicit graph construction validates input") {
    REQUIRE_THROWS_AS(Graph::make(0, {}), invalid_parameter);
    REQUIRE_THROWS_AS(Graph::make(3, {{0, 3}}), invalid_argument_error);
    REQUIRE_THROWS_AS(Graph::make(3, {{1, 1}}), invalid_argument_error);
    // disconnected
    REQUIRE_THROWS_AS(Graph::make(4, {{0, 1}, {2, 3}}), invalid_argument_error);
    // duplicate edges collapse
    auto g = Graph::make(2, {{0, 1}, {1, 0}, {0, 1}});
    REQUIRE(g->edge_count() == 1);
    // vertex cap
    GraphLimits tiny{.max_vertices = 3};
    REQUIRE_THROWS_AS(complete_graph(4, tiny), resource_limit);
    // bad automorphism lists are rejected
    REQUIRE_THROWS_AS(Graph::make(3, {{0, 1}, {1, 2}}, {}, {{0, 1}}), invalid_argument_error);
    REQUIRE_THROWS_AS(Graph::make(3, {{0, 1}, {1, 2}}, {}, {{0, 0, 1}}), invalid_argument_error);
    // path v0-v1-v2: swapping the endpoints is fine, rotating is not
    REQUIRE_NOTHROW(Graph::make(3, {{0, 1}, {1, 2}}, {}, {{2, 1, 0}}));
    REQUIRE_THROWS_AS(Graph::make(3, {{0, 1}, {1, 2}}, {}, {{1, 2, 0}}), invalid_argument_error);
}

TEST_CASE("cartesian product metric is the sum of factor metrics") {
    auto c5 = cycle_graph(5);
    auto k3 = complete_graph(3);
    auto p = cartesian_product(c5, k3);
    REQUIRE(p->n == 15);
    REQUIRE(p->is_product());
    REQUIRE(p->family == "prod:C:5,K:3");
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 3; ++y) {
            int v = p->product_index(x, y);
            REQUIRE(p->left_coord(v) == x);
            REQUIRE(p->right_coord(v) == y);
            for (int x2 = 0; x2 < 5; ++x2)
                for (int y2 = 0; y2 < 3; ++y2)
                    REQUIRE(p->dist[v][p->product_index(x2, y2)] ==
                            c5->dist[x][x2] + k3->dist[y][y2]);
        }
}

TEST_CASE("product of cycles matches the hypercube where expected") {
    // C4 x C4 is the 4-dimensional hypercube's metric twin: check degrees and
    // distance multisets agree.
    auto c4 = cycle_graph(4);
    auto p = cartesian_product(c4, c4);
    auto q = hypercube(4);
    REQUIRE(p->n == q->n);
    std::vector<int> dp, dq;
    for (int u = 0; u < p->n; ++u)
        for (int v = 0; v < p->n; ++v) {
            dp.push_back(p->dist[u][v]);
            dq.push_back(q->dist[u][v]);
        }
    std::sort(dp.begin(), dp.end());
    std::sort(dq.begin(), dq.end());
    REQUIRE(dp == dq);
}

TEST_CASE("product commutes up to the coordinate-swap relabeling") {
    auto k2 = complete_graph(2);
    auto k3 = complete_graph(3);
    auto a = cartesian_product(k2, k3);
    auto b = cartesian_product(k3, k2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 3; ++y)
            for (int x2 = 0; x2 < 2; ++x2)
                for (int y2 = 0; y2 < 3; ++y2)
                    REQUIRE(a->adjacent(a->product_index(x, y), a->product_index(x2, y2)) ==
                            b->adjacent(b->product_index(y, x), b->product_index(y2, x2)));
}

TEST_CASE("generator-supplied automorphisms generate the expected groups") {
    REQUIRE(generate_group(complete_graph(4)->automorphisms, 4).size() == 24);
    REQUIRE(generate_group(cycle_graph(5)->automorphisms, 5).size() == 10);
    REQUIRE(generate_group(hypercube(3)->automorphisms, 8).size() == 48);
    // cap truncates but never invents elements
    auto partial = generate_group(complete_graph(5)->automorphisms, 5, 10);
    REQUIRE(partial.size() <= 10);
}

TEST_CASE("vertex orbits") {
    REQUIRE(complete_graph(5)->vertex_orbits().size() == 1);
    REQUIRE(cycle_graph(7)->vertex_orbits().size() == 1);
    REQUIRE(hypercube(4)->vertex_orbits().size() == 1);
    REQUIRE(cartesian_product(complete_graph(2), cycle_graph(5))->vertex_orbits().size() == 1);
    // no generators: everything is its own orbit
    auto path = Graph::make(3, {{0, 1}, {1, 2}});
    REQUIRE(path->vertex_orbits().size() == 3);
}

TEST_CASE("permutation algebra") {
    Permutation a{1, 2, 0}, b{0, 2, 1};
    auto ab = compose(a, b);
    REQUIRE(ab == Permutation{1, 0, 2});
    REQUIRE(compose(a, inverse(a)) == identity_permutation(3));
    REQUIRE(inverse(inverse(b)) == b);
}

TEST_CASE("family strings round-trip through the parser") {
    REQUIRE(graph_from_family("K:4")->n == 4);
    REQUIRE(graph_from_family("C:6")->n == 6);
    REQUIRE(graph_from_family("Q:3")->n == 8);
    auto p = graph_from_family("prod:K:2,K:3");
    REQUIRE(p->is_product());
    REQUIRE(p->n == 6);
    auto triple = graph_from_family("prod:C:5,C:5,C:5");
    REQUIRE(triple->n == 125);
    REQUIRE(triple->left->n == 25);
    REQUIRE_THROWS_AS(graph_from_family("T:3"), invalid_parameter);
    REQUIRE_THROWS_AS(graph_from_family("K"), invalid_parameter);
    REQUIRE_THROWS_AS(graph_from_family("prod:K:2"), invalid_parameter);
}

TEST_CASE("graph JSON round-trip") {
    auto g = cycle_graph(5);
    auto j = graph_to_json(*g);
    auto back = graph_from_json(j);
    REQUIRE(back->n == g->n);
    for (int u = 0; u < 5; ++u) REQUIRE(back->adj[u] == g->adj[u]);
    REQUIRE_THROWS_AS(graph_from_json(Json{{"edges", Json::array()}}), invalid_parameter);
}
