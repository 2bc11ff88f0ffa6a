#include <catch2/catch_amalgamated.hpp>

#include <pebble/pebble.hpp>

#include <algorithm>
#include <set>

using namespace pebble;

namespace {
std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}

TEST_CASE("weak compositions are counted and ordered") {
    for (int total = 0; total <= 6; ++total)
        for (int parts = 1; parts <= 4; ++parts) {
            std::vector<std::vector<std::int64_t>> seen;
            bool complete = weak_compositions(total, parts, [&](const auto& c) {
                seen.push_back(c);
                return true;
            });
            REQUIRE(complete);
            REQUIRE(static_cast<std::int64_t>(seen.size()) ==
                    binomial(total + parts - 1, parts - 1));
            for (const auto& c : seen) {
                std::int64_t sum = 0;
                for (auto x : c) sum += x;
                REQUIRE(sum == total);
            }
            REQUIRE(std::is_sorted(seen.begin(), seen.end()));
        }
}

TEST_CASE("weak composition enumeration stops on demand") {
    int count = 0;
    bool complete = weak_compositions(5, 3, [&](const auto&) { return ++count < 4; });
    REQUIRE_FALSE(complete);
    REQUIRE(count == 4);
}

TEST_CASE("degenerate composition shapes") {
    int count = 0;
    weak_compositions(0, 3, [&](const auto& c) {
        REQUIRE(c == std::vector<std::int64_t>{0, 0, 0});
        ++count;
        return true;
    });
    REQUIRE(count == 1);
    count = 0;
    weak_compositions(0, 0, [&](const auto&) { ++count; return true; });
    REQUIRE(count == 1);
    count = 0;
    weak_compositions(3, 0, [&](const auto&) { ++count; return true; });
    REQUIRE(count == 0);
}

TEST_CASE("canonicity under the full symmetric group means sorted") {
    auto group = generate_group(complete_graph(3)->automorphisms, 3);
    REQUIRE(group.size() == 6);
    int canonical = 0, all = 0;
    weak_compositions(4, 3, [&](const auto& c) {
        ++all;
        bool is_sorted = std::is_sorted(c.begin(), c.end());
        REQUIRE(is_canonical_under(c, group) == is_sorted);
        if (is_sorted) ++canonical;
        return true;
    });
    REQUIRE(all == 15);
    REQUIRE(canonical == 4); // partitions of 4 into at most 3 parts
}

TEST_CASE("canonical representatives cover every orbit exactly once") {
    auto group = generate_group(cycle_graph(4)->automorphisms, 4);
    std::set<std::vector<std::int64_t>> canon;
    std::set<std::vector<std::int64_t>> everything;
    weak_compositions(3, 4, [&](const auto& c) {
        everything.insert(c);
        if (is_canonical_under(c, group)) canon.insert(c);
        return true;
    });
    // each orbit contributes exactly one canonical member
    std::set<std::vector<std::int64_t>> covered;
    for (const auto& c : canon)
        for (const auto& p : group) {
            std::vector<std::int64_t> image(4);
            for (int v = 0; v < 4; ++v) image[p[v]] = c[v];
            covered.insert(image);
        }
    REQUIRE(covered == everything);
    // and no two canonical members share an orbit
    for (const auto& c : canon)
        for (const auto& p : group) {
            std::vector<std::int64_t> image(4);
            for (int v = 0; v < 4; ++v) image[p[v]] = c[v];
            if (image != c) REQUIRE(canon.count(image) == (image == c ? 1 : 0));
        }
}

TEST_CASE("empty groups make everything canonical") {
    weak_compositions(3, 3, [&](const auto& c) {
        REQUIRE(is_canonical_under(c, {}));
        return true;
    });
}
