#include <catch_amalgamated.hpp>
#include <random>

#include "meg/families.hpp"
#include "meg/solver.hpp"
#include "test_util.hpp"

using namespace meg;

TEST_CASE("meg_min on named graphs") {
    for (int m = 2; m <= 8; ++m) {
        auto r = meg_min(make_path(m));
        CHECK(r.meg == 2);
        CHECK(r.witness == std::vector<int>{0, m - 1});
    }
    CHECK(meg_min(make_cycle(4)).meg == 4);
    CHECK(meg_min(make_cycle(5)).meg == 3);

    auto grid = cartesian(make_path(3), make_path(3)).graph;
    CHECK(meg_min(grid).meg == 8);
}

TEST_CASE("meg_min witness verifies and is minimum") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> size(2, 9);
        auto g = testutil::random_connected_graph(size(rng), 0.3, rng);
        auto r = meg_min(g);
        CHECK(static_cast<int>(r.witness.size()) == r.meg);
        CHECK(r.xmeg == g.vertex_count() - r.meg);
        CHECK(testutil::is_meg_bruteforce(g, r.witness));
        CHECK(r.meg == testutil::meg_bruteforce(g));
        // removing any witness vertex breaks this particular set
        if (r.meg >= 1) {
            for (size_t i = 0; i < r.witness.size(); ++i) {
                auto sub = r.witness;
                sub.erase(sub.begin() + static_cast<long>(i));
                CHECK((!testutil::is_meg_bruteforce(g, sub) ||
                       testutil::meg_bruteforce(g) < r.meg));
            }
        }
    }
}

TEST_CASE("meg_min lower bounds") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> size(2, 10);
        auto g = testutil::random_graph(size(rng), 0.35, rng);
        auto r = meg_min(g);
        int leaves = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 1) ++leaves;
        CHECK(r.meg >= leaves);
        CHECK(r.meg >= static_cast<int>(forced_vertices(g).size()));
        CHECK(r.meg <= g.vertex_count());
    }
}

TEST_CASE("meg_min is deterministic") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = testutil::random_connected_graph(8, 0.3, rng);
        auto a = meg_min(g);
        auto b = meg_min(g);
        CHECK(a.meg == b.meg);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("meg_min on disconnected graphs sums components") {
    // K2 + P3 + isolated vertex
    auto g = Graph::build(6, {{0, 1}, {2, 3}, {3, 4}});
    auto r = meg_min(g);
    CHECK(r.meg == 4);
    CHECK(r.witness == std::vector<int>{0, 1, 2, 4});

    auto empty = Graph::build(3, {});
    CHECK(meg_min(empty).meg == 0);
}

TEST_CASE("meg_decision") {
    auto k3 = make_complete(3);
    CHECK_FALSE(meg_decision(k3, 2));
    CHECK(meg_decision(k3, 3));
    CHECK(meg_decision(make_cycle(5), 3));
    CHECK_FALSE(meg_decision(make_cycle(5), 2));
    CHECK_THROWS_AS(meg_decision(k3, -1), BadParameterError);
}

TEST_CASE("enumerate_minimal_meg_sets") {
    auto pendant = pendant_cycle_example();
    auto r = enumerate_minimal_meg_sets(pendant, 100);
    CHECK(r.complete);
    // a'=5, b'=6, c=2, d=3, e=4
    std::vector<int> minimum{3, 5, 6};
    std::vector<int> alternative{2, 4, 5, 6};
    CHECK(std::find(r.sets.begin(), r.sets.end(), minimum) != r.sets.end());
    CHECK(std::find(r.sets.begin(), r.sets.end(), alternative) != r.sets.end());

    auto p4 = enumerate_minimal_meg_sets(make_path(4), 10);
    CHECK(p4.sets == std::vector<std::vector<int>>{{0, 3}});

    auto k3 = enumerate_minimal_meg_sets(make_complete(3), 10);
    CHECK(k3.sets == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("enumerate_minimal_meg_sets against brute force") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        std::uniform_int_distribution<int> size(2, 8);
        int n = size(rng);
        auto g = testutil::random_graph(n, 0.4, rng);
        auto r = enumerate_minimal_meg_sets(g, 10000);
        REQUIRE(r.complete);
        std::vector<std::vector<int>> expected;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) s.push_back(v);
            if (!testutil::is_meg_bruteforce(g, s)) continue;
            bool minimal = true;
            for (size_t i = 0; i < s.size() && minimal; ++i) {
                auto sub = s;
                sub.erase(sub.begin() + static_cast<long>(i));
                if (testutil::is_meg_bruteforce(g, sub)) minimal = false;
            }
            if (minimal) expected.push_back(s);
        }
        std::sort(expected.begin(), expected.end());
        CHECK(r.sets == expected);
    }
}

TEST_CASE("budget exhaustion reports a bound interval") {
    SearchBudget tiny;
    tiny.node_limit = 3;
    auto g = cartesian(make_cycle(5), make_cycle(5)).graph;
    try {
        meg_min(g, tiny);
        FAIL("expected BudgetExhausted");
    } catch (const BudgetExhausted& e) {
        CHECK(e.lower >= 0);
        CHECK(e.lower <= e.upper);
        CHECK(e.upper <= g.vertex_count());
    }
    SearchBudget bad;
    bad.node_limit = 0;
    CHECK_THROWS_AS(meg_min(g, bad), BadParameterError);
}
