#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "uksat/constructions.hpp"
#include "uksat/transversal.hpp"
#include "uksat/verify.hpp"

using namespace uksat;

TEST_CASE("double star (n=6,k=4,r=5) is the two-P3 forest") {
    auto r = double_star(6, 4, 5);
    CHECK(r.k() == 2);
    REQUIRE(r.edge_count() == 4);
    CHECK(r.has_edge(VertexSet::of({1, 2})));
    CHECK(r.has_edge(VertexSet::of({1, 3})));
    CHECK(r.has_edge(VertexSet::of({4, 6})));
    CHECK(r.has_edge(VertexSet::of({5, 6})));
}

TEST_CASE("double star (n=8,k=4,r=5) has 29 edges") {
    auto r = double_star(8, 4, 5);
    CHECK(r.k() == 4);
    CHECK(r.edge_count() == 29);
    CHECK(verify_complementary(r, 4, 1).ok);
}

TEST_CASE("double star (n=7,k=5,r=6) reconstructs to a saturated hypergraph") {
    auto r = double_star(7, 5, 6);
    CHECK(verify_complementary(r, 2, 1).ok);
    auto h = complementary_hypergraph(r);
    CHECK(verify_uniquely_saturated(h, 6).ok);
}

TEST_CASE("double star range errors name the violated inequality") {
    CHECK_THROWS_WITH_AS(double_star(6, 3, 4), doctest::Contains("k >= 4"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(double_star(9, 4, 6), doctest::Contains("2k-3"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(double_star(5, 4, 5), doctest::Contains("n > r"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(double_star(6, 5, 5), doctest::Contains("r > k"), std::invalid_argument);
}

TEST_CASE("tau-critical construction (k=3, ell=2, n=7)") {
    auto h = tau_critical_construction(3, 2, 7);
    CHECK(h.n() == 7);
    CHECK(h.k() == 3);
    CHECK(h.edge_count() == 6);  // C(4,2) pairs lifted by one vertex each
    CHECK(transversal_tau(h) == 3);
    CHECK(is_uniquely_tau_critical(h).ok);
    // complement is primitive uniquely K_5^(3)-saturated
    auto hs = to_saturated(h, 5);
    CHECK(verify_uniquely_saturated(hs, 5).ok);
}

TEST_CASE("tau-critical construction upper endpoint (k=3, ell=2, n=10)") {
    auto h = tau_critical_construction(3, 2, 10);
    CHECK(transversal_tau(h) == 3);
    CHECK(is_uniquely_tau_critical(h).ok);
    auto plan = make_tau_plan(3, 2, 10);
    CHECK(plan.classes.size() == 6);  // all singleton classes
    for (const auto& cls : plan.classes) CHECK(cls.size() == 1);
}

TEST_CASE("tau-critical construction range errors report both endpoints") {
    CHECK_THROWS_WITH_AS(tau_critical_construction(3, 2, 11), doctest::Contains("[7, 10]"),
                         std::out_of_range);
    CHECK_THROWS_WITH_AS(tau_critical_construction(3, 2, 6), doctest::Contains("[7, 10]"),
                         std::out_of_range);
}

TEST_CASE("tau-critical construction rejects an invalid supplied coloring") {
    // a deliberately broken partition: two crossing pairs in one class
    Coloring bad;
    bad.m = 4;
    bad.k = 2;
    bad.classes = {{VertexSet::of({1, 2}), VertexSet::of({1, 3})},
                   {VertexSet::of({1, 4}), VertexSet::of({2, 3})},
                   {VertexSet::of({2, 4}), VertexSet::of({3, 4})}};
    CHECK_THROWS_AS(tau_critical_construction(3, 2, 7, &bad), std::invalid_argument);
}

TEST_CASE("in each construction the core remainder is the unique transversal") {
    // removing edge e leaves A \ e as the only ell-element transversal
    for (auto [k, ell, n] : std::vector<std::array<int, 3>>{{3, 1, 6}, {3, 2, 7}, {4, 1, 8}}) {
        auto plan = make_tau_plan(k, ell, n);
        auto h = tau_critical_construction(k, ell, n);
        for (VertexSet e : h.edges()) {
            auto rest = h.without_edge(e);
            auto fixes = oracle::brute_transversals_of_size(rest, ell);
            REQUIRE(fixes.size() == 1);
            CHECK(VertexSet{fixes[0]} == plan.A.minus(e));
        }
    }
}

TEST_CASE("to_saturated on the complement of C5") {
    auto hc = complement_hypergraph(oracle::c5());
    auto h = to_saturated(hc, 3);
    CHECK(h == oracle::c5());
}

TEST_CASE("to_saturated rejects bad complements") {
    // isolated vertex
    UniformHypergraph iso(5, 2, {VertexSet::of({1, 2}), VertexSet::of({1, 3})});
    CHECK_THROWS_AS(to_saturated(iso, 3), std::invalid_argument);
    // wrong tau
    auto hc = complement_hypergraph(oracle::c5());
    CHECK_THROWS_AS(to_saturated(hc, 4), std::invalid_argument);
}

TEST_CASE("near-complete construction for k=4 over its full range") {
    for (int n = 6; n <= 9; ++n) {
        auto h = near_complete_construction(4, n);
        CHECK(h.n() == n);
        CHECK(h.k() == 4);
        CHECK(transversal_tau(h) == 2);
        CHECK(is_uniquely_tau_critical(h).ok);
        auto hs = to_saturated(h, n - 1);
        CHECK(verify_uniquely_saturated(hs, n - 1).ok);
    }
}

TEST_CASE("near-complete plan for k=4, n=6 uses singleton outer parts") {
    auto plan = make_near_complete_plan(4, 6);
    CHECK(plan.m == 4);
    REQUIRE(plan.outer.size() == 4);
    for (const auto& p : plan.outer) CHECK(p.size() == 1);
    // multiplicities over {5,6} stay within m-2 = 2
    for (int v = 5; v <= 6; ++v) {
        int mult = 0;
        for (const auto& p : plan.outer) mult += p.contains(v);
        CHECK(mult == 2);
    }
}

TEST_CASE("near-complete upper endpoint uses the halved core") {
    auto plan = make_near_complete_plan(4, 9);
    CHECK(plan.m == 3);
    CHECK(plan.outer[0] == VertexSet::of({4, 5}));
    CHECK(plan.outer[1] == VertexSet::of({6, 7}));
    CHECK(plan.outer[2] == VertexSet::of({8, 9}));
    CHECK(is_uniquely_tau_critical(near_complete_construction(4, 9)).ok);
}

TEST_CASE("near-complete range errors") {
    CHECK_THROWS_WITH_AS(near_complete_construction(4, 10), doctest::Contains("(k+2)^2/4"),
                         std::out_of_range);
    CHECK_THROWS_WITH_AS(near_complete_construction(4, 5), doctest::Contains("(k+2)^2/4"),
                         std::out_of_range);
    CHECK_THROWS_AS(near_complete_construction(3, 5), std::out_of_range);
    CHECK_THROWS_AS(near_complete_construction(2, 4), std::out_of_range);
}

TEST_CASE("near-complete k=3 exists only at n=6") {
    auto h = near_complete_construction(3, 6);
    CHECK(transversal_tau(h) == 2);
    CHECK(is_uniquely_tau_critical(h).ok);
    CHECK(verify_uniquely_saturated(to_saturated(h, 5), 5).ok);
}

TEST_CASE("near-complete satisfies the quadratic feasibility inequality") {
    for (int k : {4, 5, 6, 7})
        for (int n = k + 2; 4 * n <= (k + 2) * (k + 2); ++n) {
            auto plan = make_near_complete_plan(k, n);
            int x = plan.m;
            int t = n - k;
            CHECK(x * (n - x - t + 1) >= n - x);
        }
}

TEST_CASE("larger near-complete instances verify") {
    for (int k : {5, 6}) {
        for (int n = k + 2; 4 * n <= (k + 2) * (k + 2); ++n) {
            auto h = near_complete_construction(k, n);
            CHECK(transversal_tau(h) == 2);
            CHECK(is_uniquely_tau_critical(h).ok);
        }
    }
}
