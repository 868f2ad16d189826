#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "uksat/constructions.hpp"
#include "uksat/transversal.hpp"

using namespace uksat;

TEST_CASE("tau of the empty hypergraph is 0 with the empty transversal") {
    auto res = transversal_number(UniformHypergraph::empty(4, 2));
    CHECK(res.tau == 0);
    CHECK(res.count == 1);
    REQUIRE(res.minimum_transversals.size() == 1);
    CHECK(res.minimum_transversals[0] == VertexSet{});
}

TEST_CASE("tau(C5) = 3") {
    auto res = transversal_number(oracle::c5());
    CHECK(res.tau == 3);
    CHECK(res.tau == oracle::brute_tau(oracle::c5()));
    // all minimum transversals, cross-checked against exhaustive enumeration
    auto brute = oracle::brute_transversals_of_size(oracle::c5(), 3);
    CHECK(res.count == brute.size());
}

TEST_CASE("tau of the near-complete core for k=4, n=8 is 2") {
    auto h = near_complete_construction(4, 8);
    CHECK(transversal_tau(h) == 2);
    CHECK(oracle::brute_tau(h) == 2);
}

TEST_CASE("minimum transversal enumeration matches brute force") {
    std::mt19937_64 rng(808);
    for (int iter = 0; iter < 300; ++iter) {
        std::uniform_int_distribution<int> nd(3, 12);
        int n = nd(rng);
        std::uniform_int_distribution<int> kd(2, std::max(2, n - 1));
        int k = std::min(kd(rng), n);
        auto h = oracle::random_hypergraph(n, k, rng);
        auto res = transversal_number(h);
        CHECK(res.tau == oracle::brute_tau(h));
        auto brute = oracle::brute_transversals_of_size(h, res.tau);
        if (h.edge_count() == 0) {
            CHECK(res.count == 1);
            continue;
        }
        REQUIRE(res.count == brute.size());
        REQUIRE(res.minimum_transversals.size() == brute.size());
        for (std::size_t i = 0; i < brute.size(); ++i)
            CHECK(res.minimum_transversals[i].bits == brute[i]);
    }
}

TEST_CASE("removing an edge never increases tau and drops it by at most 1") {
    std::mt19937_64 rng(1214);
    for (int iter = 0; iter < 200; ++iter) {
        auto h = oracle::random_hypergraph(8, 3, rng);
        if (h.edge_count() == 0) continue;
        int tau = transversal_tau(h);
        for (VertexSet e : h.edges()) {
            int tau2 = transversal_tau(h.without_edge(e));
            CHECK(tau2 <= tau);
            CHECK(tau2 >= tau - 1);
        }
    }
}

TEST_CASE("single edge is uniquely tau-critical") {
    UniformHypergraph h(3, 2, {VertexSet::of({1, 2})});
    CHECK(is_uniquely_tau_critical(h).ok);
}

TEST_CASE("complement of C5 is uniquely tau-critical with tau 3") {
    auto hc = complement_hypergraph(oracle::c5());
    CHECK(transversal_tau(hc) == 3);
    CHECK(is_uniquely_tau_critical(hc).ok);
}

TEST_CASE("two disjoint edges are critical but not uniquely so") {
    UniformHypergraph h(4, 2, {VertexSet::of({1, 2}), VertexSet::of({3, 4})});
    Verdict v = is_uniquely_tau_critical(h);
    CHECK(!v.ok);
    CHECK(v.kind == FailureKind::MultipleMinTransversals);
    CHECK(v.witness == VertexSet::of({1, 2}));
}

TEST_CASE("triangle is uniquely tau-critical, the P3 path is not critical") {
    UniformHypergraph triangle(
        3, 2, {VertexSet::of({1, 2}), VertexSet::of({1, 3}), VertexSet::of({2, 3})});
    CHECK(is_uniquely_tau_critical(triangle).ok);

    // removing an end edge of the path keeps tau at 1
    UniformHypergraph path(3, 2, {VertexSet::of({1, 2}), VertexSet::of({2, 3})});
    Verdict v = is_uniquely_tau_critical(path);
    CHECK(!v.ok);
    CHECK(v.kind == FailureKind::NotTauCritical);
    CHECK(v.witness == VertexSet::of({1, 2}));
    CHECK_THROWS_AS(is_uniquely_tau_critical(UniformHypergraph::empty(3, 2)),
                    std::invalid_argument);
}

TEST_CASE("transversals of the complement are complements of cliques") {
    std::mt19937_64 rng(172);
    for (int iter = 0; iter < 200; ++iter) {
        std::uniform_int_distribution<int> nd(4, 9);
        int n = nd(rng);
        std::uniform_int_distribution<int> kd(2, n - 1);
        int k = kd(rng);
        auto h = oracle::random_hypergraph(n, k, rng);
        auto hc = complement_hypergraph(h);
        // max clique size of h = n - tau(h^c); sets below size k are
        // vacuous cliques, so the maximum is at least k-1
        int tau = transversal_tau(hc);
        int maxclq = k - 1;
        for (int r = k; r <= n; ++r)
            if (oracle::naive_contains_clique(h, r)) maxclq = r;
        CHECK(maxclq == n - tau);
    }
}

TEST_CASE("saturation/tau-criticality equivalence on fixed instances") {
    CHECK(check_saturation_tau_equivalence(oracle::c5(), 3));
    CHECK(check_saturation_tau_equivalence(UniformHypergraph::complete(5, 2), 3));
    CHECK(check_saturation_tau_equivalence(oracle::petersen(), 3));
}

TEST_CASE("saturation/tau-criticality equivalence on random instances") {
    std::mt19937_64 rng(90210);
    for (int iter = 0; iter < 2000; ++iter) {
        std::uniform_int_distribution<int> nd(4, 9);
        int n = nd(rng);
        std::uniform_int_distribution<int> kd(2, n - 2);
        int k = kd(rng);
        std::uniform_int_distribution<int> rd(k + 1, n - 1);
        int r = rd(rng);
        auto h = oracle::random_hypergraph(n, k, rng);
        CHECK(check_saturation_tau_equivalence(h, r));
    }
}

TEST_CASE("bound formulas") {
    CHECK(tuza_bound(2, 2) == 5);
    CHECK(tuza_bound(2, 3) == 7);
    CHECK(tuza_bound(3, 2) == 9);
    CHECK(nonexistence_bound(2, 1) == 5);
    CHECK(nonexistence_bound(3, 2) == 16);
    CHECK(nonexistence_bound(2, 8) == 19);
    CHECK(nonexistence_bound(2, 3) == tuza_bound(2, 4));
    CHECK_THROWS_AS(tuza_bound(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(nonexistence_bound(2, 0), std::invalid_argument);
}
