#include <doctest.h>

#include <functional>

#include "uksat/johnson.hpp"

using namespace uksat;

namespace {

// independent-set check straight from the adjacency definition
bool coloring_proper(const Coloring& c) {
    try {
        c.validate();
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace

TEST_CASE("J(4,2) is the octahedron") {
    auto g = johnson_graph(4, 2);
    CHECK(g.verts.size() == 6);
    for (const auto& nb : g.adj) CHECK(nb.size() == 4);
}

TEST_CASE("J(m,1) is complete") {
    auto g = johnson_graph(5, 1);
    CHECK(g.verts.size() == 5);
    for (const auto& nb : g.adj) CHECK(nb.size() == 4);
}

TEST_CASE("J(5,2) is the triangular graph T(5), the Petersen complement") {
    auto g = johnson_graph(5, 2);
    CHECK(g.verts.size() == 10);
    // 2(5-2) = 6-regular, i.e. the complement of the 3-regular Petersen graph
    for (const auto& nb : g.adj) CHECK(nb.size() == 6);
}

TEST_CASE("johnson graphs are k(m-k)-regular") {
    for (int m = 2; m <= 9; ++m)
        for (int k = 1; k <= m; ++k) {
            auto g = johnson_graph(m, k);
            CHECK(g.verts.size() == binom(m, k));
            for (const auto& nb : g.adj) CHECK(static_cast<int>(nb.size()) == k * (m - k));
        }
    CHECK_THROWS_AS(johnson_graph(3, 4), std::invalid_argument);
}

TEST_CASE("graham-sloane classes for m=4, k=2") {
    auto c = graham_sloane_coloring(4, 2);
    REQUIRE(c.num_classes() == 4);
    // classes keyed by sum mod 4: {13}, {14,23}, {24}, {12,34}
    CHECK(c.classes[0] == std::vector<VertexSet>{VertexSet::of({1, 3})});
    CHECK(c.classes[1] == std::vector<VertexSet>{VertexSet::of({2, 3}), VertexSet::of({1, 4})});
    CHECK(c.classes[2] == std::vector<VertexSet>{VertexSet::of({2, 4})});
    CHECK(c.classes[3] == std::vector<VertexSet>{VertexSet::of({1, 2}), VertexSet::of({3, 4})});
}

TEST_CASE("graham-sloane is a proper partition with at most m classes") {
    for (int m = 1; m <= 12; ++m)
        for (int k = 1; k <= m; ++k) {
            auto c = graham_sloane_coloring(m, k);
            CHECK(coloring_proper(c));
            CHECK(c.num_classes() <= m);
        }
}

TEST_CASE("graham-sloane single vertex cases") {
    auto c = graham_sloane_coloring(3, 3);
    CHECK(c.num_classes() == 1);
    // m=5, k=2: a proper 5-edge-coloring of K_5 in disjoint pairs
    auto c52 = graham_sloane_coloring(5, 2);
    CHECK(c52.num_classes() == 5);
    for (const auto& cls : c52.classes) {
        CHECK(cls.size() == 2);
        CHECK(cls[0].intersect(cls[1]).empty());
    }
}

TEST_CASE("chromatic number closed forms") {
    CHECK(chromatic_number(4, 2).value == 3);
    CHECK(chromatic_number(5, 2).value == 5);
    CHECK(chromatic_number(6, 2).value == 5);
    CHECK(chromatic_number(7, 7).value == 1);
    CHECK(chromatic_number(6, 5).value == 6);
    CHECK(chromatic_number(6, 1).value == 6);
    for (int m = 2; m <= 10; ++m) {
        auto res = chromatic_number(m, 2);
        CHECK(res.status == ChiStatus::Exact);
        CHECK(res.value == (m % 2 == 0 ? m - 1 : m));
        CHECK(coloring_proper(res.coloring));
        CHECK(res.coloring.num_classes() == res.value);
    }
}

TEST_CASE("k=2 closed form matches branch and bound") {
    for (int m = 4; m <= 8; ++m) {
        // decide m-1/m colorability directly on J(m,2)
        auto g = johnson_graph(m, 2);
        auto gs = graham_sloane_coloring(m, 2);
        int closed = chromatic_number(m, 2).value;
        // exhaustive: try every candidate count below the closed form
        for (int c = 1; c < closed; ++c) {
            // greedy DFS over colorings; small enough to be exact
            std::vector<int> color(g.verts.size(), -1);
            std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
                if (v == g.verts.size()) return true;
                int maxused = -1;
                for (std::size_t u = 0; u < g.verts.size(); ++u) maxused = std::max(maxused, color[u]);
                for (int col = 0; col <= std::min(c - 1, maxused + 1); ++col) {
                    bool clash = false;
                    for (int u : g.adj[v])
                        if (color[u] == col) clash = true;
                    if (clash) continue;
                    color[v] = col;
                    if (dfs(v + 1)) return true;
                    color[v] = -1;
                }
                return false;
            };
            CHECK(!dfs(0));
        }
        (void)gs;
    }
}

TEST_CASE("exact chi for small johnson graphs") {
    auto res53 = chromatic_number(5, 3);
    CHECK(res53.status == ChiStatus::Exact);
    CHECK(res53.value == 5);  // J(5,3) ~ J(5,2), the line graph of K_5
    CHECK(coloring_proper(res53.coloring));

    auto res63 = chromatic_number(6, 3);
    CHECK(res63.status == ChiStatus::Exact);
    CHECK(coloring_proper(res63.coloring));
    CHECK(res63.value >= 4);  // clique lower bound m-k+1
    CHECK(res63.value <= 6);

    auto res73 = chromatic_number(7, 3);
    CHECK(res73.status == ChiStatus::Exact);
    CHECK(coloring_proper(res73.coloring));
}

TEST_CASE("budget exhaustion falls back to the graham-sloane bound") {
    auto res = chromatic_number(9, 4, 10);
    CHECK(res.status == ChiStatus::UpperBoundOnly);
    CHECK(res.value == graham_sloane_coloring(9, 4).num_classes());
    CHECK(coloring_proper(res.coloring));
}
