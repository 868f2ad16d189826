#pragma once

// Naive reference implementations used as independent oracles. These follow
// the raw definitions with plain loops and stay clear of the library's
// counting tables and pruned searches.

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "uksat/hypergraph.hpp"

namespace oracle {

using uksat::Mask;
using uksat::UniformHypergraph;
using uksat::VertexSet;

inline std::optional<VertexSet> naive_contains_clique(const UniformHypergraph& h, int r) {
    std::optional<VertexSet> found;
    // lex scan, so the first hit is the lex-least clique
    uksat::for_each_ksubset_lex(h.n(), r, [&](Mask cand) {
        bool all = true;
        uksat::for_each_ksubset_of(cand, h.k(), [&](Mask sub) {
            if (!h.has_edge(VertexSet{sub})) {
                all = false;
                return true;
            }
            return false;
        });
        if (all) {
            found = VertexSet{cand};
            return true;
        }
        return false;
    });
    return found;
}

inline std::vector<VertexSet> naive_completions(const UniformHypergraph& h, VertexSet s_set,
                                                int s) {
    std::vector<VertexSet> out;
    Mask outside = uksat::full_mask(h.n()) & ~s_set.bits;
    uksat::for_each_ksubset_of(outside, s, [&](Mask t) {
        bool good = true;
        uksat::for_each_ksubset_of(s_set.bits | t, h.k(), [&](Mask sub) {
            if (sub != s_set.bits && !h.has_edge(VertexSet{sub})) {
                good = false;
                return true;
            }
            return false;
        });
        if (good) out.push_back(VertexSet{t});
    });
    return out;
}

// Direct transcription of the saturation definition.
inline bool naive_uniquely_saturated(const UniformHypergraph& h, int r) {
    if (naive_contains_clique(h, r)) return false;
    bool ok = true;
    uksat::for_each_ksubset(h.n(), h.k(), [&](Mask m) {
        if (h.has_edge(VertexSet{m})) return;
        if (naive_completions(h, VertexSet{m}, r - h.k()).size() != 1) ok = false;
    });
    if (!ok) return false;
    for (int v = 1; v <= h.n(); ++v) {
        bool dominating = true;
        uksat::for_each_ksubset(h.n(), h.k(), [&](Mask m) {
            if ((m >> (v - 1) & 1) && !h.has_edge(VertexSet{m})) dominating = false;
        });
        if (dominating) return false;
    }
    return true;
}

inline std::vector<Mask> brute_transversals_of_size(const UniformHypergraph& h, int q) {
    std::vector<Mask> out;
    uksat::for_each_ksubset(h.n(), q, [&](Mask cand) {
        for (VertexSet e : h.edges())
            if ((e.bits & cand) == 0) return;
        out.push_back(cand);
    });
    return out;
}

inline int brute_tau(const UniformHypergraph& h) {
    for (int q = 0; q <= h.n(); ++q)
        if (!brute_transversals_of_size(h, q).empty()) return q;
    return h.n();
}

// Three-property check written against edge lists only.
inline bool naive_complementary_ok(int n, int t, int s, const std::vector<Mask>& edges) {
    const int ell = t - s;
    auto cod = [&](Mask w) {
        int c = 0;
        for (Mask e : edges) c += (w & ~e) == 0;
        return c;
    };
    bool ok = true;
    uksat::for_each_ksubset(n, ell, [&](Mask w) {
        if (cod(w) == 0) ok = false;
    });
    if (!ok) return false;
    for (Mask e : edges) {
        int priv = 0;
        uksat::for_each_ksubset_of(e, ell, [&](Mask w) { priv += cod(w) == 1; });
        if (priv != 1) return false;
    }
    for (int v = 1; v <= n; ++v) {
        bool in_all = true;
        for (Mask e : edges)
            if (!(e >> (v - 1) & 1)) in_all = false;
        if (in_all) return false;
    }
    return true;
}

// Exhaustive feasibility decision over all edge subsets.
inline bool brute_existence(int n, int t, int s) {
    std::vector<Mask> all;
    uksat::for_each_ksubset(n, t, [&](Mask m) { all.push_back(m); });
    const std::size_t v = all.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << v); ++pick) {
        std::vector<Mask> edges;
        for (std::size_t i = 0; i < v; ++i)
            if (pick >> i & 1) edges.push_back(all[i]);
        if (naive_complementary_ok(n, t, s, edges)) return true;
    }
    return false;
}

inline UniformHypergraph random_hypergraph(int n, int k, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = unit(rng);
    std::vector<VertexSet> edges;
    uksat::for_each_ksubset(n, k, [&](Mask m) {
        if (unit(rng) < p) edges.push_back(VertexSet{m});
    });
    return {n, k, std::move(edges)};
}

inline UniformHypergraph c5() {
    return {5, 2,
            {VertexSet::of({1, 2}), VertexSet::of({2, 3}), VertexSet::of({3, 4}),
             VertexSet::of({4, 5}), VertexSet::of({1, 5})}};
}

inline UniformHypergraph petersen() {
    std::vector<VertexSet> e = {
        VertexSet::of({1, 2}),  VertexSet::of({2, 3}),  VertexSet::of({3, 4}),
        VertexSet::of({4, 5}),  VertexSet::of({1, 5}),  VertexSet::of({1, 6}),
        VertexSet::of({2, 7}),  VertexSet::of({3, 8}),  VertexSet::of({4, 9}),
        VertexSet::of({5, 10}), VertexSet::of({6, 8}),  VertexSet::of({8, 10}),
        VertexSet::of({7, 10}), VertexSet::of({7, 9}),  VertexSet::of({6, 9}),
    };
    return {10, 2, std::move(e)};
}

// (r-2)-clique joined with an independent set: uniquely saturated but with
// dominating vertices.
inline UniformHypergraph clique_join_independent(int n, int r) {
    std::vector<VertexSet> edges;
    for (int a = 1; a <= r - 2; ++a) {
        for (int b = a + 1; b <= r - 2; ++b) edges.push_back(VertexSet::of({a, b}));
        for (int b = r - 1; b <= n; ++b) edges.push_back(VertexSet::of({a, b}));
    }
    return {n, 2, std::move(edges)};
}

}  // namespace oracle
