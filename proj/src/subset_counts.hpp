#pragma once

#include <cstdint>
#include <vector>

#include "uksat/hypergraph.hpp"

namespace uksat {

// Largest n for which 2^n-sized tables are used; beyond this the callers
// fall back to list scans.
constexpr int kDenseSubsetLimit = 22;

// Dense table over the subset lattice of {1..n}: count(X) = number of marked
// sets contained in X (zeta transform of the marked-set indicator).
struct SubsetCounter {
    int n = 0;
    std::vector<std::uint32_t> cnt;

    static SubsetCounter of_masks(int n, const std::vector<Mask>& marked) {
        SubsetCounter c;
        c.n = n;
        c.cnt.assign(std::size_t{1} << n, 0);
        for (Mask m : marked) c.cnt[m] = 1;
        for (int i = 0; i < n; ++i) {
            const Mask b = Mask{1} << i;
            for (Mask x = 0; x < (Mask{1} << n); ++x)
                if (x & b) c.cnt[x] += c.cnt[x ^ b];
        }
        return c;
    }

    // Marks the non-edges of h.
    static SubsetCounter of_nonedges(const UniformHypergraph& h) {
        std::vector<Mask> ne;
        ne.reserve(binom(h.n(), h.k()) - h.edge_count());
        for_each_ksubset(h.n(), h.k(), [&](Mask m) {
            if (!h.has_edge(VertexSet{m})) ne.push_back(m);
        });
        return of_masks(h.n(), ne);
    }

    std::uint32_t count(Mask x) const { return cnt[x]; }
};

}  // namespace uksat
