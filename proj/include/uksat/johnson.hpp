#pragma once

#include <cstdint>
#include <vector>

#include "uksat/hypergraph.hpp"

namespace uksat {

// Partition of the k-subsets of [m] into classes that are independent in
// J(m,k): no two sets in a class meet in exactly k-1 elements.
struct Coloring {
    int m = 0;
    int k = 0;
    std::vector<std::vector<VertexSet>> classes;

    int num_classes() const { return static_cast<int>(classes.size()); }
    // Throws invalid_argument when the classes are not a partition of
    // C([m],k) or some class is not independent.
    void validate() const;
};

// J(m,k): vertices are the k-subsets of [m] in colex order, adjacency is
// intersection in exactly k-1 elements. Regular of degree k(m-k).
struct JohnsonGraph {
    int m = 0;
    int k = 0;
    std::vector<VertexSet> verts;
    std::vector<std::vector<int>> adj;
};

JohnsonGraph johnson_graph(int m, int k);

// Proper coloring of J(m,k) by element-sum mod m; at most m classes.
Coloring graham_sloane_coloring(int m, int k);

enum class ChiStatus { Exact, UpperBoundOnly };

struct ChromaticResult {
    int value = 0;
    ChiStatus status = ChiStatus::Exact;
    Coloring coloring;  // a proper coloring with `value` classes
    std::uint64_t nodes_used = 0;
};

// chi(m,k): closed form for k = 2 (chromatic index of K_m), trivial cases
// k in {1, m-1, m}, and otherwise exact branch-and-bound within the node
// budget, falling back to the Graham-Sloane bound with UpperBoundOnly.
ChromaticResult chromatic_number(int m, int k, std::uint64_t node_budget = 2'000'000);

}  // namespace uksat
