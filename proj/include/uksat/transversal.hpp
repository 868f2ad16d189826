#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "uksat/hypergraph.hpp"
#include "uksat/verify.hpp"

namespace uksat {

// Exact minimum-transversal data. `minimum_transversals` holds all minimum
// transversals in colex order, possibly truncated; `count` is always exact.
struct TransversalResult {
    int tau = 0;
    std::vector<VertexSet> minimum_transversals;
    std::uint64_t count = 0;
    bool truncated = false;
};

TransversalResult transversal_number(
    const UniformHypergraph& h,
    std::size_t store_limit = std::numeric_limits<std::size_t>::max());

// Fast decision helpers used by the criticality checks.
int transversal_tau(const UniformHypergraph& h);
bool has_transversal_of_size(const UniformHypergraph& h, int q);

// Number of distinct transversals of exactly the minimum size q = tau(h),
// counted up to `cap`.
std::uint64_t count_min_transversals(const UniformHypergraph& h, int q, std::uint64_t cap);

// ok iff removing any edge drops tau by one and leaves a unique minimum
// transversal; a failing verdict carries the lex-least offending edge.
Verdict is_uniquely_tau_critical(const UniformHypergraph& h);

// Test oracle for the complement equivalence: compares the direct saturation
// verdict on h with the uniquely-tau-critical conditions on its k-uniform
// complement (tau = n-r+1, no isolated vertices). Must always return true.
bool check_saturation_tau_equivalence(const UniformHypergraph& h, int r);

// C(k+tau-1, k-1) + C(k+tau-2, k-1): strict upper bound on the vertex count
// of a k-uniform tau-critical hypergraph with no isolated vertices.
std::uint64_t tuza_bound(int k, int tau);

// C(k+ell, k-1) + C(k+ell-1, k-1) = tuza_bound(k, ell+1): no primitive
// uniquely K_{n-ell}^(k)-saturated hypergraph exists on n >= this.
std::uint64_t nonexistence_bound(int k, int ell);

}  // namespace uksat
