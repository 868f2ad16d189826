#pragma once

#include <stdexcept>
#include <vector>

#include "uksat/hypergraph.hpp"
#include "uksat/johnson.hpp"

namespace uksat {

// A construction whose mandatory re-verification failed; this is a bug in
// the builder, never a value.
struct construction_defect : std::logic_error {
    using std::logic_error::logic_error;
};

// Plan behind tau_critical_construction: A carries ell+k-1 core vertices,
// B one vertex per refined class of the (k-1)-subsets of A.
struct TauConstructionPlan {
    int k = 0;
    int ell = 0;
    int n = 0;
    int u = 0;  // classes of the base coloring
    int w = 0;  // n - u - (ell+k-1), extra singleton classes
    VertexSet A;
    std::vector<int> b;  // b_1..b_{u+w}
    std::vector<std::vector<VertexSet>> classes;
};

// Plan behind near_complete_construction: edges e_i = (A \ {i}) u outer[i].
struct NearCompletePlan {
    int k = 0;
    int n = 0;
    int m = 0;  // |A|
    VertexSet A;
    std::vector<VertexSet> outer;  // one (k-m+1)-set per i in [m]
};

// Star-pair complementary hypergraph: a (n-k)-uniform R on [n] passing the
// three-property check, so its reconstruction is primitive uniquely
// K_r^(k)-saturated. Requires k >= 4, k < r <= 2k-3, n > r.
UniformHypergraph double_star(int n, int k, int r);

TauConstructionPlan make_tau_plan(int k, int ell, int n, const Coloring* coloring = nullptr);

// Uniquely tau-critical k-uniform hypergraph with tau = ell+1 on n vertices,
// for n between (#classes)+ell+k-1 and C(ell+k-1,k-1)+ell+k-1. When no
// coloring is supplied, an exact chi coloring is attempted first and the
// Graham-Sloane coloring is the fallback.
UniformHypergraph tau_critical_construction(int k, int ell, int n,
                                            const Coloring* coloring = nullptr);

// Complement of a verified uniquely tau-critical hypergraph with
// tau = n-r+1 and no isolated vertices; re-verified as uniquely
// K_r^(k)-saturated before return.
UniformHypergraph to_saturated(const UniformHypergraph& hc, int r);

bool near_complete_in_range(int k, int n);

NearCompletePlan make_near_complete_plan(int k, int n);

// Uniquely tau-critical hypergraph with tau = 2 whose complement is
// primitive uniquely K_{n-1}^(k)-saturated; defined for k >= 4 and
// k+2 <= n <= (k+2)^2/4, and for k = 3 only at n = 6.
UniformHypergraph near_complete_construction(int k, int n);

}  // namespace uksat
