#include "uksat/constructions.hpp"

#include <algorithm>

#include "uksat/transversal.hpp"
#include "uksat/verify.hpp"

namespace uksat {

UniformHypergraph double_star(int n, int k, int r) {
    if (k < 4)
        throw std::invalid_argument("double star needs k >= 4 (violated: k = " +
                                    std::to_string(k) + ")");
    if (!(k < r))
        throw std::invalid_argument("double star needs r > k (violated: r = " +
                                    std::to_string(r) + " <= k = " + std::to_string(k) + ")");
    if (!(r <= 2 * k - 3))
        throw std::invalid_argument("double star needs r <= 2k-3 (violated: r = " +
                                    std::to_string(r) + " > " + std::to_string(2 * k - 3) + ")");
    if (!(n > r))
        throw std::invalid_argument("double star needs n > r (violated: n = " +
                                    std::to_string(n) + " <= r = " + std::to_string(r) + ")");
    const int t = n - k;
    const int s = r - k;

    std::vector<VertexSet> edges;
    // star A: [s] u S for (t-s)-sets S of {s+1..n} that meet {s+1..k-1}
    const Mask s_core = full_mask(s);
    const Mask tail = full_mask(n) & ~s_core;
    const Mask low = full_mask(k - 1) & ~s_core;  // {s+1..k-1}
    for_each_ksubset_of(tail, t - s, [&](Mask sub) {
        if (sub & low) edges.push_back(VertexSet{s_core | sub});
    });
    // star B: X u S for (t-s)-sets S of {n-t..n-s}, X = {n-s+1..n}
    const Mask x_core = full_mask(n) & ~full_mask(n - s);
    const Mask mid = full_mask(n - s) & ~full_mask(n - t - 1);  // {n-t..n-s}
    for_each_ksubset_of(mid, t - s, [&](Mask sub) {
        edges.push_back(VertexSet{x_core | sub});
    });

    UniformHypergraph r_graph(n, t, std::move(edges));
    Verdict v = verify_complementary(r_graph, t, s);
    if (!v.ok)
        throw construction_defect("double star failed its property check: " + v.describe());
    return r_graph;
}

TauConstructionPlan make_tau_plan(int k, int ell, int n, const Coloring* coloring) {
    if (k < 3) throw std::invalid_argument("construction needs k >= 3");
    if (ell < 1) throw std::invalid_argument("construction needs ell >= 1");
    const int core = ell + k - 1;

    Coloring owned;
    if (coloring) {
        if (coloring->m != core || coloring->k != k - 1)
            throw std::invalid_argument("coloring must partition the (k-1)-subsets of [" +
                                        std::to_string(core) + "]");
        coloring->validate();
        owned = *coloring;
    } else {
        owned = chromatic_number(core, k - 1).coloring;
    }

    const int u = owned.num_classes();
    const long lo = long{u} + core;
    const long hi = long(binom(core, k - 1)) + core;
    if (n < lo || n > hi)
        throw std::out_of_range("n = " + std::to_string(n) + " outside the construction range [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");

    TauConstructionPlan plan;
    plan.k = k;
    plan.ell = ell;
    plan.n = n;
    plan.u = u;
    plan.w = n - u - core;
    plan.A = VertexSet{full_mask(core)};
    plan.classes = owned.classes;
    // refine: split the largest class by moving its colex-greatest set into a
    // new singleton class; the intersection property is preserved
    while (static_cast<int>(plan.classes.size()) < u + plan.w) {
        std::size_t largest = 0;
        for (std::size_t i = 1; i < plan.classes.size(); ++i)
            if (plan.classes[i].size() > plan.classes[largest].size()) largest = i;
        auto& cls = plan.classes[largest];
        auto it = std::max_element(cls.begin(), cls.end());
        VertexSet moved = *it;
        cls.erase(it);
        plan.classes.push_back({moved});
    }
    for (int i = 1; i <= u + plan.w; ++i) plan.b.push_back(core + i);
    return plan;
}

UniformHypergraph tau_critical_construction(int k, int ell, int n, const Coloring* coloring) {
    TauConstructionPlan plan = make_tau_plan(k, ell, n, coloring);
    std::vector<VertexSet> edges;
    for (std::size_t i = 0; i < plan.classes.size(); ++i)
        for (VertexSet base : plan.classes[i]) edges.push_back(base.unite(VertexSet::of({plan.b[i]})));
    UniformHypergraph h(n, k, std::move(edges));

    if (h.has_isolated_vertex())
        throw construction_defect("tau-critical construction left an isolated vertex");
    if (transversal_tau(h) != ell + 1)
        throw construction_defect("tau-critical construction missed tau = " +
                                  std::to_string(ell + 1));
    Verdict v = is_uniquely_tau_critical(h);
    if (!v.ok)
        throw construction_defect("tau-critical construction not uniquely critical: " +
                                  v.describe());
    return h;
}

UniformHypergraph to_saturated(const UniformHypergraph& hc, int r) {
    const int n = hc.n();
    if (!(hc.k() < r && r < n))
        throw std::invalid_argument("need k < r < n");
    if (hc.has_isolated_vertex())
        throw std::invalid_argument("complement has an isolated vertex");
    const int want_tau = n - r + 1;
    if (transversal_tau(hc) != want_tau)
        throw std::invalid_argument("complement has tau != n-r+1 = " + std::to_string(want_tau));
    Verdict crit = is_uniquely_tau_critical(hc);
    if (!crit.ok)
        throw std::invalid_argument("complement is not uniquely tau-critical: " + crit.describe());

    UniformHypergraph h = complement_hypergraph(hc);
    Verdict v = verify_uniquely_saturated(h, r);
    if (!v.ok)
        throw construction_defect("reconstructed hypergraph failed saturation: " + v.describe());
    return h;
}

bool near_complete_in_range(int k, int n) {
    if (k == 3) return n == 6;
    if (k < 4) return false;
    return k + 2 <= n && 4 * n <= (k + 2) * (k + 2);
}

NearCompletePlan make_near_complete_plan(int k, int n) {
    if (!near_complete_in_range(k, n)) {
        if (k == 3)
            throw std::out_of_range("for k = 3 only n = 6 is constructible (n = " +
                                    std::to_string(n) + ")");
        throw std::out_of_range("n = " + std::to_string(n) + " outside the range " +
                                std::to_string(k + 2) + " <= n <= (k+2)^2/4 = " +
                                std::to_string((k + 2) * (k + 2) / 4));
    }
    NearCompletePlan plan;
    plan.k = k;
    plan.n = n;
    plan.m = n <= 2 * k ? k : (k + 3) / 2;
    const int m = plan.m;
    plan.A = VertexSet{full_mask(m)};

    if (m == k) {
        // one singleton outer part per edge, dealt round-robin
        const int outer = n - k;
        for (int i = 0; i < m; ++i)
            plan.outer.push_back(VertexSet::of({k + 1 + i % outer}));
    } else {
        const int part = k - m + 1;
        auto range_set = [](int a, int b) {
            VertexSet s;
            for (int v = a; v <= b; ++v) s.add(v);
            return s;
        };
        plan.outer.push_back(range_set(m + 1, k + 1));
        plan.outer.push_back(range_set(k + 2, 2 * k - m + 2));
        std::vector<int> rem;
        for (int v = 2 * k - m + 3; v <= n; ++v) rem.push_back(v);
        std::size_t pos = 0;
        for (int i = 2; i < m; ++i) {
            VertexSet part_set;
            for (int j = 0; j < part; ++j) part_set.add(rem[(pos + j) % rem.size()]);
            pos = (pos + part) % rem.size();
            plan.outer.push_back(part_set);
        }
    }

    // multiplicity check: every outer vertex in >= 1 and <= m-2 parts
    for (int v = m + 1; v <= n; ++v) {
        int mult = 0;
        for (VertexSet p : plan.outer) mult += p.contains(v);
        if (mult < 1)
            throw construction_defect("outer vertex " + std::to_string(v) + " uncovered");
        if (mult > m - 2)
            throw construction_defect("outer vertex " + std::to_string(v) + " in " +
                                      std::to_string(mult) + " > m-2 parts");
    }
    return plan;
}

UniformHypergraph near_complete_construction(int k, int n) {
    NearCompletePlan plan = make_near_complete_plan(k, n);
    std::vector<VertexSet> edges;
    for (int i = 1; i <= plan.m; ++i)
        edges.push_back(plan.A.minus(VertexSet::of({i})).unite(plan.outer[i - 1]));
    UniformHypergraph h(n, k, std::move(edges));

    if (h.has_isolated_vertex())
        throw construction_defect("near-complete construction left an isolated vertex");
    if (transversal_tau(h) != 2)
        throw construction_defect("near-complete construction missed tau = 2");
    Verdict v = is_uniquely_tau_critical(h);
    if (!v.ok)
        throw construction_defect("near-complete construction not uniquely critical: " +
                                  v.describe());
    return h;
}

}  // namespace uksat
