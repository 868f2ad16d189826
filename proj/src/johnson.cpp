#include "uksat/johnson.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace uksat {

void Coloring::validate() const {
    if (m < 1 || k < 1 || k > m) throw std::invalid_argument("bad coloring parameters");
    std::uint64_t total = 0;
    std::vector<Mask> seen;
    for (const auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("empty color class");
        for (std::size_t i = 0; i < cls.size(); ++i) {
            VertexSet a = cls[i];
            if (a.size() != k || (a.bits & ~full_mask(m)) != 0)
                throw std::invalid_argument("class member " + to_string(a) +
                                            " is not a k-subset of [m]");
            seen.push_back(a.bits);
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (std::popcount(cls[i].bits & cls[j].bits) == k - 1)
                    throw std::invalid_argument("class not independent: " + to_string(cls[i]) +
                                                " meets " + to_string(cls[j]) + " in k-1 elements");
        }
        total += cls.size();
    }
    if (total != binom(m, k)) throw std::invalid_argument("classes do not cover all k-subsets");
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("a k-subset appears in two classes");
}

JohnsonGraph johnson_graph(int m, int k) {
    if (k < 1 || k > m) throw std::invalid_argument("need 0 < k <= m");
    JohnsonGraph g;
    g.m = m;
    g.k = k;
    for_each_ksubset(m, k, [&](Mask x) { g.verts.push_back(VertexSet{x}); });
    g.adj.resize(g.verts.size());
    for (std::size_t i = 0; i < g.verts.size(); ++i)
        for (std::size_t j = i + 1; j < g.verts.size(); ++j)
            if (std::popcount(g.verts[i].bits & g.verts[j].bits) == k - 1) {
                g.adj[i].push_back(static_cast<int>(j));
                g.adj[j].push_back(static_cast<int>(i));
            }
    return g;
}

Coloring graham_sloane_coloring(int m, int k) {
    if (k < 1 || k > m) throw std::invalid_argument("need 0 < k <= m");
    std::map<int, std::vector<VertexSet>> by_residue;
    for_each_ksubset(m, k, [&](Mask x) {
        int sum = 0;
        for (int v : mask_elements(x)) sum += v;
        by_residue[sum % m].push_back(VertexSet{x});
    });
    Coloring c;
    c.m = m;
    c.k = k;
    for (auto& [res, cls] : by_residue) c.classes.push_back(std::move(cls));
    return c;
}

namespace {

// round-robin 1-factorization of K_m (circle method); for odd m the hub is
// absent and every round is a near-perfect matching
Coloring one_factorization(int m) {
    Coloring c;
    c.m = m;
    c.k = 2;
    if (m % 2 == 0) {
        int mm = m - 1;
        for (int i = 0; i < mm; ++i) {
            std::vector<VertexSet> cls;
            cls.push_back(VertexSet::of({m, i + 1}));
            for (int j = 1; j <= m / 2 - 1; ++j) {
                int a = (i + j) % mm + 1;
                int b = ((i - j) % mm + mm) % mm + 1;
                cls.push_back(VertexSet::of({a, b}));
            }
            c.classes.push_back(std::move(cls));
        }
    } else {
        for (int i = 0; i < m; ++i) {
            std::vector<VertexSet> cls;
            for (int j = 1; j <= (m - 1) / 2; ++j) {
                int a = (i + j) % m + 1;
                int b = ((i - j) % m + m) % m + 1;
                cls.push_back(VertexSet::of({a, b}));
            }
            c.classes.push_back(std::move(cls));
        }
    }
    return c;
}

Coloring singleton_classes(int m, int k) {
    Coloring c;
    c.m = m;
    c.k = k;
    for_each_ksubset(m, k, [&](Mask x) { c.classes.push_back({VertexSet{x}}); });
    return c;
}

struct ColorSearch {
    const JohnsonGraph& g;
    int colors;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::vector<int> color;  // -1 uncolored

    bool run() {
        color.assign(g.verts.size(), -1);
        return dfs(0);
    }

    // DSATUR branching: most distinctly-colored neighbors, lowest colex
    // label first; new colors are introduced in order.
    bool dfs(int colored) {
        if (aborted) return false;
        if (++nodes > budget) {
            aborted = true;
            return false;
        }
        if (colored == static_cast<int>(g.verts.size())) return true;
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < static_cast<int>(g.verts.size()); ++v) {
            if (color[v] >= 0) continue;
            std::uint64_t mask = 0;
            for (int u : g.adj[v])
                if (color[u] >= 0) mask |= std::uint64_t{1} << color[u];
            int sat = std::popcount(mask);
            if (sat > pick_sat) {
                pick_sat = sat;
                pick = v;
            }
        }
        std::uint64_t forbidden = 0;
        int maxused = -1;
        for (int u : g.adj[pick])
            if (color[u] >= 0) forbidden |= std::uint64_t{1} << color[u];
        for (int v = 0; v < static_cast<int>(g.verts.size()); ++v)
            maxused = std::max(maxused, color[v]);
        int limit = std::min(colors - 1, maxused + 1);
        for (int c = 0; c <= limit; ++c) {
            if ((forbidden >> c) & 1) continue;
            color[pick] = c;
            if (dfs(colored + 1)) return true;
            color[pick] = -1;
            if (aborted) return false;
        }
        return false;
    }
};

Coloring coloring_from_assignment(const JohnsonGraph& g, const std::vector<int>& color,
                                  int colors) {
    Coloring c;
    c.m = g.m;
    c.k = g.k;
    c.classes.resize(colors);
    for (std::size_t v = 0; v < g.verts.size(); ++v) c.classes[color[v]].push_back(g.verts[v]);
    std::erase_if(c.classes, [](const auto& cls) { return cls.empty(); });
    return c;
}

}  // namespace

ChromaticResult chromatic_number(int m, int k, std::uint64_t node_budget) {
    if (k < 1 || k > m) throw std::invalid_argument("need 0 < k <= m");
    ChromaticResult res;
    if (k == m) {
        res.value = 1;
        res.coloring = Coloring{m, k, {{VertexSet{full_mask(m)}}}};
        return res;
    }
    if (k == 1 || k == m - 1) {
        res.value = m;  // J(m,1) and J(m,m-1) are complete graphs
        res.coloring = singleton_classes(m, k);
        return res;
    }
    if (k == 2) {
        res.value = m % 2 == 0 ? m - 1 : m;
        res.coloring = one_factorization(m);
        return res;
    }

    JohnsonGraph g = johnson_graph(m, k);
    Coloring gs = graham_sloane_coloring(m, k);
    const int ub = gs.num_classes();
    // all k-sets through a common (k-1)-core are pairwise adjacent
    const int lb = m - k + 1;
    if (ub > 64) {  // color bitmask width
        res.value = ub;
        res.status = ChiStatus::UpperBoundOnly;
        res.coloring = gs;
        return res;
    }
    std::uint64_t used = 0;
    for (int c = lb; c < ub; ++c) {
        ColorSearch s{g, c, node_budget - used, 0, false, {}};
        bool ok = s.run();
        used += s.nodes;
        if (s.aborted) {
            res.value = ub;
            res.status = ChiStatus::UpperBoundOnly;
            res.coloring = gs;
            res.nodes_used = used;
            return res;
        }
        if (ok) {
            res.value = c;
            res.coloring = coloring_from_assignment(g, s.color, c);
            res.nodes_used = used;
            return res;
        }
    }
    res.value = ub;
    res.coloring = gs;
    res.nodes_used = used;
    return res;
}

}  // namespace uksat
