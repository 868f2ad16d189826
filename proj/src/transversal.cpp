#include "uksat/transversal.hpp"

#include <algorithm>
#include <set>
#include <span>

namespace uksat {

namespace {

// Pairwise-disjoint uncovered edges give a lower bound on the vertices still
// needed.
int disjoint_edges_lb(std::span<const Mask> edges, Mask chosen) {
    Mask used = 0;
    int lb = 0;
    for (Mask e : edges) {
        if (e & chosen) continue;
        if (e & used) continue;
        used |= e;
        ++lb;
    }
    return lb;
}

int greedy_cover(std::span<const Mask> edges, int n) {
    std::vector<Mask> open(edges.begin(), edges.end());
    int size = 0;
    while (!open.empty()) {
        int best = 0, bestdeg = -1;
        for (int v = 1; v <= n; ++v) {
            int d = 0;
            for (Mask e : open) d += (e >> (v - 1)) & 1;
            if (d > bestdeg) {
                bestdeg = d;
                best = v;
            }
        }
        Mask b = vbit(best);
        std::erase_if(open, [&](Mask e) { return (e & b) != 0; });
        ++size;
    }
    return size;
}

struct TauSearch {
    std::span<const Mask> edges;
    int n;
    int best;
    Mask best_set = 0;
    std::vector<int> degree_buf;

    // branch on the vertices of the first uncovered edge, highest remaining
    // degree first
    void run(Mask chosen, int size) {
        Mask uncovered_first = 0;
        int open_count = 0;
        for (Mask e : edges)
            if (!(e & chosen)) {
                if (!uncovered_first) uncovered_first = e;
                ++open_count;
            }
        if (!uncovered_first) {
            if (size < best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        (void)open_count;
        if (size + disjoint_edges_lb(edges, chosen) >= best) return;

        std::vector<int> verts = mask_elements(uncovered_first);
        std::vector<std::pair<int, int>> ranked;
        ranked.reserve(verts.size());
        for (int v : verts) {
            int d = 0;
            for (Mask e : edges)
                if (!(e & chosen) && ((e >> (v - 1)) & 1)) ++d;
            ranked.emplace_back(-d, v);
        }
        std::sort(ranked.begin(), ranked.end());
        for (auto [negd, v] : ranked) run(chosen | vbit(v), size + 1);
    }
};

int tau_of_masks(std::span<const Mask> edges, int n, Mask* witness = nullptr) {
    if (edges.empty()) {
        if (witness) *witness = 0;
        return 0;
    }
    TauSearch s{edges, n, greedy_cover(edges, n), 0, {}};
    s.run(0, 0);
    if (witness) *witness = s.best_set;
    return s.best;
}

bool exists_cover_of_size(std::span<const Mask> edges, Mask chosen, int left) {
    Mask uncovered = 0;
    for (Mask e : edges)
        if (!(e & chosen)) {
            uncovered = e;
            break;
        }
    if (!uncovered) return true;
    if (left == 0) return false;
    if (disjoint_edges_lb(edges, chosen) > left) return false;
    for (Mask u = uncovered; u; u &= u - 1) {
        Mask v = u & (~u + 1);
        if (exists_cover_of_size(edges, chosen | v, left - 1)) return true;
    }
    return false;
}

// All transversals of exact size q, deduplicated, counted up to cap and
// stored up to store_limit. Branching only on uncovered edges means a cover
// completing below size q would certify tau < q; callers never ask for that.
void enumerate_exact(std::span<const Mask> edges, Mask chosen, int size, int q,
                     std::uint64_t cap, std::set<Mask>& found, std::uint64_t& count,
                     std::size_t store_limit, std::vector<Mask>& stored) {
    if (count >= cap) return;
    Mask uncovered = 0;
    for (Mask e : edges)
        if (!(e & chosen)) {
            uncovered = e;
            break;
        }
    if (!uncovered) {
        if (size != q)
            throw std::logic_error("cover smaller than the claimed minimum size");
        if (found.insert(chosen).second) {
            ++count;
            if (stored.size() < store_limit) stored.push_back(chosen);
        }
        return;
    }
    if (size == q) return;
    if (size + disjoint_edges_lb(edges, chosen) > q) return;
    for (Mask u = uncovered; u; u &= u - 1) {
        Mask v = u & (~u + 1);
        enumerate_exact(edges, chosen | v, size + 1, q, cap, found, count, store_limit, stored);
        if (count >= cap) return;
    }
}

std::vector<Mask> edge_masks(const UniformHypergraph& h) {
    std::vector<Mask> out;
    out.reserve(h.edge_count());
    for (VertexSet e : h.edges()) out.push_back(e.bits);
    return out;
}

}  // namespace

int transversal_tau(const UniformHypergraph& h) {
    auto es = edge_masks(h);
    return tau_of_masks(es, h.n());
}

bool has_transversal_of_size(const UniformHypergraph& h, int q) {
    if (q < 0) return false;
    auto es = edge_masks(h);
    return exists_cover_of_size(es, 0, q);
}

std::uint64_t count_min_transversals(const UniformHypergraph& h, int q, std::uint64_t cap) {
    auto es = edge_masks(h);
    if (es.empty()) return q == 0 ? 1 : 0;
    if (q == 0) return 0;
    std::set<Mask> found;
    std::uint64_t count = 0;
    std::vector<Mask> stored;
    enumerate_exact(es, 0, 0, q, cap, found, count, 0, stored);
    return count;
}

TransversalResult transversal_number(const UniformHypergraph& h, std::size_t store_limit) {
    TransversalResult res;
    auto es = edge_masks(h);
    res.tau = tau_of_masks(es, h.n());
    if (es.empty()) {
        res.count = 1;
        if (store_limit > 0) res.minimum_transversals.push_back(VertexSet{});
        res.truncated = store_limit == 0;
        return res;
    }
    std::set<Mask> found;
    std::vector<Mask> stored;
    enumerate_exact(es, 0, 0, res.tau, std::numeric_limits<std::uint64_t>::max(), found,
                    res.count, store_limit, stored);
    std::sort(stored.begin(), stored.end());
    for (Mask m : stored) res.minimum_transversals.push_back(VertexSet{m});
    res.truncated = res.count > res.minimum_transversals.size();
    return res;
}

Verdict is_uniquely_tau_critical(const UniformHypergraph& h) {
    if (h.edge_count() == 0)
        throw std::invalid_argument("criticality needs at least one edge");
    auto es = edge_masks(h);
    const int tau = tau_of_masks(es, h.n());

    std::vector<VertexSet> by_lex = h.edges();
    std::sort(by_lex.begin(), by_lex.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
    for (VertexSet e : by_lex) {
        std::vector<Mask> rest;
        rest.reserve(es.size() - 1);
        for (Mask m : es)
            if (m != e.bits) rest.push_back(m);
        std::uint64_t cnt;
        if (tau == 1) {
            cnt = rest.empty() ? 1 : 0;  // only the empty transversal
        } else {
            if (!exists_cover_of_size(rest, 0, tau - 1)) {
                cnt = 0;
            } else {
                std::set<Mask> found;
                std::vector<Mask> stored;
                cnt = 0;
                enumerate_exact(rest, 0, 0, tau - 1, 2, found, cnt, 0, stored);
            }
        }
        if (cnt != 1) {
            Verdict v;
            v.ok = false;
            v.kind = cnt == 0 ? FailureKind::NotTauCritical
                              : FailureKind::MultipleMinTransversals;
            v.witness = e;
            v.detail = cnt == 0 ? "removal keeps tau at " + std::to_string(tau)
                                : "removal leaves several minimum transversals";
            return v;
        }
    }
    return Verdict::pass();
}

bool check_saturation_tau_equivalence(const UniformHypergraph& h, int r) {
    const bool lhs = verify_uniquely_saturated(h, r).ok;
    UniformHypergraph hc = complement_hypergraph(h);
    const int want_tau = h.n() - r + 1;
    bool rhs = !hc.has_isolated_vertex() && has_transversal_of_size(hc, want_tau) &&
               !has_transversal_of_size(hc, want_tau - 1) &&
               hc.edge_count() > 0 && is_uniquely_tau_critical(hc).ok;
    return lhs == rhs;
}

std::uint64_t tuza_bound(int k, int tau) {
    if (k < 2 || tau < 1) throw std::invalid_argument("need k >= 2 and tau >= 1");
    return binom(k + tau - 1, k - 1) + binom(k + tau - 2, k - 1);
}

std::uint64_t nonexistence_bound(int k, int ell) {
    if (k < 2 || ell < 1) throw std::invalid_argument("need k >= 2 and ell >= 1");
    return tuza_bound(k, ell + 1);
}

}  // namespace uksat
