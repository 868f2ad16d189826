#include "uksat/verify.hpp"

#include <algorithm>
#include <unordered_map>

#include "subset_counts.hpp"

namespace uksat {

const char* to_string(FailureKind k) {
    switch (k) {
        case FailureKind::CliqueExists: return "CliqueExists";
        case FailureKind::NoCompletion: return "NoCompletion";
        case FailureKind::MultipleCompletions: return "MultipleCompletions";
        case FailureKind::DominatingVertex: return "DominatingVertex";
        case FailureKind::PropertyViolation: return "PropertyViolation";
        case FailureKind::NotTauCritical: return "NotTauCritical";
        case FailureKind::MultipleMinTransversals: return "MultipleMinTransversals";
    }
    return "?";
}

std::string Verdict::describe() const {
    if (ok) return "ok";
    std::string out = to_string(*kind);
    if (kind == FailureKind::PropertyViolation) out += " " + std::to_string(property);
    if (witness) out += ", witness " + to_string(*witness);
    if (witness2) out += " / " + to_string(*witness2);
    if (vertex) out += ", vertex " + std::to_string(*vertex);
    if (!detail.empty()) out += " (" + detail + ")";
    return out;
}

namespace {

// Completion test through the non-edge counter: T completes S iff S is the
// only non-edge inside S u T.
bool completes(const SubsetCounter& cnt, Mask s_mask, Mask t_mask) {
    return cnt.count(s_mask | t_mask) == 1;
}

bool completes_direct(const UniformHypergraph& h, Mask s_mask, Mask t_mask) {
    bool ok = true;
    for_each_ksubset_of(s_mask | t_mask, h.k(), [&](Mask sub) {
        if (sub != s_mask && !h.has_edge(VertexSet{sub})) {
            ok = false;
            return true;
        }
        return false;
    });
    return ok;
}

std::vector<Mask> nonedge_masks(const UniformHypergraph& h) {
    std::vector<Mask> ne;
    ne.reserve(binom(h.n(), h.k()) - h.edge_count());
    for_each_ksubset(h.n(), h.k(), [&](Mask m) {
        if (!h.has_edge(VertexSet{m})) ne.push_back(m);
    });
    return ne;
}

}  // namespace

std::vector<VertexSet> completions(const UniformHypergraph& h, VertexSet s_set, int s) {
    if (s_set.size() != h.k())
        throw std::invalid_argument("completion base must be a k-set");
    if ((s_set.bits & ~full_mask(h.n())) != 0)
        throw std::invalid_argument("completion base leaves the vertex set");
    if (h.has_edge(s_set))
        throw std::invalid_argument("completions are defined for non-edges only");
    if (s < 1 || s > h.n() - h.k())
        throw std::invalid_argument("completion size must satisfy 1 <= s <= n-k");

    const Mask outside = full_mask(h.n()) & ~s_set.bits;
    std::vector<VertexSet> out;
    if (h.n() <= kDenseSubsetLimit) {
        SubsetCounter cnt = SubsetCounter::of_nonedges(h);
        for_each_ksubset_of(outside, s, [&](Mask t) {
            if (completes(cnt, s_set.bits, t)) out.push_back(VertexSet{t});
        });
    } else {
        for_each_ksubset_of(outside, s, [&](Mask t) {
            if (completes_direct(h, s_set.bits, t)) out.push_back(VertexSet{t});
        });
    }
    return out;
}

Verdict verify_uniquely_saturated(const UniformHypergraph& h, int r) {
    const int n = h.n();
    const int k = h.k();
    if (!(k < r && r <= n))
        throw std::invalid_argument("clique size must satisfy k < r <= n");
    const int s = r - k;
    const bool dense = n <= kDenseSubsetLimit;

    std::vector<Mask> nonedges = nonedge_masks(h);
    SubsetCounter cnt;
    if (dense) cnt = SubsetCounter::of_masks(n, nonedges);

    // (a) K_r-freeness; the DFS visits r-sets in lex order.
    if (dense) {
        Mask w = 0;
        struct Rec {
            const SubsetCounter& c;
            int n, r;
            Mask& out;
            bool go(Mask cur, int next, int need) {
                if (need == 0) {
                    out = cur;
                    return true;
                }
                for (int v = next; v <= n - need + 1; ++v) {
                    Mask ext = cur | vbit(v);
                    if (c.count(ext) == 0 && go(ext, v + 1, need - 1)) return true;
                }
                return false;
            }
        } rec{cnt, n, r, w};
        if (rec.go(0, 1, r)) {
            Verdict v;
            v.ok = false;
            v.kind = FailureKind::CliqueExists;
            v.witness = VertexSet{w};
            return v;
        }
    } else if (auto clique = contains_clique(h, r)) {
        Verdict v;
        v.ok = false;
        v.kind = FailureKind::CliqueExists;
        v.witness = *clique;
        return v;
    }

    // (b) every non-edge has exactly one completion; lex scan makes the first
    // violator the least one.
    std::sort(nonedges.begin(), nonedges.end(),
              [](Mask a, Mask b) { return lex_less(a, b); });
    for (Mask ne : nonedges) {
        const Mask outside = full_mask(n) & ~ne;
        int found = 0;
        Mask second = 0;
        for_each_ksubset_of(outside, s, [&](Mask t) {
            bool good = dense ? completes(cnt, ne, t) : completes_direct(h, ne, t);
            if (good) {
                ++found;
                if (found == 2) {
                    second = t;
                    return true;
                }
            }
            return false;
        });
        if (found != 1) {
            Verdict v;
            v.ok = false;
            v.kind = found == 0 ? FailureKind::NoCompletion : FailureKind::MultipleCompletions;
            v.witness = VertexSet{ne};
            if (found >= 2) v.witness2 = VertexSet{second};
            return v;
        }
    }

    // (c) primitivity.
    std::vector<int> deg(n + 1, 0);
    for (VertexSet e : h.edges())
        for (int v : e.elements()) ++deg[v];
    const std::uint64_t domdeg = binom(n - 1, k - 1);
    for (int v = 1; v <= n; ++v) {
        if (std::uint64_t(deg[v]) == domdeg) {
            Verdict ver;
            ver.ok = false;
            ver.kind = FailureKind::DominatingVertex;
            ver.vertex = v;
            return ver;
        }
    }
    return Verdict::pass();
}

Verdict verify_complementary(const UniformHypergraph& r, int t, int s) {
    const int n = r.n();
    if (r.k() != t)
        throw std::invalid_argument("uniformity mismatch: hypergraph is " +
                                    std::to_string(r.k()) + "-uniform, expected " +
                                    std::to_string(t));
    if (!(1 <= s && s < t)) throw std::invalid_argument("need 1 <= s < t");
    const int ell = t - s;

    // codegree counts capped at 2; only the 0/1/>=2 distinction matters here
    const bool dense = n <= kDenseSubsetLimit;
    std::vector<std::uint8_t> table;
    std::unordered_map<Mask, std::uint8_t> sparse;
    auto bump = [&](Mask m) {
        std::uint8_t& c = dense ? table[m] : sparse[m];
        if (c < 2) ++c;
    };
    auto covers = [&](Mask m) -> int {
        if (dense) return table[m];
        auto it = sparse.find(m);
        return it == sparse.end() ? 0 : it->second;
    };
    if (dense) table.assign(std::size_t{1} << n, 0);
    for (VertexSet e : r.edges())
        for_each_ksubset_of(e.bits, ell, [&](Mask sub) { bump(sub); });

    // Property 1
    Verdict v1;
    for_each_ksubset_lex(n, ell, [&](Mask w) {
        if (covers(w) == 0) {
            v1.ok = false;
            v1.kind = FailureKind::PropertyViolation;
            v1.property = 1;
            v1.witness = VertexSet{w};
            return true;
        }
        return false;
    });
    if (!v1.ok) return v1;

    // Property 2, edges scanned in lex order
    std::vector<VertexSet> by_lex = r.edges();
    std::sort(by_lex.begin(), by_lex.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
    for (VertexSet e : by_lex) {
        int privates = 0;
        for_each_ksubset_of(e.bits, ell, [&](Mask sub) { privates += covers(sub) == 1; });
        if (privates != 1) {
            Verdict v;
            v.ok = false;
            v.kind = FailureKind::PropertyViolation;
            v.property = 2;
            v.witness = e;
            v.detail = std::to_string(privates) + " private " + std::to_string(ell) + "-subsets";
            return v;
        }
    }

    // Property 3
    Mask common = full_mask(n);
    for (VertexSet e : r.edges()) common &= e.bits;
    if (r.edge_count() == 0) common = full_mask(n);
    if (common != 0) {
        Verdict v;
        v.ok = false;
        v.kind = FailureKind::PropertyViolation;
        v.property = 3;
        v.vertex = std::countr_zero(common) + 1;
        return v;
    }
    return Verdict::pass();
}

}  // namespace uksat
