#include "uksat/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "subset_counts.hpp"

namespace uksat {

std::uint64_t binom(int n, int k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 64>, 64> t{};
        for (int i = 0; i < 64; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (n < 0 || k < 0 || k > n || n > 63) return 0;
    return table[n][k];
}

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.add(v);
    return s;
}

std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.elements()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

std::ostream& operator<<(std::ostream& os, VertexSet s) { return os << to_string(s); }

UniformHypergraph::UniformHypergraph(int n, int k, std::vector<VertexSet> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
    if (n < 1 || n > 64) throw std::invalid_argument("vertex count must be in [1,64]");
    if (k < 1 || k > n) throw std::invalid_argument("uniformity must satisfy 1 <= k <= n");
    const Mask universe = full_mask(n_);
    for (VertexSet e : edges_) {
        if ((e.bits & ~universe) != 0)
            throw std::invalid_argument("edge " + to_string(e) + " leaves the vertex set");
        if (e.size() != k_)
            throw std::invalid_argument("edge " + to_string(e) + " is not a " +
                                        std::to_string(k_) + "-set");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
}

UniformHypergraph UniformHypergraph::empty(int n, int k) { return {n, k, {}}; }

UniformHypergraph UniformHypergraph::complete(int n, int k) {
    std::vector<VertexSet> es;
    es.reserve(binom(n, k));
    for_each_ksubset(n, k, [&](Mask m) { es.push_back(VertexSet{m}); });
    return {n, k, std::move(es)};
}

bool UniformHypergraph::has_edge(VertexSet e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int UniformHypergraph::degree(int v) const {
    int d = 0;
    for (VertexSet e : edges_) d += e.contains(v);
    return d;
}

bool UniformHypergraph::has_isolated_vertex() const {
    Mask covered = 0;
    for (VertexSet e : edges_) covered |= e.bits;
    return covered != full_mask(n_);
}

UniformHypergraph UniformHypergraph::without_edge(VertexSet e) const {
    std::vector<VertexSet> es;
    es.reserve(edges_.size());
    for (VertexSet x : edges_)
        if (x != e) es.push_back(x);
    if (es.size() == edges_.size())
        throw std::invalid_argument("edge " + to_string(e) + " not present");
    return {n_, k_, std::move(es)};
}

ProblemParams ProblemParams::make(int n, int k, int r) {
    if (!(2 <= k && k < r && r < n))
        throw std::invalid_argument("parameters must satisfy 2 <= k < r < n");
    return {n, k, r, n - k, r - k, n - r};
}

UniformHypergraph complement_hypergraph(const UniformHypergraph& h) {
    std::vector<VertexSet> es;
    es.reserve(binom(h.n(), h.k()) - h.edge_count());
    for_each_ksubset(h.n(), h.k(), [&](Mask m) {
        if (!h.has_edge(VertexSet{m})) es.push_back(VertexSet{m});
    });
    return {h.n(), h.k(), std::move(es)};
}

UniformHypergraph complementary_hypergraph(const UniformHypergraph& h) {
    if (h.k() == h.n())
        throw std::invalid_argument("complementary hypergraph undefined for k = n");
    const Mask universe = full_mask(h.n());
    std::vector<VertexSet> es;
    es.reserve(binom(h.n(), h.k()) - h.edge_count());
    for_each_ksubset(h.n(), h.k(), [&](Mask m) {
        if (!h.has_edge(VertexSet{m})) es.push_back(VertexSet{universe & ~m});
    });
    return {h.n(), h.n() - h.k(), std::move(es)};
}

std::uint64_t codegree(const UniformHypergraph& r, VertexSet s) {
    if (s.size() > r.k())
        throw std::invalid_argument("codegree set larger than the uniformity");
    std::uint64_t c = 0;
    for (VertexSet e : r.edges()) c += s.subset_of(e);
    return c;
}

bool is_dominating_vertex(const UniformHypergraph& h, int v) {
    if (v < 1 || v > h.n()) throw std::invalid_argument("vertex out of range");
    return std::uint64_t(h.degree(v)) == binom(h.n() - 1, h.k() - 1);
}

namespace {

// Lex-order DFS for an r-set free of marked (non-edge) subsets; the dense
// counter gives O(1) monotone pruning, so the first hit is the lex-least.
bool clique_dfs_dense(const SubsetCounter& cnt, int n, int r, Mask cur, int next, int need,
                      Mask& out) {
    if (need == 0) {
        out = cur;
        return true;
    }
    for (int v = next; v <= n - need + 1; ++v) {
        Mask ext = cur | vbit(v);
        if (cnt.count(ext) == 0 &&
            clique_dfs_dense(cnt, n, r, ext, v + 1, need - 1, out))
            return true;
    }
    return false;
}

bool clique_dfs_lists(const std::vector<std::vector<Mask>>& per_vertex, int n, int r, Mask cur,
                      int next, int need, Mask& out) {
    if (need == 0) {
        out = cur;
        return true;
    }
    for (int v = next; v <= n - need + 1; ++v) {
        bool ok = true;
        for (Mask ne : per_vertex[v])
            if ((ne & ~(cur | vbit(v))) == 0) {
                ok = false;
                break;
            }
        if (ok && clique_dfs_lists(per_vertex, n, r, cur | vbit(v), v + 1, need - 1, out))
            return true;
    }
    return false;
}

}  // namespace

std::optional<VertexSet> contains_clique(const UniformHypergraph& h, int r) {
    if (r < h.k() || r > h.n())
        throw std::invalid_argument("clique size must satisfy k <= r <= n");
    Mask found = 0;
    if (h.n() <= kDenseSubsetLimit) {
        SubsetCounter cnt = SubsetCounter::of_nonedges(h);
        if (clique_dfs_dense(cnt, h.n(), r, 0, 1, r, found)) return VertexSet{found};
        return std::nullopt;
    }
    std::vector<std::vector<Mask>> per_vertex(h.n() + 1);
    for_each_ksubset(h.n(), h.k(), [&](Mask m) {
        if (!h.has_edge(VertexSet{m}))
            for (Mask u = m; u; u &= u - 1) per_vertex[std::countr_zero(u) + 1].push_back(m);
    });
    if (clique_dfs_lists(per_vertex, h.n(), r, 0, 1, r, found)) return VertexSet{found};
    return std::nullopt;
}

// --- .uhg io ---

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

UniformHypergraph read_uhg(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, k = -1;
    long m = -1;
    std::vector<VertexSet> edges;
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> k >> m)) throw uhg_parse_error(lineno, "expected header 'n k m'");
            std::string extra;
            if (ls >> extra) throw uhg_parse_error(lineno, "trailing content after header");
            if (n < 1 || n > 64) throw uhg_parse_error(lineno, "vertex count out of range [1,64]");
            if (k < 1 || k > n) throw uhg_parse_error(lineno, "uniformity out of range [1,n]");
            if (m < 0) throw uhg_parse_error(lineno, "negative edge count");
            continue;
        }
        if (seen == m) throw uhg_parse_error(lineno, "more edge lines than the header's m");
        VertexSet e;
        int prev = 0;
        for (int i = 0; i < k; ++i) {
            int v;
            if (!(ls >> v)) throw uhg_parse_error(lineno, "expected " + std::to_string(k) +
                                                              " vertex labels");
            if (v < 1 || v > n) throw uhg_parse_error(lineno, "vertex label out of range");
            if (v <= prev) throw uhg_parse_error(lineno, "labels must be strictly increasing");
            e.add(v);
            prev = v;
        }
        std::string extra;
        if (ls >> extra) throw uhg_parse_error(lineno, "trailing content after edge");
        edges.push_back(e);
        ++seen;
    }
    if (n < 0) throw uhg_parse_error(lineno, "missing header");
    if (seen != m)
        throw uhg_parse_error(lineno, "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(seen));
    std::vector<VertexSet> check = edges;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        throw uhg_parse_error(lineno, "duplicate edge");
    return {n, k, std::move(edges)};
}

UniformHypergraph read_uhg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_uhg(in);
}

void write_uhg(std::ostream& out, const UniformHypergraph& h) {
    out << h.n() << ' ' << h.k() << ' ' << h.edge_count() << '\n';
    for (VertexSet e : h.edges()) {
        bool first = true;
        for (int v : e.elements()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

void write_uhg_file(const std::string& path, const UniformHypergraph& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_uhg(out, h);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace uksat
