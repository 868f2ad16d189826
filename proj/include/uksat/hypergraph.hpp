#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uksat/bits.hpp"

namespace uksat {

// A subset of the vertex labels {1..n} of some hypergraph.
struct VertexSet {
    Mask bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask m) : bits(m) {}

    static VertexSet of(std::initializer_list<int> vertices);

    constexpr bool contains(int v) const { return (bits >> (v - 1)) & 1; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr VertexSet unite(VertexSet o) const { return VertexSet{bits | o.bits}; }
    constexpr VertexSet intersect(VertexSet o) const { return VertexSet{bits & o.bits}; }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet{bits & ~o.bits}; }
    constexpr VertexSet complement_in(int n) const { return VertexSet{full_mask(n) & ~bits}; }
    VertexSet& add(int v) {
        bits |= vbit(v);
        return *this;
    }
    VertexSet& remove(int v) {
        bits &= ~vbit(v);
        return *this;
    }
    // Smallest vertex label, 0 when empty.
    int min_vertex() const { return bits == 0 ? 0 : std::countr_zero(bits) + 1; }
    std::vector<int> elements() const { return mask_elements(bits); }

    // Numeric order on masks = colex order on sets of equal size.
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) = default;
};

inline bool lex_less(VertexSet a, VertexSet b) { return lex_less(a.bits, b.bits); }

std::string to_string(VertexSet s);
std::ostream& operator<<(std::ostream& os, VertexSet s);

// Immutable k-uniform hypergraph on labeled vertices {1..n}.
// Edges are stored colex-sorted and distinct; all operations are pure.
class UniformHypergraph {
public:
    UniformHypergraph(int n, int k, std::vector<VertexSet> edges);

    static UniformHypergraph empty(int n, int k);
    static UniformHypergraph complete(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(VertexSet e) const;
    int degree(int v) const;
    bool has_isolated_vertex() const;
    UniformHypergraph without_edge(VertexSet e) const;

    friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) = default;

private:
    int n_;
    int k_;
    std::vector<VertexSet> edges_;
};

// Derived parameter bundle for the saturation problem on (n, k, r).
struct ProblemParams {
    int n;
    int k;
    int r;
    int t;    // n - k
    int s;    // r - k
    int ell;  // n - r

    static ProblemParams make(int n, int k, int r);
};

// k-uniform complement: same n and k, edge set C([n],k) \ E(H).
UniformHypergraph complement_hypergraph(const UniformHypergraph& h);

// (n-k)-uniform hypergraph whose edges are the complements of the non-edges
// of H; the transform is an involution. Rejects k == n.
UniformHypergraph complementary_hypergraph(const UniformHypergraph& h);

// Number of edges of R containing S. Requires |S| <= uniformity of R.
std::uint64_t codegree(const UniformHypergraph& r, VertexSet s);

// True iff every k-set through v is an edge, i.e. deg(v) = C(n-1, k-1).
bool is_dominating_vertex(const UniformHypergraph& h, int v);

// Some r-set whose k-subsets are all edges, or nullopt. Exact; the witness
// returned is the lexicographically least such set.
std::optional<VertexSet> contains_clique(const UniformHypergraph& h, int r);

// --- ".uhg" text format ---
// line 1: "n k m"; then m lines of k space-separated increasing 1-based
// labels, lines sorted colex; '#' starts a comment line.

struct uhg_parse_error : std::runtime_error {
    int line;
    uhg_parse_error(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

UniformHypergraph read_uhg(std::istream& in);
UniformHypergraph read_uhg_file(const std::string& path);
void write_uhg(std::ostream& out, const UniformHypergraph& h);
void write_uhg_file(const std::string& path, const UniformHypergraph& h);

}  // namespace uksat
