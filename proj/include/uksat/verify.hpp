#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uksat/hypergraph.hpp"

namespace uksat {

enum class FailureKind {
    CliqueExists,
    NoCompletion,
    MultipleCompletions,
    DominatingVertex,
    PropertyViolation,
    NotTauCritical,
    MultipleMinTransversals,
};

const char* to_string(FailureKind k);

// Structured result of a verification; ok <=> no failure kind, and a failing
// verdict always carries the lexicographically least violator as witness.
struct Verdict {
    bool ok = true;
    std::optional<FailureKind> kind;
    int property = 0;  // 1..3 for PropertyViolation
    std::optional<VertexSet> witness;
    std::optional<VertexSet> witness2;
    std::optional<int> vertex;
    std::string detail;

    static Verdict pass() { return {}; }
    std::string describe() const;
};

// All s-sets T of V \ S such that every k-subset of S u T other than S is an
// edge. Requires S to be a k-sized non-edge of h and 1 <= s <= n - k.
std::vector<VertexSet> completions(const UniformHypergraph& h, VertexSet s_set, int s);

// Direct-definition check: no K_r^(k), every non-edge has exactly one
// completion, and no dominating vertex. Accepts k < r <= n (r = n is the
// degenerate whole-vertex-set case).
Verdict verify_uniquely_saturated(const UniformHypergraph& h, int r);

// Three-property check on a complementary hypergraph R:
//   1. every (t-s)-set is covered by an edge,
//   2. every edge has exactly one (t-s)-subset covered by no other edge,
//   3. no vertex lies in every edge.
Verdict verify_complementary(const UniformHypergraph& r, int t, int s);

}  // namespace uksat
