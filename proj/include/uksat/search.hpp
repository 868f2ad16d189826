#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "uksat/hypergraph.hpp"

namespace uksat {

// Variable layout of the feasibility model for parameters (n, t, s):
// one binary edge variable x_T per t-subset of [n] and one derived codegree
// indicator y_S per (t-s)-subset, with the constraints
//   (C1) every S is covered by a chosen T,
//   (C2) y_S = 1 iff exactly one chosen T contains S,
//   (C3) every chosen T contains exactly one S with y_S = 1,
//   (C4) every vertex is avoided by some chosen T.
struct ConstraintModel {
    int n = 0;
    int t = 0;
    int s = 0;
    int ell = 0;  // t - s
    std::vector<Mask> edge_vars;      // colex order
    std::vector<Mask> codegree_vars;  // colex order
    std::vector<std::vector<std::int32_t>> subs_of_edge;   // edge -> codegree ids
    std::vector<std::vector<std::int32_t>> covers_of_sub;  // codegree id -> edges
    std::vector<std::vector<std::int32_t>> avoiders_of_vertex;  // 1-based vertex -> edges
};

ConstraintModel build_model(int n, int t, int s);

struct SearchOptions {
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    double time_budget_s = 0;  // 0 = unlimited
    bool symmetry = false;     // fix the colex-least edge {1..t} as chosen
    bool all_solutions = false;  // n <= 7 only
    int threads = 1;
    bool deterministic = true;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    double wall_s = 0;
};

enum class SearchStatus { Sat, Unsat, Aborted };

const char* to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::Aborted;
    std::optional<UniformHypergraph> certificate;
    std::vector<UniformHypergraph> all;  // populated in all-solutions mode
    SearchStats stats;
};

// Complete existence decision for a complementary hypergraph with parameters
// (n, t, s): SAT returns a certificate passing the three-property check,
// UNSAT is exhaustive, and budget exhaustion is Aborted, never UNSAT.
SearchResult solve_existence(int n, int t, int s, const SearchOptions& opt = {});

enum class CellStatus { Exists, NotExists, BoundExcluded, Unknown };
enum class CellProvenance { Bound, Thm32, Thm45, Thm51, Search, None };

const char* to_string(CellStatus s);
const char* to_string(CellProvenance p);

struct TableCell {
    int ell = 0;
    int s = 0;
    int n = 0;
    int r = 0;
    int t = 0;
    CellStatus status = CellStatus::Unknown;
    CellProvenance prov = CellProvenance::None;
    SearchStats stats;
};

struct ExistenceTable {
    int k = 0;
    int max_ell = 0;
    int max_s = 0;
    std::vector<std::vector<TableCell>> cells;  // [ell-1][s-1]
    // per-row report: SAT cells precede UNSAT cells among decided ones
    std::vector<bool> row_monotone;
};

// Existence per cell (ell = n-r rows, s = r-k columns): bound-excluded cells
// are never searched, construction ranges are materialized and verified, and
// the rest is decided by solve_existence within the per-cell budget.
ExistenceTable existence_table(int k, int max_ell, int max_s, const SearchOptions& per_cell = {});

}  // namespace uksat
