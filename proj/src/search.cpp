#include "uksat/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "uksat/constructions.hpp"
#include "uksat/johnson.hpp"
#include "uksat/transversal.hpp"
#include "uksat/verify.hpp"

namespace uksat {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Sat: return "SAT";
        case SearchStatus::Unsat: return "UNSAT";
        case SearchStatus::Aborted: return "ABORTED";
    }
    return "?";
}

const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::Exists: return "Y";
        case CellStatus::NotExists: return "N";
        case CellStatus::BoundExcluded: return "N";
        case CellStatus::Unknown: return "?";
    }
    return "?";
}

const char* to_string(CellProvenance p) {
    switch (p) {
        case CellProvenance::Bound: return "bound";
        case CellProvenance::Thm32: return "thm3.2";
        case CellProvenance::Thm45: return "thm4.5";
        case CellProvenance::Thm51: return "thm5.1";
        case CellProvenance::Search: return "search";
        case CellProvenance::None: return "none";
    }
    return "?";
}

ConstraintModel build_model(int n, int t, int s) {
    if (!(1 <= s && s < t && t < n))
        throw std::invalid_argument("model needs 1 <= s < t < n");
    if (n > 30 || binom(n, t) > 2'000'000 || binom(n, t - s) > 2'000'000)
        throw std::invalid_argument("model too large for exact search");
    ConstraintModel m;
    m.n = n;
    m.t = t;
    m.s = s;
    m.ell = t - s;
    for_each_ksubset(n, t, [&](Mask x) { m.edge_vars.push_back(x); });
    for_each_ksubset(n, m.ell, [&](Mask y) { m.codegree_vars.push_back(y); });

    std::vector<std::int32_t> rank(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < m.codegree_vars.size(); ++i)
        rank[m.codegree_vars[i]] = static_cast<std::int32_t>(i);

    m.subs_of_edge.resize(m.edge_vars.size());
    m.covers_of_sub.resize(m.codegree_vars.size());
    m.avoiders_of_vertex.resize(n + 1);
    for (std::size_t i = 0; i < m.edge_vars.size(); ++i) {
        for_each_ksubset_of(m.edge_vars[i], m.ell, [&](Mask sub) {
            std::int32_t y = rank[sub];
            m.subs_of_edge[i].push_back(y);
            m.covers_of_sub[y].push_back(static_cast<std::int32_t>(i));
        });
        for (int v = 1; v <= n; ++v)
            if (!(m.edge_vars[i] >> (v - 1) & 1))
                m.avoiders_of_vertex[v].push_back(static_cast<std::int32_t>(i));
    }
    return m;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    std::atomic<std::uint64_t>* nodes = nullptr;
    std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
    Clock::time_point deadline{};
    bool has_deadline = false;
    const std::atomic<std::size_t>* cancel_below = nullptr;  // parallel cancellation
    std::size_t my_index = 0;

    bool exhausted() const {
        if (nodes && nodes->load(std::memory_order_relaxed) > node_limit) return true;
        if (has_deadline && Clock::now() > deadline) return true;
        return false;
    }
    bool cancelled() const {
        return cancel_below &&
               cancel_below->load(std::memory_order_relaxed) < my_index;
    }
};

constexpr std::int8_t kFree = -1;

struct Solver {
    const ConstraintModel& M;
    Budget budget;
    bool collect_all = false;

    std::vector<std::int8_t> val;
    std::vector<std::int32_t> ct, cf;  // covers of each codegree set: chosen / free
    std::vector<std::int32_t> at, af;  // avoiders of each vertex: chosen / free
    std::vector<std::int32_t> trail;
    struct Dec {
        std::int32_t var;
        std::size_t mark;
        bool flipped;
    };
    std::vector<Dec> decs;
    std::vector<std::pair<std::int32_t, std::int8_t>> pending;

    SearchStats stats;
    std::vector<Mask> solution;
    std::vector<std::vector<Mask>> all_solutions;
    bool aborted = false;

    explicit Solver(const ConstraintModel& model) : M(model) {
        val.assign(M.edge_vars.size(), kFree);
        ct.assign(M.codegree_vars.size(), 0);
        cf.resize(M.codegree_vars.size());
        for (std::size_t y = 0; y < M.codegree_vars.size(); ++y)
            cf[y] = static_cast<std::int32_t>(M.covers_of_sub[y].size());
        at.assign(M.n + 1, 0);
        af.assign(M.n + 1, 0);
        for (int v = 1; v <= M.n; ++v)
            af[v] = static_cast<std::int32_t>(M.avoiders_of_vertex[v].size());
    }

    bool apply(std::int32_t var, std::int8_t v) {
        if (val[var] != kFree) return val[var] == v;
        val[var] = v;
        trail.push_back(var);
        ++stats.propagations;
        for (std::int32_t y : M.subs_of_edge[var]) {
            --cf[y];
            if (v == 1) ++ct[y];
        }
        const Mask mask = M.edge_vars[var];
        for (int u = 1; u <= M.n; ++u) {
            if (mask >> (u - 1) & 1) continue;
            --af[u];
            if (v == 1) ++at[u];
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            std::int32_t var = trail.back();
            trail.pop_back();
            std::int8_t v = val[var];
            val[var] = kFree;
            for (std::int32_t y : M.subs_of_edge[var]) {
                ++cf[y];
                if (v == 1) --ct[y];
            }
            const Mask mask = M.edge_vars[var];
            for (int u = 1; u <= M.n; ++u) {
                if (mask >> (u - 1) & 1) continue;
                ++af[u];
                if (v == 1) --at[u];
            }
        }
    }

    std::int32_t free_cover(std::int32_t y) const {
        for (std::int32_t x : M.covers_of_sub[y])
            if (val[x] == kFree) return x;
        return -1;
    }

    std::int32_t free_avoider(int v) const {
        for (std::int32_t x : M.avoiders_of_vertex[v])
            if (val[x] == kFree) return x;
        return -1;
    }

    // Unit closure of the coverage (C1) and primitivity (C4) constraints.
    bool propagate() {
        while (!pending.empty()) {
            auto [var, v] = pending.back();
            pending.pop_back();
            if (!apply(var, v)) return false;
            for (std::int32_t y : M.subs_of_edge[var]) {
                if (ct[y] == 0) {
                    if (cf[y] == 0) return false;
                    if (cf[y] == 1) pending.emplace_back(free_cover(y), 1);
                }
            }
            const Mask mask = M.edge_vars[var];
            for (int u = 1; u <= M.n; ++u) {
                if (mask >> (u - 1) & 1) continue;
                if (at[u] == 0) {
                    if (af[u] == 0) return false;
                    if (af[u] == 1) pending.emplace_back(free_avoider(u), 1);
                }
            }
        }
        return true;
    }

    // Private-subset bookkeeping for the exactly-one constraint (C3) and the
    // branching heuristic. Returns false on conflict; sets `branch_var` to
    // the chosen decision variable or -1 when none is free; may enqueue
    // deduced assignments (caller re-propagates when `deduced`).
    bool private_pass(std::int32_t& branch_var, bool& deduced) {
        branch_var = -1;
        int best_score = -1;
        deduced = false;
        for (std::size_t x = 0; x < M.edge_vars.size(); ++x) {
            if (val[x] == 0) continue;
            int is_one = 0, can_one = 0;
            std::int32_t lone_candidate = -1;
            for (std::int32_t y : M.subs_of_edge[x]) {
                const bool one_now = ct[y] == 1 && cf[y] == 0;
                const bool can = ct[y] == 1 || (ct[y] == 0 && cf[y] >= 1);
                is_one += one_now;
                if (can) {
                    ++can_one;
                    lone_candidate = y;
                }
            }
            if (val[x] == 1) {
                if (is_one >= 2 || can_one == 0) return false;
                if (is_one == 1 && can_one > 1) {
                    // the settled private set forbids every other subset from
                    // ending at codegree one
                    for (std::int32_t y : M.subs_of_edge[x])
                        if (ct[y] == 1 && cf[y] == 1) {
                            pending.emplace_back(free_cover(y), 1);
                            deduced = true;
                        }
                }
                if (can_one == 1 && is_one == 0) {
                    // the lone candidate must settle at codegree one
                    std::int32_t y = lone_candidate;
                    if (ct[y] == 1) {
                        for (std::int32_t cov : M.covers_of_sub[y])
                            if (val[cov] == kFree) {
                                pending.emplace_back(cov, 0);
                                deduced = true;
                            }
                    } else if (cf[y] == 1) {
                        pending.emplace_back(free_cover(y), 1);
                        deduced = true;
                    }
                }
            } else {
                if (is_one >= 2 || can_one == 0) {
                    pending.emplace_back(static_cast<std::int32_t>(x), 0);
                    deduced = true;
                    continue;
                }
                int score = 0;
                for (std::int32_t y : M.subs_of_edge[x]) score += ct[y] == 0;
                if (score > best_score) {
                    best_score = score;
                    branch_var = static_cast<std::int32_t>(x);
                }
            }
        }
        return true;
    }

    bool fully_assigned_consistent() const {
        for (std::size_t x = 0; x < M.edge_vars.size(); ++x) {
            if (val[x] != 1) continue;
            int ones = 0;
            for (std::int32_t y : M.subs_of_edge[x]) ones += ct[y] == 1;
            if (ones != 1) return false;
        }
        for (std::size_t y = 0; y < M.codegree_vars.size(); ++y)
            if (ct[y] == 0) return false;
        for (int v = 1; v <= M.n; ++v)
            if (at[v] == 0) return false;
        return true;
    }

    std::vector<Mask> chosen_edges() const {
        std::vector<Mask> out;
        for (std::size_t x = 0; x < M.edge_vars.size(); ++x)
            if (val[x] == 1) out.push_back(M.edge_vars[x]);
        return out;
    }

    // Chronological DFS; returns Sat/Unsat/Aborted. With `frontier_depth` >= 0
    // the search stops at that decision depth and records decision prefixes
    // instead of exploring below.
    SearchStatus run(int frontier_depth = -1,
                     std::vector<std::vector<std::pair<std::int32_t, std::int8_t>>>* frontier =
                         nullptr) {
        while (true) {
            bool conflict = !propagate();
            while (!conflict) {
                std::int32_t branch = -1;
                bool deduced = false;
                if (!private_pass(branch, deduced)) {
                    conflict = true;
                    break;
                }
                if (deduced) {
                    conflict = !propagate();
                    continue;
                }
                if (branch == -1) {
                    if (!fully_assigned_consistent())
                        throw std::logic_error("propagation accepted an invalid assignment");
                    solution = chosen_edges();
                    if (collect_all) {
                        all_solutions.push_back(solution);
                        conflict = true;
                        break;
                    }
                    return SearchStatus::Sat;
                }
                if (frontier_depth >= 0 && static_cast<int>(decs.size()) == frontier_depth) {
                    std::vector<std::pair<std::int32_t, std::int8_t>> prefix;
                    for (const Dec& d : decs)
                        prefix.emplace_back(d.var, d.flipped ? std::int8_t{0} : std::int8_t{1});
                    frontier->push_back(std::move(prefix));
                    conflict = true;
                    break;
                }
                ++stats.nodes;
                if (budget.nodes) budget.nodes->fetch_add(1, std::memory_order_relaxed);
                if ((stats.nodes & 1023) == 0 && (budget.exhausted() || budget.cancelled())) {
                    aborted = true;
                    return SearchStatus::Aborted;
                }
                decs.push_back({branch, trail.size(), false});
                pending.emplace_back(branch, 1);
                conflict = !propagate();
            }
            // backtrack
            pending.clear();
            while (true) {
                if (decs.empty()) return SearchStatus::Unsat;
                Dec& d = decs.back();
                undo_to(d.mark);
                if (!d.flipped) {
                    d.flipped = true;
                    pending.emplace_back(d.var, 0);
                    break;
                }
                decs.pop_back();
            }
        }
    }
};

UniformHypergraph certificate_from(const ConstraintModel& m, const std::vector<Mask>& edges) {
    std::vector<VertexSet> es;
    es.reserve(edges.size());
    for (Mask e : edges) es.push_back(VertexSet{e});
    return {m.n, m.t, std::move(es)};
}

void check_sat_invariants(const ConstraintModel& m, const UniformHypergraph& cert) {
    Verdict v = verify_complementary(cert, m.t, m.s);
    if (!v.ok)
        throw std::logic_error("search produced an invalid certificate: " + v.describe());
    const int k = m.n - m.t;
    if (k >= 2 && std::uint64_t(m.n) >= nonexistence_bound(k, m.ell))
        throw std::logic_error("SAT certificate violates the nonexistence bound");
}

}  // namespace

SearchResult solve_existence(int n, int t, int s, const SearchOptions& opt) {
    ConstraintModel model = build_model(n, t, s);
    if (opt.all_solutions && n > 7)
        throw std::invalid_argument("all-solutions mode is limited to n <= 7");
    if (opt.all_solutions && opt.symmetry)
        throw std::invalid_argument("all-solutions mode excludes symmetry breaking");

    const auto start = Clock::now();
    std::atomic<std::uint64_t> node_counter{0};
    Budget budget;
    budget.nodes = &node_counter;
    budget.node_limit = opt.node_budget;
    if (opt.time_budget_s > 0) {
        budget.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(opt.time_budget_s));
        budget.has_deadline = true;
    }

    SearchResult result;
    auto finish = [&](SearchStatus st, Solver* sv) {
        result.status = st;
        result.stats.wall_s = std::chrono::duration<double>(Clock::now() - start).count();
        if (sv) {
            result.stats.nodes += sv->stats.nodes;
            result.stats.propagations += sv->stats.propagations;
        }
        if (st == SearchStatus::Sat && sv) {
            result.certificate = certificate_from(model, sv->solution);
            check_sat_invariants(model, *result.certificate);
        }
    };

    const int threads = std::max(1, opt.threads);
    if (threads == 1 || opt.all_solutions) {
        Solver solver(model);
        solver.budget = budget;
        solver.collect_all = opt.all_solutions;
        if (opt.symmetry) solver.pending.emplace_back(0, 1);  // colex-least edge {1..t}
        SearchStatus st = solver.run();
        finish(st, &solver);
        if (opt.all_solutions && st != SearchStatus::Aborted) {
            for (const auto& sol : solver.all_solutions) {
                UniformHypergraph cert = certificate_from(model, sol);
                check_sat_invariants(model, cert);
                result.all.push_back(std::move(cert));
            }
            result.status = solver.all_solutions.empty() ? SearchStatus::Unsat : SearchStatus::Sat;
            if (!result.all.empty()) result.certificate = result.all.front();
        }
        return result;
    }

    // parallel mode: expand a frontier of decision prefixes, solve each
    // subproblem in a pool, pick the first SAT in frontier order
    int depth = 1;
    while ((1 << depth) < threads * 8 && depth < 12) ++depth;
    std::vector<std::vector<std::pair<std::int32_t, std::int8_t>>> frontier;
    {
        Solver collector(model);
        collector.budget = budget;
        if (opt.symmetry) collector.pending.emplace_back(0, 1);
        SearchStatus st = collector.run(depth, &frontier);
        result.stats.nodes += collector.stats.nodes;
        result.stats.propagations += collector.stats.propagations;
        if (st == SearchStatus::Sat || st == SearchStatus::Aborted || frontier.empty()) {
            finish(st, &collector);
            return result;
        }
    }

    std::atomic<std::size_t> first_sat{frontier.size()};
    std::atomic<std::size_t> next{0};
    std::vector<SearchStatus> statuses(frontier.size(), SearchStatus::Unsat);
    std::vector<std::vector<Mask>> sols(frontier.size());
    std::vector<SearchStats> stats(frontier.size());
    std::mutex mtx;

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= frontier.size()) return;
            // a SAT below this index settles the deterministic answer too
            if (first_sat.load() < i) {
                statuses[i] = SearchStatus::Aborted;
                continue;
            }
            Solver solver(model);
            solver.budget = budget;
            solver.budget.my_index = i;
            solver.budget.cancel_below = &first_sat;
            if (opt.symmetry) solver.pending.emplace_back(0, 1);
            for (auto [var, v] : frontier[i]) solver.pending.emplace_back(var, v);
            SearchStatus st = solver.run();
            statuses[i] = st;
            stats[i] = solver.stats;
            if (st == SearchStatus::Sat) {
                std::lock_guard<std::mutex> lock(mtx);
                sols[i] = solver.solution;
                std::size_t cur = first_sat.load();
                while (i < cur && !first_sat.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (const auto& st : stats) {
        result.stats.nodes += st.nodes;
        result.stats.propagations += st.propagations;
    }
    result.stats.wall_s = std::chrono::duration<double>(Clock::now() - start).count();

    std::size_t sat_idx = frontier.size();
    bool any_aborted = false;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        if (statuses[i] == SearchStatus::Sat) {
            sat_idx = std::min(sat_idx, i);
            break;  // frontier order: the first SAT is the deterministic one
        }
        if (statuses[i] == SearchStatus::Aborted) any_aborted = true;
    }
    if (sat_idx < frontier.size()) {
        result.status = SearchStatus::Sat;
        result.certificate = certificate_from(model, sols[sat_idx]);
        check_sat_invariants(model, *result.certificate);
    } else {
        result.status = any_aborted ? SearchStatus::Aborted : SearchStatus::Unsat;
    }
    return result;
}

ExistenceTable existence_table(int k, int max_ell, int max_s, const SearchOptions& per_cell) {
    if (k < 2) throw std::invalid_argument("tables need k >= 2");
    ExistenceTable table;
    table.k = k;
    table.max_ell = max_ell;
    table.max_s = max_s;
    table.cells.resize(max_ell);

    std::unordered_map<int, ChromaticResult> chi_cache;  // keyed by ell

    for (int ell = 1; ell <= max_ell; ++ell) {
        table.cells[ell - 1].resize(max_s);
        for (int s = 1; s <= max_s; ++s) {
            TableCell cell;
            cell.ell = ell;
            cell.s = s;
            cell.r = k + s;
            cell.n = cell.r + ell;
            cell.t = s + ell;

            auto decide = [&]() {
                if (std::uint64_t(cell.n) >= nonexistence_bound(k, ell)) {
                    cell.status = CellStatus::BoundExcluded;
                    cell.prov = CellProvenance::Bound;
                    return;
                }
                if (k >= 4 && cell.r <= 2 * k - 3 && cell.n <= 64) {
                    double_star(cell.n, k, cell.r);
                    cell.status = CellStatus::Exists;
                    cell.prov = CellProvenance::Thm32;
                    return;
                }
                if (ell == 1 && k >= 3) {
                    if (near_complete_in_range(k, cell.n)) {
                        near_complete_construction(k, cell.n);
                        cell.status = CellStatus::Exists;
                        cell.prov = CellProvenance::Thm51;
                        return;
                    }
                    if (4 * cell.n > (k + 2) * (k + 2)) {
                        cell.status = CellStatus::NotExists;
                        cell.prov = CellProvenance::Thm51;
                        return;
                    }
                }
                if (k >= 3 && cell.n <= 64) {
                    const int core = ell + k - 1;
                    auto it = chi_cache.find(ell);
                    if (it == chi_cache.end())
                        it = chi_cache.emplace(ell, chromatic_number(core, k - 1)).first;
                    const ChromaticResult& chi = it->second;
                    const long lo = long{chi.value} + core;
                    const long hi = long(binom(core, k - 1)) + core;
                    if (lo <= cell.n && cell.n <= hi) {
                        tau_critical_construction(k, ell, cell.n, &chi.coloring);
                        cell.status = CellStatus::Exists;
                        cell.prov = CellProvenance::Thm45;
                        return;
                    }
                }
                SearchResult res = solve_existence(cell.n, cell.t, cell.s, per_cell);
                cell.stats = res.stats;
                switch (res.status) {
                    case SearchStatus::Sat:
                        cell.status = CellStatus::Exists;
                        cell.prov = CellProvenance::Search;
                        break;
                    case SearchStatus::Unsat:
                        cell.status = CellStatus::NotExists;
                        cell.prov = CellProvenance::Search;
                        break;
                    case SearchStatus::Aborted:
                        cell.status = CellStatus::Unknown;
                        cell.prov = CellProvenance::None;
                        break;
                }
            };
            decide();
            table.cells[ell - 1][s - 1] = cell;
        }
    }

    for (int ell = 1; ell <= max_ell; ++ell) {
        bool seen_unsat = false, monotone = true;
        for (const TableCell& c : table.cells[ell - 1]) {
            if (c.status == CellStatus::NotExists || c.status == CellStatus::BoundExcluded)
                seen_unsat = true;
            else if (c.status == CellStatus::Exists && seen_unsat)
                monotone = false;
        }
        table.row_monotone.push_back(monotone);
    }
    return table;
}

}  // namespace uksat
