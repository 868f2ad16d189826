#include "uksat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "uksat/constructions.hpp"
#include "uksat/johnson.hpp"
#include "uksat/transversal.hpp"
#include "uksat/verify.hpp"

namespace uksat {

namespace {

using nlohmann::json;

int env_threads() {
    const char* v = std::getenv("UKSAT_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

json verdict_json(const Verdict& v) {
    json j;
    j["ok"] = v.ok;
    if (!v.ok) {
        j["failure"] = to_string(*v.kind);
        if (v.kind == FailureKind::PropertyViolation) j["property"] = v.property;
        if (v.witness) j["witness"] = to_string(*v.witness);
        if (v.witness2) j["witness2"] = to_string(*v.witness2);
        if (v.vertex) j["vertex"] = *v.vertex;
        if (!v.detail.empty()) j["detail"] = v.detail;
    }
    return j;
}

json stats_json(const SearchStats& s) {
    return json{{"nodes", s.nodes}, {"propagations", s.propagations}, {"wall_s", s.wall_s}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

// Re-reads an emitted certificate so every exit-0 path leaves a file that
// verifies on load.
void emit_certificate(const std::string& path, const UniformHypergraph& h) {
    write_uhg_file(path, h);
    UniformHypergraph back = read_uhg_file(path);
    if (!(back == h)) throw std::runtime_error("certificate round-trip mismatch: " + path);
}

int cmd_verify(const std::string& path, const std::string& mode, int r, int t, int s) {
    UniformHypergraph h = read_uhg_file(path);
    Verdict v;
    json record;
    record["command"] = "verify";
    record["file"] = path;
    record["mode"] = mode;
    if (mode == "saturated") {
        v = verify_uniquely_saturated(h, r);
        record["r"] = r;
    } else if (mode == "complementary") {
        v = verify_complementary(h, t, s);
        record["t"] = t;
        record["s"] = s;
    } else {  // tau-critical
        v = is_uniquely_tau_critical(h);
        record["tau"] = transversal_tau(h);
    }
    record["verdict"] = verdict_json(v);
    std::cout << record.dump(2) << "\n";
    return v.ok ? 0 : 1;
}

int cmd_construct(const std::string& theorem, int n, int k, int r, int ell,
                  std::string out_path, const std::string& json_path) {
    UniformHypergraph result = UniformHypergraph::empty(1, 1);
    json record;
    record["command"] = "construct";
    record["theorem"] = theorem;
    int tau = 0;
    if (theorem == "double-star") {
        result = double_star(n, k, r);
        record["params"] = {{"n", n}, {"k", k}, {"r", r}};
        record["verdict"] = verdict_json(verify_complementary(result, n - k, r - k));
        if (out_path.empty())
            out_path = "double_star_n" + std::to_string(n) + "_k" + std::to_string(k) + "_r" +
                       std::to_string(r) + ".uhg";
    } else if (theorem == "tau-critical") {
        result = tau_critical_construction(k, ell, n);
        tau = ell + 1;
        record["params"] = {{"n", n}, {"k", k}, {"ell", ell}};
        record["verdict"] = verdict_json(is_uniquely_tau_critical(result));
        if (out_path.empty())
            out_path = "tau_critical_k" + std::to_string(k) + "_ell" + std::to_string(ell) +
                       "_n" + std::to_string(n) + ".uhg";
    } else {  // near-complete
        result = near_complete_construction(k, n);
        tau = 2;
        record["params"] = {{"n", n}, {"k", k}};
        record["verdict"] = verdict_json(is_uniquely_tau_critical(result));
        if (out_path.empty())
            out_path = "near_complete_k" + std::to_string(k) + "_n" + std::to_string(n) + ".uhg";
    }
    if (tau > 0) record["tau"] = tau;
    emit_certificate(out_path, result);
    record["certificate_path"] = out_path;
    std::cout << record.dump(2) << "\n";
    if (!json_path.empty()) write_text_file(json_path, record.dump(2) + "\n");
    return 0;
}

int cmd_search(int n, int t, int s, const SearchOptions& opt, const std::string& out_path,
               const std::string& json_path) {
    SearchResult res = solve_existence(n, t, s, opt);
    json record;
    record["command"] = "search";
    record["params"] = {{"n", n}, {"t", t}, {"s", s}};
    record["status"] = to_string(res.status);
    record["stats"] = stats_json(res.stats);
    if (res.status == SearchStatus::Sat) {
        std::string path = out_path.empty() ? "certificate_n" + std::to_string(n) + "_t" +
                                                  std::to_string(t) + "_s" + std::to_string(s) +
                                                  ".uhg"
                                            : out_path;
        emit_certificate(path, *res.certificate);
        record["certificate_path"] = path;
        record["solutions_found"] = opt.all_solutions ? res.all.size() : 1;
    }
    std::cout << record.dump(2) << "\n";
    if (!json_path.empty()) write_text_file(json_path, record.dump(2) + "\n");
    return res.status == SearchStatus::Aborted ? 3 : 0;
}

int cmd_table(int k, int max_ell, int max_s, const SearchOptions& per_cell,
              const std::string& tsv_path, const std::string& json_path) {
    ExistenceTable table = existence_table(k, max_ell, max_s, per_cell);
    std::string tsv = table_to_tsv(table);
    std::cout << tsv;
    if (!tsv_path.empty()) write_text_file(tsv_path, tsv);
    if (!json_path.empty()) write_text_file(json_path, table_to_json(table));
    return 0;
}

int cmd_bounds(int k, int tau, int ell) {
    json record;
    record["command"] = "bounds";
    record["k"] = k;
    if (tau > 0) {
        record["tau"] = tau;
        record["tuza_bound"] = tuza_bound(k, tau);
    }
    if (ell > 0) {
        record["ell"] = ell;
        record["nonexistence_bound"] = nonexistence_bound(k, ell);
    }
    std::cout << record.dump(2) << "\n";
    return 0;
}

}  // namespace

std::string table_to_tsv(const ExistenceTable& table) {
    std::ostringstream out;
    out << "# k=" << table.k << " rows ell=n-r, columns s=r-k; Y/N/? with provenance\n";
    out << "ell\\s";
    for (int s = 1; s <= table.max_s; ++s) out << '\t' << "s=" << s << " (r=" << table.k + s << ")";
    out << '\n';
    for (int ell = 1; ell <= table.max_ell; ++ell) {
        out << "n=r+" << ell;
        for (int s = 1; s <= table.max_s; ++s) {
            const TableCell& c = table.cells[ell - 1][s - 1];
            out << '\t';
            if (c.status == CellStatus::Unknown)
                out << '?';
            else
                out << to_string(c.status) << ':' << to_string(c.prov);
        }
        out << '\n';
    }
    out << "# row monotone (decided cells):";
    for (bool m : table.row_monotone) out << ' ' << (m ? "yes" : "no");
    out << '\n';
    return out.str();
}

std::string table_to_json(const ExistenceTable& table) {
    json j;
    j["k"] = table.k;
    j["cells"] = json::array();
    for (const auto& row : table.cells)
        for (const TableCell& c : row) {
            json cj;
            cj["ell"] = c.ell;
            cj["s"] = c.s;
            cj["n"] = c.n;
            cj["r"] = c.r;
            cj["t"] = c.t;
            cj["status"] = c.status == CellStatus::Unknown ? "unknown"
                           : c.status == CellStatus::Exists ? "exists"
                           : c.status == CellStatus::BoundExcluded ? "bound_excluded"
                                                                   : "not_exists";
            cj["provenance"] = to_string(c.prov);
            cj["stats"] = stats_json(c.stats);
            j["cells"].push_back(cj);
        }
    j["row_monotone"] = table.row_monotone;
    return j.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"uksat: exact toolkit for primitive uniquely clique-saturated hypergraphs"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check a .uhg file");
    std::string vpath, vmode;
    int vr = 0, vt = 0, vs = 0;
    verify->add_option("file", vpath, "hypergraph file")->required();
    verify->add_option("--mode", vmode, "saturated | complementary | tau-critical")->required();
    verify->add_option("--r", vr, "clique size (saturated mode)");
    verify->add_option("--t", vt, "uniformity (complementary mode)");
    verify->add_option("--s", vs, "completion size (complementary mode)");

    // construct
    auto* construct = app.add_subcommand("construct", "run a construction and emit a certificate");
    std::string theorem, cout_path, cjson_path;
    int cn = 0, ck = 0, cr = 0, cell = 0;
    construct->add_option("theorem", theorem, "double-star | tau-critical | near-complete")
        ->required();
    construct->add_option("--n", cn, "vertex count");
    construct->add_option("--k", ck, "uniformity");
    construct->add_option("--r", cr, "clique size (double-star)");
    construct->add_option("--ell", cell, "n - r (tau-critical)");
    construct->add_option("-o,--out", cout_path, "certificate path (.uhg)");
    construct->add_option("--json", cjson_path, "provenance record path");

    // search
    auto* search = app.add_subcommand("search", "decide existence for (n, t, s)");
    int sn = 0, st = 0, ss = 0;
    SearchOptions sopt;
    sopt.threads = env_threads();
    std::string sout_path, sjson_path;
    double stime = 0;
    std::uint64_t snodes = 0;
    bool nondet = false;
    search->add_option("--n", sn)->required();
    search->add_option("--t", st)->required();
    search->add_option("--s", ss)->required();
    search->add_option("--parallel", sopt.threads, "worker threads");
    search->add_flag("--symmetry", sopt.symmetry, "fix the colex-least edge to {1..t}");
    search->add_flag("--all", sopt.all_solutions, "enumerate all solutions (n <= 7)");
    search->add_option("--node-budget", snodes, "abort after this many decisions");
    search->add_option("--time-budget", stime, "abort after this many seconds");
    search->add_flag("--nondeterministic", nondet, "allow run-to-run certificate variation");
    search->add_option("-o,--out", sout_path, "certificate path (.uhg)");
    search->add_option("--json", sjson_path, "run record path");

    // table
    auto* tbl = app.add_subcommand("table", "existence table for uniformity k");
    int tk = 0, tell = 5, ts = 8;
    SearchOptions topt;
    std::string ttsv, tjson;
    double ttime = 30;
    std::uint64_t tnodes = 0;
    tbl->add_option("--k", tk)->required();
    tbl->add_option("--max-ell", tell, "rows: ell = n-r");
    tbl->add_option("--max-s", ts, "columns: s = r-k");
    tbl->add_option("--node-budget", tnodes, "per-cell decision budget");
    tbl->add_option("--time-budget", ttime, "per-cell seconds (default 30)");
    tbl->add_option("--tsv", ttsv, "write the table as TSV");
    tbl->add_option("--json", tjson, "write the table as JSON");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the tau-critical vertex bounds");
    int bk = 0, btau = 0, bell = 0;
    bounds->add_option("--k", bk)->required();
    bounds->add_option("--tau", btau, "transversal number");
    bounds->add_option("--ell", bell, "n - r");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        std::cerr << msg.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            if (vmode != "saturated" && vmode != "complementary" && vmode != "tau-critical") {
                std::cerr << "unknown mode: " << vmode << "\n";
                return 2;
            }
            if (vmode == "saturated" && vr <= 0) {
                std::cerr << "saturated mode needs --r\n";
                return 2;
            }
            if (vmode == "complementary" && (vt <= 0 || vs <= 0)) {
                std::cerr << "complementary mode needs --t and --s\n";
                return 2;
            }
            return cmd_verify(vpath, vmode, vr, vt, vs);
        }
        if (*construct) {
            if (theorem != "double-star" && theorem != "tau-critical" &&
                theorem != "near-complete") {
                std::cerr << "unknown construction: " << theorem << "\n";
                return 2;
            }
            try {
                return cmd_construct(theorem, cn, ck, cr, cell, cout_path, cjson_path);
            } catch (const std::invalid_argument& e) {
                // constructions report violated inequalities this way
                std::cerr << "out of range: " << e.what() << "\n";
                return 1;
            }
        }
        if (*search) {
            sopt.node_budget = snodes == 0 ? std::numeric_limits<std::uint64_t>::max() : snodes;
            sopt.time_budget_s = stime;
            sopt.deterministic = !nondet;
            return cmd_search(sn, st, ss, sopt, sout_path, sjson_path);
        }
        if (*tbl) {
            topt.node_budget = tnodes == 0 ? std::numeric_limits<std::uint64_t>::max() : tnodes;
            topt.time_budget_s = ttime;
            topt.threads = env_threads();
            return cmd_table(tk, tell, ts, topt, ttsv, tjson);
        }
        if (*bounds) {
            if (btau <= 0 && bell <= 0) {
                std::cerr << "bounds needs --tau or --ell\n";
                return 2;
            }
            return cmd_bounds(bk, btau, bell);
        }
    } catch (const uhg_parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const construction_defect& e) {
        std::cerr << "construction defect: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "out of range: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace uksat
