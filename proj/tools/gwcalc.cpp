// Command-line front end: compute single invariants, reproduce the standard
// tables, and run the verification suites. Exit codes: 0 ok, 1 verification
// failure, 2 usage error, 3 internal invariant violation.

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gw/correlators.hpp"
#include "gw/detlab.hpp"
#include "gw/virasoro.hpp"

using gw::ClassIndex;
using gw::Context;
using gw::Engine;
using gw::Insertion;
using gw::InvKey;
using gw::Rat;
using gw::rat_str;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Insertion> parse_insertions(const std::vector<std::string>& tokens, int r) {
    std::vector<Insertion> ins;
    for (const auto& tok : tokens) {
        if (tok.rfind("pt", 0) == 0) {
            long count = 1;
            if (tok.size() > 2) {
                if (tok[2] != '^') throw UsageError("bad insertion token '" + tok + "'");
                try {
                    size_t pos = 0;
                    count = std::stol(tok.substr(3), &pos);
                    if (pos != tok.size() - 3) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    throw UsageError("bad insertion token '" + tok + "'");
                }
                if (count < 0) throw UsageError("bad insertion token '" + tok + "'");
            }
            for (long i = 0; i < count; ++i) ins.push_back({0, static_cast<ClassIndex>(r)});
            continue;
        }
        size_t colon = tok.find(':');
        if (colon == std::string::npos) throw UsageError("bad insertion token '" + tok + "' (expected m:a or pt^k)");
        long m, a;
        try {
            size_t p1 = 0, p2 = 0;
            m = std::stol(tok.substr(0, colon), &p1);
            a = std::stol(tok.substr(colon + 1), &p2);
            if (p1 != colon || p2 != tok.size() - colon - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw UsageError("bad insertion token '" + tok + "'");
        }
        if (m < 0) throw UsageError("descendant index must be >= 0 in '" + tok + "'");
        if (a < 0 || a > r) throw UsageError("class index out of range [0," + std::to_string(r) + "] in '" + tok + "'");
        ins.push_back({m, static_cast<ClassIndex>(a)});
    }
    return ins;
}

std::string ins_tokens(const std::vector<Insertion>& ins) {
    std::string s;
    for (size_t i = 0; i < ins.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(ins[i].m) + ':' + std::to_string(ins[i].a);
    }
    return s;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json cell_json(const InvKey& key, const std::string& value) {
    nlohmann::ordered_json j;
    j["r"] = key.r;
    j["g"] = key.g;
    j["d"] = key.d;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& i : key.ins) arr.push_back({i.m, i.a});
    j["insertions"] = arr;
    j["value"] = value;
    return j;
}

void load_cache(Engine& eng, const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) return; // a missing cache file starts cold
    eng.cache().load(in);
}

void save_cache(Engine& eng, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file '" + path + "'");
    eng.cache().save(out);
}

void print_stats(const Engine& eng, bool enabled) {
    if (!enabled) return;
    const auto& s = const_cast<Engine&>(eng).stats();
    std::cerr << "stats: family_solves=" << s.family_solves << " genus0_queries=" << s.genus0_queries
              << " aux_evals=" << s.aux_evals << '\n';
}

// One table cell: a key to evaluate, or a dash for dimension-impossible and
// unstable cells.
struct Cell {
    InvKey key;
    bool dash = false;
    std::string value;
};

void evaluate_cells(std::vector<Cell>& cells, long jobs, const std::string& cache_path, bool stats) {
    if (jobs <= 1) {
        Engine eng;
        load_cache(eng, cache_path);
        for (auto& c : cells)
            if (!c.dash) c.value = rat_str(eng.invariant(c.key));
        save_cache(eng, cache_path);
        print_stats(eng, stats);
        return;
    }
    std::vector<std::unique_ptr<Engine>> engines;
    for (long t = 0; t < jobs; ++t) {
        engines.push_back(std::make_unique<Engine>());
        load_cache(*engines.back(), cache_path);
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    for (long t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= cells.size()) break;
                    if (!cells[i].dash) cells[i].value = rat_str(engines[static_cast<size_t>(t)]->invariant(cells[i].key));
                }
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    if (!cache_path.empty()) {
        // Merge the per-thread caches; the idempotency check makes any
        // disagreement a hard error.
        Engine merged;
        load_cache(merged, cache_path);
        for (auto& eng : engines) {
            std::stringstream buf;
            eng->cache().save(buf);
            merged.cache().load(buf);
        }
        save_cache(merged, cache_path);
    }
    if (stats) {
        gw::EngineStats total;
        for (auto& eng : engines) {
            total.family_solves += eng->stats().family_solves;
            total.genus0_queries += eng->stats().genus0_queries;
            total.aux_evals += eng->stats().aux_evals;
        }
        std::cerr << "stats: family_solves=" << total.family_solves << " genus0_queries=" << total.genus0_queries
                  << " aux_evals=" << total.aux_evals << '\n';
    }
}

// Renders a labelled grid with right-aligned columns.
void print_grid(const std::vector<std::string>& col_heads, const std::vector<std::string>& row_heads,
                const std::vector<std::vector<std::string>>& grid) {
    std::vector<size_t> w(col_heads.size());
    for (size_t c = 0; c < col_heads.size(); ++c) {
        w[c] = col_heads[c].size();
        for (const auto& row : grid) w[c] = std::max(w[c], row[c].size());
    }
    size_t head_w = 0;
    for (const auto& h : row_heads) head_w = std::max(head_w, h.size());
    std::cout << std::string(head_w, ' ');
    for (size_t c = 0; c < col_heads.size(); ++c) std::cout << "  " << std::setw(static_cast<int>(w[c])) << col_heads[c];
    std::cout << '\n';
    for (size_t rI = 0; rI < grid.size(); ++rI) {
        std::cout << std::setw(static_cast<int>(head_w)) << std::left << row_heads[rI] << std::right;
        for (size_t c = 0; c < col_heads.size(); ++c) std::cout << "  " << std::setw(static_cast<int>(w[c])) << grid[rI][c];
        std::cout << '\n';
    }
}

void emit_table(const std::vector<Cell>& cells, const std::vector<std::string>& col_heads,
                const std::vector<std::string>& row_heads, const std::string& format) {
    const size_t ncols = col_heads.size();
    if (format == "plain") {
        std::vector<std::vector<std::string>> grid;
        for (size_t rI = 0; rI < row_heads.size(); ++rI) {
            std::vector<std::string> row;
            for (size_t c = 0; c < ncols; ++c) {
                const Cell& cell = cells[rI * ncols + c];
                row.push_back(cell.dash ? "-" : cell.value);
            }
            grid.push_back(row);
        }
        print_grid(col_heads, row_heads, grid);
    } else if (format == "csv") {
        std::cout << "r,g,d,insertions,value\n";
        for (const auto& c : cells)
            std::cout << c.key.r << ',' << c.key.g << ',' << c.key.d << ',' << csv_quote(ins_tokens(c.key.ins)) << ','
                      << csv_quote(c.dash ? "-" : c.value) << '\n';
    } else {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : cells) arr.push_back(cell_json(c.key, c.dash ? "-" : c.value));
        std::cout << arr.dump(2) << '\n';
    }
}

int run_verify_report(const gw::VerifyReport& rep) {
    for (const auto& l : rep.lines) std::cout << l.text << '\n';
    std::cout << "summary: passed=" << rep.passed() << " failed=" << rep.failed() << '\n';
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gromov-Witten invariants of projective spaces"};
    app.require_subcommand(1);

    std::string format = "plain", cache_path;
    bool stats = false, big = false;
    long jobs = 1;

    // compute
    auto* compute = app.add_subcommand("compute", "Evaluate one invariant <tau_{m_1}(T_{a_1})...>_{g,d}");
    int c_r = 2, c_g = 0;
    long c_d = 0;
    std::vector<std::string> c_ins;
    compute->add_option("--r", c_r, "Target dimension r of P^r")->required();
    compute->add_option("--g", c_g, "Genus")->required();
    compute->add_option("--d", c_d, "Degree")->required();
    compute->add_option("--ins", c_ins, "Insertions: m:a tokens or pt^k")->required();
    compute->add_option("--format", format, "Output format: plain|csv|json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    compute->add_option("--cache", cache_path, "Persistent cache file");
    compute->add_flag("--stats", stats, "Print engine counters to stderr");

    // table (ch | one-point | p3)
    auto* table = app.add_subcommand("table", "Reproduce a standard table");
    table->require_subcommand(1);
    long dmax = -1;
    int gmax = 3;
    auto add_table_opts = [&](CLI::App* sub) {
        sub->add_option("--dmax", dmax, "Largest degree column");
        sub->add_option("--gmax", gmax, "Largest genus row");
        sub->add_option("--format", format, "Output format: plain|csv|json")
            ->check(CLI::IsMember({"plain", "csv", "json"}));
        sub->add_option("--cache", cache_path, "Persistent cache file");
        sub->add_flag("--stats", stats, "Print engine counters to stderr");
        sub->add_flag("--big", big, "Allow bounds beyond the documented desk scale");
        sub->add_option("--jobs", jobs, "Worker threads over independent cells")->check(CLI::PositiveNumber);
    };
    auto* t_ch = table->add_subcommand("ch", "Plane curve counts <pt^(3d-1+g)>_{g,d} on P^2");
    auto* t_1p = table->add_subcommand("one-point", "One-point invariants <tau_m(gamma)>_{g,d} on P^2");
    auto* t_p3 = table->add_subcommand("p3", "Point invariants <pt^(2d)>_{g,d} on P^3");
    add_table_opts(t_ch);
    add_table_opts(t_1p);
    add_table_opts(t_p3);

    // verify (det | lemma | vw)
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    long v_trials = 10;
    unsigned long v_seed = 1;
    long v_n = 0;
    int v_r = 0, v_g = 0;
    auto* v_det = verify->add_subcommand("det", "Determinant closed form vs exact elimination");
    v_det->add_option("--trials", v_trials, "Row sets per configuration");
    v_det->add_option("--seed", v_seed, "Random seed");
    v_det->add_option("--N", v_n, "Largest submatrix size (default 4)");
    v_det->add_option("--r", v_r, "Restrict to one target dimension");
    v_det->add_option("--g", v_g, "Restrict to one genus");
    auto* v_lem = verify->add_subcommand("lemma", "Interpolation identity property suite");
    v_lem->add_option("--trials", v_trials, "Random parameter sets")->default_val(25);
    v_lem->add_option("--seed", v_seed, "Random seed")->default_val(7);
    auto* v_vw = verify->add_subcommand("vw", "Recursion matrix vs generating-function matrix");
    v_vw->add_option("--N", v_n, "Largest system size (default 3)");
    v_vw->add_option("--r", v_r, "Restrict to one target dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            std::vector<Insertion> ins;
            try {
                if (c_r < 1) throw UsageError("--r must be >= 1");
                if (c_g < 0) throw UsageError("--g must be >= 0");
                ins = parse_insertions(c_ins, c_r);
            } catch (const UsageError& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 2;
            }
            Engine eng;
            load_cache(eng, cache_path);
            InvKey key{c_r, c_g, c_d, ins};
            key.canonicalize();
            Rat v = eng.invariant(key);
            save_cache(eng, cache_path);
            if (format == "plain") {
                std::cout << rat_str(v) << '\n';
            } else if (format == "csv") {
                std::cout << "r,g,d,insertions,value\n"
                          << key.r << ',' << key.g << ',' << key.d << ',' << csv_quote(ins_tokens(key.ins)) << ','
                          << csv_quote(rat_str(v)) << '\n';
            } else {
                std::cout << cell_json(key, rat_str(v)).dump(2) << '\n';
            }
            print_stats(eng, stats);
            return 0;
        }

        if (table->parsed()) {
            const bool is_ch = t_ch->parsed(), is_1p = t_1p->parsed();
            if (dmax < 0) dmax = is_ch ? 4 : (is_1p ? 2 : 3);
            if (!big && (dmax > 5 || gmax > 4)) {
                std::cerr << "error: bounds beyond the desk scale (dmax <= 5, gmax <= 4) need --big\n";
                return 2;
            }
            std::vector<Cell> cells;
            std::vector<std::string> col_heads, row_heads;
            if (is_ch || t_p3->parsed()) {
                const int r = is_ch ? 2 : 3;
                for (long d = 1; d <= dmax; ++d) col_heads.push_back("d=" + std::to_string(d));
                for (int g = 0; g <= gmax; ++g) {
                    row_heads.push_back("g=" + std::to_string(g));
                    for (long d = 1; d <= dmax; ++d) {
                        const long npts = is_ch ? 3 * d - 1 + g : 2 * d;
                        Cell c;
                        c.key = {r, g, d, std::vector<Insertion>(static_cast<size_t>(npts), {0, r})};
                        cells.push_back(std::move(c));
                    }
                }
            } else {
                // One-point table on P^2: m is fixed by 3d + g = m + deg(gamma);
                // dashes mark negative m and the unstable g = d = 0 corner.
                const std::vector<std::pair<std::string, ClassIndex>> gammas = {{"pt", 2}, {"H", 1}, {"1", 0}};
                for (const auto& [name, a] : gammas)
                    for (long d = 0; d <= dmax; ++d) col_heads.push_back(name + ":d=" + std::to_string(d));
                for (int g = 0; g <= gmax; ++g) {
                    row_heads.push_back("g=" + std::to_string(g));
                    for (const auto& [name, a] : gammas) {
                        for (long d = 0; d <= dmax; ++d) {
                            const long m = 3 * d + g - a;
                            Cell c;
                            c.key = {2, g, d, {{m, a}}};
                            c.dash = m < 0 || (g == 0 && d == 0);
                            cells.push_back(std::move(c));
                        }
                    }
                }
            }
            evaluate_cells(cells, jobs, cache_path, stats);
            emit_table(cells, col_heads, row_heads, format);
            return 0;
        }

        if (v_det->parsed()) return run_verify_report(gw::verify_det(v_trials, v_seed, v_n > 0 ? v_n : 4, v_r, v_g));
        if (v_lem->parsed()) return run_verify_report(gw::verify_lemma(v_trials, v_seed));
        if (v_vw->parsed()) {
            Engine eng;
            return run_verify_report(gw::verify_vw(eng, v_n > 0 ? v_n : 3, v_r));
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
