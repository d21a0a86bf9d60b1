#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pgsolve.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kError = 1, kParse = 2, kConflict = 3, kInvariant = 4 };

const std::map<std::string, pgs_algo> kAlgos{{"blackbox", PGS_ALGO_BLACKBOX},
                                             {"compact", PGS_ALGO_COMPACT},
                                             {"zielonka", PGS_ALGO_ZIELONKA},
                                             {"naive", PGS_ALGO_NAIVE}};
const std::map<std::string, pgs_domain> kDomains{{"spm", PGS_DOMAIN_SPM}, {"opm", PGS_DOMAIN_OPM}};
const std::map<std::string, pgs_backend> kBackends{{"bitset", PGS_BACKEND_BITSET}, {"bdd", PGS_BACKEND_BDD}};

struct GameHandle {
    pgs_game *g = nullptr;
    ~GameHandle() { pgs_game_free(g); }
};

struct ResultHandle {
    pgs_result *r = nullptr;
    ~ResultHandle() { pgs_result_free(r); }
};

int exit_for(pgs_status s)
{
    switch (s) {
    case PGS_OK: return kOk;
    case PGS_ERR_PARSE: return kParse;
    case PGS_ERR_ARGUMENT: return kConflict;
    case PGS_ERR_INVARIANT: return kInvariant;
    default: return kError;
    }
}

std::string status_name(pgs_status s)
{
    switch (s) {
    case PGS_OK: return "ok";
    case PGS_ERR_PARSE: return "parse_error";
    case PGS_ERR_IO: return "io_error";
    case PGS_ERR_ARGUMENT: return "flag_conflict";
    case PGS_ERR_INVARIANT: return "invariant_violation";
    case PGS_ERR_GUARD: return "too_large";
    default: return "error";
    }
}

int ceil_log2(size_t n)
{
    int b = 0;
    while (((size_t)1 << b) < n) b++;
    return b;
}

struct Config {
    std::string algo = "blackbox", domain = "spm", backend = "bitset";
};

// compact only exists for opm
bool conflicting(const Config &c) { return c.algo == "compact" && c.domain != "opm"; }

pgs_solve_options make_options(const Config &c)
{
    pgs_solve_options o;
    pgs_solve_options_init(&o);
    o.algo = kAlgos.at(c.algo);
    o.domain = kDomains.at(c.domain);
    o.backend = kBackends.at(c.backend);
    return o;
}

std::string winners_text(const pgs_game *g, const pgs_result *r)
{
    std::string even = "even:", odd = "odd:";
    for (size_t v = 0; v < pgs_game_vertices(g); v++)
        (pgs_result_winner(r, v) == 0 ? even : odd) += " " + std::to_string(v);
    return even + "\n" + odd + "\n";
}

json counters_json(const pgs_result *r)
{
    pgs_counters c;
    pgs_result_counters(r, &c);
    return json{{"pre_ops", c.pre_ops},
                {"basic_ops", c.basic_ops},
                {"union", c.basic[PGS_UNION]},
                {"intersect", c.basic[PGS_INTERSECT]},
                {"difference", c.basic[PGS_DIFFERENCE]},
                {"subseteq", c.basic[PGS_SUBSETEQ]},
                {"equals", c.basic[PGS_EQUALS]},
                {"live_sets_max", c.live_sets_max}};
}

void trace_to_stream(const char *line, void *ctx) { *static_cast<std::ofstream *>(ctx) << line << '\n'; }

int cmd_solve(const std::string &input, const Config &cfg, bool assert_inv, const std::string &report,
              const std::string &winners, const std::string &trace)
{
    if (conflicting(cfg)) {
        std::cerr << "error: --algo compact requires --domain opm\n";
        return kConflict;
    }
    GameHandle g;
    pgs_status s = pgs_game_load(input.c_str(), &g.g);
    if (s != PGS_OK) {
        std::cerr << input << ": " << pgs_last_error() << "\n";
        return exit_for(s);
    }

    pgs_solve_options opt = make_options(cfg);
    opt.assert_invariants = assert_inv;
    std::ofstream trace_out;
    if (!trace.empty()) {
        trace_out.open(trace);
        if (!trace_out) {
            std::cerr << "cannot write " << trace << "\n";
            return kError;
        }
        opt.trace = trace_to_stream;
        opt.trace_ctx = &trace_out;
    }

    ResultHandle r;
    auto t0 = std::chrono::steady_clock::now();
    s = pgs_solve(g.g, &opt, &r.r);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (s != PGS_OK) {
        std::cerr << "error: " << pgs_last_error() << "\n";
        return exit_for(s);
    }

    std::string wtext = winners_text(g.g, r.r);
    if (winners.empty()) {
        std::cout << wtext;
    } else {
        std::ofstream out(winners);
        out << wtext;
        if (!out) {
            std::cerr << "cannot write " << winners << "\n";
            return kError;
        }
    }

    if (!report.empty()) {
        json j{{"schema_version", 1},
               {"game", {{"path", input}, {"n", pgs_game_vertices(g.g)}, {"m", pgs_game_edges(g.g)}, {"d", pgs_game_priorities(g.g)}}},
               {"algo", cfg.algo},
               {"domain", cfg.domain},
               {"backend", cfg.backend},
               {"w_size_estimate", pgs_result_w_size_estimate(r.r)},
               {"w_even_size", pgs_result_region_size(r.r, 0)},
               {"w_odd_size", pgs_result_region_size(r.r, 1)},
               {"iterations", pgs_result_iterations(r.r)},
               {"counters", counters_json(r.r)},
               {"wall_ms", ms},
               {"seed", nullptr}};
        std::ofstream out(report);
        out << j.dump(2) << "\n";
        if (!out) {
            std::cerr << "cannot write " << report << "\n";
            return kError;
        }
    }
    return kOk;
}

int cmd_generate(unsigned n, unsigned d, double p, uint64_t seed, unsigned count, const std::string &dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    for (unsigned i = 0; i < count; i++) {
        GameHandle g;
        pgs_status s = pgs_game_random(n, d, p, seed + i, &g.g);
        if (s != PGS_OK) {
            std::cerr << "error: " << pgs_last_error() << "\n";
            return exit_for(s);
        }
        fs::path out = fs::path(dir) / (std::to_string(seed) + "_" + std::to_string(i) + ".gm");
        s = pgs_game_save(g.g, out.string().c_str());
        if (s != PGS_OK) {
            std::cerr << "error: " << pgs_last_error() << "\n";
            return kError;
        }
    }
    return kOk;
}

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// "<seed>_<i>.gm" as written by generate holds the game drawn with seed + i
std::string seed_of(const fs::path &p)
{
    std::string stem = p.stem().string();
    auto us = stem.find('_');
    if (us == std::string::npos || us == 0 || us + 1 == stem.size()) return "";
    std::string head = stem.substr(0, us), tail = stem.substr(us + 1);
    auto digits = [](const std::string &t) { return std::all_of(t.begin(), t.end(), ::isdigit); };
    if (!digits(head) || !digits(tail) || head.size() > 18 || tail.size() > 9) return "";
    return std::to_string(std::stoull(head) + std::stoull(tail));
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

int cmd_bench(const std::string &corpus, const std::string &algos, const std::string &domains,
              const std::string &backends, const std::string &csv)
{
    std::vector<fs::path> files;
    std::error_code ec;
    for (auto &e : fs::directory_iterator(corpus, ec))
        if (e.is_regular_file() && e.path().extension() == ".gm") files.push_back(e.path());
    if (ec) {
        std::cerr << "cannot read " << corpus << ": " << ec.message() << "\n";
        return kError;
    }
    std::sort(files.begin(), files.end());

    std::vector<Config> configs;
    for (auto &a : split_list(algos))
        for (auto &dm : split_list(domains))
            for (auto &b : split_list(backends)) {
                if (!kAlgos.count(a) || !kDomains.count(dm) || !kBackends.count(b)) {
                    std::cerr << "unknown configuration " << a << "/" << dm << "/" << b << "\n";
                    return kConflict;
                }
                Config c{a, dm, b};
                if (!conflicting(c)) configs.push_back(c);
            }

    std::ofstream out(csv);
    if (!out) {
        std::cerr << "cannot write " << csv << "\n";
        return kError;
    }
    out << "game,n,m,d,algo,domain,backend,w_size_estimate,pre_ops,basic_ops,live_sets_max,w_even_size,wall_ms,status,seed\n";

    double max_pre = 0, max_live_bb = 0, max_live_cp = 0;
    int failures = 0;
    for (auto &f : files) {
        GameHandle g;
        pgs_status ls = pgs_game_load(f.string().c_str(), &g.g);
        for (auto &cfg : configs) {
            std::ostringstream row;
            row << csv_field(f.filename().string()) << ",";
            if (ls != PGS_OK) {
                row << ",,," << cfg.algo << "," << cfg.domain << "," << cfg.backend << ",,,,,,," << status_name(ls) << ","
                    << seed_of(f);
                out << row.str() << "\n";
                failures++;
                continue;
            }
            size_t n = pgs_game_vertices(g.g);
            unsigned d = pgs_game_priorities(g.g);
            row << n << "," << pgs_game_edges(g.g) << "," << d << "," << cfg.algo << "," << cfg.domain << "," << cfg.backend << ",";
            pgs_solve_options opt = make_options(cfg);
            ResultHandle r;
            auto t0 = std::chrono::steady_clock::now();
            pgs_status s = pgs_solve(g.g, &opt, &r.r);
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            if (s != PGS_OK) {
                row << ",,,,,," << status_name(s) << "," << seed_of(f);
                out << row.str() << "\n";
                failures++;
                continue;
            }
            pgs_counters c;
            pgs_result_counters(r.r, &c);
            double w = pgs_result_w_size_estimate(r.r);
            char wbuf[64], tbuf[32];
            std::snprintf(wbuf, sizeof wbuf, "%.17g", w);
            std::snprintf(tbuf, sizeof tbuf, "%.3f", ms);
            row << wbuf << "," << c.pre_ops << "," << c.basic_ops << "," << c.live_sets_max << ","
                << pgs_result_region_size(r.r, 0) << "," << tbuf << ",ok," << seed_of(f);
            out << row.str() << "\n";

            if (!pgs_result_has_counters(r.r)) continue;
            max_pre = std::max(max_pre, (double)c.pre_ops / ((double)n * w));
            if (cfg.algo == "blackbox")
                max_live_bb = std::max(max_live_bb, (double)c.live_sets_max / (double)n);
            else
                max_live_cp = std::max(max_live_cp, (double)c.live_sets_max / (d * std::max(1, ceil_log2(n))));
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "# summary games=%zu configs=%zu failures=%d max_pre_ops_per_nW=%.4f max_live_per_n_blackbox=%.4f "
                  "max_live_per_dlogn_compact=%.4f",
                  files.size(), configs.size(), failures, max_pre, max_live_bb, max_live_cp);
    if (!files.empty()) out << buf << "\n";
    std::cout << buf << "\n";
    return kOk;
}

}

int main(int argc, char **argv)
{
    CLI::App app{"symbolic parity game solver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pgs_version()));

    Config cfg;
    std::string input, report, winners, trace;
    bool assert_inv = false;
    auto *solve = app.add_subcommand("solve", "solve one game in PGSolver format");
    solve->add_option("input", input, "game file")->required();
    solve->add_option("--algo", cfg.algo)->check(CLI::IsMember({"blackbox", "compact", "zielonka", "naive"}));
    solve->add_option("--domain", cfg.domain)->check(CLI::IsMember({"spm", "opm"}));
    solve->add_option("--backend", cfg.backend)->check(CLI::IsMember({"bitset", "bdd"}));
    solve->add_flag("--assert-invariants", assert_inv);
    solve->add_option("--report", report, "JSON report path");
    solve->add_option("--winners", winners, "winners file path (stdout when absent)");
    solve->add_option("--trace", trace, "JSONL trace path, one line per outer iteration");

    unsigned gn = 8, gd = 4, count = 1;
    double gp = 0.5;
    uint64_t seed = 1;
    std::string outdir = ".";
    auto *gen = app.add_subcommand("generate", "write random games");
    gen->add_option("--vertices", gn)->check(CLI::Range(1u, 1u << 24));
    gen->add_option("--priorities", gd)->check(CLI::Range(1u, 60000u));
    gen->add_option("--edge-prob", gp)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", seed);
    gen->add_option("--count", count);
    gen->add_option("--out", outdir);

    std::string corpus, algos = "blackbox,compact", domains = "spm,opm", backends = "bitset", csv = "bench.csv";
    auto *bench = app.add_subcommand("bench", "run configurations over a corpus");
    bench->add_option("--corpus", corpus)->required();
    bench->add_option("--algos", algos);
    bench->add_option("--domains", domains);
    bench->add_option("--backends", backends);
    bench->add_option("--out", csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kConflict;
    }

    if (*solve) return cmd_solve(input, cfg, assert_inv, report, winners, trace);
    if (*gen) return cmd_generate(gn, gd, gp, seed, count, outdir);
    return cmd_bench(corpus, algos, domains, backends, csv);
}
