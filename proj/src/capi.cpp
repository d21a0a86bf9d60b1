#include "pgsolve.h"

#include <cstring>
#include <fstream>
#include <string>

#include "json.hpp"

#include "compact.hpp"
#include "game.hpp"
#include "oracle.hpp"
#include "solver.hpp"

struct pgs_game {
    pg::ParityGame g;
};

struct pgs_result {
    pg::Winners winners;
    std::vector<int> owner_of;
    pg::OpCounters counters;
    double w_size = 0;
    uint64_t iterations = 0;
    bool symbolic = false;
};

namespace {

thread_local std::string last_error;
thread_local int last_line = 0;
thread_local int last_col = 0;

pgs_status fail(pgs_status s, const std::string &msg)
{
    last_error = msg;
    return s;
}

template <class F> pgs_status guarded(F &&f)
{
    last_line = last_col = 0;
    try {
        return f();
    } catch (const pg::ParseError &e) {
        last_line = e.line;
        last_col = e.col;
        return fail(PGS_ERR_PARSE, e.what());
    } catch (const pg::InvariantViolation &e) {
        return fail(PGS_ERR_INVARIANT, e.what());
    } catch (const std::length_error &e) {
        return fail(PGS_ERR_GUARD, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(PGS_ERR_ARGUMENT, e.what());
    } catch (const std::exception &e) {
        return fail(PGS_ERR_INTERNAL, e.what());
    }
}

}

extern "C" {

const char *pgs_last_error(void) { return last_error.c_str(); }
const char *pgs_version(void) { return "1.0.0"; }
int pgs_last_error_line(void) { return last_line; }
int pgs_last_error_column(void) { return last_col; }

pgs_status pgs_game_parse(const char *text, size_t len, pgs_game **out)
{
    if (!text || !out) return fail(PGS_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new pgs_game{pg::parse_pgsolver(std::string_view(text, len))};
        return PGS_OK;
    });
}

pgs_status pgs_game_load(const char *path, pgs_game **out)
{
    if (!path || !out) return fail(PGS_ERR_ARGUMENT, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(PGS_ERR_IO, std::string("cannot open ") + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return pgs_game_parse(text.data(), text.size(), out);
}

pgs_status pgs_game_random(uint32_t n, uint32_t d, double edge_prob, uint64_t seed, pgs_game **out)
{
    if (!out) return fail(PGS_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new pgs_game{pg::random_game((int)n, (int)d, edge_prob, seed)};
        return PGS_OK;
    });
}

void pgs_game_free(pgs_game *g) { delete g; }

pgs_status pgs_game_write(const pgs_game *g, char **out_text)
{
    if (!g || !out_text) return fail(PGS_ERR_ARGUMENT, "null argument");
    std::string s = pg::write_pgsolver(g->g);
    char *buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out_text = buf;
    return PGS_OK;
}

pgs_status pgs_game_save(const pgs_game *g, const char *path)
{
    if (!g || !path) return fail(PGS_ERR_ARGUMENT, "null argument");
    std::ofstream out(path, std::ios::binary);
    if (!out) return fail(PGS_ERR_IO, std::string("cannot write ") + path);
    out << pg::write_pgsolver(g->g);
    return out ? PGS_OK : fail(PGS_ERR_IO, std::string("write failed for ") + path);
}

void pgs_string_free(char *s) { delete[] s; }

size_t pgs_game_vertices(const pgs_game *g) { return g ? (size_t)g->g.n : 0; }
size_t pgs_game_edges(const pgs_game *g) { return g ? (size_t)g->g.edge_count() : 0; }
uint32_t pgs_game_priorities(const pgs_game *g) { return g ? (uint32_t)g->g.d : 0; }

void pgs_solve_options_init(pgs_solve_options *opt)
{
    if (!opt) return;
    *opt = pgs_solve_options{};
    opt->algo = PGS_ALGO_BLACKBOX;
    opt->domain = PGS_DOMAIN_SPM;
    opt->backend = PGS_BACKEND_BITSET;
}

pgs_status pgs_solve(const pgs_game *game, const pgs_solve_options *opt, pgs_result **out)
{
    if (!game || !opt || !out) return fail(PGS_ERR_ARGUMENT, "null argument");
    if (opt->algo == PGS_ALGO_COMPACT && opt->domain != PGS_DOMAIN_OPM)
        return fail(PGS_ERR_ARGUMENT, "the compact solver requires the opm domain");
    return guarded([&] {
        const pg::ParityGame &g = game->g;
        auto res = std::make_unique<pgs_result>();
        std::string dname = opt->domain == PGS_DOMAIN_OPM ? "opm" : "spm";
        std::string bname = opt->backend == PGS_BACKEND_BDD ? "bdd" : "bitset";
        auto dom = pg::make_domain(dname, g);
        res->w_size = dom->size_estimate();

        pg::SolveOptions so;
        so.assert_invariants = opt->assert_invariants != 0;
        std::vector<pg::Rank> oracle;
        if (so.assert_invariants && g.n <= 8 && dom->size_estimate() <= 1e6) {
            oracle = pg::naive_fixpoint(g, *dom);
            so.oracle_rho = &oracle;
        }
        if (opt->trace) {
            so.trace = [&](const pg::TraceRecord &t) {
                nlohmann::json j{{"v", 1},        {"iteration", t.iteration}, {"rank", dom->render(t.rank)},
                                 {"p_size", t.p_size}, {"stored", t.stored}};
                opt->trace(j.dump().c_str(), opt->trace_ctx);
            };
        }

        switch (opt->algo) {
        case PGS_ALGO_BLACKBOX:
        case PGS_ALGO_COMPACT: {
            auto be = pg::make_backend(bname, g);
            pg::SolveResult r = opt->algo == PGS_ALGO_BLACKBOX
                                    ? pg::solve_blackbox(g, *dom, *be, so)
                                    : pg::solve_compact(g, static_cast<const pg::OpmDomain &>(*dom), *be, so);
            res->winners = r.winners;
            res->counters = r.counters;
            res->iterations = r.iterations;
            res->symbolic = true;
            break;
        }
        case PGS_ALGO_ZIELONKA: res->winners = pg::zielonka(g); break;
        case PGS_ALGO_NAIVE: {
            pg::NaiveGuard guard;
            guard.max_vertices = 1 << 20;
            guard.max_domain = 1e7;
            auto f = pg::naive_fixpoint(g, *dom, guard);
            res->winners = pg::winners_from_top(g, *dom, f);
            break;
        }
        default: return fail(PGS_ERR_ARGUMENT, "unknown algorithm");
        }
        res->owner_of.assign(g.n, 0);
        for (int v : res->winners.odd) res->owner_of[v] = 1;
        *out = res.release();
        return PGS_OK;
    });
}

void pgs_result_free(pgs_result *r) { delete r; }

int pgs_result_winner(const pgs_result *r, size_t v)
{
    if (!r || v >= r->owner_of.size()) return -1;
    return r->owner_of[v];
}

size_t pgs_result_region_size(const pgs_result *r, int player)
{
    if (!r) return 0;
    return player == 0 ? r->winners.even.size() : r->winners.odd.size();
}

void pgs_result_counters(const pgs_result *r, pgs_counters *out)
{
    if (!r || !out) return;
    *out = pgs_counters{};
    out->pre_ops = r->counters.pre_ops;
    out->basic_ops = r->counters.basic_ops();
    for (int i = 0; i < 5; i++) out->basic[i] = r->counters.basic[i];
    out->live_sets_now = r->counters.live_sets_now;
    out->live_sets_max = r->counters.live_sets_max;
}

double pgs_result_w_size_estimate(const pgs_result *r) { return r ? r->w_size : 0; }
uint64_t pgs_result_iterations(const pgs_result *r) { return r ? r->iterations : 0; }
int pgs_result_has_counters(const pgs_result *r) { return r && r->symbolic ? 1 : 0; }
}
